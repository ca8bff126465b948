#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbd/bidiag.hpp"
#include "sbd/errors.hpp"
#include "sbd/matrix.hpp"
#include "sbd/scalar.hpp"

// Vandermonde-type matrix families: dense entry evaluation and direct
// construction of the singularity-free bidiagonal decomposition from the
// closed-form split m_ij = s_ij * v_ij. The s_ij / upper m_ij builders use
// running products so a full decomposition costs O(n^2) scalar operations.

namespace sbd {

enum class Family {
    vandermonde,
    q_bernstein_vandermonde,
    h_bernstein_vandermonde,
    lupas,
    rational_bernstein_vandermonde,
    cauchy_vandermonde_1pole,
};

inline std::string_view family_name(Family f) {
    switch (f) {
    case Family::vandermonde: return "vandermonde";
    case Family::q_bernstein_vandermonde: return "q_bernstein_vandermonde";
    case Family::h_bernstein_vandermonde: return "h_bernstein_vandermonde";
    case Family::lupas: return "lupas";
    case Family::rational_bernstein_vandermonde: return "rational_bernstein_vandermonde";
    case Family::cauchy_vandermonde_1pole: return "cauchy_vandermonde_1pole";
    }
    return "?";
}

inline std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::vandermonde, Family::q_bernstein_vandermonde,
                     Family::h_bernstein_vandermonde, Family::lupas,
                     Family::rational_bernstein_vandermonde, Family::cauchy_vandermonde_1pole})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

// A family tag plus nodes and parameters, held exactly; pipelines convert to
// their scalar kind at the boundary. In strict mode the nodes must be sorted
// (ties allowed; repeated nodes are the entire point of this decomposition)
// and inside the family's total-nonnegativity domain. Permissive mode only
// requires the formula denominators to be nonzero, which is checked where
// they are evaluated.
struct NodeConfig {
    Family family = Family::vandermonde;
    int n = 0;
    std::vector<Rational> nodes;
    Rational q = 1;                // q-Bernstein-Vandermonde, Lupas
    Rational h = 0;                // h-Bernstein-Vandermonde
    std::vector<Rational> weights; // rational Bernstein-Vandermonde
    Rational d = 1;                // Cauchy-Vandermonde pole
    int pole_multiplicity = 1;     // Cauchy-Vandermonde s
    bool strict = true;

    void validate() const {
        if (n < 1) throw DomainError("dimension must be at least 1");
        if (static_cast<int>(nodes.size()) != n)
            throw DomainError("expected " + std::to_string(n) + " nodes, got " +
                              std::to_string(nodes.size()));
        if (family == Family::rational_bernstein_vandermonde) {
            if (static_cast<int>(weights.size()) != n)
                throw DomainError("expected " + std::to_string(n) + " weights, got " +
                                  std::to_string(weights.size()));
            for (int i = 0; i < n; ++i)
                if (sgn(weights[i]) == 0)
                    throw DomainError("weight " + std::to_string(i + 1) + " is zero");
        }
        if (family == Family::cauchy_vandermonde_1pole) {
            if (pole_multiplicity < 1 || pole_multiplicity > n)
                throw DomainError("pole multiplicity s = " + std::to_string(pole_multiplicity) +
                                  " must satisfy 1 <= s <= n");
        }
        if (!strict) return;

        for (int i = 0; i + 1 < n; ++i)
            if (nodes[i] > nodes[i + 1])
                throw DomainError("strict mode requires sorted nodes: node " +
                                  std::to_string(i + 2) + " = " + canonical(nodes[i + 1]) +
                                  " is below its predecessor");
        auto node_in = [&](int i, bool lo_closed, const Rational& lo, bool has_hi,
                           const Rational& hi, const char* domain) {
            const Rational& x = nodes[i];
            bool ok = (lo_closed ? x >= lo : x > lo) && (!has_hi || x < hi);
            if (!ok)
                throw DomainError("node " + std::to_string(i + 1) + " = " + canonical(x) +
                                  " outside the domain " + domain);
        };
        switch (family) {
        case Family::vandermonde: break;
        case Family::q_bernstein_vandermonde:
        case Family::lupas:
            if (!(q > 0 && q <= 1))
                throw DomainError("parameter q = " + canonical(q) + " outside (0,1]");
            for (int i = 0; i < n; ++i) node_in(i, true, 0, true, 1, "[0,1)");
            break;
        case Family::h_bernstein_vandermonde:
            if (h < 0) throw DomainError("parameter h = " + canonical(h) + " must be >= 0");
            for (int i = 0; i < n; ++i) node_in(i, true, 0, true, 1, "[0,1)");
            break;
        case Family::rational_bernstein_vandermonde:
            for (int i = 0; i < n; ++i)
                if (sgn(weights[i]) <= 0)
                    throw DomainError("weight " + std::to_string(i + 1) + " = " +
                                      canonical(weights[i]) + " must be positive");
            for (int i = 0; i < n; ++i) node_in(i, false, 0, true, 1, "(0,1)");
            break;
        case Family::cauchy_vandermonde_1pole:
            if (sgn(d) <= 0)
                throw DomainError("pole d = " + canonical(d) + " must be positive");
            for (int i = 0; i < n; ++i) node_in(i, true, 0, false, 0, "[0,inf)");
            break;
        }
    }
};

// Split parameters: s_ij on and below the diagonal, the upper-triangle
// multipliers m_ij above it. Together with the Vandermonde v_ij these are the
// full ordinary decomposition; without them they are the B matrix content.
template <class S>
struct SplitParams {
    int n = 0;
    Matrix<S> s_lower; // i >= j; zero above the diagonal
    Matrix<S> m_upper; // i < j; zero elsewhere
};

namespace detail {

template <class S>
S checked_div(const S& num, const S& den, const char* what) {
    if (ScalarOps<S>::is_zero(den)) throw SingularFormula(std::string(what) + ": denominator vanished");
    return num / den;
}

template <class S>
S pow_nonneg(const S& base, int e) {
    S r = ScalarOps<S>::from_int(1);
    for (int t = 0; t < e; ++t) r = r * base;
    return r;
}

// C(m, r) evaluated in S by the multiplicative recurrence
template <class S>
S binom_s(int m, int r) {
    if (r < 0 || r > m) return ScalarOps<S>::from_int(0);
    S acc = ScalarOps<S>::from_int(1);
    for (int t = 0; t < r; ++t)
        acc = acc * ScalarOps<S>::from_int(m - t) / ScalarOps<S>::from_int(t + 1);
    return acc;
}

// nodes converted to S, 1-based (slot 0 unused)
template <class S>
std::vector<S> nodes_as(const NodeConfig& cfg) {
    std::vector<S> xs(cfg.n + 1, ScalarOps<S>::from_int(0));
    for (int i = 1; i <= cfg.n; ++i) xs[i] = ScalarOps<S>::from_rational(cfg.nodes[i - 1]);
    return xs;
}

} // namespace detail

// [r] = (1 - q^r) / (1 - q) for q != 1, else r
template <class S>
S q_integer(int r, const S& q) {
    if (ScalarOps<S>::is_one(q)) return ScalarOps<S>::from_int(r);
    const S one = ScalarOps<S>::from_int(1);
    return (one - detail::pow_nonneg<S>(q, r)) / (one - q);
}

// [n][n-1]...[n-r+1] / [r]! for n >= r >= 0, zero otherwise
template <class S>
S q_binomial(int n, int r, const S& q) {
    if (r < 0 || r > n) return ScalarOps<S>::from_int(0);
    S num = ScalarOps<S>::from_int(1), den = ScalarOps<S>::from_int(1);
    for (int t = 0; t < r; ++t) {
        num = num * q_integer(n - t, q);
        den = den * q_integer(t + 1, q);
    }
    return detail::checked_div<S>(num, den, "q_binomial");
}

// W(x) = sum_j w_j b^{n-1}_{j-1}(x) for the rational Bernstein-Vandermonde family
template <class S>
S weight_sum(const NodeConfig& cfg, const S& x) {
    if (cfg.family != Family::rational_bernstein_vandermonde)
        throw DomainError("weight_sum is defined for the rational Bernstein-Vandermonde family");
    const int n = cfg.n;
    const S one = ScalarOps<S>::from_int(1);
    const S omx = one - x;
    S acc = ScalarOps<S>::from_int(0);
    S xp = one; // x^{j-1}
    for (int j = 1; j <= n; ++j) {
        S term = ScalarOps<S>::from_rational(cfg.weights[j - 1]) * detail::binom_s<S>(n - 1, j - 1) *
                 xp * detail::pow_nonneg<S>(omx, n - j);
        acc = acc + term;
        xp = xp * x;
    }
    return acc;
}

// f_j(x): the generator of column j of the family's dense matrix
template <class S>
S basis_eval(const NodeConfig& cfg, int j, const S& x) {
    const int n = cfg.n;
    if (j < 1 || j > n) throw DimensionMismatch("basis_eval: column out of range");
    const S one = ScalarOps<S>::from_int(1);
    switch (cfg.family) {
    case Family::vandermonde: return detail::pow_nonneg<S>(x, j - 1);
    case Family::q_bernstein_vandermonde: {
        const S q = ScalarOps<S>::from_rational(cfg.q);
        S p = q_binomial<S>(n - 1, j - 1, q) * detail::pow_nonneg<S>(x, j - 1);
        S qs = one;
        for (int s = 0; s <= n - j - 1; ++s) {
            p = p * (one - qs * x);
            qs = qs * q;
        }
        return p;
    }
    case Family::h_bernstein_vandermonde: {
        const S h = ScalarOps<S>::from_rational(cfg.h);
        S num = detail::binom_s<S>(n - 1, j - 1);
        for (int k = 0; k <= j - 2; ++k) num = num * (x + ScalarOps<S>::from_int(k) * h);
        for (int k = 0; k <= n - j - 1; ++k) num = num * (one - x + ScalarOps<S>::from_int(k) * h);
        S den = one;
        for (int k = 0; k <= n - 2; ++k) den = den * (one + ScalarOps<S>::from_int(k) * h);
        return detail::checked_div<S>(num, den, "h-Bernstein basis");
    }
    case Family::lupas: {
        const S q = ScalarOps<S>::from_rational(cfg.q);
        S a = q_binomial<S>(n - 1, j - 1, q) * detail::pow_nonneg<S>(q, (j - 1) * (j - 2) / 2) *
              detail::pow_nonneg<S>(x, j - 1) * detail::pow_nonneg<S>(one - x, n - j);
        S w = one;
        S qs = q;
        for (int k = 1; k <= n - 2; ++k) {
            w = w * (one - x + qs * x);
            qs = qs * q;
        }
        return detail::checked_div<S>(a, w, "Lupas basis");
    }
    case Family::rational_bernstein_vandermonde: {
        S w = weight_sum(cfg, x);
        S num = ScalarOps<S>::from_rational(cfg.weights[j - 1]) * detail::binom_s<S>(n - 1, j - 1) *
                detail::pow_nonneg<S>(x, j - 1) * detail::pow_nonneg<S>(one - x, n - j);
        return detail::checked_div<S>(num, w, "rational Bernstein basis");
    }
    case Family::cauchy_vandermonde_1pole: {
        const int s = cfg.pole_multiplicity;
        if (j <= s) {
            S xd = x + ScalarOps<S>::from_rational(cfg.d);
            return detail::checked_div<S>(one, detail::pow_nonneg<S>(xd, s - j + 1), "Cauchy term");
        }
        return detail::pow_nonneg<S>(x, j - s - 1);
    }
    }
    throw DomainError("unknown family");
}

// a_ij = f_j(x_i)
template <class S>
Matrix<S> dense_matrix(const NodeConfig& cfg) {
    cfg.validate();
    const auto xs = detail::nodes_as<S>(cfg);
    Matrix<S> a(cfg.n, cfg.n);
    for (int i = 1; i <= cfg.n; ++i)
        for (int j = 1; j <= cfg.n; ++j) a(i, j) = basis_eval(cfg, j, xs[i]);
    return a;
}

namespace detail {

template <class S>
void split_vandermonde(const NodeConfig& cfg, SplitParams<S>& p, const std::vector<S>& x) {
    const int n = cfg.n;
    const S one = ScalarOps<S>::from_int(1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) p.s_lower(i, j) = one;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) p.m_upper(i, j) = x[i];
}

template <class S>
void split_qbv(const NodeConfig& cfg, SplitParams<S>& p, const std::vector<S>& x) {
    const int n = cfg.n;
    const S one = ScalarOps<S>::from_int(1);
    const S q = ScalarOps<S>::from_rational(cfg.q);

    std::vector<S> qp(n + 1, one); // q^s
    for (int s = 1; s <= n; ++s) qp[s] = qp[s - 1] * q;
    std::vector<S> qi(n + 1, ScalarOps<S>::from_int(0)); // [r]
    if (ScalarOps<S>::is_one(q)) {
        for (int r = 0; r <= n; ++r) qi[r] = ScalarOps<S>::from_int(r);
    } else {
        const S omq = one - q;
        for (int r = 1; r <= n; ++r) qi[r] = (one - qp[r]) / omq;
    }

    // G(t, j) = prod_{s=0}^{n-1-j} (1 - q^s x_t); G(t, n) = 1
    Matrix<S> G(n, n);
    for (int t = 1; t <= n; ++t) {
        S acc = one;
        G(t, n) = one;
        for (int j = n - 1; j >= 1; --j) {
            acc = acc * (one - qp[n - 1 - j] * x[t]);
            G(t, j) = acc;
        }
    }

    // q-binomial row qb[i] = qbinom(n-1, i-1)
    std::vector<S> qb(n + 1, one);
    for (int i = 1; i <= n - 1; ++i)
        qb[i + 1] = qb[i] * checked_div<S>(qi[n - i], qi[i], "q-binomial row");

    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            S num = one - qp[n - j] * x[i - j];
            S den = one - qp[n - j] * x[i - 1];
            p.s_lower(i, j) =
                checked_div<S>(num, den, "q-BV s_ij") * checked_div<S>(G(i, j), G(i - 1, j), "q-BV s_ij");
        }
    for (int i = 1; i <= n; ++i) {
        S den = one;
        for (int k = 1; k < i; ++k) den = den * (one - qp[n - i] * x[k]);
        p.s_lower(i, i) = qb[i] * checked_div<S>(G(i, i), den, "q-BV s_ii");
    }
    for (int col = 2; col <= n; ++col) {
        S base = checked_div<S>(qi[n - col + 1], qi[col - 1], "q-BV m_ji");
        S run = one;
        for (int row = 1; row < col; ++row) {
            if (row >= 2)
                run = run * checked_div<S>(one - qp[n - col + 1] * x[row - 1],
                                        one - qp[n - col] * x[row - 1], "q-BV m_ji");
            S den = one - qp[n - col] * x[row];
            p.m_upper(row, col) = base * checked_div<S>(x[row], den, "q-BV m_ji") * run;
        }
    }
}

template <class S>
void split_hbv(const NodeConfig& cfg, SplitParams<S>& p, const std::vector<S>& x) {
    const int n = cfg.n;
    const S one = ScalarOps<S>::from_int(1);
    const S h = ScalarOps<S>::from_rational(cfg.h);

    std::vector<S> kh(n + 1, ScalarOps<S>::from_int(0)); // k*h
    for (int k = 1; k <= n; ++k) kh[k] = kh[k - 1] + h;
    std::vector<S> omx(n + 1, one); // 1 - x_t
    for (int t = 1; t <= n; ++t) omx[t] = one - x[t];

    // H(t, j) = prod_{k=0}^{n-j-1} (1 - x_t + k h); H(t, n) = 1
    Matrix<S> H(n, n);
    for (int t = 1; t <= n; ++t) {
        S acc = one;
        H(t, n) = one;
        for (int j = n - 1; j >= 1; --j) {
            acc = acc * (omx[t] + kh[n - 1 - j]);
            H(t, j) = acc;
        }
    }
    std::vector<S> bin(n + 1, one); // C(n-1, i-1)
    for (int i = 1; i <= n - 1; ++i)
        bin[i + 1] = bin[i] * ScalarOps<S>::from_int(n - i) / ScalarOps<S>::from_int(i);

    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            S num = omx[i - j] + kh[n - j];
            S den = omx[i - 1] + kh[n - j];
            p.s_lower(i, j) =
                checked_div<S>(num, den, "h-BV s_ij") * checked_div<S>(H(i, j), H(i - 1, j), "h-BV s_ij");
        }
    for (int i = 1; i <= n; ++i) {
        S den = one;
        for (int k = 1; k <= n - i - 1; ++k) den = den * (one + kh[k]);
        for (int k = 1; k < i; ++k) den = den * (omx[k] + kh[n - i]);
        p.s_lower(i, i) = bin[i] * checked_div<S>(H(i, i), den, "h-BV s_ii");
    }
    for (int col = 2; col <= n; ++col) {
        S base = ScalarOps<S>::from_int(n - col + 1) / ScalarOps<S>::from_int(col - 1);
        S nrun = one, drun = one;
        for (int row = 1; row < col; ++row) {
            if (row >= 2) nrun = nrun * (omx[row - 1] + kh[n - col + 1]);
            drun = drun * (omx[row] + kh[n - col]);
            p.m_upper(row, col) = base * (x[row] + kh[col - row - 1]) *
                                  checked_div<S>(nrun, drun, "h-BV m_ji");
        }
    }
}

template <class S>
void split_lupas(const NodeConfig& cfg, SplitParams<S>& p, const std::vector<S>& x) {
    const int n = cfg.n;
    const S one = ScalarOps<S>::from_int(1);
    const S q = ScalarOps<S>::from_rational(cfg.q);

    std::vector<S> qp(n + 1, one);
    for (int s = 1; s <= n; ++s) qp[s] = qp[s - 1] * q;
    std::vector<S> qi(n + 1, ScalarOps<S>::from_int(0));
    if (ScalarOps<S>::is_one(q)) {
        for (int r = 0; r <= n; ++r) qi[r] = ScalarOps<S>::from_int(r);
    } else {
        const S omq = one - q;
        for (int r = 1; r <= n; ++r) qi[r] = (one - qp[r]) / omq;
    }
    std::vector<S> omx(n + 1, one), pfx(n + 1, one); // pfx[i] = prod_{k<=i} (1 - x_k)
    for (int t = 1; t <= n; ++t) {
        omx[t] = one - x[t];
        pfx[t] = pfx[t - 1] * omx[t];
    }
    std::vector<S> w(n + 1, one); // w_q^{n-1}(x_t) = prod_{k=1}^{n-2} (1 - x_t + q^k x_t)
    for (int t = 1; t <= n; ++t) {
        S acc = one;
        for (int k = 1; k <= n - 2; ++k) acc = acc * (omx[t] + qp[k] * x[t]);
        w[t] = acc;
    }
    std::vector<S> qb(n + 1, one); // qbinom(n-1, i-1)
    for (int i = 1; i <= n - 1; ++i)
        qb[i + 1] = qb[i] * checked_div<S>(qi[n - i], qi[i], "q-binomial row");
    std::vector<S> qtri(n + 1, one); // q^{(i-1)(i-2)/2}
    for (int i = 2; i <= n; ++i) qtri[i] = qtri[i - 1] * qp[i - 2];

    for (int i = 2; i <= n; ++i) {
        S wr = checked_div<S>(w[i - 1], w[i], "Lupas s_ij");
        S pow_i = pow_nonneg<S>(omx[i], n - i + 1);      // (1-x_i)^{n-j} at j = i-1
        S pow_im1 = pow_nonneg<S>(omx[i - 1], n - i + 2); // (1-x_{i-1})^{n+1-j} at j = i-1
        for (int j = i - 1; j >= 1; --j) {
            p.s_lower(i, j) = checked_div<S>(pow_i * omx[i - j], pow_im1, "Lupas s_ij") * wr;
            if (j > 1) {
                pow_i = pow_i * omx[i];
                pow_im1 = pow_im1 * omx[i - 1];
            }
        }
    }
    for (int i = 1; i <= n; ++i)
        p.s_lower(i, i) = qb[i] * qtri[i] *
                          checked_div<S>(pow_nonneg<S>(omx[i], n - i), w[i] * pfx[i - 1], "Lupas s_ii");
    for (int col = 2; col <= n; ++col) {
        S base = checked_div<S>(qi[n - col + 1] * qp[col - 2], qi[col - 1], "Lupas m_ji");
        for (int row = 1; row < col; ++row)
            p.m_upper(row, col) = base * checked_div<S>(x[row], omx[row], "Lupas m_ji");
    }
}

template <class S>
void split_rbv(const NodeConfig& cfg, SplitParams<S>& p, const std::vector<S>& x) {
    const int n = cfg.n;
    const S one = ScalarOps<S>::from_int(1);
    std::vector<S> wgt(n + 1, one);
    for (int i = 1; i <= n; ++i) wgt[i] = ScalarOps<S>::from_rational(cfg.weights[i - 1]);

    std::vector<S> omx(n + 1, one), pfx(n + 1, one);
    for (int t = 1; t <= n; ++t) {
        omx[t] = one - x[t];
        pfx[t] = pfx[t - 1] * omx[t];
    }
    std::vector<S> bin(n + 1, one);
    for (int i = 1; i <= n - 1; ++i)
        bin[i + 1] = bin[i] * ScalarOps<S>::from_int(n - i) / ScalarOps<S>::from_int(i);
    // W(x_t) via ascending powers of x_t and descending powers of 1 - x_t
    std::vector<S> W(n + 1, one);
    for (int t = 1; t <= n; ++t) {
        S acc = ScalarOps<S>::from_int(0);
        S xp = one;
        std::vector<S> op(n, one); // (1-x_t)^k, k = 0..n-1
        for (int k = 1; k <= n - 1; ++k) op[k] = op[k - 1] * omx[t];
        for (int j = 1; j <= n; ++j) {
            acc = acc + wgt[j] * bin[j] * xp * op[n - j];
            xp = xp * x[t];
        }
        W[t] = acc;
    }

    for (int i = 2; i <= n; ++i) {
        S wr = checked_div<S>(W[i - 1], W[i], "rational-BV s_ij");
        S pow_i = pow_nonneg<S>(omx[i], n - i + 1);
        S pow_im1 = pow_nonneg<S>(omx[i - 1], n - i + 2);
        for (int j = i - 1; j >= 1; --j) {
            p.s_lower(i, j) = checked_div<S>(pow_i * omx[i - j], pow_im1, "rational-BV s_ij") * wr;
            if (j > 1) {
                pow_i = pow_i * omx[i];
                pow_im1 = pow_im1 * omx[i - 1];
            }
        }
    }
    for (int i = 1; i <= n; ++i)
        p.s_lower(i, i) = bin[i] * wgt[i] *
                          checked_div<S>(pow_nonneg<S>(omx[i], n - i), W[i] * pfx[i - 1], "rational-BV s_ii");
    for (int col = 2; col <= n; ++col) {
        S base = checked_div<S>(wgt[col], wgt[col - 1], "rational-BV m_ji") *
                 ScalarOps<S>::from_int(n - col + 1) / ScalarOps<S>::from_int(col - 1);
        for (int row = 1; row < col; ++row)
            p.m_upper(row, col) = base * checked_div<S>(x[row], omx[row], "rational-BV m_ji");
    }
}

template <class S>
void split_cv(const NodeConfig& cfg, SplitParams<S>& p, const std::vector<S>& x) {
    const int n = cfg.n;
    const int s = cfg.pole_multiplicity;
    const S one = ScalarOps<S>::from_int(1);
    const S d = ScalarOps<S>::from_rational(cfg.d);
    std::vector<S> xd(n + 1, one);
    for (int t = 1; t <= n; ++t) xd[t] = x[t] + d;

    for (int i = 2; i <= n; ++i) {
        S rpow = pow_nonneg<S>(checked_div<S>(xd[i - 1], xd[i], "Cauchy-Vandermonde s_ij"), s);
        for (int j = 1; j < i; ++j) p.s_lower(i, j) = rpow;
    }
    for (int i = 1; i <= n; ++i)
        p.s_lower(i, i) = checked_div<S>(one, pow_nonneg<S>(xd[i], s), "Cauchy-Vandermonde s_ii");
    for (int col = 2; col <= n; ++col)
        for (int row = 1; row < col; ++row)
            p.m_upper(row, col) = (col - row <= s) ? xd[row] : x[row];
}

} // namespace detail

// All s_ij (i >= j) and upper m_ij from the family's closed forms. The only
// subtractions are between nodes or between 1 (or 1 + kh) and a node, never
// between computed quantities.
template <class S>
SplitParams<S> split_params(const NodeConfig& cfg) {
    cfg.validate();
    const auto xs = detail::nodes_as<S>(cfg);
    SplitParams<S> p;
    p.n = cfg.n;
    p.s_lower = Matrix<S>(cfg.n, cfg.n);
    p.m_upper = Matrix<S>(cfg.n, cfg.n);
    switch (cfg.family) {
    case Family::vandermonde: detail::split_vandermonde(cfg, p, xs); break;
    case Family::q_bernstein_vandermonde: detail::split_qbv(cfg, p, xs); break;
    case Family::h_bernstein_vandermonde: detail::split_hbv(cfg, p, xs); break;
    case Family::lupas: detail::split_lupas(cfg, p, xs); break;
    case Family::rational_bernstein_vandermonde: detail::split_rbv(cfg, p, xs); break;
    case Family::cauchy_vandermonde_1pole: detail::split_cv(cfg, p, xs); break;
    }
    return p;
}

// The family's singularity-free bidiagonal decomposition:
//   b_ij = s_ij (i >= j),  b_ij = m_ij (i < j),
//   c_ij = x_{i-1} - x_{i-j} for 2 <= j < i <= n+1, all other C entries 1.
// O(n^2) scalar operations; valid for repeated nodes.
template <class S>
SingularityFreeBD<S> decompose(const NodeConfig& cfg) {
    auto p = split_params<S>(cfg);
    const int n = cfg.n;
    const auto xs = detail::nodes_as<S>(cfg);
    SingularityFreeBD<S> out;
    out.n = n;
    out.b = Matrix<S>(n, n);
    out.c = Matrix<S>(n + 1, n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.b(i, j) = i >= j ? p.s_lower(i, j) : p.m_upper(i, j);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) out.c(i, j) = ScalarOps<S>::from_int(1);
    for (int i = 3; i <= n + 1; ++i)
        for (int j = 2; j < i; ++j) out.c(i, j) = xs[i - 1] - xs[i - j];
    return out;
}

// Alternative decomposition of a rational Bernstein-Vandermonde matrix:
// R = (W1^{-1} L_1) L_2 ... L_{n-1} D U_{n-1} ... (U_1 W2), built from the
// q = 1 Bernstein factor sequence. The first factor carries non-unit diagonal
// entries 1/W(x_i) on every row, so the result is only a factor sequence, not
// a (B, C) pair.
template <class S>
FactorSequence<S> sbd_rbv_scaled(const NodeConfig& cfg) {
    if (cfg.family != Family::rational_bernstein_vandermonde)
        throw DomainError("sbd_rbv_scaled is defined for the rational Bernstein-Vandermonde family");
    cfg.validate();
    NodeConfig base = cfg;
    base.family = Family::q_bernstein_vandermonde;
    base.q = 1;
    base.weights.clear();
    auto fs = sbd_expand(decompose<S>(base));

    const int n = cfg.n;
    const S one = ScalarOps<S>::from_int(1);
    std::vector<S> winv(n + 1, one);
    for (int t = 1; t <= n; ++t) {
        S wv = weight_sum(cfg, ScalarOps<S>::from_rational(cfg.nodes[t - 1]));
        winv[t] = detail::checked_div<S>(one, wv, "sbd_rbv_scaled");
    }
    auto& first = fs.factors.front(); // L_1, or D when n = 1; row scaling by 1/W(x_r)
    for (int r = 1; r <= n; ++r) first.d(r) = first.d(r) * winv[r];
    for (int i = 1; i <= n - 1; ++i)
        if (first.kind == FactorKind::lower) first.off(i) = first.off(i) * winv[i + 1];
    auto& last = fs.factors.back(); // U_1, or D when n = 1; column scaling by w_c
    for (int c = 1; c <= n; ++c)
        last.d(c) = last.d(c) * ScalarOps<S>::from_rational(cfg.weights[c - 1]);
    for (int i = 1; i <= n - 1; ++i)
        if (last.kind == FactorKind::upper)
            last.off(i) = last.off(i) * ScalarOps<S>::from_rational(cfg.weights[i]);
    return fs;
}

} // namespace sbd
