#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sbd/errors.hpp"
#include "sbd/matrix.hpp"

// Bidiagonal decompositions and their two storage schemes.
//
// A factorization A = L_1 L_2 ... L_{n-1} D U_{n-1} ... U_1 into bidiagonal
// factors is stored either as
//   * OrdinaryBD: one n x n matrix M of the unit-diagonal decomposition
//     (offdiagonals of L^(k)/U^(k) plus the diagonal of D), or
//   * SingularityFreeBD: the pair (B, C) where B plays the role of M and the
//     (n+1) x (n+1) matrix C holds the non-unit diagonals of the bidiagonal
//     factors.
//
// Storage map (1-based everywhere):
//   B(i,j), i>j   -> (L_{n-i+j})(i, i-1)        (same for M)
//   B(i,j), i<j   -> (U_{n-j+i})(j-1, j)        (same for M)
//   B(i,i)        -> D(i, i)
//   C(i,j), i>j   -> (L_{n-i+j})(i-1, i-1), the diagonal entry just above B(i,j)
//   C(i,j), i<j   -> (U_{n-j+i})(j-1, j-1)
// C's main diagonal, first row/column beyond the band, and corners are unused
// and always stored as 1, which keeps expansion total and round trips exact.

namespace sbd {

enum class FactorKind { lower, upper, diagonal };

template <class S>
struct BidiagonalFactor {
    int n = 0;
    FactorKind kind = FactorKind::diagonal;
    int band = 0;           // k in L_k / U_k; 0 for the diagonal factor
    std::vector<S> diag;    // n entries
    std::vector<S> offdiag; // n-1 entries; offdiag[i-1] sits at (i+1,i) for
                            // lower factors and at (i,i+1) for upper ones

    static BidiagonalFactor identity_like(int n, FactorKind kind, int band) {
        BidiagonalFactor f;
        f.n = n;
        f.kind = kind;
        f.band = band;
        f.diag.assign(n, ScalarOps<S>::from_int(1));
        f.offdiag.assign(n > 0 ? n - 1 : 0, ScalarOps<S>::from_int(0));
        return f;
    }

    // 1-based accessors
    S& d(int i) { return diag[i - 1]; }
    const S& d(int i) const { return diag[i - 1]; }
    S& off(int i) { return offdiag[i - 1]; }
    const S& off(int i) const { return offdiag[i - 1]; }

    bool band_pattern_ok() const {
        if (kind == FactorKind::diagonal) {
            for (const S& e : offdiag)
                if (!ScalarOps<S>::is_zero(e)) return false;
            return true;
        }
        for (int i = 1; i < n - band; ++i)
            if (!ScalarOps<S>::is_zero(off(i))) return false;
        return true;
    }

    Matrix<S> dense() const {
        Matrix<S> m(n, n);
        for (int i = 1; i <= n; ++i) m(i, i) = d(i);
        for (int i = 1; i <= n - 1; ++i) {
            if (kind == FactorKind::lower)
                m(i + 1, i) = off(i);
            else if (kind == FactorKind::upper)
                m(i, i + 1) = off(i);
        }
        return m;
    }
};

// Ordered factor list L_1, ..., L_{n-1}, D, U_{n-1}, ..., U_1. Diagonal
// entries are unconstrained so diagonally rescaled variants stay
// representable; only the offdiagonal band pattern is structural.
template <class S>
struct FactorSequence {
    int n = 0;
    std::vector<BidiagonalFactor<S>> factors;

    BidiagonalFactor<S>& lower(int k) { return factors[k - 1]; }
    const BidiagonalFactor<S>& lower(int k) const { return factors[k - 1]; }
    BidiagonalFactor<S>& diagonal_factor() { return factors[n - 1]; }
    const BidiagonalFactor<S>& diagonal_factor() const { return factors[n - 1]; }
    BidiagonalFactor<S>& upper(int k) { return factors[2 * n - 1 - k]; }
    const BidiagonalFactor<S>& upper(int k) const { return factors[2 * n - 1 - k]; }

    void validate() const {
        if (n < 1) throw DimensionMismatch("factor sequence needs n >= 1");
        if (static_cast<int>(factors.size()) != 2 * n - 1)
            throw DimensionMismatch("factor sequence of dimension " + std::to_string(n) +
                                    " must hold " + std::to_string(2 * n - 1) + " factors");
        for (int idx = 0; idx < 2 * n - 1; ++idx) {
            const auto& f = factors[idx];
            FactorKind want = idx < n - 1    ? FactorKind::lower
                              : idx == n - 1 ? FactorKind::diagonal
                                             : FactorKind::upper;
            int want_band = idx < n - 1 ? idx + 1 : idx == n - 1 ? 0 : 2 * n - 1 - idx;
            if (f.kind != want || f.band != want_band || f.n != n ||
                static_cast<int>(f.diag.size()) != n ||
                static_cast<int>(f.offdiag.size()) != n - 1)
                throw DimensionMismatch("malformed factor at position " + std::to_string(idx));
            if (!f.band_pattern_ok())
                throw DimensionMismatch("factor at position " + std::to_string(idx) +
                                        " violates its band pattern");
        }
    }
};

template <class S>
struct OrdinaryBD {
    int n = 0;
    Matrix<S> m; // n x n
};

template <class S>
struct SingularityFreeBD {
    int n = 0;
    Matrix<S> b; // n x n
    Matrix<S> c; // (n+1) x (n+1)
};

// ---- v_matrix ---------------------------------------------------------------
//
// The bidiagonal-decomposition parameters of an ordinary Vandermonde matrix:
//   v_ii = prod_{k<i} (x_i - x_k)
//   v_ij = prod_{k=i-j}^{i-2} (x_i - x_{k+1}) / (x_{i-1} - x_k),  i > j
//   v_ij = x_i,                                                   i < j
template <class S>
Matrix<S> v_matrix(std::span<const S> nodes) {
    const int n = static_cast<int>(nodes.size());
    auto x = [&](int i) -> const S& { return nodes[i - 1]; };
    Matrix<S> v(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) {
                S p = ScalarOps<S>::from_int(1);
                for (int k = 1; k < i; ++k) p = p * (x(i) - x(k));
                v(i, j) = p;
            } else if (i > j) {
                S p = ScalarOps<S>::from_int(1);
                for (int k = i - j; k <= i - 2; ++k) {
                    S den = x(i - 1) - x(k);
                    if (ScalarOps<S>::is_zero(den))
                        throw SingularFormula("v(" + std::to_string(i) + "," + std::to_string(j) +
                                              ") is undefined: nodes " + std::to_string(i - 1) +
                                              " and " + std::to_string(k) + " coincide");
                    p = p * ((x(i) - x(k + 1)) / den);
                }
                v(i, j) = p;
            } else {
                v(i, j) = x(i);
            }
        }
    return v;
}

// ---- expansion into explicit factors ---------------------------------------

template <class S>
FactorSequence<S> bd_expand(const OrdinaryBD<S>& bd) {
    const int n = bd.n;
    FactorSequence<S> fs;
    fs.n = n;
    for (int k = 1; k <= n - 1; ++k) {
        auto f = BidiagonalFactor<S>::identity_like(n, FactorKind::lower, k);
        for (int i = n - k + 1; i <= n; ++i) f.off(i - 1) = bd.m(i, i - n + k);
        fs.factors.push_back(std::move(f));
    }
    auto dd = BidiagonalFactor<S>::identity_like(n, FactorKind::diagonal, 0);
    for (int i = 1; i <= n; ++i) dd.d(i) = bd.m(i, i);
    fs.factors.push_back(std::move(dd));
    for (int k = n - 1; k >= 1; --k) {
        auto f = BidiagonalFactor<S>::identity_like(n, FactorKind::upper, k);
        for (int j = n - k + 1; j <= n; ++j) f.off(j - 1) = bd.m(j - n + k, j);
        fs.factors.push_back(std::move(f));
    }
    return fs;
}

template <class S>
FactorSequence<S> sbd_expand(const SingularityFreeBD<S>& sbd) {
    const int n = sbd.n;
    FactorSequence<S> fs;
    fs.n = n;
    for (int k = 1; k <= n - 1; ++k) {
        auto f = BidiagonalFactor<S>::identity_like(n, FactorKind::lower, k);
        for (int m = n - k; m <= n; ++m) f.d(m) = sbd.c(m + 1, m + 1 - n + k);
        for (int i = n - k + 1; i <= n; ++i) f.off(i - 1) = sbd.b(i, i - n + k);
        fs.factors.push_back(std::move(f));
    }
    auto dd = BidiagonalFactor<S>::identity_like(n, FactorKind::diagonal, 0);
    for (int i = 1; i <= n; ++i) dd.d(i) = sbd.b(i, i);
    fs.factors.push_back(std::move(dd));
    for (int k = n - 1; k >= 1; --k) {
        auto f = BidiagonalFactor<S>::identity_like(n, FactorKind::upper, k);
        for (int m = n - k; m <= n; ++m) f.d(m) = sbd.c(m + 1 - n + k, m + 1);
        for (int j = n - k + 1; j <= n; ++j) f.off(j - 1) = sbd.b(j - n + k, j);
        fs.factors.push_back(std::move(f));
    }
    return fs;
}

// Inverse of sbd_expand: read the factor entries back into (B, C). Unused C
// slots are set to 1. The sequence must be B/C-representable (diagonal
// entries above the stored band equal to 1).
template <class S>
bool bc_representable(const FactorSequence<S>& fs) {
    const int n = fs.n;
    for (const auto& f : fs.factors) {
        if (f.kind == FactorKind::diagonal) continue;
        for (int m = 1; m <= n - f.band - 1; ++m)
            if (!ScalarOps<S>::is_one(f.d(m))) return false;
    }
    return true;
}

template <class S>
SingularityFreeBD<S> factors_to_sbd(const FactorSequence<S>& fs) {
    fs.validate();
    if (!bc_representable(fs))
        throw DimensionMismatch("factor sequence is not B/C-representable: a bidiagonal factor "
                                "has a non-unit diagonal entry above its band");
    const int n = fs.n;
    SingularityFreeBD<S> sbd;
    sbd.n = n;
    sbd.b = Matrix<S>(n, n);
    sbd.c = Matrix<S>(n + 1, n + 1);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) sbd.c(i, j) = ScalarOps<S>::from_int(1);
    for (int k = 1; k <= n - 1; ++k) {
        const auto& lf = fs.lower(k);
        for (int m = n - k; m <= n; ++m) sbd.c(m + 1, m + 1 - n + k) = lf.d(m);
        for (int i = n - k + 1; i <= n; ++i) sbd.b(i, i - n + k) = lf.off(i - 1);
        const auto& uf = fs.upper(k);
        for (int m = n - k; m <= n; ++m) sbd.c(m + 1 - n + k, m + 1) = uf.d(m);
        for (int j = n - k + 1; j <= n; ++j) sbd.b(j - n + k, j) = uf.off(j - 1);
    }
    for (int i = 1; i <= n; ++i) sbd.b(i, i) = fs.diagonal_factor().d(i);
    return sbd;
}

// ---- reconstruction ----------------------------------------------------------

template <class S>
Matrix<S> apply_right(const Matrix<S>& a, const BidiagonalFactor<S>& f) {
    const int n = f.n;
    Matrix<S> out(a.rows(), n);
    for (int r = 1; r <= a.rows(); ++r)
        for (int c = 1; c <= n; ++c) {
            S acc = a(r, c) * f.d(c);
            if (f.kind == FactorKind::lower && c < n) acc = acc + a(r, c + 1) * f.off(c);
            if (f.kind == FactorKind::upper && c > 1) acc = acc + a(r, c - 1) * f.off(c - 1);
            out(r, c) = acc;
        }
    return out;
}

template <class S>
Matrix<S> reconstruct(const FactorSequence<S>& fs) {
    fs.validate();
    Matrix<S> p = Matrix<S>::identity(fs.n);
    for (const auto& f : fs.factors) p = apply_right(p, f);
    return p;
}

// ---- ordinary BD -> singularity-free BD --------------------------------------
//
// b_ij = m_ij / v_ij for i >= j, b_ij = m_ij for i < j, and
// c_ij = x_{i-1} - x_{i-j} for 2 <= j < i <= n+1. Needs pairwise distinct
// nodes so the divisions are defined.
template <class S>
SingularityFreeBD<S> split_bd(const OrdinaryBD<S>& bd, std::span<const S> nodes) {
    const int n = bd.n;
    if (static_cast<int>(nodes.size()) != n)
        throw DimensionMismatch("split_bd: expected " + std::to_string(n) + " nodes, got " +
                                std::to_string(nodes.size()));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (nodes[i] == nodes[j])
                throw DistinctNodesRequired("nodes " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1) + " coincide");
    auto x = [&](int i) -> const S& { return nodes[i - 1]; };
    Matrix<S> v = v_matrix<S>(nodes);
    SingularityFreeBD<S> out;
    out.n = n;
    out.b = Matrix<S>(n, n);
    out.c = Matrix<S>(n + 1, n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.b(i, j) = i >= j ? S(bd.m(i, j) / v(i, j)) : bd.m(i, j);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) out.c(i, j) = ScalarOps<S>::from_int(1);
    for (int i = 3; i <= n + 1; ++i)
        for (int j = 2; j < i; ++j) out.c(i, j) = x(i - 1) - x(i - j);
    return out;
}

// ---- bottom-right normalization ----------------------------------------------
//
// Rescales so every bidiagonal factor has (n,n) = 1, moving the products of
// the old corner entries into D(n,n) and updating the adjacent offdiagonal
// entries. The reconstruction is unchanged (exactly, over rationals).
template <class S>
FactorSequence<S> fix_bottom_right(FactorSequence<S> fs) {
    fs.validate();
    const int n = fs.n;
    if (n == 1) return fs;
    const S one = ScalarOps<S>::from_int(1);
    S lprod = one;
    for (int k = 1; k <= n - 1; ++k) {
        auto& f = fs.lower(k);
        f.off(n - 1) = f.off(n - 1) * lprod;
        lprod = lprod * f.d(n);
        f.d(n) = one;
    }
    S uprod = one;
    for (int k = 1; k <= n - 1; ++k) {
        auto& f = fs.upper(k);
        f.off(n - 1) = f.off(n - 1) * uprod;
        uprod = uprod * f.d(n);
        f.d(n) = one;
    }
    auto& dd = fs.diagonal_factor();
    dd.d(n) = dd.d(n) * lprod * uprod;
    return fs;
}

} // namespace sbd
