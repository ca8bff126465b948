#include "sbd/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "sbd/errors.hpp"
#include "sbd/rng.hpp"

namespace sbd {

namespace {

void require_square(const Matrix<Rational>& a) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw DimensionMismatch("expected a nonempty square matrix");
}

// Row-wise denominator clearing: returns the integer matrix diag(l) * A with
// l_i the lcm of the denominators in row i, plus the multipliers l_i.
void clear_denominators(const Matrix<Rational>& a, Matrix<Integer>& w, std::vector<Integer>& l) {
    const int rows = a.rows(), cols = a.cols();
    w = Matrix<Integer>(rows, cols);
    l.assign(rows + 1, Integer(1));
    for (int i = 1; i <= rows; ++i) {
        Integer lcm = 1;
        for (int j = 1; j <= cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den().get_mpz_t());
        l[i] = lcm;
        for (int j = 1; j <= cols; ++j) {
            Integer scale;
            mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den().get_mpz_t());
            w(i, j) = a(i, j).get_num() * scale;
        }
    }
}

Integer divexact(const Integer& num, const Integer& den) {
    assert(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
    Integer out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

// Fraction-free elimination; returns the rank and, when `det` is not null and
// the matrix is square nonsingular, the determinant of the integer matrix.
int bareiss(Matrix<Integer>& w, Rational* det) {
    const int rows = w.rows(), cols = w.cols();
    int rank = 0;
    int sign = 1;
    Integer prev = 1;
    for (int col = 1; col <= cols && rank < rows; ++col) {
        int piv = 0;
        for (int i = rank + 1; i <= rows; ++i)
            if (sgn(w(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv == 0) continue;
        if (piv != rank + 1) {
            for (int j = 1; j <= cols; ++j) std::swap(w(piv, j), w(rank + 1, j));
            sign = -sign;
        }
        const int p = rank + 1;
        for (int i = p + 1; i <= rows; ++i) {
            for (int j = col + 1; j <= cols; ++j)
                w(i, j) = divexact(w(p, col) * w(i, j) - w(i, col) * w(p, j), prev);
            w(i, col) = 0;
        }
        prev = w(p, col);
        ++rank;
    }
    if (det) {
        if (rank < rows)
            *det = 0;
        else
            *det = Rational(sign * prev); // last pivot of full-rank Bareiss is det
    }
    return rank;
}

Rational det_exact(const Matrix<Rational>& a) {
    require_square(a);
    Matrix<Integer> w;
    std::vector<Integer> l;
    clear_denominators(a, w, l);
    Rational det;
    bareiss(w, &det);
    for (int i = 1; i <= a.rows(); ++i) det /= Rational(l[i]);
    return det;
}

} // namespace

OrdinaryBD<Rational> neville_bd(const Matrix<Rational>& input) {
    require_square(input);
    const int n = input.rows();
    Matrix<Rational> a = input;
    Matrix<Rational> m(n, n);
    // lower pass: eliminate column j bottom-up with the adjacent row above
    for (int j = 1; j <= n - 1; ++j)
        for (int i = n; i >= j + 1; --i) {
            if (sgn(a(i, j)) == 0) continue;
            if (sgn(a(i - 1, j)) == 0) throw SingularPivot(i, j);
            Rational mult = a(i, j) / a(i - 1, j);
            m(i, j) = mult;
            for (int c = j; c <= n; ++c) a(i, c) -= mult * a(i - 1, c);
        }
    // transposed pass on the remaining upper triangle fills the upper side
    Matrix<Rational> t = a.transposed();
    for (int j = 1; j <= n - 1; ++j)
        for (int i = n; i >= j + 1; --i) {
            if (sgn(t(i, j)) == 0) continue;
            if (sgn(t(i - 1, j)) == 0) throw SingularPivot(j, i);
            Rational mult = t(i, j) / t(i - 1, j);
            m(j, i) = mult;
            for (int c = j; c <= n; ++c) t(i, c) -= mult * t(i - 1, c);
        }
    for (int i = 1; i <= n; ++i) m(i, i) = t(i, i);
    return OrdinaryBD<Rational>{n, std::move(m)};
}

int exact_rank(const Matrix<Rational>& a) {
    if (a.rows() < 1 || a.cols() < 1) return 0;
    Matrix<Integer> w;
    std::vector<Integer> l;
    clear_denominators(a, w, l);
    return bareiss(w, nullptr);
}

Rational minor(const Matrix<Rational>& a, const std::vector<int>& rows,
               const std::vector<int>& cols) {
    if (rows.size() != cols.size())
        throw DimensionMismatch("minor: row and column index sets differ in size");
    const int k = static_cast<int>(rows.size());
    if (k < 1 || k > std::min(a.rows(), a.cols()))
        throw DimensionMismatch("minor: order out of range");
    auto check = [&](const std::vector<int>& idx, int limit) {
        for (int v : idx)
            if (v < 1 || v > limit) throw DimensionMismatch("minor: index out of range");
        std::vector<int> s = idx;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw DimensionMismatch("minor: duplicate index");
    };
    check(rows, a.rows());
    check(cols, a.cols());
    Matrix<Rational> sub(k, k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) sub(i, j) = a(rows[i - 1], cols[j - 1]);
    return det_exact(sub);
}

TnSampleReport tn_sample_check(const Matrix<Rational>& a, int trials, std::uint64_t seed) {
    require_square(a);
    const int n = a.rows();
    TnSampleReport report;
    report.n = n;
    report.trials = trials;
    report.seed = seed;

    SplitMix64 rng(seed);
    auto sample_subset = [&](int k) {
        std::vector<int> pool(n);
        std::iota(pool.begin(), pool.end(), 1);
        for (int t = 0; t < k; ++t)
            std::swap(pool[t], pool[t + rng.below(static_cast<std::uint64_t>(n - t))]);
        std::vector<int> out(pool.begin(), pool.begin() + k);
        std::sort(out.begin(), out.end());
        return out;
    };
    // pre-generate the trial list so results never depend on evaluation order
    std::vector<std::pair<std::vector<int>, std::vector<int>>> picks;
    picks.reserve(trials);
    for (int t = 0; t < trials; ++t) {
        int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        auto rows = sample_subset(k);
        auto cols = sample_subset(k);
        picks.emplace_back(std::move(rows), std::move(cols));
    }
    for (auto& [rows, cols] : picks) {
        Rational v = minor(a, rows, cols);
        if (sgn(v) < 0) report.negatives.push_back({rows, cols, v});
    }
    return report;
}

VerificationReport compare_sbd(const SingularityFreeBD<double>& computed,
                               const SingularityFreeBD<Rational>& exact) {
    if (computed.n != exact.n)
        throw DimensionMismatch("compare_sbd: dimensions differ");
    VerificationReport report;
    report.n = exact.n;
    const int n = exact.n;

    RelativeError worst;
    auto scan = [&](const Matrix<double>& got, const Matrix<Rational>& want, char which,
                    RelativeError& maxe) {
        int wi = 0, wj = 0;
        for (int i = 1; i <= want.rows(); ++i)
            for (int j = 1; j <= want.cols(); ++j) {
                RelativeError e = relative_error(got(i, j), want(i, j));
                if (maxe < e) {
                    maxe = e;
                    wi = i;
                    wj = j;
                }
            }
        if (worst < maxe) {
            worst = maxe;
            report.worst_i = wi;
            report.worst_j = wj;
            report.worst_in = which;
        }
    };
    scan(computed.b, exact.b, 'B', report.max_rel_error_B);
    scan(computed.c, exact.c, 'C', report.max_rel_error_C);
    if (report.worst_i == 0) { // all errors zero; point at B(1,1)
        report.worst_i = 1;
        report.worst_j = 1;
        report.worst_in = 'B';
    }
    (void)n;
    return report;
}

Rational accuracy_threshold(int n) {
    Integer two52 = 1;
    two52 <<= 52;
    Rational thr(Integer(50L * n), two52);
    thr.canonicalize();
    return thr;
}

} // namespace sbd
