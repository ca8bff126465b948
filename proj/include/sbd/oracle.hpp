#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sbd/bidiag.hpp"
#include "sbd/matrix.hpp"
#include "sbd/scalar.hpp"

// Exact-arithmetic ground truth, independent of the closed-form family
// constructions: complete Neville elimination, fraction-free rank and minors,
// randomized total-nonnegativity spot checks, and the float-vs-exact
// comparison used by the verification pipeline.

namespace sbd {

// Complete Neville elimination with adjacent rows: columns left to right,
// rows bottom-up against the row above; the transposed pass fills the upper
// multipliers. Throws SingularPivot when an entry cannot be eliminated.
OrdinaryBD<Rational> neville_bd(const Matrix<Rational>& a);

// Rank over the rationals via fraction-free (Bareiss) elimination with row
// pivoting. Exact.
int exact_rank(const Matrix<Rational>& a);

// Exact determinant of the selected square submatrix; index sets are 1-based
// and must be duplicate-free and equal in size.
Rational minor(const Matrix<Rational>& a, const std::vector<int>& rows,
               const std::vector<int>& cols);

struct MinorWitness {
    std::vector<int> rows, cols;
    Rational value;
};

struct TnSampleReport {
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<MinorWitness> negatives;
    bool all_nonnegative() const { return negatives.empty(); }
};

// Evaluates `trials` seeded random square minors (orders 1..n) exactly and
// reports every negative one. Deterministic for a fixed seed.
TnSampleReport tn_sample_check(const Matrix<Rational>& a, int trials, std::uint64_t seed);

struct VerificationReport {
    int n = 0;
    RelativeError max_rel_error_B, max_rel_error_C;
    int worst_i = 0, worst_j = 0;
    char worst_in = 'B';
    std::optional<std::uint64_t> seed;

    RelativeError max_rel_error() const {
        return max_rel_error_B < max_rel_error_C ? max_rel_error_C : max_rel_error_B;
    }
};

// Componentwise relative errors of a binary64 decomposition against the exact
// one, over all B and C entries. Exact zeros must be matched by exact zeros;
// a mismatch reports an infinite error.
VerificationReport compare_sbd(const SingularityFreeBD<double>& computed,
                               const SingularityFreeBD<Rational>& exact);

// 50 * n * eps with eps = 2^-52: the componentwise accuracy threshold used by
// the verification pipeline.
Rational accuracy_threshold(int n);

} // namespace sbd
