#pragma once

#include "sbd/matrix.hpp"
#include "sbd/scalar.hpp"

// Determinant by first-row cofactor expansion: an implementation independent
// of the fraction-free elimination used by the library, for cross-checks at
// small orders.

namespace sbdtest {

inline sbd::Rational det_cofactor(const sbd::Matrix<sbd::Rational>& a) {
    const int n = a.rows();
    if (n == 1) return a(1, 1);
    sbd::Rational det = 0;
    int sign = 1;
    for (int j = 1; j <= n; ++j) {
        sbd::Matrix<sbd::Rational> sub(n - 1, n - 1);
        for (int r = 2; r <= n; ++r) {
            int cc = 1;
            for (int c = 1; c <= n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = a(r, c);
            }
        }
        det += sign * a(1, j) * det_cofactor(sub);
        sign = -sign;
    }
    return det;
}

} // namespace sbdtest
