#include <doctest.h>

#include "sbd/sbd.hpp"
#include "support/cofactor.hpp"
#include "support/generators.hpp"

using namespace sbd;
using sbdtest::frac;
using sbdtest::NodeMode;

namespace {

Matrix<Rational> mat(std::vector<std::vector<const char*>> rows) {
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    Matrix<Rational> m(r, c);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= c; ++j) m(i, j) = parse_rational(rows[i - 1][j - 1]);
    return m;
}

Matrix<Rational> random_positive_bd(int n, SplitMix64& rng) {
    Matrix<Rational> m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m(i, j) = frac(1 + static_cast<long>(rng.below(20)), 7);
    return m;
}

} // namespace

TEST_CASE("neville_bd of the identity is the identity") {
    auto m = neville_bd(Matrix<Rational>::identity(4));
    CHECK(m.m == Matrix<Rational>::identity(4));
}

TEST_CASE("neville_bd of the 3x3 Vandermonde with nodes (1,2,4)") {
    auto a = mat({{"1", "1", "1"}, {"1", "2", "4"}, {"1", "4", "16"}});
    auto m = neville_bd(a);
    CHECK(m.m == mat({{"1", "1", "1"}, {"1", "1", "2"}, {"1", "2", "6"}}));
    CHECK(reconstruct(bd_expand(m)) == a);
}

TEST_CASE("neville_bd reports the vanishing pivot") {
    auto a = mat({{"0", "0"}, {"1", "0"}});
    CHECK_THROWS_AS(neville_bd(a), SingularPivot);
    try {
        neville_bd(a);
    } catch (const SingularPivot& e) {
        CHECK(e.row == 2);
        CHECK(e.col == 1);
    }
}

TEST_CASE("neville_bd inverts bd_expand+reconstruct on positive parameters") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng.below(8));
        Matrix<Rational> m = random_positive_bd(n, rng);
        auto a = reconstruct(bd_expand(OrdinaryBD<Rational>{n, m}));
        auto back = neville_bd(a);
        CHECK(back.m == m);
    }
}

TEST_CASE("exact_rank") {
    CHECK(exact_rank(Matrix<Rational>::identity(5)) == 5);
    NodeConfig cfg;
    cfg.family = Family::vandermonde;
    cfg.n = 3;
    cfg.nodes = {Rational(1), Rational(1), Rational(2)};
    CHECK(exact_rank(dense_matrix<Rational>(cfg)) == 2);

    // rank = number of distinct nodes, any arrangement
    SplitMix64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng.below(8));
        auto pcfg = sbdtest::random_config(Family::vandermonde, n, rng.next(),
                                           NodeMode::permissive);
        std::vector<Rational> uniq = pcfg.nodes;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        int want = std::min<int>(static_cast<int>(uniq.size()), n);
        CHECK(exact_rank(dense_matrix<Rational>(pcfg)) == want);
    }

    // q-Bernstein-Vandermonde with distinct nodes is nonsingular
    for (int n : {2, 5, 8}) {
        auto qcfg = sbdtest::random_config(Family::q_bernstein_vandermonde, n,
                                           sbdtest::mix_seed(77, n, 0), NodeMode::sorted_strict);
        CHECK(exact_rank(dense_matrix<Rational>(qcfg)) == n);
    }
}

TEST_CASE("minor basics") {
    auto a = mat({{"1", "1"}, {"1", "2"}});
    CHECK(minor(a, {2}, {2}) == 2);
    CHECK(minor(a, {1, 2}, {1, 2}) == 1);
    CHECK_THROWS_AS(minor(a, {1}, {1, 2}), DimensionMismatch);
    CHECK_THROWS_AS(minor(a, {1, 1}, {1, 2}), DimensionMismatch);
    CHECK_THROWS_AS(minor(a, {0}, {1}), DimensionMismatch);
    CHECK_THROWS_AS(minor(a, {3}, {1}), DimensionMismatch);
}

TEST_CASE("minor agrees with cofactor expansion up to order 4") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 1 + static_cast<int>(rng.below(4));
        Matrix<Rational> a(k, k);
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j)
                a(i, j) = frac(static_cast<long>(rng.below(41)) - 20, 1 + rng.below(6));
        std::vector<int> idx;
        for (int i = 1; i <= k; ++i) idx.push_back(i);
        CHECK(minor(a, idx, idx) == sbdtest::det_cofactor(a));
    }
}

TEST_CASE("all 2x2 minors of a sorted q-Bernstein-Vandermonde matrix are nonnegative") {
    for (int n : {3, 4, 5}) {
        auto cfg = sbdtest::random_config(Family::q_bernstein_vandermonde, n,
                                          sbdtest::mix_seed(41, n, 0), NodeMode::sorted_strict);
        auto a = dense_matrix<Rational>(cfg);
        for (int i1 = 1; i1 <= n; ++i1)
            for (int i2 = i1 + 1; i2 <= n; ++i2)
                for (int j1 = 1; j1 <= n; ++j1)
                    for (int j2 = j1 + 1; j2 <= n; ++j2)
                        CHECK(sgn(minor(a, {i1, i2}, {j1, j2})) >= 0);
    }
}

TEST_CASE("tn_sample_check") {
    auto id = Matrix<Rational>::identity(4);
    CHECK(tn_sample_check(id, 200, 1).all_nonnegative());

    // a negative node out of order breaks total nonnegativity visibly
    NodeConfig cfg;
    cfg.family = Family::vandermonde;
    cfg.strict = false;
    cfg.n = 3;
    cfg.nodes = {Rational(1), Rational(-1), Rational(2)};
    auto a = dense_matrix<Rational>(cfg);
    auto report = tn_sample_check(a, 500, 1);
    CHECK_FALSE(report.all_nonnegative());
    const auto& w = report.negatives.front();
    CHECK(minor(a, w.rows, w.cols) == w.value);
    CHECK(sgn(w.value) < 0);

    // deterministic for a fixed seed
    auto again = tn_sample_check(a, 500, 1);
    REQUIRE(again.negatives.size() == report.negatives.size());
    for (size_t i = 0; i < again.negatives.size(); ++i) {
        CHECK(again.negatives[i].rows == report.negatives[i].rows);
        CHECK(again.negatives[i].cols == report.negatives[i].cols);
        CHECK(again.negatives[i].value == report.negatives[i].value);
    }
    auto other_seed = tn_sample_check(a, 500, 2);
    CHECK_FALSE(other_seed.all_nonnegative());
}

TEST_CASE("compare_sbd on identical inputs reports zeros") {
    auto cfg = sbdtest::random_config(Family::q_bernstein_vandermonde, 5,
                                      sbdtest::mix_seed(61, 5, 0), NodeMode::dyadic_strict);
    auto exact = decompose<Rational>(cfg);
    SingularityFreeBD<double> same;
    same.n = exact.n;
    same.b = Matrix<double>(5, 5);
    same.c = Matrix<double>(6, 6);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) same.b(i, j) = round_to_double(exact.b(i, j));
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) same.c(i, j) = round_to_double(exact.c(i, j));
    // identical only when the rounded entries happen to be exact; use the
    // lifted values as "exact" to force both maxima to zero
    SingularityFreeBD<Rational> lifted;
    lifted.n = 5;
    lifted.b = Matrix<Rational>(5, 5);
    lifted.c = Matrix<Rational>(6, 6);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) lifted.b(i, j) = lift(same.b(i, j));
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) lifted.c(i, j) = lift(same.c(i, j));
    auto report = compare_sbd(same, lifted);
    CHECK(report.max_rel_error_B == RelativeError());
    CHECK(report.max_rel_error_C == RelativeError());
    CHECK(report.max_rel_error().str() == "0");
}

TEST_CASE("compare_sbd points at a deliberately perturbed entry") {
    SingularityFreeBD<Rational> exact;
    exact.n = 2;
    exact.b = mat({{"1", "1"}, {"1", "2"}});
    exact.c = mat({{"1", "1", "1"}, {"1", "1", "1"}, {"1", "1", "1"}});
    SingularityFreeBD<double> noisy;
    noisy.n = 2;
    noisy.b = Matrix<double>(2, 2);
    noisy.c = Matrix<double>(3, 3);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) noisy.b(i, j) = round_to_double(exact.b(i, j));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) noisy.c(i, j) = 1.0;
    const double bump = 1.0 + std::ldexp(1.0, -20);
    noisy.b(2, 1) *= bump;
    auto report = compare_sbd(noisy, exact);
    CHECK(report.worst_in == 'B');
    CHECK(report.worst_i == 2);
    CHECK(report.worst_j == 1);
    CHECK(report.max_rel_error_B.value() == Rational(1, 1 << 20));
    CHECK(report.max_rel_error_C == RelativeError());

    SingularityFreeBD<double> wrong_dim;
    wrong_dim.n = 3;
    CHECK_THROWS_AS(compare_sbd(wrong_dim, exact), DimensionMismatch);
}

TEST_CASE("compare_sbd flags a zero matched by a nonzero as infinite") {
    SingularityFreeBD<Rational> exact;
    exact.n = 1;
    exact.b = mat({{"0"}});
    exact.c = mat({{"1", "1"}, {"1", "1"}});
    SingularityFreeBD<double> bad;
    bad.n = 1;
    bad.b = Matrix<double>(1, 1);
    bad.b(1, 1) = 1e-300;
    bad.c = Matrix<double>(2, 2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) bad.c(i, j) = 1.0;
    auto report = compare_sbd(bad, exact);
    CHECK(report.max_rel_error_B.is_infinite());
    CHECK(report.max_rel_error().is_infinite());
}

TEST_CASE("binary64 decomposition achieves high componentwise accuracy") {
    auto cfg = sbdtest::random_config(Family::q_bernstein_vandermonde, 12,
                                      sbdtest::mix_seed(85, 12, 0), NodeMode::dyadic_strict);
    auto exact = decompose<Rational>(cfg);
    auto f64 = decompose<double>(cfg);
    auto report = compare_sbd(f64, exact);
    REQUIRE_FALSE(report.max_rel_error().is_infinite());
    CHECK(report.max_rel_error().value() <= accuracy_threshold(12));
}

TEST_CASE("accuracy threshold is 50 n eps") {
    Integer two52 = 1;
    two52 <<= 52;
    CHECK(accuracy_threshold(12) == Rational(Integer(600), two52));
}
