#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "durrmeyer/basis.hpp"

#ifdef DURRMEYER_HAVE_GMPXX
#include <gmpxx.h>
#endif

using namespace durrmeyer;

namespace {

double row_sum(const std::vector<double>& row) {
    double s = 0.0;
    for (double v : row) s += v;
    return s;
}

#ifdef DURRMEYER_HAVE_GMPXX
// binom(n,k) x^k (1-x)^(n-k) evaluated in exact rational arithmetic.
mpq_class bernstein_exact(int n, int k, const mpq_class& x) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    mpq_class xk = 1, omxk = 1;
    const mpq_class omx = 1 - x;
    for (int i = 0; i < k; ++i) xk *= x;
    for (int i = 0; i < n - k; ++i) omxk *= omx;
    return mpq_class(binom) * xk * omxk;
}
#endif

}

#ifdef DURRMEYER_HAVE_GMPXX
TEST_CASE("single-point values match exact rationals") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> pick_n(1, 120), pick_p(0, 256);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = pick_n(rng);
        const int k = std::uniform_int_distribution<int>(0, n)(rng);
        const int p = pick_p(rng);
        const mpq_class x(p, 256);
        const double exact = bernstein_exact(n, k, x).get_d();
        const double got = basis::bernstein({n, k}, p / 256.0);
        CHECK(std::fabs(got - exact) <= 1e-14 * (1.0 + std::fabs(exact)));
    }
}

TEST_CASE("order-I combination matches exact rationals") {
    const mpq_class a0(9, 20), a1(1, 10);
    std::mt19937 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 80)(rng);
        const int k = std::uniform_int_distribution<int>(0, n)(rng);
        const int p = std::uniform_int_distribution<int>(0, 256)(rng);
        const mpq_class x(p, 256);
        mpq_class exact = 0;
        if (k <= n - 1) exact += (a1 * x + a0) * bernstein_exact(n - 1, k, x);
        if (k >= 1) exact += (a1 * (1 - x) + a0) * bernstein_exact(n - 1, k - 1, x);
        const double got =
            basis::modified_basis_m1({n, k}, p / 256.0, {9.0 / 20.0, 1.0 / 10.0});
        CHECK(std::fabs(got - exact.get_d()) <=
              1e-13 * (1.0 + std::fabs(exact.get_d())));
    }
}
#endif

TEST_CASE("frozen basis values") {
    CHECK(basis::bernstein({200, 100}, 0.5) ==
          doctest::Approx(0.056348479009256422).epsilon(1e-14));
    CHECK(basis::modified_basis_m1({10, 4}, 0.3, {0.45, 0.1}) ==
          doctest::Approx(0.22108600079999999).epsilon(1e-14));
    CHECK(basis::modified_basis_m2({10, 5}, 0.4, basis::quadratic_tilde(10)) ==
          doctest::Approx(0.28922019840000002).epsilon(1e-14));
    CHECK(basis::modified_basis_m3({10, 4}, 0.3, basis::quartic_tilde(10)) ==
          doctest::Approx(0.52365022733333333).epsilon(1e-14));
    CHECK(basis::modified_basis_m3({6, 0}, 0.0, basis::quartic_tilde(6)) ==
          doctest::Approx(10.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("row recurrence agrees with log-gamma evaluation") {
    for (int n : {1, 2, 5, 17, 64}) {
        for (double x : {0.0, 1e-3, 0.3, 0.5, 0.9, 1.0}) {
            const auto row = basis::bernstein_row(n, x);
            REQUIRE(row.size() == static_cast<std::size_t>(n) + 1);
            for (int k = 0; k <= n; ++k)
                CHECK(std::fabs(row[static_cast<std::size_t>(k)] -
                                basis::bernstein({n, k}, x)) <= 1e-13);
        }
    }
}

TEST_CASE("partition of unity up to degree 500") {
    for (int n : {1, 2, 3, 5, 10, 50, 200, 500}) {
        for (int i = 0; i <= 100; ++i) {
            const double x = i / 100.0;
            CHECK(std::fabs(row_sum(basis::bernstein_row(n, x)) - 1.0) <= 1e-13);
        }
    }
}

TEST_CASE("modified row sums follow the coefficient identities") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const basis::linear_coeff lc{coeff(rng), coeff(rng)};
        const basis::quadratic_coeff_set qc{coeff(rng), coeff(rng), coeff(rng),
                                            coeff(rng)};
        const int n = std::uniform_int_distribution<int>(2, 40)(rng);
        const double x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        CHECK(row_sum(basis::m1_row(n, x, lc)) ==
              doctest::Approx(2.0 * lc.a0 + lc.a1).epsilon(1e-12));
        const double expect = (2.0 * qc.b2 - qc.d0) * (x * x - x) +
                              (2.0 * qc.b0 + qc.b1 + qc.b2);
        CHECK(row_sum(basis::m2_row(n, x, qc)) ==
              doctest::Approx(expect).epsilon(1e-11));
    }
}

TEST_CASE("tilde rows sum to one") {
    for (int n : {4, 8, 16, 33}) {
        for (double x : {0.0, 0.25, 0.5, 0.77, 1.0}) {
            if (n >= 2)
                CHECK(std::fabs(row_sum(basis::m2_row(n, x, basis::quadratic_tilde(n))) -
                                1.0) <= 1e-12);
            CHECK(std::fabs(row_sum(basis::m3_row(n, x, basis::quartic_tilde(n))) -
                            1.0) <= 1e-10);
        }
    }
}

TEST_CASE("coefficient reductions recover the plain basis") {
    for (int n : {2, 3, 7, 20}) {
        for (double x : {0.0, 0.2, 0.5, 0.9, 1.0}) {
            const auto plain = basis::bernstein_row(n, x);
            const auto r1 = basis::m1_row(n, x, basis::classical_linear);
            const auto r2 = basis::m2_row(n, x, basis::classical_quadratic);
            for (int k = 0; k <= n; ++k) {
                CHECK(std::fabs(r1[static_cast<std::size_t>(k)] -
                                plain[static_cast<std::size_t>(k)]) <= 1e-13);
                CHECK(std::fabs(r2[static_cast<std::size_t>(k)] -
                                plain[static_cast<std::size_t>(k)]) <= 1e-13);
            }
        }
    }
}

TEST_CASE("out-of-range indices evaluate to zero") {
    CHECK(basis::bernstein({5, -1}, 0.3) == 0.0);
    CHECK(basis::bernstein({5, 6}, 0.3) == 0.0);
    CHECK(basis::modified_basis_m3({6, -1}, 0.3, basis::quartic_tilde(6)) == 0.0);
    CHECK(basis::modified_basis_m1({3, 4}, 0.3, {0.45, 0.1}) == 0.0);
}

TEST_CASE("domain violations throw") {
    CHECK_THROWS_AS(basis::bernstein({5, 2}, -0.1), std::domain_error);
    CHECK_THROWS_AS(basis::bernstein({5, 2}, 1.1), std::domain_error);
    CHECK_THROWS_AS(basis::bernstein({-1, 0}, 0.5), std::domain_error);
    CHECK_THROWS_AS(basis::m1_row(0, 0.5, basis::classical_linear),
                    std::domain_error);
    CHECK_THROWS_AS(basis::m2_row(1, 0.5, basis::classical_quadratic),
                    std::domain_error);
    CHECK_THROWS_AS(basis::m3_row(3, 0.5, basis::quartic_tilde(4)),
                    std::domain_error);
}

TEST_CASE("case-1 weights keep the order-I row nonnegative") {
    const basis::linear_coeff pos{0.45, 0.1};
    CHECK(basis::linear_weights_nonnegative(pos));
    CHECK_FALSE(basis::linear_weights_nonnegative({-10.0 / 21.0, 41.0 / 21.0}));
    for (double x : {0.0, 0.1, 0.5, 0.99, 1.0})
        for (double v : basis::m1_row(12, x, pos)) CHECK(v >= 0.0);
}

TEST_CASE("constraint predicates") {
    CHECK(basis::satisfies_linear_constraint({0.45, 0.1}));
    CHECK(basis::satisfies_linear_constraint({2.0, -3.0}));
    CHECK_FALSE(basis::satisfies_linear_constraint({0.5, 0.5}));
    CHECK(basis::satisfies_quadratic_constraint(basis::classical_quadratic));
    CHECK(basis::satisfies_quadratic_constraint(basis::quadratic_tilde(10)));
    CHECK_FALSE(basis::satisfies_quadratic_constraint({1.0, -2.0, 1.0, 3.0}));
}

TEST_CASE("log binomial reproduces exact counts") {
    CHECK(std::exp(static_cast<double>(basis::log_binomial(52, 5))) ==
          doctest::Approx(2598960.0).epsilon(1e-13));
    CHECK(std::exp(static_cast<double>(basis::log_binomial(10, 0))) ==
          doctest::Approx(1.0).epsilon(1e-14));
}
