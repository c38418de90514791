#include "doctest.h"

#include <cmath>
#include <random>

#include "durrmeyer/functions.hpp"
#include "durrmeyer/moments.hpp"
#include "durrmeyer/operators.hpp"

using namespace durrmeyer;
using moments::moment_kind;
using moments::moment_query;

namespace {

double rel_diff(double a, double b) {
    return std::fabs(a - b) / (1.0 + std::fmax(std::fabs(a), std::fabs(b)));
}

double slope_log(const std::vector<int>& ns, const std::vector<double>& vals) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double lx = std::log(static_cast<double>(ns[i]));
        const double ly = std::log(std::fabs(vals[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}

TEST_CASE("frozen moment values") {
    CHECK(moments::closed_central_m1({1.0, -1.0}, 2, 2, 0.0) ==
          doctest::Approx(0.1).epsilon(1e-14));
    CHECK(moments::closed_moment_m1(basis::classical_linear, 5, 1, 0.2) ==
          doctest::Approx(2.0 / 7.0).epsilon(1e-14));
    CHECK(moments::closed_central_m2_tilde(10, 2, 0.0).value ==
          doctest::Approx(-1.0 / 52.0).epsilon(1e-14));
    CHECK_FALSE(moments::closed_central_m2_tilde(10, 2, 0.0).asymptotic);
    CHECK(moments::closed_central_m2_tilde(10, 4, 0.3).asymptotic);
}

TEST_CASE("random order-I closed forms agree with brute force") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0), pos(0.0, 1.0);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 60)(rng);
        const basis::linear_coeff c{coeff(rng), coeff(rng)};
        moment_query q;
        q.spec = operators::m1_spec(n, c);
        q.x = pos(rng);
        for (int i = 0; i <= 2; ++i) {
            q.kind = moment_kind::raw;
            q.order = i;
            CHECK(rel_diff(moments::closed_moment(q)->value,
                           moments::moment_bruteforce(q)) <= 1e-12);
        }
        for (int r : {1, 2, 4}) {
            q.kind = moment_kind::central;
            q.order = r;
            CHECK(rel_diff(moments::closed_moment(q)->value,
                           moments::moment_bruteforce(q)) <= 1e-12);
        }
    }
}

TEST_CASE("random order-II closed forms agree with brute force") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0), pos(0.0, 1.0);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 60)(rng);
        moment_query q;
        q.spec = operators::m2_spec(
            n, {coeff(rng), coeff(rng), coeff(rng), coeff(rng)});
        q.x = pos(rng);
        q.kind = moment_kind::raw;
        for (int i = 0; i <= 2; ++i) {
            q.order = i;
            CHECK(rel_diff(moments::closed_moment(q)->value,
                           moments::moment_bruteforce(q)) <= 1e-12);
        }
    }
}

TEST_CASE("tilde central moments: exact orders match brute force") {
    for (int n : {4, 10, 25, 64}) {
        for (double x : {0.0, 0.3, 0.5, 0.9, 1.0}) {
            moment_query q;
            q.spec = operators::m2_tilde_spec(n);
            q.kind = moment_kind::central;
            for (int r : {2, 3}) {
                q.order = r;
                q.x = x;
                const auto cv = moments::closed_moment(q);
                REQUIRE(cv.has_value());
                CHECK_FALSE(cv->asymptotic);
                CHECK(rel_diff(cv->value, moments::moment_bruteforce(q)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("order-III tilde annihilates central moments up to order three") {
    for (int n : {4, 10, 100}) {
        for (double x : {0.0, 0.25, 0.5, 1.0}) {
            moment_query q;
            q.spec = operators::m3_tilde_spec(n);
            q.kind = moment_kind::central;
            q.x = x;
            for (int r : {1, 2, 3}) {
                q.order = r;
                CHECK(moments::closed_moment(q)->value == 0.0);
                CHECK(std::fabs(moments::moment_bruteforce(q)) <= 5e-12);
            }
        }
    }
}

TEST_CASE("central moments expand consistently into raw moments") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0), pos(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 50)(rng);
        const basis::linear_coeff c{coeff(rng), coeff(rng)};
        const double x = pos(rng);
        const double m0 = moments::closed_moment_m1(c, n, 0, x);
        const double m1 = moments::closed_moment_m1(c, n, 1, x);
        const double m2 = moments::closed_moment_m1(c, n, 2, x);
        const double c2 = moments::closed_central_m1(c, n, 2, x);
        CHECK(std::fabs(c2 - (m2 - 2.0 * x * m1 + x * x * m0)) <= 1e-12);
    }
}

TEST_CASE("order-II tilde second central moment is negative at the endpoints") {
    for (int n : {2, 10, 40}) {
        CHECK(moments::closed_central_m2_tilde(n, 2, 0.0).value < 0.0);
        CHECK(moments::closed_central_m2_tilde(n, 2, 1.0).value < 0.0);
        CHECK(moments::closed_central_m2_tilde(n, 2, 0.0).value ==
              doctest::Approx(-3.0 / ((n + 2.0) * (n + 3.0))).epsilon(1e-13));
    }
}

TEST_CASE("constrained order-I central moments decay at the stated rates") {
    const std::vector<int> ns = {16, 32, 64, 128, 256};
    std::vector<double> mu2, mu4;
    for (int n : ns) {
        const auto c = operators::m1_sequence_by_name("m1-example1").at(n);
        mu2.push_back(moments::closed_central_m1(c, n, 2, 0.5));
        mu4.push_back(moments::closed_central_m1(c, n, 4, 0.5));
    }
    CHECK(std::fabs(slope_log(ns, mu2) - (-0.926)) <= 0.05);
    CHECK(std::fabs(slope_log(ns, mu4) - (-1.803)) <= 0.05);
}

TEST_CASE("leading-term formulas converge at the expected order") {
    // mu4 of the order-II preset: leading term is O(1/n^2), the neglected
    // remainder O(1/n^3), so the defect shrinks about 8x when n doubles.
    const auto defect = [](int n) {
        moment_query q;
        q.spec = operators::m2_tilde_spec(n);
        q.kind = moment_kind::central;
        q.order = 4;
        q.x = 0.5;
        return std::fabs(moments::closed_moment(q)->value -
                         moments::moment_bruteforce(q));
    };
    const double ratio = defect(64) / defect(128);
    CHECK(ratio >= 6.0);
    CHECK(ratio <= 10.0);

    // order-III leading terms: relative deviation halves (plus slack) as n
    // doubles, for each published order
    for (int r : {4, 5, 6}) {
        const auto dev = [&](int n) {
            moment_query q;
            q.spec = operators::m3_tilde_spec(n);
            q.kind = moment_kind::central;
            q.order = r;
            q.x = 0.3;
            return std::fabs(moments::closed_moment(q)->value /
                                 moments::moment_bruteforce(q) -
                             1.0);
        };
        CHECK(dev(128) <= 0.65 * dev(64) + 1e-9);
    }
}

TEST_CASE("split-part moments match the decomposition and recombine") {
    const auto rule = operators::m1_sequence_by_name("m1-example2");
    for (int n : {5, 10, 40}) {
        const auto c = rule.at(n);
        const auto spec = operators::m1_spec(n, c);
        for (double x : {0.0, 0.3, 0.7, 1.0}) {
            for (int i = 0; i <= 2; ++i) {
                const auto& ei = functions::by_name("e" + std::to_string(i));
                const auto parts = operators::decompose_m1(spec, ei, x);
                const double d1 = moments::closed_moment_d1(c, n, i, x);
                const double d2 = moments::closed_moment_d2(c, n, i, x);
                CHECK(std::fabs(d1 - parts.d1) <= 1e-12);
                CHECK(std::fabs(d2 - parts.d2) <= 1e-12);
                CHECK(std::fabs((d2 - d1) -
                                moments::closed_moment_m1(c, n, i, x)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("router coverage and brute-force guard") {
    moment_query q;
    q.spec = operators::classical_spec(10);
    q.kind = moment_kind::central;
    q.order = 6;
    CHECK_FALSE(moments::closed_moment(q).has_value());
    q.spec = operators::m3_tilde_spec(10);
    q.kind = moment_kind::raw;
    q.order = 1;
    CHECK_FALSE(moments::closed_moment(q).has_value());
    CHECK(moments::supported_closed_forms().size() == 5);

    q.kind = moment_kind::central;
    q.order = 11;
    CHECK_THROWS_AS(moments::moment_bruteforce(q), std::domain_error);
}
