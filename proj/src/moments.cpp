#include "durrmeyer/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace durrmeyer::moments {

namespace {

double binom_small(int r, int j) {
    double v = 1.0;
    for (int i = 1; i <= j; ++i)
        v = v * (r - j + i) / i;
    return v;
}

long double monomial_integral_ld(int n, int k, int m) {
    return std::exp(basis::log_factorial(n) + basis::log_factorial(k + m) -
                    basis::log_factorial(k) - basis::log_factorial(n + m + 1));
}

}  // namespace

double closed_moment_m1(const basis::linear_coeff& c, int n, int i, double x) {
    if (n < 1)
        throw std::domain_error("closed_moment_m1: n < 1");
    const double a0 = c.a0, a1 = c.a1;
    switch (i) {
        case 0:
            return 2.0 * a0 + a1;
        case 1:
            return (a1 + 2.0 * a0) * x +
                   (1.0 - 2.0 * x) * (3.0 * a0 + 2.0 * a1) / (n + 2.0);
        case 2:
            return (a1 + 2.0 * a0) * x * x -
                   2.0 * n *
                       ((8.0 * x * x - 5.0 * x) * a0 +
                        (5.0 * x * x - 3.0 * x) * a1) /
                       ((n + 2.0) * (n + 3.0)) -
                   2.0 *
                       ((x * x + 5.0 * x - 3.0) * a1 +
                        (4.0 * x * x + 5.0 * x - 4.0) * a0) /
                       ((n + 2.0) * (n + 3.0));
    }
    throw std::domain_error("closed_moment_m1: order not in {0,1,2}");
}

double closed_central_m1(const basis::linear_coeff& c, int n, int r,
                         double x) {
    if (n < 1)
        throw std::domain_error("closed_central_m1: n < 1");
    const double a0 = c.a0, a1 = c.a1;
    switch (r) {
        case 1:
            return (1.0 - 2.0 * x) * (2.0 * a1 + 3.0 * a0) / (n + 2.0);
        case 2:
            return (2.0 * (3.0 * a1 + 4.0 * a0 - 11.0 * a1 * x +
                           14.0 * x * x * a0 + 11.0 * a1 * x * x -
                           14.0 * a0 * x) +
                    2.0 * (1.0 - x) * x * (2.0 * a0 + a1) * n) /
                   ((n + 2.0) * (n + 3.0));
        case 4: {
            double u = 1.0 - x;
            double head = u * u * x * x * (2.0 * a0 + a1) * n * static_cast<double>(n);
            double mid = 3.0 * u * x *
                         (15.0 * a1 * x * x + 22.0 * x * x * a0 -
                          15.0 * a1 * x - 22.0 * a0 * x + 6.0 * a0 +
                          4.0 * a1) *
                         n;
            double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
            double tail = 10.0 * a1 + 12.0 * a0 - 68.0 * a1 * x +
                          124.0 * x4 * a0 + 202.0 * x2 * a0 + 114.0 * x4 * a1 +
                          182.0 * a1 * x2 - 78.0 * a0 * x - 228.0 * a1 * x3 -
                          248.0 * a0 * x3;
            return 12.0 * (head + mid + tail) /
                   ((n + 2.0) * (n + 3.0) * (n + 4.0) * (n + 5.0));
        }
    }
    throw std::domain_error("closed_central_m1: order not in {1,2,4}");
}

double closed_moment_d1(const basis::linear_coeff& c, int n, int i, double x) {
    if (n < 1)
        throw std::domain_error("closed_moment_d1: n < 1");
    const double a1 = c.a1;
    switch (i) {
        case 0:
            return -a1 * (x + 1.0);
        case 1:
            return -a1 * (n * x * x + n * x - x * x + 2.0) / (n + 2.0);
        case 2: {
            double x2 = x * x, x3 = x2 * x;
            return -a1 *
                   (x2 * (x + 1.0) * n * static_cast<double>(n) -
                    x * (3.0 * x2 - x - 6.0) * n + 2.0 * x3 - 2.0 * x2 -
                    4.0 * x + 6.0) /
                   ((n + 2.0) * (n + 3.0));
        }
    }
    throw std::domain_error("closed_moment_d1: order not in {0,1,2}");
}

double closed_moment_d2(const basis::linear_coeff& c, int n, int i, double x) {
    if (n < 1)
        throw std::domain_error("closed_moment_d2: n < 1");
    const double a0 = c.a0, a1 = c.a1;
    switch (i) {
        case 0:
            return 2.0 * a0 - a1 * x;
        case 1:
            return ((2.0 * a0 - a1 * x) * n * x + a1 * x * x - 2.0 * a0 * x -
                    2.0 * a1 * x + 3.0 * a0) /
                   (n + 2.0);
        case 2: {
            double x2 = x * x, x3 = x2 * x;
            return ((2.0 * a0 - a1 * x) * x2 * n * static_cast<double>(n) +
                    (3.0 * a1 * x3 - 6.0 * a0 * x2 - 6.0 * a1 * x2 +
                     10.0 * a0 * x) *
                        n -
                    2.0 * a1 * x3 + 4.0 * a0 * x2 + 6.0 * a1 * x2 -
                    10.0 * a0 * x - 6.0 * a1 * x + 8.0 * a0) /
                   ((n + 2.0) * (n + 3.0));
        }
    }
    throw std::domain_error("closed_moment_d2: order not in {0,1,2}");
}

double closed_moment_m2(const basis::quadratic_coeff_set& c, int n, int i,
                        double x) {
    if (n < 2)
        throw std::domain_error("closed_moment_m2: n < 2");
    const double b0 = c.b0, b1 = c.b1, b2 = c.b2, d0 = c.d0;
    const double g = 2.0 * b2 - d0;
    const double h = 2.0 * b0 + b1 + b2;
    const double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
    switch (i) {
        case 0:
            return g * x2 - g * x + h;
        case 1:
            return ((g * x3 - g * x2 + h * x) * n + (-4.0 * b2 + 2.0 * d0) * x3 +
                    (8.0 * b2 - 4.0 * d0) * x2 +
                    (-4.0 * b0 - 4.0 * b1 - 8.0 * b2 + 2.0 * d0) * x +
                    4.0 * b0 + 3.0 * b1 + 3.0 * b2) /
                   (n + 2.0);
        case 2:
            return ((g * x4 - g * x3 + h * x2) * n * static_cast<double>(n) +
                    ((-10.0 * b2 + 5.0 * d0) * x4 +
                     (22.0 * b2 - 11.0 * d0) * x3 +
                     (-10.0 * b0 - 9.0 * b1 - 21.0 * b2 + 6.0 * d0) * x2 +
                     (12.0 * b0 + 8.0 * b1 + 8.0 * b2) * x) *
                        n +
                    (12.0 * b2 - 6.0 * d0) * x4 +
                    (-36.0 * b2 + 18.0 * d0) * x3 +
                    (12.0 * b0 + 14.0 * b1 + 52.0 * b2 - 18.0 * d0) * x2 +
                    (-24.0 * b0 - 26.0 * b1 - 40.0 * b2 + 6.0 * d0) * x +
                    14.0 * b0 + 12.0 * b1 + 12.0 * b2) /
                   ((n + 2.0) * (n + 3.0));
    }
    throw std::domain_error("closed_moment_m2: order not in {0,1,2}");
}

moment_value closed_central_m2_tilde(int n, int r, double x) {
    if (n < 2)
        throw std::domain_error("closed_central_m2_tilde: n < 2");
    const double u = 1.0 - x;
    switch (r) {
        case 2:
            return {(20.0 * x * u - 3.0) / ((n + 2.0) * (n + 3.0)), false};
        case 3:
            return {3.0 * (1.0 - 2.0 * x) *
                        (-4.0 * n * x * u - 48.0 * x * x + 48.0 * x - 7.0) /
                        ((n + 2.0) * (n + 3.0) * (n + 4.0)),
                    false};
        case 4:
            return {-12.0 * x * x * u * u * n * static_cast<double>(n) /
                        ((n + 2.0) * (n + 3.0) * (n + 4.0) * (n + 5.0)),
                    true};
        case 5:
            return {-360.0 * (1.0 - 2.0 * x) * x * x * u * u * n *
                        static_cast<double>(n) /
                        ((n + 2.0) * (n + 3.0) * (n + 4.0) * (n + 5.0) *
                         (n + 6.0)),
                    true};
        case 6: {
            double xu = x * u;
            return {-240.0 * xu * xu * xu * n * static_cast<double>(n) * n /
                        ((n + 2.0) * (n + 3.0) * (n + 4.0) * (n + 5.0) *
                         (n + 6.0) * (n + 7.0)),
                    true};
        }
    }
    throw std::domain_error("closed_central_m2_tilde: order not in {2..6}");
}

moment_value closed_central_m3_tilde(int n, int r, double x) {
    if (n < 4)
        throw std::domain_error("closed_central_m3_tilde: n < 4");
    const double u = 1.0 - x;
    switch (r) {
        case 1:
        case 2:
        case 3:
            return {0.0, false};
        case 4:
            return {20.0 * x * u * (21.0 * x * x - 21.0 * x + 5.0) * n /
                        ((n + 2.0) * (n + 3.0) * (n + 4.0) * (n + 5.0)),
                    true};
        case 5:
            return {180.0 * (1.0 - 2.0 * x) * x * x * u * u * n *
                        static_cast<double>(n) /
                        ((n + 2.0) * (n + 3.0) * (n + 4.0) * (n + 5.0) *
                         (n + 6.0)),
                    true};
        case 6: {
            double xu = x * u;
            return {120.0 * xu * xu * xu * n * static_cast<double>(n) * n /
                        ((n + 2.0) * (n + 3.0) * (n + 4.0) * (n + 5.0) *
                         (n + 6.0) * (n + 7.0)),
                    true};
        }
    }
    throw std::domain_error("closed_central_m3_tilde: order not in {1..6}");
}

std::optional<moment_value> closed_moment(const moment_query& q) {
    using operators::family;
    const auto& s = q.spec;
    const int r = q.order;
    switch (s.fam) {
        case family::classical:
        case family::m1: {
            basis::linear_coeff c = s.fam == family::classical
                                        ? basis::classical_linear
                                        : s.linear();
            if (q.kind == moment_kind::raw && r >= 0 && r <= 2)
                return moment_value{closed_moment_m1(c, s.n, r, q.x), false};
            if (q.kind == moment_kind::central &&
                (r == 1 || r == 2 || r == 4))
                return moment_value{closed_central_m1(c, s.n, r, q.x), false};
            return std::nullopt;
        }
        case family::m2:
        case family::m2_tilde: {
            if (q.kind == moment_kind::raw && r >= 0 && r <= 2)
                return moment_value{
                    closed_moment_m2(s.quadratic(), s.n, r, q.x), false};
            if (s.fam == family::m2_tilde && q.kind == moment_kind::central &&
                r >= 2 && r <= 6)
                return closed_central_m2_tilde(s.n, r, q.x);
            return std::nullopt;
        }
        case family::m3_tilde:
            if (q.kind == moment_kind::central && r >= 1 && r <= 6)
                return closed_central_m3_tilde(s.n, r, q.x);
            return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::string> supported_closed_forms() {
    return {
        "classical: raw 0-2, central 1,2,4",
        "m1:        raw 0-2, central 1,2,4",
        "m2:        raw 0-2",
        "m2-tilde:  raw 0-2, central 2,3 (exact) and 4,5,6 (leading term)",
        "m3-tilde:  central 1,2,3 (exact zeros) and 4,5,6 (leading term)",
    };
}

double moment_bruteforce(const moment_query& q) {
    if (q.order < 0 || q.order > 10)
        throw std::domain_error("moment_bruteforce: order outside 0..10");
    operators::validate(q.spec);
    const int n = q.spec.n, r = q.order;
    std::vector<double> outer = operators::outer_row(q.spec, q.x);

    long double s = 0.0L, comp = 0.0L;
    for (int k = 0; k <= n; ++k) {
        long double gk = 0.0L;
        if (q.kind == moment_kind::raw) {
            gk = monomial_integral_ld(n, k, r);
        } else {
            for (int j = 0; j <= r; ++j) {
                long double pw =
                    std::pow(static_cast<long double>(-q.x), r - j);
                gk += static_cast<long double>(binom_small(r, j)) * pw *
                      monomial_integral_ld(n, k, j);
            }
        }
        long double term = static_cast<long double>(outer[static_cast<std::size_t>(k)]) * gk;
        long double t = s + term;
        if (std::fabs(s) >= std::fabs(term))
            comp += (s - t) + term;
        else
            comp += (term - t) + s;
        s = t;
    }
    return static_cast<double>((s + comp) * (n + 1));
}

}  // namespace durrmeyer::moments
