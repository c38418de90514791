#include "durrmeyer/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "durrmeyer/kernels.hpp"

namespace durrmeyer::basis {

namespace {

constexpr long lfact_cache_size = 8193;

void check_x(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("basis: x outside [0,1]");
}

double poly4(const std::array<double, 5>& c, double u) {
    double v = c[4];
    v = std::fma(v, u, c[3]);
    v = std::fma(v, u, c[2]);
    v = std::fma(v, u, c[1]);
    return std::fma(v, u, c[0]);
}

// Shared triangle driver: builds the degree-n row from the degree-0 row so
// that the final combine lands in `out`. `tmp` is scratch of size >= n+1.
void triangle(int n, double x, double* out, double* tmp) {
    const double coeff[2] = {1.0 - x, x};
    const auto& k = kernels::active();
    double* cur = (n % 2 == 0) ? out : tmp;
    double* nxt = (n % 2 == 0) ? tmp : out;
    cur[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
        k.shifted_combine(nxt, static_cast<std::size_t>(m) + 1, cur,
                          static_cast<std::size_t>(m), coeff, 2);
        std::swap(cur, nxt);
    }
}

// Applies the shift-combination of `terms` coefficient values to the
// degree-(n - terms + 1) row, producing the length-(n+1) modified row.
std::vector<double> combined_row(int n, double x, const double* coeff,
                                 std::size_t terms) {
    check_x(x);
    const int base = n - static_cast<int>(terms) + 1;
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    std::vector<double> tmp(static_cast<std::size_t>(base) + 1);
    std::vector<double> row(static_cast<std::size_t>(base) + 1);
    triangle(base, x, row.data(), tmp.data());
    kernels::active().shifted_combine(out.data(), out.size(), row.data(),
                                      row.size(), coeff, terms);
    return out;
}

}  // namespace

quadratic_coeff_set quadratic_tilde(int n) {
    if (n < 2)
        throw std::domain_error("quadratic_tilde: n < 2");
    double dn = n;
    return {1.5, -dn, dn - 2.0, 2.0 * (dn - 2.0)};
}

quartic_coeff_set quartic_tilde(int n) {
    if (n < 4)
        throw std::domain_error("quartic_tilde: n < 4");
    double dn = n;
    quartic_coeff_set c;
    c.bt = {10.0 / 3.0,
            -53.0 / 3.0 - 11.0 / 6.0 * dn,
            0.5 * dn * dn + 29.0 / 6.0 * dn + 89.0 / 3.0,
            -dn * dn - 3.0 * dn - 16.0,
            0.5 * dn * dn};
    c.dt = {-10.0 / 3.0,
            80.0 / 3.0 + 10.0 / 3.0 * dn,
            -2.0 * dn * dn - 28.0 / 3.0 * dn - 161.0 / 3.0,
            4.0 * dn * dn + 6.0 * dn + 32.0,
            -2.0 * dn * dn};
    c.et0 = 3.0 * dn * dn;
    return c;
}

bool satisfies_linear_constraint(const linear_coeff& c, double tol) {
    double scale = std::fmax(1.0, std::fmax(std::fabs(c.a0), std::fabs(c.a1)));
    return std::fabs(2.0 * c.a0 + c.a1 - 1.0) <= tol * scale;
}

bool satisfies_quadratic_constraint(const quadratic_coeff_set& c, double tol) {
    double scale = std::fmax(1.0, std::fmax(std::fabs(c.b2), std::fabs(c.d0)));
    return std::fabs(2.0 * c.b2 - c.d0) <= tol * scale &&
           std::fabs(c.b2 + 2.0 * c.b0 + c.b1 - 1.0) <= tol * scale;
}

bool linear_weights_nonnegative(const linear_coeff& c) {
    return c.a0 >= 0.0 && c.a0 + c.a1 >= 0.0;
}

long double log_factorial(long i) {
    if (i < 0)
        throw std::domain_error("log_factorial: negative argument");
    static const std::vector<long double> cache = [] {
        std::vector<long double> t(lfact_cache_size);
        for (long j = 0; j < lfact_cache_size; ++j)
            t[static_cast<std::size_t>(j)] =
                std::lgamma(static_cast<long double>(j) + 1.0L);
        return t;
    }();
    if (i < lfact_cache_size)
        return cache[static_cast<std::size_t>(i)];
    return std::lgamma(static_cast<long double>(i) + 1.0L);
}

long double log_binomial(long n, long k) {
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double bernstein(basis_index idx, double x) {
    check_x(x);
    if (idx.n < 0)
        throw std::domain_error("bernstein: negative degree");
    if (idx.k < 0 || idx.k > idx.n)
        return 0.0;
    const long n = idx.n, k = idx.k;
    if (x == 0.0)
        return k == 0 ? 1.0 : 0.0;
    if (x == 1.0)
        return k == n ? 1.0 : 0.0;
    long double lx = std::log(static_cast<long double>(x));
    long double l1mx = std::log1p(static_cast<long double>(-x));
    long double v = log_binomial(n, k) + static_cast<long double>(k) * lx +
                    static_cast<long double>(n - k) * l1mx;
    return static_cast<double>(std::exp(v));
}

double modified_basis_m1(basis_index idx, double x, const linear_coeff& c) {
    if (idx.n < 1)
        throw std::domain_error("modified_basis_m1: n < 1");
    double ax = std::fma(c.a1, x, c.a0);
    double a1mx = std::fma(c.a1, 1.0 - x, c.a0);
    return ax * bernstein({idx.n - 1, idx.k}, x) +
           a1mx * bernstein({idx.n - 1, idx.k - 1}, x);
}

double modified_basis_m2(basis_index idx, double x,
                         const quadratic_coeff_set& c) {
    if (idx.n < 2)
        throw std::domain_error("modified_basis_m2: n < 2");
    auto b = [&](double u) { return std::fma(std::fma(c.b2, u, c.b1), u, c.b0); };
    double dx = c.d0 * x * (1.0 - x);
    return b(x) * bernstein({idx.n - 2, idx.k}, x) +
           dx * bernstein({idx.n - 2, idx.k - 1}, x) +
           b(1.0 - x) * bernstein({idx.n - 2, idx.k - 2}, x);
}

double modified_basis_m3(basis_index idx, double x,
                         const quartic_coeff_set& c) {
    if (idx.n < 4)
        throw std::domain_error("modified_basis_m3: n < 4");
    double u = 1.0 - x;
    double ex = c.et0 * (x * u) * (x * u);
    return poly4(c.bt, x) * bernstein({idx.n - 4, idx.k}, x) +
           poly4(c.dt, x) * bernstein({idx.n - 4, idx.k - 1}, x) +
           ex * bernstein({idx.n - 4, idx.k - 2}, x) +
           poly4(c.dt, u) * bernstein({idx.n - 4, idx.k - 3}, x) +
           poly4(c.bt, u) * bernstein({idx.n - 4, idx.k - 4}, x);
}

void bernstein_row(int n, double x, std::span<double> out) {
    check_x(x);
    if (n < 0)
        throw std::domain_error("bernstein_row: negative degree");
    if (out.size() < static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("bernstein_row: output span too small");
    std::vector<double> tmp(static_cast<std::size_t>(n) + 1);
    triangle(n, x, out.data(), tmp.data());
}

std::vector<double> bernstein_row(int n, double x) {
    std::vector<double> out(static_cast<std::size_t>(std::max(n, 0)) + 1);
    bernstein_row(n, x, out);
    return out;
}

std::vector<double> m1_row(int n, double x, const linear_coeff& c) {
    if (n < 1)
        throw std::domain_error("m1_row: n < 1");
    const double coeff[2] = {std::fma(c.a1, x, c.a0),
                             std::fma(c.a1, 1.0 - x, c.a0)};
    return combined_row(n, x, coeff, 2);
}

std::vector<double> m2_row(int n, double x, const quadratic_coeff_set& c) {
    if (n < 2)
        throw std::domain_error("m2_row: n < 2");
    auto b = [&](double u) { return std::fma(std::fma(c.b2, u, c.b1), u, c.b0); };
    const double coeff[3] = {b(x), c.d0 * x * (1.0 - x), b(1.0 - x)};
    return combined_row(n, x, coeff, 3);
}

std::vector<double> m3_row(int n, double x, const quartic_coeff_set& c) {
    if (n < 4)
        throw std::domain_error("m3_row: n < 4");
    double u = 1.0 - x;
    const double coeff[5] = {poly4(c.bt, x), poly4(c.dt, x),
                             c.et0 * (x * u) * (x * u), poly4(c.dt, u),
                             poly4(c.bt, u)};
    return combined_row(n, x, coeff, 5);
}

}  // namespace durrmeyer::basis
