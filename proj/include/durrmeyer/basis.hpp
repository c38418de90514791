#pragma once

#include <array>
#include <span>
#include <vector>

namespace durrmeyer::basis {

// k may be any integer; evaluation is 0 outside 0..n.
struct basis_index {
    int n;
    long k;
};

// a(x) = a1*x + a0
struct linear_coeff {
    double a0;
    double a1;
};

// b(x) = b2*x^2 + b1*x + b0, d(x) = d0*x*(1-x)
struct quadratic_coeff_set {
    double b0;
    double b1;
    double b2;
    double d0;
};

// bt/dt hold quartic coefficients in ascending powers, e(x) = et0*(x(1-x))^2
struct quartic_coeff_set {
    std::array<double, 5> bt;
    std::array<double, 5> dt;
    double et0;
};

constexpr linear_coeff classical_linear{1.0, -1.0};
constexpr quadratic_coeff_set classical_quadratic{1.0, -2.0, 1.0, 2.0};

// b0=3/2, b1=-n, b2=n-2, d0=2(n-2)
quadratic_coeff_set quadratic_tilde(int n);
quartic_coeff_set quartic_tilde(int n);

// 2*a0 + a1 = 1
bool satisfies_linear_constraint(const linear_coeff& c, double tol = 1e-12);
// 2*b2 - d0 = 0 and b2 + 2*b0 + b1 = 1
bool satisfies_quadratic_constraint(const quadratic_coeff_set& c,
                                    double tol = 1e-12);
// a0 >= 0 and a0 + a1 >= 0: the combination has nonnegative weights
bool linear_weights_nonnegative(const linear_coeff& c);

// lgamma(i + 1); cached up to i = 8192, exact to long-double precision.
long double log_factorial(long i);
long double log_binomial(long n, long k);

// binom(n,k) x^k (1-x)^(n-k); 0 outside 0..n. Stable for n up to several
// thousand via log-gamma with explicit x in {0,1} branches.
// Throws std::domain_error for x outside [0,1] or n < 0.
double bernstein(basis_index idx, double x);

double modified_basis_m1(basis_index idx, double x, const linear_coeff& c);
double modified_basis_m2(basis_index idx, double x,
                         const quadratic_coeff_set& c);
double modified_basis_m3(basis_index idx, double x,
                         const quartic_coeff_set& c);

// out[k] = p_{n,k}(x) for k = 0..n via the degree-raising recurrence;
// out.size() must be >= n+1.
void bernstein_row(int n, double x, std::span<double> out);
std::vector<double> bernstein_row(int n, double x);

// Rows of the modified bases, k = 0..n.
std::vector<double> m1_row(int n, double x, const linear_coeff& c);
std::vector<double> m2_row(int n, double x, const quadratic_coeff_set& c);
std::vector<double> m3_row(int n, double x, const quartic_coeff_set& c);

}
