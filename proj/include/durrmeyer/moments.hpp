#pragma once

#include <optional>
#include <string>
#include <vector>

#include "durrmeyer/basis.hpp"
#include "durrmeyer/operators.hpp"

namespace durrmeyer::moments {

enum class moment_kind { raw, central };

struct moment_query {
    operators::operator_spec spec;
    moment_kind kind = moment_kind::raw;
    int order = 0;
    double x = 0.0;
};

// asymptotic means only the leading term of the published expansion; such
// values are compared by ratio convergence, not pointwise equality.
struct moment_value {
    double value;
    bool asymptotic;
};

// Order-I raw moments, i in {0,1,2}.
double closed_moment_m1(const basis::linear_coeff& c, int n, int i, double x);
// Order-I central moments, r in {1,2,4}.
double closed_central_m1(const basis::linear_coeff& c, int n, int r, double x);
// Raw moments of the two-part split of the order-I operator, i in {0,1,2}.
double closed_moment_d1(const basis::linear_coeff& c, int n, int i, double x);
double closed_moment_d2(const basis::linear_coeff& c, int n, int i, double x);
// Order-II raw moments for general coefficients, i in {0,1,2}.
double closed_moment_m2(const basis::quadratic_coeff_set& c, int n, int i,
                        double x);
// Order-II tilde central moments: r in {2,3} exact, {4,5,6} leading term.
moment_value closed_central_m2_tilde(int n, int r, double x);
// Order-III tilde central moments: r in {1,2,3} exactly zero, {4,5,6}
// leading term.
moment_value closed_central_m3_tilde(int n, int r, double x);

// Routes a query to the closed form matching its family/kind/order;
// nullopt when no published formula covers the combination.
std::optional<moment_value> closed_moment(const moment_query& q);

// Human-readable list of (family, kind, order) combinations closed_moment
// accepts, for CLI diagnostics.
std::vector<std::string> supported_closed_forms();

// Independent path: binomial expansion of (t-x)^r into monomials, exact
// basis-monomial integrals, extended-precision compensated accumulation
// over k. Supports any family, r <= 10.
double moment_bruteforce(const moment_query& q);

}
