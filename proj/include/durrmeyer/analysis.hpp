#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "durrmeyer/grid.hpp"
#include "durrmeyer/operators.hpp"

namespace durrmeyer::analysis {

using functions::target_function;

struct error_report {
    std::vector<std::pair<double, double>> per_point;  // (x, |f - Op f|)
    double sup_error;
    int n;
    std::string spec_id;
};

error_report report_errors(const operators::operator_spec& spec,
                           const target_function& f, const grid& g);

// Least-squares fit of log(sup_error) against log(n). Entries whose
// sup-error is below 1e-12 are dropped before fitting; degenerate is set
// when fewer than two usable points remain.
struct rate_fit {
    std::vector<int> n_values;
    std::vector<double> sup_errors;
    double slope;
    double intercept;
    double r_squared;
    bool degenerate;
};

rate_fit convergence_order(
    const std::function<operators::operator_spec(int)>& make_spec,
    const target_function& f, const std::vector<int>& n_values, const grid& g);

// Pointwise n(Op f - f)(x) minus the limit expression
// (1-2x)(2 l1 + 3 l0) f'(x) + x(1-x)(2 l0 + l1) f''(x).
// Requires the rule's stored limits; throws invalid_spec when absent.
std::vector<std::pair<double, double>> voronovskaja_residual(
    const operators::sequence_family& rule, const target_function& f, int n,
    const grid& g);

// With the reproducing coefficients (a0,a1) = (2,-3):
// sup over the grid of |Op f - f - (1/2) mu2(x) f''(x)|, normalized by
// (1/n) w(f'', 1/sqrt(n)). When that modulus vanishes (constant f'')
// returns sup|lhs| * n instead.
double quantitative_voronovskaja_check(const target_function& f, int n,
                                       const grid& g);

// First and second moduli of continuity estimated by sliding-window search
// over an equispaced sample of the given resolution.
double modulus_first(const target_function& f, double delta,
                     int resolution = 10000);
double modulus_second(const target_function& f, double delta,
                      int resolution = 10000);

// bound = (3|a1| + 1)(1 + sqrt(2)) w(f, 1/sqrt(n)); actual = discrete
// sup-error of the order-I operator on a 201-point grid.
struct bound_pair {
    double bound;
    double actual;
};
bound_pair direct_bound(const basis::linear_coeff& c, int n,
                        const target_function& f);

}
