#pragma once

#include <vector>

#include "durrmeyer/functions.hpp"

namespace durrmeyer::quadrature {

// Gauss-Legendre rule mapped to [0,1]: nodes strictly inside (0,1),
// positive weights summing to 1, exact for polynomials of degree <= order.
struct quadrature_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order;
};

// Rule with at least ceil((min_exactness+1)/2) nodes.
quadrature_rule make_rule(int min_exactness);

// Node count used when integrating against a degree-n basis row:
// max(64, ceil((n+16)/2) + 2). Generous for the analytic targets here.
int default_node_count(int n);

// integral over [0,1] of p_{n,k}(t) t^m = n!(k+m)! / (k!(n+m+1)!),
// evaluated through the log-factorial cache.
// Throws std::domain_error when k is outside 0..n (or n, m negative).
double basis_monomial_integral(int n, int k, int m);

// Quadrature approximation of the integral over [0,1] of p_{n,k}(t) f(t).
// Splits into panels at f's breakpoints (at least 8 panels when any exist).
double basis_function_integral(int n, int k,
                               const functions::target_function& f,
                               const quadrature_rule& rule);

// I[k] = integral of p_{n,k}(t) f(t) dt for k = 0..n. Polynomial targets go
// through basis_monomial_integral exactly; everything else through the rule
// with per-element compensated accumulation.
std::vector<double> integral_table(int n, const functions::target_function& f);
std::vector<double> integral_table(int n, const functions::target_function& f,
                                   const quadrature_rule& rule);

}
