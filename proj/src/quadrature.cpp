#include "durrmeyer/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "durrmeyer/basis.hpp"
#include "durrmeyer/kernels.hpp"

namespace durrmeyer::quadrature {

namespace {

quadrature_rule make_rule_with_nodes(int m) {
    // Legendre roots on [-1,1] by Newton from the Chebyshev-like guess,
    // then mapped to [0,1]. Converges in a handful of iterations.
    quadrature_rule rule;
    rule.nodes.resize(static_cast<std::size_t>(m));
    rule.weights.resize(static_cast<std::size_t>(m));
    rule.order = 2 * m - 1;
    for (int i = 0; i < m; ++i) {
        long double z = std::cos(std::numbers::pi_v<long double> *
                                 (static_cast<long double>(i) + 0.75L) /
                                 (static_cast<long double>(m) + 0.5L));
        long double pp = 0.0L;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1.0L, p1 = z;
            for (int j = 2; j <= m; ++j) {
                long double p2 = ((2.0L * j - 1.0L) * z * p1 -
                                  (j - 1.0L) * p0) /
                                 static_cast<long double>(j);
                p0 = p1;
                p1 = p2;
            }
            pp = static_cast<long double>(m) * (z * p1 - p0) /
                 (z * z - 1.0L);
            long double dz = p1 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-19L)
                break;
        }
        rule.nodes[static_cast<std::size_t>(i)] =
            static_cast<double>((1.0L - z) / 2.0L);
        rule.weights[static_cast<std::size_t>(i)] = static_cast<double>(
            1.0L / ((1.0L - z * z) * pp * pp));
    }
    return rule;
}

// Panel boundaries: [0,1] split at interior breakpoints, each segment
// subdivided so the total panel count reaches at least 8.
std::vector<double> panel_edges(const functions::target_function& f) {
    if (f.breakpoints.empty())
        return {0.0, 1.0};
    std::vector<double> cuts = {0.0};
    for (double b : f.breakpoints)
        if (b > 0.0 && b < 1.0)
            cuts.push_back(b);
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::size_t segments = cuts.size() - 1;
    std::size_t per = (8 + segments - 1) / segments;
    std::vector<double> edges;
    for (std::size_t s = 0; s < segments; ++s) {
        double lo = cuts[s], hi = cuts[s + 1];
        for (std::size_t j = 0; j < per; ++j)
            edges.push_back(lo + (hi - lo) * static_cast<double>(j) /
                                     static_cast<double>(per));
    }
    edges.push_back(1.0);
    return edges;
}

std::vector<double> polynomial_table(int n, const std::vector<double>& poly) {
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        long double acc = 0.0L;
        for (std::size_t m = 0; m < poly.size(); ++m) {
            if (poly[m] == 0.0)
                continue;
            long double v = std::exp(
                basis::log_factorial(n) +
                basis::log_factorial(k + static_cast<long>(m)) -
                basis::log_factorial(k) -
                basis::log_factorial(n + static_cast<long>(m) + 1));
            acc += static_cast<long double>(poly[m]) * v;
        }
        out[static_cast<std::size_t>(k)] = static_cast<double>(acc);
    }
    return out;
}

}  // namespace

quadrature_rule make_rule(int min_exactness) {
    if (min_exactness < 0)
        throw std::domain_error("make_rule: negative exactness");
    int m = (min_exactness + 2) / 2;
    return make_rule_with_nodes(std::max(m, 1));
}

int default_node_count(int n) {
    return std::max(64, (n + 17) / 2 + 2);
}

double basis_monomial_integral(int n, int k, int m) {
    if (n < 0 || m < 0 || k < 0 || k > n)
        throw std::domain_error("basis_monomial_integral: index out of range");
    long double v = basis::log_factorial(n) + basis::log_factorial(k + m) -
                    basis::log_factorial(k) - basis::log_factorial(n + m + 1);
    return static_cast<double>(std::exp(v));
}

double basis_function_integral(int n, int k,
                               const functions::target_function& f,
                               const quadrature_rule& rule) {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("basis_function_integral: index out of range");
    std::vector<double> terms;
    std::vector<double> edges = panel_edges(f);
    terms.reserve(rule.nodes.size() * (edges.size() - 1));
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        double lo = edges[p], width = edges[p + 1] - edges[p];
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            double t = lo + width * rule.nodes[j];
            terms.push_back(width * rule.weights[j] *
                            basis::bernstein({n, k}, t) * f.eval(t));
        }
    }
    return kernels::active().sum(terms.data(), terms.size());
}

std::vector<double> integral_table(int n, const functions::target_function& f,
                                   const quadrature_rule& rule) {
    if (n < 0)
        throw std::domain_error("integral_table: negative degree");
    if (f.is_polynomial())
        return polynomial_table(n, f.poly);

    std::size_t len = static_cast<std::size_t>(n) + 1;
    std::vector<double> acc(len, 0.0), carry(len, 0.0), row(len);
    const auto& k = kernels::active();
    std::vector<double> edges = panel_edges(f);
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        double lo = edges[p], width = edges[p + 1] - edges[p];
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            double t = lo + width * rule.nodes[j];
            basis::bernstein_row(n, t, row);
            k.axpy_compensated(acc.data(), carry.data(),
                               width * rule.weights[j] * f.eval(t), row.data(),
                               len);
        }
    }
    for (std::size_t i = 0; i < len; ++i) acc[i] += carry[i];
    return acc;
}

std::vector<double> integral_table(int n,
                                   const functions::target_function& f) {
    if (f.is_polynomial())
        return polynomial_table(n, f.poly);
    return integral_table(n, f, make_rule(2 * default_node_count(n) - 1));
}

}  // namespace durrmeyer::quadrature
