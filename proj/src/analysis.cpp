#include "durrmeyer/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "durrmeyer/functions.hpp"
#include "durrmeyer/kernels.hpp"
#include "durrmeyer/moments.hpp"
#include "durrmeyer/quadrature.hpp"

namespace durrmeyer::analysis {

grid grid::uniform(int m) {
    if (m < 2) throw std::invalid_argument("grid needs at least two points");
    grid g;
    g.points.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) g.points[static_cast<std::size_t>(i)] = i / (m - 1.0);
    return g;
}

error_report report_errors(const operators::operator_spec& spec,
                           const target_function& f, const grid& g) {
    const auto table = quadrature::integral_table(spec.n, f);
    error_report rep;
    rep.n = spec.n;
    rep.spec_id = spec.id();
    rep.per_point.reserve(g.points.size());
    rep.sup_error = 0.0;
    for (double x : g.points) {
        const double err = std::fabs(operators::apply_with_table(spec, table, x) - f.eval(x));
        rep.per_point.emplace_back(x, err);
        rep.sup_error = std::max(rep.sup_error, err);
    }
    return rep;
}

rate_fit convergence_order(
    const std::function<operators::operator_spec(int)>& make_spec,
    const target_function& f, const std::vector<int>& n_values, const grid& g) {
    if (n_values.size() < 2)
        throw operators::invalid_spec("rate fit needs at least two degrees");
    rate_fit fit;
    fit.n_values = n_values;
    fit.sup_errors.reserve(n_values.size());
    for (int n : n_values)
        fit.sup_errors.push_back(report_errors(make_spec(n), f, g).sup_error);

    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (fit.sup_errors[i] < 1e-12) continue;  // converged to noise floor
        lx.push_back(std::log(static_cast<double>(n_values[i])));
        ly.push_back(std::log(fit.sup_errors[i]));
    }
    if (lx.size() < 2) {
        fit.slope = 0.0;
        fit.intercept = 0.0;
        fit.r_squared = 0.0;
        fit.degenerate = true;
        return fit;
    }
    const double m = static_cast<double>(lx.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double dx = lx[i] - mx, dy = ly[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
        ssr += r * r;
    }
    fit.r_squared = syy > 0.0 ? std::max(0.0, 1.0 - ssr / syy) : 1.0;
    fit.degenerate = false;
    return fit;
}

std::vector<std::pair<double, double>> voronovskaja_residual(
    const operators::sequence_family& rule, const target_function& f, int n,
    const grid& g) {
    if (!rule.l0 || !rule.l1)
        throw operators::invalid_spec("coefficient rule '" + rule.name +
                                      "' has no stored limits");
    const double l0 = *rule.l0, l1 = *rule.l1;
    const auto spec = operators::m1_spec(n, rule.at(n));
    const auto table = quadrature::integral_table(n, f);
    std::vector<std::pair<double, double>> out;
    out.reserve(g.points.size());
    for (double x : g.points) {
        const double lhs = n * (operators::apply_with_table(spec, table, x) - f.eval(x));
        const double limit = (1.0 - 2.0 * x) * (2.0 * l1 + 3.0 * l0) * functions::deriv1(f, x) +
                             x * (1.0 - x) * (2.0 * l0 + l1) * functions::deriv2(f, x);
        out.emplace_back(x, lhs - limit);
    }
    return out;
}

double quantitative_voronovskaja_check(const target_function& f, int n,
                                       const grid& g) {
    const basis::linear_coeff c{2.0, -3.0};
    const auto spec = operators::m1_spec(n, c);
    const auto table = quadrature::integral_table(n, f);
    double sup = 0.0;
    for (double x : g.points) {
        const double mu2 = moments::closed_central_m1(c, n, 2, x);
        const double lhs = operators::apply_with_table(spec, table, x) - f.eval(x) -
                           0.5 * mu2 * functions::deriv2(f, x);
        sup = std::max(sup, std::fabs(lhs));
    }
    target_function d2;
    d2.id = f.id + "_d2";
    d2.eval = [&f](double x) { return functions::deriv2(f, x); };
    const double w = modulus_first(d2, 1.0 / std::sqrt(static_cast<double>(n)));
    if (w < 1e-14) return sup * n;  // constant second derivative
    return sup * n / w;
}

namespace {

std::vector<double> sample(const target_function& f, int resolution) {
    if (resolution < 1000)
        throw std::invalid_argument("modulus sample resolution below 1000");
    std::vector<double> v(static_cast<std::size_t>(resolution) + 1);
    for (int i = 0; i <= resolution; ++i)
        v[static_cast<std::size_t>(i)] = f.eval(i / static_cast<double>(resolution));
    return v;
}

}

double modulus_first(const target_function& f, double delta, int resolution) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("modulus step must lie in (0, 1]");
    const auto v = sample(f, resolution);
    const auto& k = kernels::active();
    const int jmax = static_cast<int>(delta * resolution + 1e-9);
    double m = 0.0;
    for (int j = 1; j <= jmax; ++j)
        m = std::max(m, k.max_abs_diff(v.data(), v.data() + j,
                                       v.size() - static_cast<std::size_t>(j)));
    return m;
}

double modulus_second(const target_function& f, double delta, int resolution) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("modulus step must lie in (0, 1]");
    const auto v = sample(f, resolution);
    const auto& k = kernels::active();
    int jmax = static_cast<int>(delta * resolution + 1e-9);
    jmax = std::min(jmax, resolution / 2);  // x-h and x+h must both stay in [0,1]
    double m = 0.0;
    for (int j = 1; j <= jmax; ++j)
        m = std::max(m, k.max_abs_sdiff(v.data(), v.data() + j, v.data() + 2 * j,
                                        v.size() - static_cast<std::size_t>(2 * j)));
    return m;
}

bound_pair direct_bound(const basis::linear_coeff& c, int n,
                        const target_function& f) {
    if (n < 1) throw operators::invalid_spec("direct bound needs n >= 1");
    const double w = modulus_first(f, 1.0 / std::sqrt(static_cast<double>(n)));
    bound_pair out;
    out.bound = (3.0 * std::fabs(c.a1) + 1.0) * (1.0 + std::sqrt(2.0)) * w;
    out.actual = report_errors(operators::m1_spec(n, c), f, grid::uniform(201)).sup_error;
    return out;
}

}
