#include "durrmeyer/operators.hpp"

#include <cmath>

#include "durrmeyer/expr.hpp"
#include "durrmeyer/kernels.hpp"
#include "durrmeyer/quadrature.hpp"

namespace durrmeyer::operators {

namespace {

// Minimum of b2 u^2 + b1 u + b0 over [0,1].
double quadratic_min01(double b0, double b1, double b2) {
    double m = std::fmin(b0, b2 + b1 + b0);
    if (b2 > 0.0) {
        double v = -b1 / (2.0 * b2);
        if (v > 0.0 && v < 1.0)
            m = std::fmin(m, std::fma(std::fma(b2, v, b1), v, b0));
    }
    return m;
}

}  // namespace

const char* family_name(family f) {
    switch (f) {
        case family::classical: return "classical";
        case family::m1: return "m1";
        case family::m2: return "m2";
        case family::m2_tilde: return "m2-tilde";
        case family::m3_tilde: return "m3-tilde";
    }
    return "?";
}

int min_degree(family f) {
    switch (f) {
        case family::classical: return 0;
        case family::m1: return 1;
        case family::m2:
        case family::m2_tilde: return 2;
        case family::m3_tilde: return 4;
    }
    return 0;
}

const basis::linear_coeff& operator_spec::linear() const {
    if (const auto* c = std::get_if<basis::linear_coeff>(&coeffs))
        return *c;
    throw invalid_spec("spec does not carry linear coefficients");
}

const basis::quadratic_coeff_set& operator_spec::quadratic() const {
    if (const auto* c = std::get_if<basis::quadratic_coeff_set>(&coeffs))
        return *c;
    throw invalid_spec("spec does not carry quadratic coefficients");
}

const basis::quartic_coeff_set& operator_spec::quartic() const {
    if (const auto* c = std::get_if<basis::quartic_coeff_set>(&coeffs))
        return *c;
    throw invalid_spec("spec does not carry quartic coefficients");
}

bool operator_spec::constrained() const {
    switch (fam) {
        case family::classical:
        case family::m2_tilde:
        case family::m3_tilde:
            return true;
        case family::m1:
            return basis::satisfies_linear_constraint(linear());
        case family::m2:
            return basis::satisfies_quadratic_constraint(quadratic());
    }
    return false;
}

bool operator_spec::positive() const {
    switch (fam) {
        case family::classical:
            return true;
        case family::m1:
            return basis::linear_weights_nonnegative(linear());
        case family::m2:
        case family::m2_tilde: {
            const auto& c = quadratic();
            return quadratic_min01(c.b0, c.b1, c.b2) >= 0.0 && c.d0 >= 0.0;
        }
        case family::m3_tilde:
            return false;
    }
    return false;
}

std::string operator_spec::id() const {
    return std::string(family_name(fam)) + "_n" + std::to_string(n);
}

operator_spec classical_spec(int n) {
    operator_spec s{family::classical, n, std::monostate{}};
    validate(s);
    return s;
}

operator_spec m1_spec(int n, basis::linear_coeff c) {
    operator_spec s{family::m1, n, c};
    validate(s);
    return s;
}

operator_spec m2_spec(int n, basis::quadratic_coeff_set c) {
    operator_spec s{family::m2, n, c};
    validate(s);
    return s;
}

operator_spec m2_tilde_spec(int n) {
    if (n < 2)
        throw invalid_spec("m2-tilde requires n >= 2");
    operator_spec s{family::m2_tilde, n, basis::quadratic_tilde(n)};
    return s;
}

operator_spec m3_tilde_spec(int n) {
    if (n < 4)
        throw invalid_spec("m3-tilde requires n >= 4");
    operator_spec s{family::m3_tilde, n, basis::quartic_tilde(n)};
    return s;
}

void validate(const operator_spec& spec) {
    if (spec.n < min_degree(spec.fam))
        throw invalid_spec(std::string(family_name(spec.fam)) +
                           " requires n >= " +
                           std::to_string(min_degree(spec.fam)));
    switch (spec.fam) {
        case family::classical:
            if (!std::holds_alternative<std::monostate>(spec.coeffs))
                throw invalid_spec("classical spec takes no coefficients");
            break;
        case family::m1:
            spec.linear();
            break;
        case family::m2:
        case family::m2_tilde:
            spec.quadratic();
            break;
        case family::m3_tilde:
            spec.quartic();
            break;
    }
}

std::vector<double> outer_row(const operator_spec& spec, double x) {
    validate(spec);
    switch (spec.fam) {
        case family::classical:
            return basis::bernstein_row(spec.n, x);
        case family::m1:
            return basis::m1_row(spec.n, x, spec.linear());
        case family::m2:
        case family::m2_tilde:
            return basis::m2_row(spec.n, x, spec.quadratic());
        case family::m3_tilde:
            return basis::m3_row(spec.n, x, spec.quartic());
    }
    throw invalid_spec("unknown family");
}

double apply_with_table(const operator_spec& spec,
                        const std::vector<double>& table, double x) {
    if (table.size() != static_cast<std::size_t>(spec.n) + 1)
        throw invalid_spec("integral table length does not match degree");
    std::vector<double> row = outer_row(spec, x);
    double s = kernels::active().dot(row.data(), table.data(), table.size());
    return (spec.n + 1) * s;
}

double apply(const operator_spec& spec, const target_function& f, double x) {
    return apply_with_table(spec, quadrature::integral_table(spec.n, f), x);
}

std::vector<std::pair<double, double>> apply_on_grid(
    const operator_spec& spec, const target_function& f,
    const analysis::grid& g) {
    validate(spec);
    std::vector<double> table = quadrature::integral_table(spec.n, f);
    std::vector<std::pair<double, double>> out;
    out.reserve(g.points.size());
    for (double x : g.points)
        out.emplace_back(x, apply_with_table(spec, table, x));
    return out;
}

m1_parts decompose_m1(const operator_spec& spec, const target_function& f,
                      double x) {
    if (spec.fam != family::m1)
        throw invalid_spec("decompose_m1 requires an order-I spec");
    validate(spec);
    const auto& c = spec.linear();
    std::vector<double> table = quadrature::integral_table(spec.n, f);

    // Split of the outer weights: {-a1 x, -a1} and {a0, a0 - a1 x}; the
    // combination difference restores {a1 x + a0, a1(1-x) + a0}.
    const double part1[2] = {-c.a1 * x, -c.a1};
    const double part2[2] = {c.a0, std::fma(-c.a1, x, c.a0)};

    std::size_t len = static_cast<std::size_t>(spec.n) + 1;
    std::vector<double> base = basis::bernstein_row(spec.n - 1, x);
    std::vector<double> row(len);
    const auto& k = kernels::active();

    k.shifted_combine(row.data(), len, base.data(), base.size(), part1, 2);
    double d1 = (spec.n + 1) * k.dot(row.data(), table.data(), len);
    k.shifted_combine(row.data(), len, base.data(), base.size(), part2, 2);
    double d2 = (spec.n + 1) * k.dot(row.data(), table.data(), len);
    return {d1, d2};
}

basis::linear_coeff sequence_family::at(int n) const {
    double dn = n;
    return {expr::eval_in_n(a0_expr, dn), expr::eval_in_n(a1_expr, dn)};
}

const std::vector<sequence_family>& m1_sequence_presets() {
    static const std::vector<sequence_family> presets = {
        {"m1-example1", "(n-1)/(2*n)", "1/n", 0.5, 0.0},
        {"m1-example2", "-n/(2*n+1)", "(4*n+1)/(2*n+1)", -0.5, 2.0},
        {"m1-reproducing", "2", "-3", 2.0, -3.0},
        {"m1-reduction", "1", "-1", 1.0, -1.0},
    };
    return presets;
}

const sequence_family& m1_sequence_by_name(const std::string& name) {
    for (const auto& s : m1_sequence_presets())
        if (s.name == name)
            return s;
    throw invalid_spec("unknown coefficient rule '" + name + "'");
}

operator_spec preset(const std::string& name, int n) {
    if (name == "classical")
        return classical_spec(n);
    if (name == "m2-tilde")
        return m2_tilde_spec(n);
    if (name == "m3-tilde")
        return m3_tilde_spec(n);
    for (const auto& s : m1_sequence_presets())
        if (s.name == name && name != "m1-reduction")
            return m1_spec(n, s.at(n));
    throw invalid_spec("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
    return {"classical",       "m1-example1", "m1-example2",
            "m1-reproducing", "m2-tilde",    "m3-tilde"};
}

}  // namespace durrmeyer::operators
