#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "durrmeyer/basis.hpp"
#include "durrmeyer/functions.hpp"
#include "durrmeyer/grid.hpp"

namespace durrmeyer::operators {

using functions::target_function;

struct invalid_spec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numeric result violated a stated inequality (maps to CLI exit code 3).
struct numerical_assertion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class family { classical, m1, m2, m2_tilde, m3_tilde };

const char* family_name(family f);
int min_degree(family f);

struct operator_spec {
    family fam = family::classical;
    int n = 1;
    std::variant<std::monostate, basis::linear_coeff,
                 basis::quadratic_coeff_set, basis::quartic_coeff_set>
        coeffs;

    const basis::linear_coeff& linear() const;
    const basis::quadratic_coeff_set& quadratic() const;
    const basis::quartic_coeff_set& quartic() const;

    // Reproduces constants: (A) for m1, the section-3 pair for m2;
    // classical and the tilde presets always do.
    bool constrained() const;
    // All outer-basis weights nonnegative on [0,1] (positive operator).
    bool positive() const;
    std::string id() const;
};

operator_spec classical_spec(int n);
operator_spec m1_spec(int n, basis::linear_coeff c);
operator_spec m2_spec(int n, basis::quadratic_coeff_set c);
operator_spec m2_tilde_spec(int n);
operator_spec m3_tilde_spec(int n);

// Throws invalid_spec on family/coefficient mismatch or n below the family
// minimum (1 for m1, 2 for m2, 4 for the order-III preset).
void validate(const operator_spec& spec);

// Outer basis row: coefficient of the k-th inner integral, k = 0..n.
std::vector<double> outer_row(const operator_spec& spec, double x);

// (n+1) sum_k outer_k(x) * integral(p_{n,k} f), compensated over k.
double apply(const operator_spec& spec, const target_function& f, double x);

// Same with a precomputed integral table (length n+1).
double apply_with_table(const operator_spec& spec,
                        const std::vector<double>& table, double x);

// Per-point apply with the k-indexed integrals computed once.
std::vector<std::pair<double, double>> apply_on_grid(
    const operator_spec& spec, const target_function& f,
    const analysis::grid& g);

// Case-2 split of the order-I operator into the two parts whose difference
// d2 - d1 reproduces apply(spec, f, x).
struct m1_parts {
    double d1;
    double d2;
};
m1_parts decompose_m1(const operator_spec& spec, const target_function& f,
                      double x);

// Coefficient rule a_i(n) as rational expressions in n plus limits.
struct sequence_family {
    std::string name;
    std::string a0_expr;
    std::string a1_expr;
    std::optional<double> l0;
    std::optional<double> l1;

    basis::linear_coeff at(int n) const;
};

const std::vector<sequence_family>& m1_sequence_presets();
const sequence_family& m1_sequence_by_name(const std::string& name);

// name in {classical, m1-example1, m1-example2, m1-reproducing, m2-tilde,
// m3-tilde}; throws invalid_spec otherwise.
operator_spec preset(const std::string& name, int n);
std::vector<std::string> preset_names();

}
