#pragma once

#include <functional>
#include <string>
#include <vector>

namespace durrmeyer::functions {

// Declared smoothness class on [0,1]; gates which analyses apply.
enum class smoothness { c0, c2, c6, c10 };

struct target_function {
    std::string id;
    std::function<double(double)> eval;
    // Analytic derivatives when available; empty otherwise.
    std::function<double(double)> d1;
    std::function<double(double)> d2;
    // Interior points where the integrand loses smoothness.
    std::vector<double> breakpoints;
    smoothness smooth = smoothness::c10;
    // Nonempty means f(t) = sum_m poly[m] t^m exactly; enables the exact
    // integration path.
    std::vector<double> poly;

    bool is_polynomial() const { return !poly.empty(); }
    bool has_derivatives() const { return static_cast<bool>(d2); }
};

// e_i(t) = t^i
target_function monomial(int i);

// Registry: e0..e6, sin2pi, example1, example2, example3, abs-half.
// Throws std::invalid_argument for unknown names.
const target_function& by_name(const std::string& name);
std::vector<std::string> known_names();

// Functions exercised by property tests and the bound checks.
const std::vector<target_function>& corpus();

// Analytic derivative when present, else 5-point central difference with
// h = 1e-4 (clamped so the stencil stays inside [0,1]).
double deriv1(const target_function& f, double x);
double deriv2(const target_function& f, double x);

}
