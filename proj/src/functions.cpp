#include "durrmeyer/functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace durrmeyer::functions {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<target_function> build_registry() {
    std::vector<target_function> r;
    for (int i = 0; i <= 6; ++i) r.push_back(monomial(i));

    target_function s;
    s.id = "sin2pi";
    s.eval = [](double x) { return std::sin(2.0 * pi * x); };
    s.d1 = [](double x) { return 2.0 * pi * std::cos(2.0 * pi * x); };
    s.d2 = [](double x) { return -4.0 * pi * pi * std::sin(2.0 * pi * x); };
    r.push_back(s);

    target_function e1;
    e1.id = "example1";
    e1.eval = [](double x) {
        return std::sin(2.0 * pi * x) + 2.0 * std::sin(0.5 * pi * x);
    };
    e1.d1 = [](double x) {
        return 2.0 * pi * std::cos(2.0 * pi * x) + pi * std::cos(0.5 * pi * x);
    };
    e1.d2 = [](double x) {
        return -4.0 * pi * pi * std::sin(2.0 * pi * x) -
               0.5 * pi * pi * std::sin(0.5 * pi * x);
    };
    r.push_back(e1);

    target_function e2;
    e2.id = "example2";
    e2.eval = [](double x) {
        return std::fabs(x - 0.5) * std::cos(2.0 * pi * x);
    };
    e2.breakpoints = {0.5};
    e2.smooth = smoothness::c0;
    r.push_back(e2);

    target_function e3;
    e3.id = "example3";
    e3.eval = [](double x) { return (x - 0.25) * std::sin(2.0 * pi * x); };
    e3.d1 = [](double x) {
        return std::sin(2.0 * pi * x) +
               2.0 * pi * (x - 0.25) * std::cos(2.0 * pi * x);
    };
    e3.d2 = [](double x) {
        return 4.0 * pi * std::cos(2.0 * pi * x) -
               4.0 * pi * pi * (x - 0.25) * std::sin(2.0 * pi * x);
    };
    r.push_back(e3);

    target_function ah;
    ah.id = "abs-half";
    ah.eval = [](double x) { return std::fabs(x - 0.5); };
    ah.breakpoints = {0.5};
    ah.smooth = smoothness::c0;
    r.push_back(ah);

    return r;
}

const std::vector<target_function>& registry() {
    static const std::vector<target_function> r = build_registry();
    return r;
}

}  // namespace

target_function monomial(int i) {
    if (i < 0)
        throw std::invalid_argument("monomial: negative power");
    target_function f;
    f.id = "e" + std::to_string(i);
    f.eval = [i](double x) { return std::pow(x, i); };
    f.d1 = [i](double x) { return i == 0 ? 0.0 : i * std::pow(x, i - 1); };
    f.d2 = [i](double x) {
        return i < 2 ? 0.0 : static_cast<double>(i) * (i - 1) * std::pow(x, i - 2);
    };
    f.poly.assign(static_cast<std::size_t>(i) + 1, 0.0);
    f.poly.back() = 1.0;
    return f;
}

const target_function& by_name(const std::string& name) {
    for (const auto& f : registry())
        if (f.id == name)
            return f;
    throw std::invalid_argument("unknown function '" + name + "'");
}

std::vector<std::string> known_names() {
    std::vector<std::string> names;
    for (const auto& f : registry()) names.push_back(f.id);
    return names;
}

const std::vector<target_function>& corpus() {
    static const std::vector<target_function> c = {
        by_name("e0"),      by_name("e1"),       by_name("e2"),
        by_name("e3"),      by_name("sin2pi"),   by_name("example1"),
        by_name("example2"), by_name("example3"), by_name("abs-half"),
    };
    return c;
}

double deriv1(const target_function& f, double x) {
    if (f.d1)
        return f.d1(x);
    const double h = 1e-4;
    double c = std::fmin(std::fmax(x, 2.0 * h), 1.0 - 2.0 * h);
    return (-f.eval(c + 2 * h) + 8 * f.eval(c + h) - 8 * f.eval(c - h) +
            f.eval(c - 2 * h)) /
           (12 * h);
}

double deriv2(const target_function& f, double x) {
    if (f.d2)
        return f.d2(x);
    const double h = 1e-4;
    double c = std::fmin(std::fmax(x, 2.0 * h), 1.0 - 2.0 * h);
    return (-f.eval(c + 2 * h) + 16 * f.eval(c + h) - 30 * f.eval(c) +
            16 * f.eval(c - h) - f.eval(c - 2 * h)) /
           (12 * h * h);
}

}  // namespace durrmeyer::functions
