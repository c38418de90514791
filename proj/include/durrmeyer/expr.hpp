#pragma once

#include <stdexcept>
#include <string>

namespace durrmeyer::expr {

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluates a rational expression in the variable n: numbers, 'n',
// + - * /, unary sign, parentheses. E.g. "(n-1)/(2*n)".
double eval_in_n(const std::string& text, double n);

}
