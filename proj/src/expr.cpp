#include "durrmeyer/expr.hpp"

#include <cctype>
#include <cstdlib>

namespace durrmeyer::expr {

namespace {

struct parser {
    const char* p;
    double n;

    void skip() {
        while (*p == ' ' || *p == '\t') ++p;
    }

    double primary() {
        skip();
        if (*p == '(') {
            ++p;
            double v = sum();
            skip();
            if (*p != ')')
                throw parse_error("expr: missing ')'");
            ++p;
            return v;
        }
        if (*p == 'n' || *p == 'N') {
            ++p;
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(*p)) || *p == '.') {
            char* end = nullptr;
            double v = std::strtod(p, &end);
            if (end == p)
                throw parse_error("expr: bad number");
            p = end;
            return v;
        }
        throw parse_error(std::string("expr: unexpected character '") +
                          (*p ? std::string(1, *p) : "<end>") + "'");
    }

    double factor() {
        skip();
        if (*p == '-') {
            ++p;
            return -factor();
        }
        if (*p == '+') {
            ++p;
            return factor();
        }
        return primary();
    }

    double product() {
        double v = factor();
        for (;;) {
            skip();
            if (*p == '*') {
                ++p;
                v *= factor();
            } else if (*p == '/') {
                ++p;
                double d = factor();
                if (d == 0.0)
                    throw parse_error("expr: division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    double sum() {
        double v = product();
        for (;;) {
            skip();
            if (*p == '+') {
                ++p;
                v += product();
            } else if (*p == '-') {
                ++p;
                v -= product();
            } else {
                return v;
            }
        }
    }
};

}  // namespace

double eval_in_n(const std::string& text, double n) {
    parser ps{text.c_str(), n};
    double v = ps.sum();
    ps.skip();
    if (*ps.p != '\0')
        throw parse_error("expr: trailing input '" + std::string(ps.p) + "'");
    return v;
}

}  // namespace durrmeyer::expr
