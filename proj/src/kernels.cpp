#include "durrmeyer/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace durrmeyer::kernels {

namespace {

double scalar_sum(const double* x, std::size_t n) {
    double s = 0.0, c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double t = s + x[i];
        if (std::fabs(s) >= std::fabs(x[i]))
            c += (s - t) + x[i];
        else
            c += (x[i] - t) + s;
        s = t;
    }
    return s + c;
}

double scalar_dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0, c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double p = a[i] * b[i];
        double e = std::fma(a[i], b[i], -p);
        double t = s + p;
        if (std::fabs(s) >= std::fabs(p))
            c += (s - t) + p;
        else
            c += (p - t) + s;
        s = t;
        c += e;
    }
    return s + c;
}

void scalar_shifted_combine(double* dst, std::size_t dst_len,
                            const double* src, std::size_t src_len,
                            const double* coeff, std::size_t terms) {
    for (std::size_t i = 0; i < dst_len; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < terms; ++j) {
            if (i >= j && i - j < src_len)
                acc = std::fma(coeff[j], src[i - j], acc);
        }
        dst[i] = acc;
    }
}

void scalar_axpy(double* y, double* carry, double a, const double* x,
                 std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double p = a * x[i];
        double s = y[i] + p;
        if (std::fabs(y[i]) >= std::fabs(p))
            carry[i] += (y[i] - s) + p;
        else
            carry[i] += (p - s) + y[i];
        y[i] = s;
    }
}

double scalar_max_abs_diff(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        m = std::fmax(m, std::fabs(a[i] - b[i]));
    return m;
}

double scalar_max_abs_sdiff(const double* a, const double* b, const double* c,
                            std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        m = std::fmax(m, std::fabs((a[i] - 2.0 * b[i]) + c[i]));
    return m;
}

constexpr dispatch_table scalar_impl = {
    "scalar",          scalar_sum,          scalar_dot,
    scalar_shifted_combine, scalar_axpy,    scalar_max_abs_diff,
    scalar_max_abs_sdiff,
};

const dispatch_table* resolve(const char* sel) {
    std::string name = sel ? sel : "auto";
    if (name == "auto" || name.empty())
        return avx2_table() ? avx2_table() : &scalar_table();
    if (name == "scalar")
        return &scalar_table();
    if (name == "avx2") {
        if (const dispatch_table* t = avx2_table())
            return t;
        throw std::invalid_argument("kernels: avx2 requested but unavailable");
    }
    throw std::invalid_argument("kernels: unknown backend '" + name + "'");
}

std::atomic<const dispatch_table*> g_active{nullptr};

}  // namespace

const dispatch_table& scalar_table() { return scalar_impl; }

const dispatch_table& active() {
    const dispatch_table* t = g_active.load(std::memory_order_acquire);
    if (!t) {
        t = resolve(std::getenv("DURRMEYER_KERNELS"));
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

void force(const char* name) {
    g_active.store(resolve(name), std::memory_order_release);
}

#if !defined(DURRMEYER_HAVE_AVX2)
const dispatch_table* avx2_table() { return nullptr; }
#endif

}  // namespace durrmeyer::kernels
