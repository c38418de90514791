#include "doctest.h"

#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>
#include <vector>

#include "durrmeyer/kernels.hpp"

using namespace durrmeyer;

namespace {

std::vector<double> random_vec(std::mt19937& rng, std::size_t n, double lo,
                               double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

long double sum_ref(const std::vector<double>& v) {
    long double s = 0.0L;
    for (double x : v) s += x;
    return s;
}

long double dot_ref(const std::vector<double>& a, const std::vector<double>& b) {
    long double s = 0.0L;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long double>(a[i]) * b[i];
    return s;
}

struct backend_reset {
    ~backend_reset() { kernels::force("auto"); }
};

std::vector<const kernels::dispatch_table*> backends() {
    std::vector<const kernels::dispatch_table*> out = {&kernels::scalar_table()};
    if (const auto* avx2 = kernels::avx2_table()) out.push_back(avx2);
    return out;
}

}

TEST_CASE("compensated sum survives heavy cancellation") {
    std::mt19937 rng(11);
    for (const auto* k : backends()) {
        for (std::size_t n : {0u, 1u, 3u, 7u, 64u, 1001u}) {
            auto v = random_vec(rng, n, -1.0, 1.0);
            // interleave large magnitudes that cancel pairwise
            for (std::size_t i = 0; i + 1 < v.size(); i += 2) {
                v[i] += 1e14;
                v[i + 1] -= 1e14;
            }
            const long double ref = sum_ref(v);
            CHECK(std::fabs(k->sum(v.data(), v.size()) -
                            static_cast<double>(ref)) <= 1e-9);
        }
    }
}

TEST_CASE("compensated dot tracks a long-double reference") {
    std::mt19937 rng(12);
    for (const auto* k : backends()) {
        for (std::size_t n : {1u, 5u, 32u, 257u, 4096u}) {
            const auto a = random_vec(rng, n, -10.0, 10.0);
            const auto b = random_vec(rng, n, -10.0, 10.0);
            const long double ref = dot_ref(a, b);
            const double got = k->dot(a.data(), b.data(), n);
            CHECK(std::fabs(got - static_cast<double>(ref)) <=
                  1e-13 * (1.0 + std::fabs(static_cast<double>(ref))));
        }
    }
}

TEST_CASE("shifted_combine is bit-identical across backends") {
    const auto* avx2 = kernels::avx2_table();
    if (!avx2) return;  // baseline host
    std::mt19937 rng(13);
    for (std::size_t src_len : {1u, 2u, 5u, 31u, 200u}) {
        for (std::size_t terms : {1u, 2u, 3u, 5u}) {
            const std::size_t dst_len = src_len + terms - 1;
            const auto src = random_vec(rng, src_len, -3.0, 3.0);
            const auto coeff = random_vec(rng, terms, -2.0, 2.0);
            std::vector<double> a(dst_len), b(dst_len);
            kernels::scalar_table().shifted_combine(a.data(), dst_len, src.data(),
                                                    src_len, coeff.data(), terms);
            avx2->shifted_combine(b.data(), dst_len, src.data(), src_len,
                                  coeff.data(), terms);
            CHECK(std::memcmp(a.data(), b.data(), dst_len * sizeof(double)) == 0);
        }
    }
}

TEST_CASE("axpy_compensated is bit-identical across backends") {
    const auto* avx2 = kernels::avx2_table();
    if (!avx2) return;
    std::mt19937 rng(14);
    for (std::size_t n : {1u, 4u, 9u, 127u, 1024u}) {
        const auto x = random_vec(rng, n, -1.0, 1.0);
        auto y1 = random_vec(rng, n, -1.0, 1.0);
        auto y2 = y1;
        std::vector<double> c1(n, 0.0), c2(n, 0.0);
        for (double a : {0.37, -1.25e-9, 4.0}) {
            kernels::scalar_table().axpy_compensated(y1.data(), c1.data(), a,
                                                     x.data(), n);
            avx2->axpy_compensated(y2.data(), c2.data(), a, x.data(), n);
        }
        CHECK(std::memcmp(y1.data(), y2.data(), n * sizeof(double)) == 0);
        CHECK(std::memcmp(c1.data(), c2.data(), n * sizeof(double)) == 0);
    }
}

TEST_CASE("axpy carry restores the compensated total") {
    std::mt19937 rng(15);
    for (const auto* k : backends()) {
        const std::size_t n = 300;
        std::vector<double> y(n, 0.0), carry(n, 0.0);
        const auto x = random_vec(rng, n, 0.5, 1.5);
        // many tiny increments: naive accumulation would drift
        for (int rep = 0; rep < 20000; ++rep)
            k->axpy_compensated(y.data(), carry.data(), 1e-12, x.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            const double total = y[i] + carry[i];
            CHECK(std::fabs(total - 2e-8 * x[i]) <= 1e-20 + 1e-13 * total);
        }
    }
}

TEST_CASE("max kernels match a scalar reference and each other") {
    std::mt19937 rng(16);
    const auto* avx2 = kernels::avx2_table();
    for (std::size_t n : {0u, 1u, 3u, 8u, 100u, 999u}) {
        const auto a = random_vec(rng, n, -5.0, 5.0);
        const auto b = random_vec(rng, n, -5.0, 5.0);
        const auto c = random_vec(rng, n, -5.0, 5.0);
        double ref_d = 0.0, ref_s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            ref_d = std::fmax(ref_d, std::fabs(a[i] - b[i]));
            ref_s = std::fmax(ref_s, std::fabs((a[i] - 2.0 * b[i]) + c[i]));
        }
        CHECK(kernels::scalar_table().max_abs_diff(a.data(), b.data(), n) == ref_d);
        CHECK(kernels::scalar_table().max_abs_sdiff(a.data(), b.data(), c.data(),
                                                    n) == ref_s);
        if (avx2) {
            CHECK(avx2->max_abs_diff(a.data(), b.data(), n) == ref_d);
            CHECK(avx2->max_abs_sdiff(a.data(), b.data(), c.data(), n) == ref_s);
        }
    }
}

TEST_CASE("backend forcing honors names and availability") {
    backend_reset reset;
    kernels::force("scalar");
    CHECK(std::string(kernels::active().name) == "scalar");
    CHECK_THROWS_AS(kernels::force("neon"), std::invalid_argument);
    if (kernels::avx2_table()) {
        kernels::force("avx2");
        CHECK(std::string(kernels::active().name) == "avx2");
    } else {
        CHECK_THROWS_AS(kernels::force("avx2"), std::invalid_argument);
    }
    kernels::force("auto");
    const std::string picked = kernels::active().name;
    CHECK((picked == "scalar" || picked == "avx2"));
}
