// AVX2+FMA backend. The element-wise kernels replay the scalar operation
// sequence four lanes at a time, so their outputs are bit-identical to the
// scalar backend; the two reductions keep per-lane compensated partials and
// only reassociate across lanes.

#include "durrmeyer/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace durrmeyer::kernels {

namespace {

inline __m256d vabs(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d m = _mm_max_pd(lo, hi);
    m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
    return _mm_cvtsd_f64(m);
}

// Neumaier step on packed (s, c) accumulators.
inline void vneumaier(__m256d& s, __m256d& c, __m256d x) {
    __m256d t = _mm256_add_pd(s, x);
    __m256d big_s = _mm256_add_pd(_mm256_sub_pd(s, t), x);
    __m256d big_x = _mm256_add_pd(_mm256_sub_pd(x, t), s);
    __m256d ge = _mm256_cmp_pd(vabs(s), vabs(x), _CMP_GE_OQ);
    c = _mm256_add_pd(c, _mm256_blendv_pd(big_x, big_s, ge));
    s = t;
}

inline double fold_partials(__m256d s, __m256d c, const double* rest,
                            const double* rest2, std::size_t n) {
    alignas(32) double sl[4], cl[4];
    _mm256_store_pd(sl, s);
    _mm256_store_pd(cl, c);
    double acc = 0.0, comp = 0.0;
    auto add = [&](double x) {
        double t = acc + x;
        if (std::fabs(acc) >= std::fabs(x))
            comp += (acc - t) + x;
        else
            comp += (x - t) + acc;
        acc = t;
    };
    for (int i = 0; i < 4; ++i) add(sl[i]);
    for (std::size_t i = 0; i < n; ++i) {
        if (rest2) {
            double p = rest[i] * rest2[i];
            comp += std::fma(rest[i], rest2[i], -p);
            add(p);
        } else {
            add(rest[i]);
        }
    }
    for (int i = 0; i < 4; ++i) comp += cl[i];
    return acc + comp;
}

double avx2_sum(const double* x, std::size_t n) {
    __m256d s = _mm256_setzero_pd(), c = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vneumaier(s, c, _mm256_loadu_pd(x + i));
    return fold_partials(s, c, x + i, nullptr, n - i);
}

double avx2_dot(const double* a, const double* b, std::size_t n) {
    __m256d s = _mm256_setzero_pd(), c = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + i);
        __m256d p = _mm256_mul_pd(va, vb);
        __m256d e = _mm256_fmsub_pd(va, vb, p);
        vneumaier(s, c, p);
        c = _mm256_add_pd(c, e);
    }
    return fold_partials(s, c, a + i, b + i, n - i);
}

void avx2_shifted_combine(double* dst, std::size_t dst_len,
                          const double* src, std::size_t src_len,
                          const double* coeff, std::size_t terms) {
    auto scalar_at = [&](std::size_t i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < terms; ++j) {
            if (i >= j && i - j < src_len)
                acc = std::fma(coeff[j], src[i - j], acc);
        }
        dst[i] = acc;
    };

    // Interior outputs read only in-range src entries, so the guard inside
    // scalar_at never fires there and the vector loop can skip it.
    std::size_t lo = terms > 0 ? terms - 1 : 0;
    std::size_t hi = src_len < dst_len ? src_len : dst_len;

    std::size_t i = 0;
    for (; i < lo && i < dst_len; ++i) scalar_at(i);
    for (; i + 4 <= hi; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t j = 0; j < terms; ++j) {
            __m256d v = _mm256_loadu_pd(src + (i - j));
            acc = _mm256_fmadd_pd(_mm256_set1_pd(coeff[j]), v, acc);
        }
        _mm256_storeu_pd(dst + i, acc);
    }
    for (; i < dst_len; ++i) scalar_at(i);
}

void avx2_axpy(double* y, double* carry, double a, const double* x,
               std::size_t n) {
    __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        __m256d s = _mm256_add_pd(vy, p);
        __m256d big_y = _mm256_add_pd(_mm256_sub_pd(vy, s), p);
        __m256d big_p = _mm256_add_pd(_mm256_sub_pd(p, s), vy);
        __m256d ge = _mm256_cmp_pd(vabs(vy), vabs(p), _CMP_GE_OQ);
        __m256d vc = _mm256_loadu_pd(carry + i);
        vc = _mm256_add_pd(vc, _mm256_blendv_pd(big_p, big_y, ge));
        _mm256_storeu_pd(carry + i, vc);
        _mm256_storeu_pd(y + i, s);
    }
    for (; i < n; ++i) {
        double p = a * x[i];
        double s = y[i] + p;
        if (std::fabs(y[i]) >= std::fabs(p))
            carry[i] += (y[i] - s) + p;
        else
            carry[i] += (p - s) + y[i];
        y[i] = s;
    }
}

double avx2_max_abs_diff(const double* a, const double* b, std::size_t n) {
    __m256d vm = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        vm = _mm256_max_pd(vm, vabs(d));
    }
    double m = hmax(vm);
    for (; i < n; ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
    return m;
}

double avx2_max_abs_sdiff(const double* a, const double* b, const double* c,
                          std::size_t n) {
    __m256d two = _mm256_set1_pd(2.0);
    __m256d vm = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vb = _mm256_mul_pd(two, _mm256_loadu_pd(b + i));
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), vb);
        d = _mm256_add_pd(d, _mm256_loadu_pd(c + i));
        vm = _mm256_max_pd(vm, vabs(d));
    }
    double m = hmax(vm);
    for (; i < n; ++i) m = std::fmax(m, std::fabs((a[i] - 2.0 * b[i]) + c[i]));
    return m;
}

constexpr dispatch_table avx2_impl = {
    "avx2",          avx2_sum,  avx2_dot,          avx2_shifted_combine,
    avx2_axpy,       avx2_max_abs_diff,            avx2_max_abs_sdiff,
};

}  // namespace

const dispatch_table* avx2_table() {
    static const dispatch_table* t = [] {
        return (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
                   ? &avx2_impl
                   : nullptr;
    }();
    return t;
}

}  // namespace durrmeyer::kernels

#else

namespace durrmeyer::kernels {
const dispatch_table* avx2_table() { return nullptr; }
}

#endif
