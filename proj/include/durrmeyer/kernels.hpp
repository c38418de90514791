#pragma once

#include <cstddef>

namespace durrmeyer::kernels {

// Inner-loop primitives with interchangeable scalar and SIMD backends.
//
// shifted_combine, axpy_compensated, max_abs_diff and max_abs_sdiff must be
// bit-identical across backends: every element is produced by the same
// sequence of rounded operations, only the loop is widened. The reductions
// (sum, dot) are compensated and may reassociate across lanes; they are
// validated against long-double references instead.
struct dispatch_table {
    const char* name;

    // Neumaier-compensated sum of x[0..n).
    double (*sum)(const double* x, std::size_t n);

    // Compensated dot product: FMA two-product per term, Neumaier carry.
    double (*dot)(const double* a, const double* b, std::size_t n);

    // dst[i] = sum_j coeff[j] * src[i - j], out-of-range src reads as zero.
    // dst and src must not alias. Terms accumulate in ascending j via FMA.
    void (*shifted_combine)(double* dst, std::size_t dst_len,
                            const double* src, std::size_t src_len,
                            const double* coeff, std::size_t terms);

    // y[i] += a * x[i] with per-element Neumaier carry; callers fold the
    // carry array back in once after the last accumulation.
    void (*axpy_compensated)(double* y, double* carry, double a,
                             const double* x, std::size_t n);

    // max_i |a[i] - b[i]|; 0 for n = 0.
    double (*max_abs_diff)(const double* a, const double* b, std::size_t n);

    // max_i |(a[i] - 2 b[i]) + c[i]|, the symmetric second difference.
    double (*max_abs_sdiff)(const double* a, const double* b, const double* c,
                            std::size_t n);
};

// Backend selected at first use: DURRMEYER_KERNELS=scalar|avx2|auto wins,
// otherwise AVX2+FMA when the CPU has it, otherwise scalar.
const dispatch_table& active();

const dispatch_table& scalar_table();

// nullptr when the build or the CPU lacks AVX2+FMA.
const dispatch_table* avx2_table();

// Test hook; name as in the env var. Throws std::invalid_argument on an
// unknown name and on "avx2" when unavailable.
void force(const char* name);

}
