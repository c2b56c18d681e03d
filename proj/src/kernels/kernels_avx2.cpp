// AVX2 variants of the hot loops. This translation unit is the only one
// compiled with -mavx2; callers reach it through the dispatch table in
// kernels.cpp after a CPUID check.

#include "kernels_internal.hpp"

#if HCSTAB_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace hcstab::kernels::detail {

namespace {

inline double hsum_pd(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline std::uint64_t hsum_epi64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    lo = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(lo, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(lo, 1));
}

}  // namespace

double dot_avx2(const double* x, const double* y, std::size_t len) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= len; k += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + k + 4), _mm256_loadu_pd(y + k + 4), acc1);
    }
    for (; k + 4 <= len; k += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k), acc0);
    }
    double acc = hsum_pd(_mm256_add_pd(acc0, acc1));
    for (; k < len; ++k) acc += x[k] * y[k];
    return acc;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t len) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t k = 0;
    for (; k + 8 <= len; k += 8) {
        __m256d y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k));
        __m256d y1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + k + 4), _mm256_loadu_pd(y + k + 4));
        _mm256_storeu_pd(y + k, y0);
        _mm256_storeu_pd(y + k + 4, y1);
    }
    for (; k + 4 <= len; k += 4) {
        __m256d y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k));
        _mm256_storeu_pd(y + k, y0);
    }
    for (; k < len; ++k) y[k] += a * x[k];
}

// Inputs hold 0/1 bytes, so a 32-byte chunk sums to at most 32 and
// _mm256_sad_epu8 against zero accumulates exactly into 64-bit lanes.
std::uint64_t count_ones_avx2(const std::uint8_t* x, std::size_t len) {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = _mm256_setzero_si256();
    std::size_t k = 0;
    for (; k + 32 <= len; k += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + k));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(v, zero));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; k < len; ++k) total += x[k];
    return total;
}

std::uint64_t count_both_ones_avx2(const std::uint8_t* x,
                                   const std::uint8_t* y, std::size_t len) {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = _mm256_setzero_si256();
    std::size_t k = 0;
    for (; k + 32 <= len; k += 32) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + k));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + k));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_and_si256(vx, vy), zero));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; k < len; ++k) total += static_cast<std::uint64_t>(x[k] & y[k]);
    return total;
}

std::uint64_t count_diff_avx2(const std::uint8_t* x, const std::uint8_t* y,
                              std::size_t len) {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = _mm256_setzero_si256();
    std::size_t k = 0;
    for (; k + 32 <= len; k += 32) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + k));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + k));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_xor_si256(vx, vy), zero));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; k < len; ++k) total += static_cast<std::uint64_t>(x[k] ^ y[k]);
    return total;
}

}  // namespace hcstab::kernels::detail

#endif  // HCSTAB_HAVE_AVX2_KERNELS
