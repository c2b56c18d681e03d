#pragma once

#include <cstddef>
#include <cstdint>

namespace hcstab::kernels::detail {

double dot_scalar(const double* x, const double* y, std::size_t len);
void axpy_scalar(double a, const double* x, double* y, std::size_t len);
std::uint64_t count_ones_scalar(const std::uint8_t* x, std::size_t len);
std::uint64_t count_both_ones_scalar(const std::uint8_t* x,
                                     const std::uint8_t* y, std::size_t len);
std::uint64_t count_diff_scalar(const std::uint8_t* x, const std::uint8_t* y,
                                std::size_t len);

#if defined(__x86_64__) || defined(_M_X64)
#define HCSTAB_HAVE_AVX2_KERNELS 1
double dot_avx2(const double* x, const double* y, std::size_t len);
void axpy_avx2(double a, const double* x, double* y, std::size_t len);
std::uint64_t count_ones_avx2(const std::uint8_t* x, std::size_t len);
std::uint64_t count_both_ones_avx2(const std::uint8_t* x,
                                   const std::uint8_t* y, std::size_t len);
std::uint64_t count_diff_avx2(const std::uint8_t* x, const std::uint8_t* y,
                              std::size_t len);
#else
#define HCSTAB_HAVE_AVX2_KERNELS 0
#endif

}  // namespace hcstab::kernels::detail
