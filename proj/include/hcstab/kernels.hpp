#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Data-parallel inner loops used by the metric, cost and simplex code.
// Each kernel has a scalar reference implementation and, on x86-64, an
// AVX2 variant. The backend is picked once per process from CPUID (or the
// HCSTAB_KERNELS environment variable: "scalar" / "avx2"); tests may pin
// it with force_backend(). Byte kernels operate on 0/1-valued arrays and
// are exact; the double kernels may reassociate sums, so cross-backend
// agreement is up to rounding.

namespace hcstab::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_available(Backend b);
void force_backend(Backend b);  // test hook; throws if unavailable
std::string_view backend_name(Backend b);

// sum_k x[k] * y[k]
double dot(const double* x, const double* y, std::size_t len);

// y[k] += a * x[k]
void axpy(double a, const double* x, double* y, std::size_t len);

// Counts over 0/1 byte arrays.
std::uint64_t count_ones(const std::uint8_t* x, std::size_t len);
std::uint64_t count_both_ones(const std::uint8_t* x, const std::uint8_t* y,
                              std::size_t len);
std::uint64_t count_diff(const std::uint8_t* x, const std::uint8_t* y,
                         std::size_t len);

}  // namespace hcstab::kernels
