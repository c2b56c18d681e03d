#include "kernels_internal.hpp"

namespace hcstab::kernels::detail {

double dot_scalar(const double* x, const double* y, std::size_t len) {
    double acc = 0.0;
    for (std::size_t k = 0; k < len; ++k) acc += x[k] * y[k];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t len) {
    for (std::size_t k = 0; k < len; ++k) y[k] += a * x[k];
}

std::uint64_t count_ones_scalar(const std::uint8_t* x, std::size_t len) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < len; ++k) acc += x[k];
    return acc;
}

std::uint64_t count_both_ones_scalar(const std::uint8_t* x,
                                     const std::uint8_t* y, std::size_t len) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < len; ++k) acc += static_cast<std::uint64_t>(x[k] & y[k]);
    return acc;
}

std::uint64_t count_diff_scalar(const std::uint8_t* x, const std::uint8_t* y,
                                std::size_t len) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < len; ++k) acc += static_cast<std::uint64_t>(x[k] ^ y[k]);
    return acc;
}

}  // namespace hcstab::kernels::detail
