#include "hcstab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "kernels_internal.hpp"

namespace hcstab::kernels {

namespace {

struct Table {
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    std::uint64_t (*count_ones)(const std::uint8_t*, std::size_t);
    std::uint64_t (*count_both)(const std::uint8_t*, const std::uint8_t*, std::size_t);
    std::uint64_t (*count_diff)(const std::uint8_t*, const std::uint8_t*, std::size_t);
};

constexpr Table kScalar = {
    detail::dot_scalar, detail::axpy_scalar, detail::count_ones_scalar,
    detail::count_both_ones_scalar, detail::count_diff_scalar};

#if HCSTAB_HAVE_AVX2_KERNELS
constexpr Table kAvx2 = {
    detail::dot_avx2, detail::axpy_avx2, detail::count_ones_avx2,
    detail::count_both_ones_avx2, detail::count_diff_avx2};
#endif

bool cpu_has_avx2() {
#if HCSTAB_HAVE_AVX2_KERNELS
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend pick_default() {
    if (const char* env = std::getenv("HCSTAB_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::avx2;
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<const Table*> g_table{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const Table* table_for(Backend b) {
#if HCSTAB_HAVE_AVX2_KERNELS
    if (b == Backend::avx2) return &kAvx2;
#endif
    (void)b;
    return &kScalar;
}

const Table& active() {
    const Table* t = g_table.load(std::memory_order_acquire);
    if (!t) {
        Backend b = pick_default();
        g_backend.store(b, std::memory_order_relaxed);
        t = table_for(b);
        g_table.store(t, std::memory_order_release);
    }
    return *t;
}

}  // namespace

Backend active_backend() {
    active();
    return g_backend.load(std::memory_order_relaxed);
}

bool backend_available(Backend b) {
    return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

void force_backend(Backend b) {
    if (!backend_available(b))
        throw std::runtime_error("kernel backend not available on this machine");
    g_backend.store(b, std::memory_order_relaxed);
    g_table.store(table_for(b), std::memory_order_release);
}

std::string_view backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

double dot(const double* x, const double* y, std::size_t len) {
    return active().dot(x, y, len);
}

void axpy(double a, const double* x, double* y, std::size_t len) {
    active().axpy(a, x, y, len);
}

std::uint64_t count_ones(const std::uint8_t* x, std::size_t len) {
    return active().count_ones(x, len);
}

std::uint64_t count_both_ones(const std::uint8_t* x, const std::uint8_t* y,
                              std::size_t len) {
    return active().count_both(x, y, len);
}

std::uint64_t count_diff(const std::uint8_t* x, const std::uint8_t* y,
                         std::size_t len) {
    return active().count_diff(x, y, len);
}

}  // namespace hcstab::kernels
