#include "hcstab/metrics.hpp"

#include <stdexcept>

#include "hcstab/kernels.hpp"

namespace hcstab {

namespace {

void require_same_n(int a, int b) {
    if (a != b) throw std::invalid_argument("dimension mismatch: n differs");
}

}  // namespace

std::int64_t norm_constant(int n) {
    if (n < 2) throw std::invalid_argument("norm constant needs n >= 2");
    const std::int64_t nn = n;
    return (nn * nn * nn - nn) / 3 - nn * (nn - 1) / 2;
}

std::int64_t inner_product(const LevelIndicator& x, const LevelIndicator& y) {
    require_same_n(x.n(), y.n());
    return static_cast<std::int64_t>(
        kernels::count_both_ones(x.x.data(), y.x.data(), x.x.size()));
}

double inner_product(const LevelIndicator& x, const FractionalHierarchy& y) {
    require_same_n(x.n(), y.n());
    double sum = 0.0;
    for (std::size_t k = 0; k < x.x.size(); ++k)
        if (x.x[k]) sum += y.y[k];
    return sum;
}

double inner_product(const FractionalHierarchy& x, const FractionalHierarchy& y) {
    require_same_n(x.n(), y.n());
    double sum = 0.0;
    for (std::size_t k = 0; k < x.y.size(); ++k) sum += x.y[k] * y.y[k];
    return sum;
}

std::int64_t norm_sq(const LevelIndicator& x) {
    return static_cast<std::int64_t>(kernels::count_ones(x.x.data(), x.x.size()));
}

std::int64_t hamming(const LevelIndicator& x, const LevelIndicator& y) {
    require_same_n(x.n(), y.n());
    return static_cast<std::int64_t>(kernels::count_diff(x.x.data(), y.x.data(), x.x.size()));
}

double optimality_radius(int n, double delta, double tol) {
    const double k = static_cast<double>(norm_constant(n));
    if (delta < -tol || delta > k + tol)
        throw std::runtime_error("optimality radius: delta outside [0, norm constant]");
    const double eps = 2.0 * (k - delta);
    return eps < 0.0 ? 0.0 : eps;
}

}  // namespace hcstab
