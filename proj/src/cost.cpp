#include "hcstab/cost.hpp"

#include <stdexcept>

namespace hcstab {

namespace {

void require_same_n(int a, int b) {
    if (a != b) throw std::invalid_argument("dimension mismatch: n differs");
}

}  // namespace

double loss(const SimilarityMatrix& s, const LevelIndicator& x) {
    require_same_n(s.n(), x.n());
    const int levels = x.idx.level_count();
    const auto& w = s.weights();
    double weighted = 0.0;
    for (std::size_t p = 0; p < w.size(); ++p) {
        int sum = 0;
        for (int t = 0; t < levels; ++t)
            sum += x.x[p * static_cast<std::size_t>(levels) + static_cast<std::size_t>(t)];
        weighted += w[p] * static_cast<double>(sum);
    }
    return 2.0 * weighted + 2.0 * s.sum();
}

double loss(const SimilarityMatrix& s, const FractionalHierarchy& x) {
    require_same_n(s.n(), x.n());
    const int levels = x.idx.level_count();
    const auto& w = s.weights();
    double weighted = 0.0;
    for (std::size_t p = 0; p < w.size(); ++p) {
        double sum = 0.0;
        for (int t = 0; t < levels; ++t)
            sum += x.y[p * static_cast<std::size_t>(levels) + static_cast<std::size_t>(t)];
        weighted += w[p] * sum;
    }
    return 2.0 * weighted + 2.0 * s.sum();
}

double loss_from_sizes(const SimilarityMatrix& s, const PairSizeTable& sizes) {
    require_same_n(s.n(), sizes.n);
    const auto& w = s.weights();
    double total = 0.0;
    for (std::size_t p = 0; p < w.size(); ++p)
        total += w[p] * static_cast<double>(sizes.s[p]);
    return 2.0 * total;
}

std::vector<double> sublevel_coefficients(const SimilarityMatrix& s) {
    return s.weights();
}

double sublevel_rhs(const SimilarityMatrix& s, const LevelIndicator& x) {
    require_same_n(s.n(), x.n());
    const int levels = x.idx.level_count();
    const auto& w = s.weights();
    double rhs = 0.0;
    for (std::size_t p = 0; p < w.size(); ++p) {
        int sum = 0;
        for (int t = 0; t < levels; ++t)
            sum += x.x[p * static_cast<std::size_t>(levels) + static_cast<std::size_t>(t)];
        rhs += w[p] * static_cast<double>(sum);
    }
    return rhs;
}

}  // namespace hcstab
