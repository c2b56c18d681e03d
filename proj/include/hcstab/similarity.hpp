#pragma once

#include <cstddef>
#include <vector>

#include "hcstab/pairs.hpp"

namespace hcstab {

// Symmetric nonnegative pairwise weights with a zero diagonal, stored as the
// strict upper triangle in pair-major order.
class SimilarityMatrix {
  public:
    explicit SimilarityMatrix(int n = 0);

    int n() const { return idx_.n; }
    std::size_t pair_count() const { return idx_.pair_count(); }

    // Symmetric access; the diagonal reads as 0 and cannot be assigned.
    double at(int i, int j) const;
    void set(int i, int j, double value);  // throws on i == j or value < 0

    double sum() const;

    const std::vector<double>& weights() const { return w_; }

  private:
    PairLevelIndex idx_;
    std::vector<double> w_;
};

}  // namespace hcstab
