#include "hcstab/similarity.hpp"

#include <numeric>
#include <stdexcept>

namespace hcstab {

SimilarityMatrix::SimilarityMatrix(int n) : idx_{n} {
    if (n < 2) throw std::invalid_argument("similarity matrix needs n >= 2");
    w_.assign(idx_.pair_count(), 0.0);
}

double SimilarityMatrix::at(int i, int j) const {
    if (i == j) return 0.0;
    return w_[idx_.pair(i, j)];
}

void SimilarityMatrix::set(int i, int j, double value) {
    if (i == j) throw std::invalid_argument("similarity diagonal is fixed at 0");
    if (value < 0.0) throw std::invalid_argument("similarity entries must be nonnegative");
    w_[idx_.pair(i, j)] = value;
}

double SimilarityMatrix::sum() const {
    return std::accumulate(w_.begin(), w_.end(), 0.0);
}

}  // namespace hcstab
