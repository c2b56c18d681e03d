#pragma once

#include <vector>

#include "hcstab/indicator.hpp"
#include "hcstab/similarity.hpp"
#include "hcstab/tree.hpp"

namespace hcstab {

// Dasgupta cost 2*sum_{i<j} S(i,j)*s(i,j), written against level indicators
// as 2*sum S(i,j)*sum_t x(i,j,t) + 2*sum S(i,j).
double loss(const SimilarityMatrix& s, const LevelIndicator& x);
double loss(const SimilarityMatrix& s, const FractionalHierarchy& x);
double loss_from_sizes(const SimilarityMatrix& s, const PairSizeTable& sizes);

// Coefficient of y(i,j,t) in the sublevel row is S(i,j), level-independent;
// returned per pair in pair-major order.
std::vector<double> sublevel_coefficients(const SimilarityMatrix& s);

// Right-hand side sum_{i<j} S(i,j)*sum_t x(i,j,t); the constant term and the
// factor 2 cancel across the row.
double sublevel_rhs(const SimilarityMatrix& s, const LevelIndicator& x);

}  // namespace hcstab
