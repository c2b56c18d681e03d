#pragma once

#include <cstdint>

#include "hcstab/indicator.hpp"

namespace hcstab {

// Tree-independent squared Frobenius norm of any level indicator on n leaves:
// (n^3 - n)/3 - n(n-1)/2 under unordered-pair, level 1..n-1 storage.
std::int64_t norm_constant(int n);

std::int64_t inner_product(const LevelIndicator& x, const LevelIndicator& y);

// Reproducible pair-major, level-minor summation order.
double inner_product(const LevelIndicator& x, const FractionalHierarchy& y);
double inner_product(const FractionalHierarchy& x, const FractionalHierarchy& y);

std::int64_t norm_sq(const LevelIndicator& x);

// Count of (i<j, t) entries where x and y differ.
std::int64_t hamming(const LevelIndicator& x, const LevelIndicator& y);

// epsilon = 2 * (norm_constant(n) - delta), clamped to 0 when delta overshoots
// the constant by at most tol; overshoot beyond tol reports an inconsistency.
double optimality_radius(int n, double delta, double tol = 1e-6);

}  // namespace hcstab
