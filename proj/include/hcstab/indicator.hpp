#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcstab/pairs.hpp"
#include "hcstab/tree.hpp"

namespace hcstab {

// Binary encoding of a hierarchy: x(i,j,t) = 1 iff the smallest cluster
// containing i and j has more than t leaves, i.e. the pair is still
// separated in the decomposition whose clusters have at most t leaves.
struct LevelIndicator {
    PairLevelIndex idx;
    std::vector<std::uint8_t> x;

    explicit LevelIndicator(int n = 0)
        : idx{n}, x(idx.size(), 0) {}

    std::uint8_t at(int i, int j, int t) const { return x[idx.at(i, j, t)]; }
    void set(int i, int j, int t, std::uint8_t v) { x[idx.at(i, j, t)] = v; }
    int n() const { return idx.n; }
};

// Relaxed, real-valued counterpart over the same index set (LP variable
// values live here).
struct FractionalHierarchy {
    PairLevelIndex idx;
    std::vector<double> y;

    explicit FractionalHierarchy(int n = 0)
        : idx{n}, y(idx.size(), 0.0) {}

    double at(int i, int j, int t) const { return y[idx.at(i, j, t)]; }
    void set(int i, int j, int t, double v) { y[idx.at(i, j, t)] = v; }
    int n() const { return idx.n; }
};

LevelIndicator indicator_from_sizes(const PairSizeTable& sizes);
LevelIndicator tree_to_indicator(const Tree& tree);

// Recovers the pair-size table: s(i,j) = 1 + sum_t x(i,j,t). Valid for
// encodings that satisfy level monotonicity.
PairSizeTable sizes_from_indicator(const LevelIndicator& x);

struct IndicatorVerdict {
    bool valid = true;
    std::vector<std::string> violations;  // constraint identifiers
};

// Checks all LevelIndicator invariants: level monotonicity, the per-level
// triangle rule and the spreading family (exhaustively over subsets for
// n <= subset_cap, by the greedy separation argument above that).
// Throws std::domain_error when an entry is not 0/1.
IndicatorVerdict validate_indicator(const LevelIndicator& x,
                                    int subset_cap = kDefaultEnumerationCap);

}  // namespace hcstab
