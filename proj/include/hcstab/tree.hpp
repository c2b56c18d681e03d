#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hcstab/pairs.hpp"

namespace hcstab {

// One merge event. Clusters are addressed by id: leaves are 0..n-1, the
// merge at position k creates cluster n + k. A merge may only reference
// clusters that exist and have not been merged away yet.
struct Merge {
    int left = -1;
    int right = -1;
    bool operator==(const Merge&) const = default;
};

// A labeled binary merge hierarchy over n leaves: exactly n - 1 merges,
// ending with a single live cluster.
struct Tree {
    int n = 0;
    std::vector<Merge> merges;

    // Throws std::invalid_argument on structural errors (wrong merge
    // count, dead or out-of-range cluster references).
    void validate() const;
};

// Size of the smallest tree cluster containing each unordered pair
// (the leaf count of the pair's lowest common ancestor).
struct PairSizeTable {
    int n = 0;
    std::vector<int> s;  // pair-major, PairLevelIndex::pair order

    int at(int i, int j) const {
        return s[PairLevelIndex{n}.pair(i, j)];
    }
    bool operator==(const PairSizeTable&) const = default;
};

PairSizeTable lca_sizes(const Tree& tree);

// Debug serialization, one merge per line: "t: {members} + {members}"
// with 1-based leaf labels. Not a stability-guaranteed format.
std::string to_text(const Tree& tree);

inline constexpr int kDefaultEnumerationCap = 8;

// Number of distinct hierarchies on n leaves: (2n-3)!!.
std::uint64_t tree_count(int n);

// Visits every hierarchy on n leaves exactly once (each distinct
// PairSizeTable appears once) in a fixed deterministic order.
// Throws std::invalid_argument when n < 2 or n > cap.
void for_each_tree(int n, const std::function<void(const Tree&)>& visit,
                   int cap = kDefaultEnumerationCap);

std::vector<Tree> enumerate_trees(int n, int cap = kDefaultEnumerationCap);

// Uniformly random merge sequence (test support; not uniform over shapes).
Tree random_tree(int n, std::mt19937_64& rng);

}  // namespace hcstab
