#pragma once

#include <cstddef>
#include <utility>

namespace hcstab {

// Index layout shared by every pair-by-level tensor in this project:
// unordered pairs (i < j) of 0-based leaf ids in lexicographic order,
// levels t = 1..n-1 stored contiguously per pair (pair-major, level-minor).
// Level 0 is implicitly all-ones and never stored.
struct PairLevelIndex {
    int n = 0;

    constexpr std::size_t pair_count() const {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }
    constexpr int level_count() const { return n - 1; }
    constexpr std::size_t size() const {
        return pair_count() * static_cast<std::size_t>(level_count());
    }

    // Unordered pair (i, j), i != j, both in [0, n).
    constexpr std::size_t pair(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2
               + static_cast<std::size_t>(j - i - 1);
    }

    // Entry (i, j, t) with 1-based level t in [1, n-1].
    constexpr std::size_t at(int i, int j, int t) const {
        return pair(i, j) * static_cast<std::size_t>(level_count())
               + static_cast<std::size_t>(t - 1);
    }

    constexpr bool operator==(const PairLevelIndex&) const = default;
};

// Inverse of PairLevelIndex::pair: the (i, j) with i < j at linear index p.
constexpr std::pair<int, int> pair_from_index(int n, std::size_t p) {
    int i = 0;
    std::size_t row = static_cast<std::size_t>(n) - 1;
    while (p >= row) {
        p -= row;
        --row;
        ++i;
    }
    return {i, i + 1 + static_cast<int>(p)};
}

}  // namespace hcstab
