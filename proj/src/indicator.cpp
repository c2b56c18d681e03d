#include "hcstab/indicator.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcstab {

LevelIndicator indicator_from_sizes(const PairSizeTable& sizes) {
    const int n = sizes.n;
    LevelIndicator out(n);
    const int levels = out.idx.level_count();
    for (std::size_t p = 0; p < out.idx.pair_count(); ++p) {
        const int s = sizes.s[p];
        // x(p, t) = 1 for t < s, i.e. stored levels 1..s-1.
        for (int t = 1; t <= std::min(s - 1, levels); ++t)
            out.x[p * static_cast<std::size_t>(levels) + static_cast<std::size_t>(t - 1)] = 1;
    }
    return out;
}

LevelIndicator tree_to_indicator(const Tree& tree) {
    return indicator_from_sizes(lca_sizes(tree));
}

PairSizeTable sizes_from_indicator(const LevelIndicator& x) {
    const int levels = x.idx.level_count();
    PairSizeTable sizes{x.n(), std::vector<int>(x.idx.pair_count(), 0)};
    for (std::size_t p = 0; p < x.idx.pair_count(); ++p) {
        int sum = 0;
        for (int t = 0; t < levels; ++t)
            sum += x.x[p * static_cast<std::size_t>(levels) + static_cast<std::size_t>(t)];
        sizes.s[p] = 1 + sum;
    }
    return sizes;
}

namespace {

std::string pair_id(int i, int j, int t) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ",t=" +
           std::to_string(t) + ")";
}

}  // namespace

IndicatorVerdict validate_indicator(const LevelIndicator& x, int subset_cap) {
    const int n = x.n();
    const int levels = x.idx.level_count();
    for (std::uint8_t v : x.x)
        if (v > 1) throw std::domain_error("indicator entry out of {0,1}");

    IndicatorVerdict verdict;
    auto flag = [&](std::string id) {
        verdict.valid = false;
        verdict.violations.push_back(std::move(id));
    };

    // (3) level monotonicity per pair.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int t = 1; t < levels; ++t)
                if (x.at(i, j, t) < x.at(i, j, t + 1))
                    flag("monotonicity" + pair_id(i, j, t));

    // (4) per-level triangle, all three orientations of each triple.
    for (int t = 1; t <= levels; ++t)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    const int ab = x.at(a, b, t), bc = x.at(b, c, t), ac = x.at(a, c, t);
                    if (ab + bc < ac) flag("triangle" + pair_id(a, c, t));
                    if (ab + ac < bc) flag("triangle" + pair_id(b, c, t));
                    if (ac + bc < ab) flag("triangle" + pair_id(a, b, t));
                }

    // (5) spreading: sum_{j in S\{i}} x(i,j,t) >= |S| - t for every S
    // containing i with |S| > t. Exhaustive over subsets up to the cap;
    // above it the worst subset per (i,t) is found greedily (for fixed
    // |S| the minimizing S picks the smallest entries, and binary entries
    // make the prefix scan exact).
    for (int i = 0; i < n; ++i) {
        std::vector<int> others;
        others.reserve(static_cast<std::size_t>(n - 1));
        for (int j = 0; j < n; ++j)
            if (j != i) others.push_back(j);

        for (int t = 1; t <= levels; ++t) {
            bool violated = false;
            if (n <= subset_cap) {
                const std::uint32_t full = 1u << (n - 1);
                for (std::uint32_t mask = 1; mask < full && !violated; ++mask) {
                    int size = 1, sum = 0;
                    for (int k = 0; k < n - 1; ++k)
                        if (mask & (1u << k)) {
                            ++size;
                            sum += x.at(i, others[static_cast<std::size_t>(k)], t);
                        }
                    if (size > t && sum < size - t) violated = true;
                }
            } else {
                std::vector<int> row;
                row.reserve(others.size());
                for (int j : others) row.push_back(x.at(i, j, t));
                std::sort(row.begin(), row.end());
                int sum = 0;
                for (int k = 0; k < static_cast<int>(row.size()); ++k) {
                    sum += row[static_cast<std::size_t>(k)];
                    const int size = k + 2;  // |S| including i
                    if (size > t && sum < size - t) violated = true;
                }
            }
            if (violated)
                flag("spreading(i=" + std::to_string(i + 1) + ",t=" + std::to_string(t) + ")");
        }
    }
    return verdict;
}

}  // namespace hcstab
