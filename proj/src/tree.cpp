#include "hcstab/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hcstab {

void Tree::validate() const {
    if (n < 2) throw std::invalid_argument("tree needs at least 2 leaves");
    if (static_cast<int>(merges.size()) != n - 1)
        throw std::invalid_argument("tree must have exactly n-1 merges, got " +
                                    std::to_string(merges.size()));
    std::vector<bool> live(static_cast<std::size_t>(2 * n - 1), false);
    for (int i = 0; i < n; ++i) live[i] = true;
    for (int k = 0; k < n - 1; ++k) {
        const Merge& m = merges[static_cast<std::size_t>(k)];
        const int limit = n + k;
        if (m.left < 0 || m.left >= limit || m.right < 0 || m.right >= limit)
            throw std::invalid_argument("merge " + std::to_string(k) +
                                        " references an unknown cluster");
        if (m.left == m.right)
            throw std::invalid_argument("merge " + std::to_string(k) +
                                        " joins a cluster with itself");
        if (!live[m.left] || !live[m.right])
            throw std::invalid_argument("merge " + std::to_string(k) +
                                        " references a dead cluster");
        live[m.left] = live[m.right] = false;
        live[n + k] = true;
    }
}

PairSizeTable lca_sizes(const Tree& tree) {
    tree.validate();
    const int n = tree.n;
    const PairLevelIndex idx{n};
    PairSizeTable table{n, std::vector<int>(idx.pair_count(), 0)};

    // members[c] = leaves of cluster c, filled as merges happen.
    std::vector<std::vector<int>> members(static_cast<std::size_t>(2 * n - 1));
    for (int i = 0; i < n; ++i) members[i] = {i};

    for (int k = 0; k < n - 1; ++k) {
        const Merge& m = tree.merges[static_cast<std::size_t>(k)];
        const auto& a = members[m.left];
        const auto& b = members[m.right];
        const int size = static_cast<int>(a.size() + b.size());
        for (int i : a)
            for (int j : b) table.s[idx.pair(i, j)] = size;
        auto& joined = members[n + k];
        joined.reserve(a.size() + b.size());
        joined.insert(joined.end(), a.begin(), a.end());
        joined.insert(joined.end(), b.begin(), b.end());
    }
    return table;
}

namespace {

void append_members(std::ostream& os, const std::vector<int>& leaves) {
    os << '{';
    for (std::size_t k = 0; k < leaves.size(); ++k) {
        if (k) os << ',';
        os << leaves[k] + 1;
    }
    os << '}';
}

}  // namespace

std::string to_text(const Tree& tree) {
    std::ostringstream os;
    std::vector<std::vector<int>> members(static_cast<std::size_t>(2 * tree.n - 1));
    for (int i = 0; i < tree.n; ++i) members[i] = {i};
    for (int k = 0; k < static_cast<int>(tree.merges.size()); ++k) {
        const Merge& m = tree.merges[static_cast<std::size_t>(k)];
        auto a = members[m.left];
        auto b = members[m.right];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (b < a) std::swap(a, b);
        os << k + 1 << ": ";
        append_members(os, a);
        os << " + ";
        append_members(os, b);
        os << '\n';
        auto& joined = members[tree.n + k];
        joined = a;
        joined.insert(joined.end(), b.begin(), b.end());
    }
    return os.str();
}

std::uint64_t tree_count(int n) {
    std::uint64_t count = 1;
    for (int k = 3; k <= 2 * n - 3; k += 2) count *= static_cast<std::uint64_t>(k);
    return count;
}

namespace {

// Enumerates hierarchies by recursive splitting: the smallest element of
// each cluster stays on the left side, so every unordered split (and
// hence every laminar family) is produced exactly once.
struct TreeEnumerator {
    int n;
    const std::function<void(const Tree&)>& visit;

    struct Node {
        int leaf = -1;       // >= 0 for leaves
        int left = -1, right = -1;
    };
    std::vector<Node> arena;

    // Assigns merge-sequence cluster ids by post-order walk.
    int linearize(int v, Tree& t) const {
        if (arena[v].leaf >= 0) return arena[v].leaf;
        const int a = linearize(arena[v].left, t);
        const int b = linearize(arena[v].right, t);
        t.merges.push_back({a, b});
        return t.n + static_cast<int>(t.merges.size()) - 1;
    }

    void emit(int root) {
        Tree t;
        t.n = n;
        t.merges.reserve(static_cast<std::size_t>(n - 1));
        linearize(root, t);
        visit(t);
    }

    void gen(const std::vector<int>& set, const std::function<void(int)>& cont) {
        if (set.size() == 1) {
            arena.push_back({set[0], -1, -1});
            cont(static_cast<int>(arena.size()) - 1);
            arena.pop_back();
            return;
        }
        const int m = static_cast<int>(set.size()) - 1;
        // Bitmask over set[1..]: bit k set puts set[k+1] on the left with set[0].
        for (std::uint32_t mask = 0; mask + 1 < (1u << m); ++mask) {
            std::vector<int> left{set[0]}, right;
            for (int k = 0; k < m; ++k) {
                if (mask & (1u << k))
                    left.push_back(set[k + 1]);
                else
                    right.push_back(set[k + 1]);
            }
            gen(left, [&](int lv) {
                gen(right, [&](int rv) {
                    arena.push_back({-1, lv, rv});
                    cont(static_cast<int>(arena.size()) - 1);
                    arena.pop_back();
                });
            });
        }
    }

    void run() {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        gen(all, [&](int root) { emit(root); });
    }
};

}  // namespace

void for_each_tree(int n, const std::function<void(const Tree&)>& visit, int cap) {
    if (n < 2) throw std::invalid_argument("enumeration requires n >= 2");
    if (n > cap)
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " exceeds the enumeration cap " + std::to_string(cap));
    TreeEnumerator e{n, visit, {}};
    e.arena.reserve(static_cast<std::size_t>(2 * n));
    e.run();
}

std::vector<Tree> enumerate_trees(int n, int cap) {
    std::vector<Tree> out;
    out.reserve(tree_count(n));
    for_each_tree(n, [&](const Tree& t) { out.push_back(t); }, cap);
    return out;
}

Tree random_tree(int n, std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("random_tree requires n >= 2");
    Tree t;
    t.n = n;
    std::vector<int> live(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) live[static_cast<std::size_t>(i)] = i;
    for (int k = 0; k < n - 1; ++k) {
        std::uniform_int_distribution<std::size_t> da(0, live.size() - 1);
        std::size_t a = da(rng);
        std::uniform_int_distribution<std::size_t> db(0, live.size() - 2);
        std::size_t b = db(rng);
        if (b >= a) ++b;
        t.merges.push_back({live[a], live[b]});
        if (a > b) std::swap(a, b);
        live[a] = n + k;
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(b));
    }
    return t;
}

}  // namespace hcstab
