#include "hcstab/linkage.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hcstab/cost.hpp"

namespace hcstab {

namespace {

struct Cluster {
    int id;
    std::vector<int> members;  // sorted, members[0] is the min label
};

double cross_statistic(const SimilarityMatrix& s, const Cluster& a, const Cluster& b,
                       LinkageRule rule) {
    double acc = rule == LinkageRule::min_pairwise ? std::numeric_limits<double>::infinity()
                                                   : 0.0;
    for (int u : a.members)
        for (int v : b.members) {
            const double w = s.at(u, v);
            switch (rule) {
                case LinkageRule::max_pairwise: acc = std::max(acc, w); break;
                case LinkageRule::average: acc += w; break;
                case LinkageRule::min_pairwise: acc = std::min(acc, w); break;
            }
        }
    if (rule == LinkageRule::average)
        acc /= static_cast<double>(a.members.size() * b.members.size());
    return acc;
}

}  // namespace

Tree agglomerate(const SimilarityMatrix& s, LinkageRule rule) {
    const int n = s.n();
    std::vector<Cluster> live;
    live.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) live.push_back({i, {i}});

    Tree tree{n, {}};
    for (int step = 0; step < n - 1; ++step) {
        std::size_t best_a = 0, best_b = 1;
        double best_stat = -std::numeric_limits<double>::infinity();
        std::pair<int, int> best_key{std::numeric_limits<int>::max(),
                                     std::numeric_limits<int>::max()};
        for (std::size_t a = 0; a < live.size(); ++a)
            for (std::size_t b = a + 1; b < live.size(); ++b) {
                const double stat = cross_statistic(s, live[a], live[b], rule);
                std::pair<int, int> key = std::minmax(live[a].members[0], live[b].members[0]);
                if (stat > best_stat || (stat == best_stat && key < best_key)) {
                    best_stat = stat;
                    best_key = key;
                    best_a = a;
                    best_b = b;
                }
            }

        Cluster merged;
        merged.id = n + step;
        merged.members.resize(live[best_a].members.size() + live[best_b].members.size());
        std::merge(live[best_a].members.begin(), live[best_a].members.end(),
                   live[best_b].members.begin(), live[best_b].members.end(),
                   merged.members.begin());
        tree.merges.push_back({live[best_a].id, live[best_b].id});
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(best_b));
        live[best_a] = std::move(merged);
    }
    tree.validate();
    return tree;
}

std::pair<Tree, double> exhaustive_best(const SimilarityMatrix& s, int cap) {
    Tree best{0, {}};
    double best_loss = std::numeric_limits<double>::infinity();
    for_each_tree(
        s.n(),
        [&](const Tree& t) {
            const double l = loss_from_sizes(s, lca_sizes(t));
            if (l < best_loss) {
                best_loss = l;
                best = t;
            }
        },
        cap);
    return {best, best_loss};
}

}  // namespace hcstab
