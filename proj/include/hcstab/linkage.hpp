#pragma once

#include <utility>

#include "hcstab/similarity.hpp"
#include "hcstab/tree.hpp"

namespace hcstab {

enum class LinkageRule { max_pairwise, average, min_pairwise };

// Greedy agglomeration: repeatedly merge the cluster pair with the largest
// inter-cluster statistic (max / mean / min of cross-pair similarities).
// Ties pick the pair whose (min member label, other min member label) is
// lexicographically smallest.
Tree agglomerate(const SimilarityMatrix& s, LinkageRule rule);

// Minimum-loss tree by full enumeration; ties keep the first tree in
// enumeration order. Refuses n beyond the cap.
std::pair<Tree, double> exhaustive_best(const SimilarityMatrix& s,
                                        int cap = kDefaultEnumerationCap);

}  // namespace hcstab
