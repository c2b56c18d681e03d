#pragma once

#include <cstdint>

#include "hcstab/indicator.hpp"
#include "hcstab/similarity.hpp"
#include "hcstab/tree.hpp"

namespace hcstab {

// Brute-force ground truth over all trees with loss <= loss(X). Every
// quantity is computed from pair-size tables directly, independent of the
// indicator/kernel code paths it is used to check.
struct ExactSublevel {
    std::int64_t delta_int = 0;  // min <X,Y> over the sublevel set
    Tree argmin;
    std::int64_t max_dist = 0;  // max hamming(X,Y) over the sublevel set
    long feasible_count = 0;    // always >= 1: contains X itself
};

ExactSublevel exact_sublevel(const SimilarityMatrix& s, const LevelIndicator& x,
                             int cap = kDefaultEnumerationCap);

struct CertificateCheck {
    bool valid = false;  // max_dist <= epsilon + 1e-6
    std::int64_t delta_int = 0;
    std::int64_t max_dist = 0;
    long feasible_count = 0;
};

CertificateCheck verify_certificate(const SimilarityMatrix& s, const LevelIndicator& x,
                                    double epsilon, int cap = kDefaultEnumerationCap);

// True iff sum_p (s_p - 1) equals (n^3 - n)/3 - n(n-1)/2 for every tree.
bool verify_norm_constant(int n, int cap = kDefaultEnumerationCap);

}  // namespace hcstab
