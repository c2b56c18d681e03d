#include "hcstab/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace hcstab {

namespace {

double size_loss(const SimilarityMatrix& s, const PairSizeTable& sizes) {
    const auto& w = s.weights();
    double total = 0.0;
    for (std::size_t p = 0; p < w.size(); ++p)
        total += w[p] * static_cast<double>(sizes.s[p]);
    return 2.0 * total;
}

std::int64_t size_inner(const PairSizeTable& a, const PairSizeTable& b) {
    std::int64_t sum = 0;
    for (std::size_t p = 0; p < a.s.size(); ++p)
        sum += std::min(a.s[p], b.s[p]) - 1;
    return sum;
}

std::int64_t size_hamming(const PairSizeTable& a, const PairSizeTable& b) {
    std::int64_t sum = 0;
    for (std::size_t p = 0; p < a.s.size(); ++p) sum += std::abs(a.s[p] - b.s[p]);
    return sum;
}

}  // namespace

ExactSublevel exact_sublevel(const SimilarityMatrix& s, const LevelIndicator& x, int cap) {
    if (s.n() != x.n()) throw std::invalid_argument("dimension mismatch: n differs");
    const PairSizeTable sx = sizes_from_indicator(x);
    const double loss_x = size_loss(s, sx);

    ExactSublevel out;
    out.delta_int = std::numeric_limits<std::int64_t>::max();
    for_each_tree(
        s.n(),
        [&](const Tree& t) {
            const PairSizeTable sy = lca_sizes(t);
            if (size_loss(s, sy) > loss_x + 1e-9) return;
            ++out.feasible_count;
            const std::int64_t ip = size_inner(sx, sy);
            if (ip < out.delta_int) {
                out.delta_int = ip;
                out.argmin = t;
            }
            out.max_dist = std::max(out.max_dist, size_hamming(sx, sy));
        },
        cap);
    if (out.feasible_count == 0)
        throw std::logic_error("sublevel set empty: X's own tree must qualify");
    return out;
}

CertificateCheck verify_certificate(const SimilarityMatrix& s, const LevelIndicator& x,
                                    double epsilon, int cap) {
    const ExactSublevel ex = exact_sublevel(s, x, cap);
    CertificateCheck check;
    check.delta_int = ex.delta_int;
    check.max_dist = ex.max_dist;
    check.feasible_count = ex.feasible_count;
    check.valid = static_cast<double>(ex.max_dist) <= epsilon + 1e-6;
    return check;
}

bool verify_norm_constant(int n, int cap) {
    const std::int64_t nn = n;
    const std::int64_t expected = (nn * nn * nn - nn) / 3 - nn * (nn - 1) / 2;
    bool ok = true;
    for_each_tree(
        n,
        [&](const Tree& t) {
            const PairSizeTable sizes = lca_sizes(t);
            std::int64_t sum = 0;
            for (int sp : sizes.s) sum += sp - 1;
            if (sum != expected) ok = false;
        },
        cap);
    return ok;
}

}  // namespace hcstab
