#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcstab/indicator.hpp"
#include "hcstab/lp.hpp"
#include "hcstab/similarity.hpp"
#include "hcstab/tree.hpp"

namespace hcstab {

enum class Method { average, max_pairwise, min_pairwise, exhaustive };

const char* to_string(Method m);
std::optional<Method> method_from_string(std::string_view name);

// A fixed clustering X against similarity data S, with its loss.
struct SsInstance {
    SimilarityMatrix s;
    LevelIndicator x;
    double loss_x = 0.0;
};

SsInstance make_ss_instance(SimilarityMatrix s, LevelIndicator x);

struct SsConfig {
    double separation_tol = 1e-7;
    int max_rounds = 200;
    int enumeration_cap = kDefaultEnumerationCap;  // for Method::exhaustive
    lp::Config lp;
};

struct CutCounts {
    long triangle = 0;
    long spreading = 0;
};

struct SsResult {
    double delta = 0.0;
    double epsilon = 0.0;
    FractionalHierarchy y_star;
    int rounds = 0;
    CutCounts cuts;
    long lp_iterations = 0;
    bool certified = false;
    std::string status;  // "certified", "round-limit", or "lp-<status>"
    std::vector<double> round_objectives;  // LP optimum per round, non-decreasing
};

struct ViolatedRow {
    lp::Row row;
    double violation;
    int level;
    int anchor;  // lowest point label involved, for deterministic ordering
};

// Variables y(i,j,t) laid out per PairLevelIndex; level-1 variables pinned to
// [1,1] and kept in the objective, so the LP objective equals <X,Y> directly.
// Rows: the sublevel row, then all level-monotonicity rows. Triangle and
// spreading rows are generated lazily by the separators.
lp::Model build_base_model(const SsInstance& inst);

// All triangle orientations violated beyond tol, scanned per level.
std::vector<ViolatedRow> separate_triangle(const FractionalHierarchy& y, double tol);

// Single most violated spreading row per (point, level): sorting y(i,.,t)
// ascending makes the prefix of each length the worst set of that size, so a
// prefix scan finds the overall worst subset.
std::vector<ViolatedRow> separate_spreading(const FractionalHierarchy& y, double tol);

// Cutting-plane loop. A certificate is emitted only when the final LP is
// optimal and both separators come back empty; otherwise the result reports
// the trivial bound (delta 0, epsilon 2*norm_constant) and a status naming
// what stopped it.
SsResult solve_ss(const SsInstance& inst, const SsConfig& config = {});

struct StabilityReport {
    int n = 0;
    Method method = Method::average;
    Tree tree;
    double loss_x = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;
    double epsilon_relative = 0.0;
    long norm_const = 0;
    int rounds = 0;
    CutCounts cuts;
    long lp_iterations = 0;
    bool certified = false;
    std::string status;
    std::vector<std::string> warnings;
    FractionalHierarchy y_star;
};

// Full pipeline: linkage (or exhaustive minimization), loss, solve_ss.
StabilityReport certify(const SimilarityMatrix& s, Method method,
                        const SsConfig& config = {},
                        std::vector<std::string> input_warnings = {});

}  // namespace hcstab
