#include "hcstab/sublevel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hcstab/cost.hpp"
#include "hcstab/linkage.hpp"
#include "hcstab/metrics.hpp"

namespace hcstab {

const char* to_string(Method m) {
    switch (m) {
        case Method::average: return "average";
        case Method::max_pairwise: return "max-pairwise";
        case Method::min_pairwise: return "min-pairwise";
        case Method::exhaustive: return "exhaustive";
    }
    return "unknown";
}

std::optional<Method> method_from_string(std::string_view name) {
    if (name == "average") return Method::average;
    if (name == "max-pairwise") return Method::max_pairwise;
    if (name == "min-pairwise") return Method::min_pairwise;
    if (name == "exhaustive") return Method::exhaustive;
    return std::nullopt;
}

SsInstance make_ss_instance(SimilarityMatrix s, LevelIndicator x) {
    if (s.n() != x.n()) throw std::invalid_argument("dimension mismatch: n differs");
    SsInstance inst{std::move(s), std::move(x), 0.0};
    inst.loss_x = loss(inst.s, inst.x);
    return inst;
}

lp::Model build_base_model(const SsInstance& inst) {
    const PairLevelIndex& idx = inst.x.idx;
    const int levels = idx.level_count();

    lp::Model model;
    for (std::size_t p = 0; p < idx.pair_count(); ++p)
        for (int t = 1; t <= levels; ++t) {
            const std::size_t k = p * static_cast<std::size_t>(levels) +
                                  static_cast<std::size_t>(t - 1);
            const double lo = t == 1 ? 1.0 : 0.0;
            model.add_variable(lo, 1.0, inst.x.x[k] ? 1.0 : 0.0);
        }

    lp::Row sub;
    const std::vector<double>& coef = sublevel_coefficients(inst.s);
    for (std::size_t p = 0; p < idx.pair_count(); ++p) {
        if (coef[p] == 0.0) continue;
        for (int t = 1; t <= levels; ++t)
            sub.coeffs.emplace_back(
                static_cast<int>(p * static_cast<std::size_t>(levels)) + t - 1, coef[p]);
    }
    sub.rel = lp::Relation::le;
    sub.rhs = sublevel_rhs(inst.s, inst.x);
    model.add_row(std::move(sub));

    for (std::size_t p = 0; p < idx.pair_count(); ++p)
        for (int t = 1; t < levels; ++t) {
            lp::Row mono;
            const int base = static_cast<int>(p * static_cast<std::size_t>(levels)) + t - 1;
            mono.coeffs = {{base, 1.0}, {base + 1, -1.0}};
            mono.rel = lp::Relation::ge;
            mono.rhs = 0.0;
            model.add_row(std::move(mono));
        }
    return model;
}

std::vector<ViolatedRow> separate_triangle(const FractionalHierarchy& y, double tol) {
    const int n = y.n();
    const PairLevelIndex& idx = y.idx;
    std::vector<ViolatedRow> out;
    for (int t = 1; t <= idx.level_count(); ++t)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    const double ab = y.at(a, b, t);
                    const double bc = y.at(b, c, t);
                    const double ac = y.at(a, c, t);
                    auto emit = [&](int i, int j, int k, double v) {
                        // y(i,j,t) + y(j,k,t) >= y(i,k,t)
                        lp::Row row;
                        row.coeffs = {{static_cast<int>(idx.at(i, j, t)), 1.0},
                                      {static_cast<int>(idx.at(j, k, t)), 1.0},
                                      {static_cast<int>(idx.at(i, k, t)), -1.0}};
                        row.rel = lp::Relation::ge;
                        row.rhs = 0.0;
                        out.push_back({std::move(row), v, t, i});
                    };
                    if (ac - ab - bc > tol) emit(a, b, c, ac - ab - bc);
                    if (bc - ab - ac > tol) emit(b, a, c, bc - ab - ac);
                    if (ab - ac - bc > tol) emit(a, c, b, ab - ac - bc);
                }
    return out;
}

std::vector<ViolatedRow> separate_spreading(const FractionalHierarchy& y, double tol) {
    const int n = y.n();
    const PairLevelIndex& idx = y.idx;
    std::vector<ViolatedRow> out;
    std::vector<std::pair<double, int>> vals;  // (y(i,j,t), j) sorted ascending
    for (int t = 1; t <= idx.level_count(); ++t)
        for (int i = 0; i < n; ++i) {
            vals.clear();
            for (int j = 0; j < n; ++j)
                if (j != i) vals.emplace_back(y.at(i, j, t), j);
            std::sort(vals.begin(), vals.end());

            double best = tol;
            int best_k = -1;
            double prefix = 0.0;
            for (int k = 1; k <= static_cast<int>(vals.size()); ++k) {
                prefix += vals[static_cast<std::size_t>(k - 1)].first;
                const int size = k + 1;  // |S| with i included
                if (size <= t) continue;
                const double v = static_cast<double>(size - t) - prefix;
                if (v > best) {
                    best = v;
                    best_k = k;
                }
            }
            if (best_k < 0) continue;
            lp::Row row;
            for (int k = 0; k < best_k; ++k)
                row.coeffs.emplace_back(
                    static_cast<int>(idx.at(i, vals[static_cast<std::size_t>(k)].second, t)),
                    1.0);
            row.rel = lp::Relation::ge;
            row.rhs = static_cast<double>(best_k + 1 - t);
            out.push_back({std::move(row), best, t, i});
        }
    return out;
}

SsResult solve_ss(const SsInstance& inst, const SsConfig& config) {
    const int n = inst.x.n();
    SsResult res;
    res.y_star = FractionalHierarchy(n);

    lp::Model model = build_base_model(inst);
    lp::Solution sol = lp::solve(model, config.lp);
    res.lp_iterations = sol.iterations;

    while (true) {
        if (sol.status != lp::Status::optimal) {
            res.status = std::string("lp-") + lp::to_string(sol.status);
            break;
        }
        ++res.rounds;
        res.round_objectives.push_back(sol.objective);
        FractionalHierarchy y(n);
        y.y = sol.values;
        auto tri = separate_triangle(y, config.separation_tol);
        auto spr = separate_spreading(y, config.separation_tol);
        if (tri.empty() && spr.empty()) {
            res.certified = true;
            res.status = "certified";
            res.y_star = std::move(y);
            break;
        }
        if (res.rounds >= config.max_rounds) {
            res.status = "round-limit";
            res.y_star = std::move(y);
            break;
        }
        std::vector<lp::Row> rows;
        rows.reserve(tri.size() + spr.size());
        for (ViolatedRow& r : tri) rows.push_back(std::move(r.row));
        for (ViolatedRow& r : spr) rows.push_back(std::move(r.row));
        res.cuts.triangle += static_cast<long>(tri.size());
        res.cuts.spreading += static_cast<long>(spr.size());
        sol = lp::add_rows_and_resolve(model, sol, rows, config.lp);
        res.lp_iterations += sol.iterations;
    }

    if (res.certified) {
        res.delta = sol.objective;
        res.epsilon = optimality_radius(n, res.delta);
    } else {
        // Trivial but always-true bound; status records why no certificate.
        res.delta = 0.0;
        res.epsilon = 2.0 * static_cast<double>(norm_constant(n));
    }
    return res;
}

StabilityReport certify(const SimilarityMatrix& s, Method method, const SsConfig& config,
                        std::vector<std::string> input_warnings) {
    Tree tree{0, {}};
    switch (method) {
        case Method::average: tree = agglomerate(s, LinkageRule::average); break;
        case Method::max_pairwise: tree = agglomerate(s, LinkageRule::max_pairwise); break;
        case Method::min_pairwise: tree = agglomerate(s, LinkageRule::min_pairwise); break;
        case Method::exhaustive:
            tree = exhaustive_best(s, config.enumeration_cap).first;
            break;
    }

    SsInstance inst = make_ss_instance(s, tree_to_indicator(tree));
    SsResult res = solve_ss(inst, config);

    StabilityReport rep;
    rep.n = s.n();
    rep.method = method;
    rep.tree = std::move(tree);
    rep.loss_x = inst.loss_x;
    rep.delta = res.delta;
    rep.epsilon = res.epsilon;
    rep.norm_const = norm_constant(s.n());
    rep.epsilon_relative = res.epsilon / (2.0 * static_cast<double>(rep.norm_const));
    rep.rounds = res.rounds;
    rep.cuts = res.cuts;
    rep.lp_iterations = res.lp_iterations;
    rep.certified = res.certified;
    rep.status = res.status;
    rep.warnings = std::move(input_warnings);
    rep.y_star = std::move(res.y_star);
    return rep;
}

}  // namespace hcstab
