// Acceptance gate: one self-contained check per release criterion, each
// validated against an independent oracle (enumeration, closed forms, or
// exhaustive subset search), printing one PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hcstab/cost.hpp"
#include "hcstab/indicator.hpp"
#include "hcstab/lp.hpp"
#include "hcstab/metrics.hpp"
#include "hcstab/oracle.hpp"
#include "hcstab/sublevel.hpp"
#include "hcstab/tree.hpp"
#include "lp_testutil.hpp"
#include "testutil.hpp"

namespace {

using namespace hcstab;

// Records the first failure so the verdict line can name it.
struct Gate {
    bool ok = true;
    std::string why;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

// 1. Squared norm is the same for every hierarchy on n points and matches
//    the closed form, n = 2..7, exactly.
bool criterion_1(std::string& why) {
    Gate g;
    for (int n = 2; n <= 7 && g.ok; ++n) {
        const std::int64_t nn = n;
        const std::int64_t form = (nn * nn * nn - nn) / 3 - nn * (nn - 1) / 2;
        g.expect(norm_constant(n) == form, "closed form mismatch at n=" + std::to_string(n));
        for_each_tree(n, [&](const Tree& t) {
            if (norm_sq(tree_to_indicator(t)) != form)
                g.expect(false, "norm varies across trees at n=" + std::to_string(n));
        });
    }
    why = g.why;
    return g.ok;
}

// 2. hamming = |X|^2 + |Y|^2 - 2<X,Y> exactly: all tree pairs at n = 4, 5
//    and 500 random pairs at n = 8..12.
bool criterion_2(std::string& why) {
    Gate g;
    auto identity = [&](const LevelIndicator& a, const LevelIndicator& b, int n) {
        if (hamming(a, b) != norm_sq(a) + norm_sq(b) - 2 * inner_product(a, b))
            g.expect(false, "identity fails at n=" + std::to_string(n));
    };
    for (int n = 4; n <= 5; ++n) {
        std::vector<LevelIndicator> xs;
        for_each_tree(n, [&](const Tree& t) { xs.push_back(tree_to_indicator(t)); });
        for (const auto& a : xs)
            for (const auto& b : xs) identity(a, b, n);
    }
    std::mt19937_64 rng(20240801);
    for (int rep = 0; rep < 500; ++rep) {
        const int n = 8 + rep % 5;
        identity(tree_to_indicator(random_tree(n, rng)),
                 tree_to_indicator(random_tree(n, rng)), n);
    }
    why = g.why;
    return g.ok;
}

// 3. With all off-diagonal similarities 1, every hierarchy costs exactly
//    2(n^3 - n)/3, n = 2..7.
bool criterion_3(std::string& why) {
    Gate g;
    for (int n = 2; n <= 7 && g.ok; ++n) {
        SimilarityMatrix s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.set(i, j, 1.0);
        const std::int64_t nn = n;
        const double want = 2.0 * double((nn * nn * nn - nn) / 3);
        for_each_tree(n, [&](const Tree& t) {
            if (loss(s, tree_to_indicator(t)) != want)
                g.expect(false, "unit-similarity loss varies at n=" + std::to_string(n));
        });
    }
    why = g.why;
    return g.ok;
}

// 4. Certificate soundness: 20 integer and 20 continuous similarity draws at
//    each n = 4, 5, 6, clustered by each linkage rule. Every enumerated tree
//    inside the sublevel set stays within the certified radius, and the
//    relaxation value never exceeds the enumerated integral minimum.
bool criterion_4(std::string& why) {
    Gate g;
    std::mt19937_64 rng(20240804);
    const Method methods[] = {Method::average, Method::max_pairwise, Method::min_pairwise};
    for (int n = 4; n <= 6 && g.ok; ++n) {
        for (int draw = 0; draw < 40 && g.ok; ++draw) {
            const auto s = testutil::random_similarity(n, rng, draw < 20);
            for (Method method : methods) {
                const auto rep = certify(s, method);
                const std::string tag = " (n=" + std::to_string(n) + ", draw " +
                                        std::to_string(draw) + ", " + to_string(method) + ")";
                g.expect(rep.certified, "run did not certify" + tag);
                if (!rep.certified) continue;

                const PairSizeTable sx = lca_sizes(rep.tree);
                const double loss_x = loss_from_sizes(s, sx);
                std::int64_t delta_int = std::numeric_limits<std::int64_t>::max();
                for_each_tree(n, [&](const Tree& yt) {
                    const PairSizeTable sy = lca_sizes(yt);
                    if (loss_from_sizes(s, sy) > loss_x + 1e-9) return;
                    std::int64_t inner = 0, dist = 0;
                    for (std::size_t p = 0; p < sx.s.size(); ++p) {
                        inner += std::min(sx.s[p], sy.s[p]) - 1;
                        dist += std::abs(sx.s[p] - sy.s[p]);
                    }
                    delta_int = std::min(delta_int, inner);
                    if (double(dist) > rep.epsilon + 1e-6)
                        g.expect(false, "tree outside certified radius" + tag);
                });
                g.expect(rep.delta <= double(delta_int) + 1e-6,
                         "relaxation above integral minimum" + tag);
            }
        }
    }
    why = g.why;
    return g.ok;
}

// 5. Worked-instance regression, each value recomputed by the enumeration
//    oracle before asserting the pinned numbers; tolerance 1e-9.
bool criterion_5(std::string& why) {
    Gate g;
    auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9; };

    {
        SimilarityMatrix s(3);
        s.set(0, 1, 1.0);
        const auto rep = certify(s, Method::average);
        const auto ex = exact_sublevel(s, tree_to_indicator(rep.tree));
        g.expect(near(rep.delta, double(ex.delta_int)), "decisive: delta vs oracle");
        g.expect(near(rep.epsilon, 2.0 * double(norm_constant(3) - ex.delta_int)),
                 "decisive: epsilon vs oracle");
        g.expect(near(rep.loss_x, 4.0) && near(rep.delta, 5.0) && near(rep.epsilon, 0.0),
                 "decisive: pinned (4, 5, 0)");
        g.expect(ex.max_dist == 0, "decisive: oracle diameter");
    }
    {
        SimilarityMatrix s(3);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) s.set(i, j, 1.0);
        const auto rep = certify(s, Method::average);
        const auto ex = exact_sublevel(s, tree_to_indicator(rep.tree));
        g.expect(near(rep.delta, double(ex.delta_int)), "uniform: delta vs oracle");
        g.expect(near(rep.epsilon, 2.0 * double(norm_constant(3) - ex.delta_int)),
                 "uniform: epsilon vs oracle");
        g.expect(near(rep.loss_x, 16.0) && near(rep.delta, 4.0) && near(rep.epsilon, 2.0),
                 "uniform: pinned (16, 4, 2)");
        g.expect(ex.max_dist == 2, "uniform: bound not tight");
    }
    {
        SimilarityMatrix s(2);
        s.set(0, 1, 1.0);
        const auto rep = certify(s, Method::average);
        const auto ex = exact_sublevel(s, tree_to_indicator(rep.tree));
        g.expect(near(rep.epsilon, 0.0), "pair: epsilon 0");
        g.expect(ex.delta_int == 1 && ex.max_dist == 0, "pair: oracle values");
    }
    why = g.why;
    return g.ok;
}

// 6. The spreading separator agrees with exhaustive subset enumeration on
//    200 random fractional tensors at each n = 5, 6, 7: it finds a violation
//    iff one exists, and the most-violated values match to 1e-9.
bool criterion_6(std::string& why) {
    Gate g;
    std::mt19937_64 rng(20240806);
    for (int n = 5; n <= 7 && g.ok; ++n) {
        for (int rep = 0; rep < 200 && g.ok; ++rep) {
            const auto y = testutil::random_fractional(n, rng);
            const auto cuts = separate_spreading(y, 1e-7);
            std::map<std::pair<int, int>, double> reported;
            for (const auto& c : cuts) {
                const auto key = std::make_pair(c.level, c.anchor);
                g.expect(reported.find(key) == reported.end(),
                         "duplicate cut per point and level");
                reported[key] = c.violation;
            }
            for (int t = 1; t < n && g.ok; ++t)
                for (int i = 0; i < n && g.ok; ++i) {
                    const double worst = testutil::worst_spreading_violation(y, i, t);
                    const auto it = reported.find(std::make_pair(t, i));
                    const bool found = it != reported.end();
                    g.expect(found == (worst > 1e-7),
                             "find-iff mismatch at n=" + std::to_string(n));
                    if (found)
                        g.expect(std::abs(it->second - worst) <= 1e-9,
                                 "violation value mismatch at n=" + std::to_string(n));
                }
        }
    }
    why = g.why;
    return g.ok;
}

// 7. Every enumerated tree at n <= 6 passes both separators at zero
//    tolerance and satisfies the static rows (level-1 pins, monotonicity).
bool criterion_7(std::string& why) {
    Gate g;
    for (int n = 2; n <= 6 && g.ok; ++n) {
        for_each_tree(n, [&](const Tree& t) {
            const auto x = tree_to_indicator(t);
            FractionalHierarchy y(n);
            for (std::size_t k = 0; k < y.y.size(); ++k) y.y[k] = x.x[k];
            if (!separate_triangle(y, 0.0).empty())
                g.expect(false, "triangle violation at n=" + std::to_string(n));
            if (!separate_spreading(y, 0.0).empty())
                g.expect(false, "spreading violation at n=" + std::to_string(n));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (x.at(i, j, 1) != 1)
                        g.expect(false, "level-1 pin broken at n=" + std::to_string(n));
                    for (int lev = 1; lev + 1 <= n - 1; ++lev)
                        if (x.at(i, j, lev) < x.at(i, j, lev + 1))
                            g.expect(false, "monotonicity broken at n=" + std::to_string(n));
                }
        });
    }
    why = g.why;
    return g.ok;
}

// 8. LP core: small random instances against exact basic-solution
//    enumeration, and warm re-solve equal to a from-scratch solve at up to
//    50 variables, both to 1e-7.
bool criterion_8(std::string& why) {
    Gate g;
    std::mt19937_64 rng(20240808);
    for (int rep = 0; rep < 30 && g.ok; ++rep) {
        const int nv = 2 + int(rng() % 5);
        const int nr = 1 + int(rng() % 6);
        const auto inst = lptest::random_instance(nv, nr, 0, rep % 3 == 0, rng);
        const auto oracle = lptest::enumerate_optimum(inst.model);
        g.expect(oracle.feasible, "oracle lost the construction point");
        const auto sol = lp::solve(inst.model);
        g.expect(sol.status == lp::Status::optimal, "small instance not optimal");
        if (!g.ok) break;
        g.expect(std::abs(sol.objective - oracle.objective) <=
                     1e-7 * std::max(1.0, std::abs(oracle.objective)),
                 "objective differs from enumerated optimum");
        g.expect(lp::primal_infeasibility(inst.model, sol.values) <= 1e-7,
                 "reported point infeasible");
    }
    for (int rep = 0; rep < 5 && g.ok; ++rep) {
        auto inst = lptest::random_instance(50, 30, 12, rep % 2 == 0, rng);
        const auto base = lp::solve(inst.model);
        g.expect(base.status == lp::Status::optimal, "base solve not optimal");
        if (!g.ok) break;
        lp::Model cold_model = inst.model;
        for (const auto& row : inst.extra) cold_model.add_row(row);
        const auto cold = lp::solve(cold_model);
        const auto warm = lp::add_rows_and_resolve(inst.model, base, inst.extra);
        g.expect(cold.status == lp::Status::optimal && warm.status == lp::Status::optimal,
                 "re-solve status mismatch");
        if (!g.ok) break;
        g.expect(std::abs(warm.objective - cold.objective) <=
                     1e-7 * std::max(1.0, std::abs(cold.objective)),
                 "warm and cold objectives differ");
    }
    why = g.why;
    return g.ok;
}

// 9. CLI determinism and schema on the bundled two-block dataset:
//    byte-identical repeat runs, epsilon = 2(norm_constant - delta) to 1e-9.
bool criterion_9(std::string& why) {
    Gate g;
    const std::string data = std::string(HCSTAB_DATA_DIR) + "/two_block_n4.txt";
    const std::string out_a = "/tmp/hcstab_acceptance_a.json";
    const std::string out_b = "/tmp/hcstab_acceptance_b.json";
    auto run = [&](const std::string& out_path) {
        const std::string cmd =
            std::string(HCSTAB_CLI_PATH) + " certify " + data + " >" + out_path;
        const int status = std::system(cmd.c_str());
        return status != -1 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    g.expect(run(out_a) == 0, "first run did not certify");
    g.expect(run(out_b) == 0, "second run did not certify");
    const std::string a = slurp(out_a);
    g.expect(!a.empty() && a == slurp(out_b), "repeat runs differ");
    if (g.ok) {
        const auto doc = nlohmann::json::parse(a);
        const double delta = doc.at("delta").get<double>();
        const double epsilon = doc.at("epsilon").get<double>();
        const double k = doc.at("norm_constant").get<double>();
        g.expect(std::abs(epsilon - 2.0 * (k - delta)) <= 1e-9, "radius identity broken");
        g.expect(doc.at("status").get<std::string>() == "certified", "status not certified");
        g.expect(doc.at("n").get<int>() == 4, "wrong n");
    }
    why = g.why;
    return g.ok;
}

struct Criterion {
    int id;
    const char* name;
    bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "norm constancy", criterion_1},
    {2, "distance identity", criterion_2},
    {3, "uniform-similarity loss", criterion_3},
    {4, "certificate soundness", criterion_4},
    {5, "worked-instance regression", criterion_5},
    {6, "separation equivalence", criterion_6},
    {7, "integral feasibility", criterion_7},
    {8, "lp core", criterion_8},
    {9, "cli determinism", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = 0, ran = 0;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        ++ran;
        const auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok) {
            std::printf("criterion %d (%s): PASS (%.2f s)\n", c.id, c.name, secs);
        } else {
            std::printf("criterion %d (%s): FAIL (%.2f s): %s\n", c.id, c.name, secs,
                        why.c_str());
            ++failures;
        }
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion numbered %d\n", only);
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
