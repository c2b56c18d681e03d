#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hcstab/cost.hpp"
#include "hcstab/linkage.hpp"
#include "testutil.hpp"

using namespace hcstab;

TEST_CASE("strongest pair merges first") {
    SimilarityMatrix s(3);
    s.set(0, 1, 1.0);
    for (LinkageRule rule :
         {LinkageRule::max_pairwise, LinkageRule::average, LinkageRule::min_pairwise}) {
        const Tree t = agglomerate(s, rule);
        REQUIRE(t.merges.size() == 2);
        CHECK(t.merges[0] == Merge{0, 1});
        CHECK(t.merges[1] == Merge{3, 2});
    }
}

TEST_CASE("all-equal similarities resolve ties by smallest labels") {
    SimilarityMatrix s(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) s.set(i, j, 1.0);
    const Tree t = agglomerate(s, LinkageRule::average);
    REQUIRE(t.merges.size() == 3);
    CHECK(t.merges[0] == Merge{0, 1});   // {1,2}
    CHECK(t.merges[1] == Merge{4, 2});   // {1,2} with 3
    CHECK(t.merges[2] == Merge{5, 3});
}

TEST_CASE("two blocks of two") {
    SimilarityMatrix s(4);
    s.set(0, 1, 1.0);
    s.set(2, 3, 1.0);
    for (LinkageRule rule :
         {LinkageRule::max_pairwise, LinkageRule::average, LinkageRule::min_pairwise}) {
        const Tree t = agglomerate(s, rule);
        const auto sizes = lca_sizes(t);
        CHECK(sizes.at(0, 1) == 2);
        CHECK(sizes.at(2, 3) == 2);
        CHECK(sizes.at(0, 2) == 4);
        // 2*(1*2 + 1*2) = 8, and no tree does better.
        CHECK(loss(s, tree_to_indicator(t)) == doctest::Approx(8.0));
        CHECK(exhaustive_best(s).second == doctest::Approx(8.0));
    }
}

TEST_CASE("linkage rules diverge when cluster statistics differ") {
    // 3 is strongly tied to 1 but not at all to 2. After {1,2} merge, max
    // linkage sees cross statistic 0.9 toward 3 and absorbs it; min linkage
    // sees 0 and prefers the outlier edges worth 0.05.
    SimilarityMatrix s(4);
    s.set(0, 1, 1.0);
    s.set(0, 2, 0.9);
    s.set(1, 2, 0.0);
    s.set(0, 3, 0.05);
    s.set(1, 3, 0.05);
    s.set(2, 3, 0.05);
    const Tree tmax = agglomerate(s, LinkageRule::max_pairwise);
    const Tree tmin = agglomerate(s, LinkageRule::min_pairwise);
    CHECK(tmax.merges[0] == Merge{0, 1});
    CHECK(tmin.merges[0] == Merge{0, 1});
    CHECK(lca_sizes(tmax).at(0, 2) == 3);
    CHECK(lca_sizes(tmin).at(0, 2) == 4);
    CHECK(lca_sizes(tmin).at(0, 3) == 3);
}

TEST_CASE("exhaustive search returns the cheapest tree") {
    const auto s = [] {
        SimilarityMatrix m(3);
        m.set(0, 1, 1.0);
        return m;
    }();
    const auto [best, best_loss] = exhaustive_best(s);
    CHECK(best_loss == doctest::Approx(4.0));
    CHECK(lca_sizes(best).at(0, 1) == 2);
}

TEST_CASE("exhaustive search is deterministic under ties") {
    SimilarityMatrix s(4);  // all zero: every tree costs 0
    const auto [a, la] = exhaustive_best(s);
    const auto [b, lb] = exhaustive_best(s);
    CHECK(la == 0.0);
    CHECK(lb == 0.0);
    CHECK(a.merges == b.merges);
}

TEST_CASE("exhaustive search refuses n beyond the cap") {
    SimilarityMatrix s(6);
    CHECK_THROWS_AS(exhaustive_best(s, 5), std::invalid_argument);
}

TEST_CASE("greedy loss never beats the enumerated optimum") {
    std::mt19937_64 rng(31);
    for (int n = 3; n <= 6; ++n)
        for (int rep = 0; rep < 8; ++rep) {
            const auto s = testutil::random_similarity(n, rng, rep % 2 == 0);
            const double opt = exhaustive_best(s).second;
            for (LinkageRule rule : {LinkageRule::max_pairwise, LinkageRule::average,
                                     LinkageRule::min_pairwise}) {
                const Tree t = agglomerate(s, rule);
                t.validate();
                CHECK(loss(s, tree_to_indicator(t)) >= opt - 1e-9);
            }
        }
}
