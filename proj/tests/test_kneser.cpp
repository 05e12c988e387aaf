#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ekr/kneser.hpp"
#include "ekr/sampler.hpp"

#include <algorithm>
#include <set>

using namespace ekr;

TEST_CASE("colex unrank examples") {
    CHECK(colex_unrank(5, 2, 0) == RSet{{1, 2}});
    CHECK(colex_unrank(5, 2, 2) == RSet{{2, 3}});
    CHECK(colex_unrank(5, 2, 9) == RSet{{4, 5}});
    CHECK_THROWS_AS(colex_unrank(5, 2, 10), std::out_of_range);

    // Full colex listing for K(5,2).
    const std::vector<std::vector<int>> expected = {
        {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4},
        {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5},
    };
    for (VertexId k = 0; k < 10; ++k)
        CHECK(colex_unrank(5, 2, k).elements == expected[k]);
}

TEST_CASE("colex rank examples") {
    CHECK(colex_rank(5, 2, RSet{{1, 2}}) == 0);
    CHECK(colex_rank(5, 2, RSet{{2, 3}}) == 2);  // C(1,1) + C(2,2)
    CHECK_THROWS_AS(colex_rank(5, 2, RSet{{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(colex_rank(5, 2, RSet{{3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(colex_rank(5, 2, RSet{{1, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(colex_rank(5, 2, RSet{{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("rank and unrank are mutually inverse") {
    long long round_trips = 0;
    for (int n = 1; n <= 20; ++n) {
        for (int r = 1; r <= n; ++r) {
            const std::uint32_t total = binom(n, r).convert_to<std::uint32_t>();
            for (VertexId k = 0; k < total; ++k) {
                const RSet set = colex_unrank(n, r, k);
                if (colex_rank(n, r, set) != k || !valid_rset(n, r, set)) {
                    REQUIRE(valid_rset(n, r, set));
                    CHECK(colex_rank(n, r, set) == k);
                }
                ++round_trips;
            }
        }
    }
    CHECK(round_trips == (1LL << 21) - 22);  // sum of 2^n - 1 over n <= 20
    // Spot checks at a larger scale; C(45,4) = 148995.
    for (VertexId k : {0u, 1u, 999u, 12345u, 148994u})
        CHECK(colex_rank(45, 4, colex_unrank(45, 4, k)) == k);
}

TEST_CASE("adjacency by intersection size") {
    CHECK(adjacent(RSet{{1, 2}}, RSet{{3, 4}}, 0));
    CHECK_FALSE(adjacent(RSet{{1, 2}}, RSet{{2, 3}}, 0));
    CHECK(adjacent(RSet{{1, 2}}, RSet{{2, 3}}, 1));
    CHECK_FALSE(adjacent(RSet{{1, 2}}, RSet{{1, 2}}, 0));
    CHECK_FALSE(adjacent(RSet{{1, 2}}, RSet{{1, 2}}, 1));
    CHECK(adjacent(RSet{{1, 2}}, RSet{{1, 2}}, 2));  // s = r means equality
}

TEST_CASE("neighbor enumeration") {
    auto sorted_neighbors = [](int n, int r, int s, const RSet& a) {
        auto list = neighbors(n, r, s, a);
        std::vector<std::vector<int>> plain;
        for (const auto& b : list) plain.push_back(b.elements);
        std::sort(plain.begin(), plain.end());
        return plain;
    };
    CHECK(sorted_neighbors(5, 2, 0, RSet{{1, 2}}) ==
          std::vector<std::vector<int>>{{3, 4}, {3, 5}, {4, 5}});
    CHECK(sorted_neighbors(4, 2, 0, RSet{{1, 2}}) ==
          std::vector<std::vector<int>>{{3, 4}});
    CHECK(neighbors(5, 2, 1, RSet{{1, 2}}).size() == 6);  // C(2,1)*C(3,1)

    // Degree formula across a range, plus distinctness.
    for (int n = 2; n <= 9; ++n) {
        for (int r = 1; r <= std::min(4, n); ++r) {
            for (int s = 0; s < r; ++s) {
                const GraphSpec g = graph_constants(n, r, s);
                const RSet a = colex_unrank(n, r, 0);
                const auto ids = neighbor_ids(n, r, s, a);
                CHECK(BigCount(ids.size()) == g.degree);
                CHECK(std::set<VertexId>(ids.begin(), ids.end()).size() == ids.size());
            }
        }
    }
}

TEST_CASE("no edges below n = 2r, degree sum even") {
    for (int r = 2; r <= 4; ++r) {
        for (int n = r; n < 2 * r; ++n) {
            const GraphSpec g = graph_constants(n, r, 0);
            CHECK(g.edges == 0);
            CHECK(neighbors(n, r, 0, colex_unrank(n, r, 0)).empty());
        }
    }
    for (int n = 4; n <= 12; ++n)
        for (int r = 2; r <= n / 2; ++r)
            CHECK(graph_constants(n, r, 0).vertices * graph_constants(n, r, 0).degree %
                      2 ==
                  0);
}

TEST_CASE("family statistics examples") {
    SUBCASE("all of K(4,2): perfect matching, bound tight") {
        std::vector<VertexId> all(6);
        for (VertexId i = 0; i < 6; ++i) all[i] = i;
        const Family fam = family_stats(4, 2, all);
        CHECK(fam.size() == 6);
        for (int x = 1; x <= 4; ++x) CHECK(fam.degree_profile[x] == 3);
        CHECK(fam.max_degree == 3);
        CHECK(fam.induced_edges == 3);
        CHECK(fam.edge_lower_bound == 3);  // 15 - 4*3
    }
    SUBCASE("a full star has no induced edges") {
        const Family fam = star(6, 2, 3);
        CHECK(fam.size() == 5);
        CHECK(fam.induced_edges == 0);
        CHECK(fam.edge_lower_bound <= 0);
    }
    SUBCASE("one disjoint pair") {
        const std::vector<VertexId> ids = {colex_rank(5, 2, RSet{{1, 2}}),
                                           colex_rank(5, 2, RSet{{3, 4}})};
        const Family fam = family_stats(5, 2, ids);
        CHECK(fam.induced_edges == 1);
        CHECK(fam.edge_lower_bound == 1);
        CHECK(fam.max_degree == 1);
    }
    CHECK_THROWS_AS(family_stats(5, 2, {0, 0}), std::invalid_argument);
}

TEST_CASE("random families respect the edge bound, tight for r = 2") {
    std::uint64_t state = 2024;
    auto rand_below = [&](std::uint64_t bound) { return mix64(state++) % bound; };
    for (int trial = 0; trial < 500; ++trial) {
        const int r = 2 + static_cast<int>(rand_below(2));  // 2 or 3
        const int n = 2 * r + static_cast<int>(rand_below(10 - 2 * r + 1));
        const std::uint32_t total = binom(n, r).convert_to<std::uint32_t>();
        std::set<VertexId> chosen;
        const std::uint64_t size = rand_below(std::min<std::uint32_t>(total, 12) + 1);
        while (chosen.size() < size)
            chosen.insert(static_cast<VertexId>(rand_below(total)));
        const Family fam =
            family_stats(n, r, std::vector<VertexId>(chosen.begin(), chosen.end()));
        CHECK(fam.induced_edges >= fam.edge_lower_bound);
        if (r == 2) CHECK(fam.induced_edges == fam.edge_lower_bound);
    }
}

TEST_CASE("stars and star centers") {
    const Family s1 = star(5, 2, 1);
    CHECK(s1.size() == 4);
    std::vector<std::vector<int>> members;
    for (VertexId id : s1.members) members.push_back(colex_unrank(5, 2, id).elements);
    std::sort(members.begin(), members.end());
    CHECK(members ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}});

    CHECK(star_center(star(7, 3, 4)) == 4);

    // A triangle family is intersecting but not a full star.
    const std::vector<VertexId> triangle = {colex_rank(5, 2, RSet{{1, 2}}),
                                            colex_rank(5, 2, RSet{{1, 3}}),
                                            colex_rank(5, 2, RSet{{2, 3}})};
    CHECK_FALSE(star_center(family_stats(5, 2, triangle)));

    // Right size but no common element.
    const std::vector<VertexId> mixed = {
        colex_rank(5, 2, RSet{{1, 2}}), colex_rank(5, 2, RSet{{1, 3}}),
        colex_rank(5, 2, RSet{{2, 3}}), colex_rank(5, 2, RSet{{4, 5}})};
    CHECK_FALSE(star_center(family_stats(5, 2, mixed)));
}

TEST_CASE("every star is independent") {
    for (int n = 2; n <= 10; ++n)
        for (int r = 1; r <= std::min(3, n); ++r)
            for (int x = 1; x <= n; ++x)
                CHECK(star(n, r, x).induced_edges == 0);
}

TEST_CASE("rset text form") {
    CHECK(to_string(RSet{{1, 2, 5}}) == "{1,2,5}");
    CHECK(to_string(RSet{}) == "{}");
}
