#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ekr/solver.hpp"

#include <algorithm>

using namespace ekr;

namespace {

SubgraphSample full_graph(int n, int r) {
    return sample_subgraph(graph_constants(n, r, 0), 1.0, 0, Backend::materialized);
}

SubgraphSample empty_graph(int n, int r) {
    return sample_subgraph(graph_constants(n, r, 0), 0.0, 0, Backend::materialized);
}

}  // namespace

TEST_CASE("brute force on known graphs") {
    CHECK(brute_alpha(full_graph(4, 2)) == 3);   // perfect matching on 6 vertices
    CHECK(brute_alpha(full_graph(5, 2)) == 4);   // Petersen
    CHECK(brute_alpha(empty_graph(5, 2)) == 10); // edgeless
    CHECK_THROWS_AS(brute_alpha(full_graph(8, 2)), std::length_error);  // 28 > 24
}

TEST_CASE("exact alpha on full and empty graphs") {
    const AlphaResult petersen = solve_alpha(full_graph(5, 2));
    CHECK(petersen.alpha == 4);
    CHECK(petersen.exhausted);
    CHECK(independent_in(full_graph(5, 2), petersen.witness.members));

    CHECK(solve_alpha(empty_graph(5, 2)).alpha == 10);
    CHECK(solve_alpha(full_graph(4, 2)).alpha == 3);
    CHECK(solve_alpha(full_graph(7, 3)).alpha == 15);
}

TEST_CASE("exact alpha equals the exhaustive oracle on random samples") {
    std::uint64_t state = 1;
    int solved = 0;
    for (int n : {5, 6}) {
        const GraphSpec g = graph_constants(n, 2, 0);
        for (double p : {0.3, 0.7}) {
            for (int i = 0; i < 50; ++i) {
                const auto sample =
                    sample_subgraph(g, p, mix64(state++), Backend::materialized);
                const AlphaResult res = solve_alpha(sample);
                CHECK(res.alpha == brute_alpha(sample));
                CHECK(independent_in(sample, res.witness.members));
                CHECK(BigCount(res.alpha) >= g.star_size);  // stars always survive
                ++solved;
            }
        }
    }
    CHECK(solved == 200);
}

TEST_CASE("exceeds decision consistent with exact alpha") {
    std::uint64_t state = 555;
    const GraphSpec g = graph_constants(6, 2, 0);
    const long long star = g.star_size.convert_to<long long>();
    for (int i = 0; i < 100; ++i) {
        const double p = static_cast<double>(mix64(state++) >> 11) * 0x1.0p-53;
        const auto sample =
            sample_subgraph(g, p, mix64(state++), Backend::materialized);
        CHECK(alpha_exceeds_star(sample) == (solve_alpha(sample).alpha > star));
    }
    CHECK(alpha_exceeds_star(empty_graph(6, 2)));
    CHECK_FALSE(alpha_exceeds_star(full_graph(6, 2)));
}

TEST_CASE("all maximum independent families") {
    SUBCASE("K(5,2): the five stars") {
        const auto families = max_independent_families(full_graph(5, 2));
        REQUIRE(families.size() == 5);
        std::vector<int> centers;
        for (const Family& fam : families) {
            CHECK(fam.size() == 4);
            const auto center = star_center(fam);
            REQUIRE(center.has_value());
            centers.push_back(*center);
        }
        std::sort(centers.begin(), centers.end());
        CHECK(centers == std::vector<int>{1, 2, 3, 4, 5});
    }
    SUBCASE("K(4,2): uniqueness fails at n = 2r") {
        const auto families = max_independent_families(full_graph(4, 2));
        REQUIRE(families.size() == 8);
        int stars_found = 0;
        for (const Family& fam : families) {
            CHECK(fam.size() == 3);
            if (star_center(fam)) ++stars_found;
        }
        CHECK(stars_found == 4);
    }
    SUBCASE("K(7,3): the seven stars") {
        const auto families = max_independent_families(full_graph(7, 3));
        REQUIRE(families.size() == 7);
        for (const Family& fam : families) {
            CHECK(fam.size() == 15);
            CHECK(star_center(fam).has_value());
        }
    }
}

TEST_CASE("witness counts") {
    CHECK(count_y(empty_graph(5, 2)) == 30);  // 5 * (10 - 4)
    CHECK(count_y(full_graph(5, 2)) == 0);
    CHECK(count_y(full_graph(4, 2)) == 0);  // star degree 1, edge always present
    CHECK(count_y(empty_graph(4, 2)) == 4 * 3);

    // Below n = 2r nothing can block the extension at any p.
    const GraphSpec g53 = graph_constants(5, 3, 0);
    const auto full53 = sample_subgraph(g53, 1.0, 0, Backend::materialized);
    CHECK(BigCount(count_y(full53)) == BigCount(5) * (g53.vertices - g53.star_size));
}

TEST_CASE("positive witness count forces alpha above the star size") {
    std::uint64_t state = 31;
    const GraphSpec g = graph_constants(6, 2, 0);
    int positives = 0;
    for (int i = 0; i < 200; ++i) {
        const auto sample =
            sample_subgraph(g, 0.35, mix64(state++), Backend::materialized);
        if (count_y(sample) > 0) {
            CHECK(alpha_exceeds_star(sample));
            ++positives;
        }
    }
    CHECK(positives > 0);  // the regime is chosen to produce witnesses
}

TEST_CASE("witness count mean matches the closed form") {
    const GraphSpec g = graph_constants(5, 2, 0);
    const int trials = 20000;
    double sum = 0.0, sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        const auto sample = sample_subgraph(g, 0.5, derive_trial_seed(424242, t),
                                            Backend::materialized);
        const double y = static_cast<double>(count_y(sample));
        sum += y;
        sum_sq += y * y;
    }
    const double mean = sum / trials;
    const double var = (sum_sq - trials * mean * mean) / (trials - 1);
    const double se = std::sqrt(var / trials);
    CHECK(std::abs(mean - 7.5) <= 3.0 * se);  // 5 * 6 * (1/2)^2
}

TEST_CASE("stability verdicts") {
    const StabilityVerdict stable = ekr_stability(full_graph(5, 2), true);
    CHECK(stable.alpha_eq_star);
    REQUIRE(stable.stars_only.has_value());
    CHECK(*stable.stars_only);

    const StabilityVerdict broken = ekr_stability(empty_graph(5, 2), true);
    CHECK_FALSE(broken.alpha_eq_star);
    CHECK_FALSE(broken.stars_only.has_value());

    const StabilityVerdict matching = ekr_stability(full_graph(4, 2), true);
    CHECK(matching.alpha_eq_star);
    REQUIRE(matching.stars_only.has_value());
    CHECK_FALSE(*matching.stars_only);

    const auto s_graph =
        sample_subgraph(graph_constants(6, 2, 1), 0.5, 0, Backend::materialized);
    CHECK_THROWS_AS(ekr_stability(s_graph, false), infeasible_error);
    CHECK_THROWS_AS(count_y(s_graph), infeasible_error);
}

TEST_CASE("coupled samples give monotone alpha") {
    const GraphSpec g = graph_constants(6, 2, 0);
    std::uint64_t state = 900;
    for (int i = 0; i < 30; ++i) {
        const std::uint64_t seed = mix64(state++);
        long long prev_alpha = -1;
        bool prev_eq = false;
        for (double p : {0.2, 0.5, 0.8}) {
            const auto sample = sample_subgraph(g, p, seed, Backend::materialized);
            const long long alpha = solve_alpha(sample).alpha;
            if (prev_alpha >= 0) CHECK(alpha <= prev_alpha);
            const bool eq = alpha == g.star_size.convert_to<long long>();
            if (prev_eq) CHECK(eq);
            prev_alpha = alpha;
            prev_eq = eq;
        }
    }
}

TEST_CASE("budgets surface as errors, not answers") {
    const auto sample = sample_subgraph(graph_constants(7, 2, 0), 0.55, 12345,
                                        Backend::materialized);
    SolverBudget tiny;
    tiny.max_nodes = 3;
    CHECK_THROWS_AS(solve_alpha(sample, tiny), budget_error);
    CHECK_THROWS_AS(alpha_exceeds_star(sample, tiny), budget_error);
    CHECK_THROWS_AS(max_independent_families(sample, tiny), budget_error);
    try {
        solve_alpha(sample, tiny);
    } catch (const budget_error& err) {
        CHECK(err.nodes > tiny.max_nodes);
    }
}
