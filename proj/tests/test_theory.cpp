#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ekr/solver.hpp"
#include "ekr/theory.hpp"

#include <algorithm>
#include <cmath>

using namespace ekr;

TEST_CASE("critical probability examples") {
    // Independent route: direct double evaluation over the exact binomial.
    auto direct = [](int n, int r) {
        return ((r + 1) * std::log(static_cast<double>(n)) -
                r * std::log(static_cast<double>(r))) /
               binom(n - 1, r - 1).convert_to<double>();
    };
    CHECK(p_critical(100, 3) == doctest::Approx(direct(100, 3)).epsilon(1e-12));
    CHECK(p_critical(100, 2) == doctest::Approx(direct(100, 2)).epsilon(1e-12));
    CHECK(p_critical(14, 2) == doctest::Approx(direct(14, 2)).epsilon(1e-12));

    CHECK(p_critical(100, 3) == doctest::Approx(0.0031178816487215087).epsilon(1e-12));
    CHECK(p_critical(100, 2) == doctest::Approx(0.12554763835196348).epsilon(1e-12));
    CHECK(p_critical(14, 2) == doctest::Approx(0.5023752021327603).epsilon(1e-12));

    CHECK_THROWS_AS(p_critical(10, 1), std::invalid_argument);
    CHECK_THROWS_AS(p_critical(2, 2), std::invalid_argument);
}

TEST_CASE("critical probability decreases in n") {
    for (int r : {2, 3, 4}) {
        double prev = p_critical(3 * r, r);
        CHECK(prev > 0.0);
        for (int n = 3 * r + 1; n <= 400; ++n) {
            const double cur = p_critical(n, r);
            CHECK(cur < prev);
            prev = cur;
        }
        // Sparse continuation of the grid up to 1e4.
        for (int n = 500; n <= 10000; n += 250) {
            const double cur = p_critical(n, r);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("expected witness count") {
    CHECK(expected_y(5, 2, 0.5) == doctest::Approx(7.5).epsilon(1e-12));
    CHECK(expected_y(10, 2, 0.2) == doctest::Approx(75.497472).epsilon(1e-12));
    CHECK(expected_y(10, 2, 0.0) == doctest::Approx(360.0).epsilon(1e-15));
    CHECK(expected_y(5, 2, 1.0) == 0.0);
    CHECK(expected_y_ln(5, 2, 0.5) ==
          doctest::Approx(std::log(7.5)).epsilon(1e-12));
    CHECK_THROWS_AS(expected_y(10, 2, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(expected_y(10, 2, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(expected_y(5, 3, 0.5), std::invalid_argument);  // n < 2r
}

TEST_CASE("second factorial moment approximation") {
    CHECK(y_second_factorial(5, 2, 0.5) == doctest::Approx(54.375).epsilon(1e-12));
    // p = 0: (n^2-n)(R-N)^2 + n(R-N)(R-N-1) with all retention factors 1.
    CHECK(y_second_factorial(5, 2, 0.0) ==
          doctest::Approx(20.0 * 36.0 + 5.0 * 6.0 * 5.0).epsilon(1e-15));
    CHECK(y_second_factorial(10, 2, 0.0) ==
          doctest::Approx(90.0 * 36.0 * 36.0 + 10.0 * 36.0 * 35.0).epsilon(1e-13));
}

TEST_CASE("near-star moment bound") {
    CHECK(near_star_bound(10, 2, 0.5, 1) == doctest::Approx(63.28125).epsilon(1e-12));
    // p = 0 leaves only the counting factor n * C(N,i) * C(R,i).
    CHECK(near_star_bound(10, 2, 0.0, 2) ==
          doctest::Approx(10.0 * 36.0 * 990.0).epsilon(1e-12));
    CHECK_THROWS_AS(near_star_bound(10, 2, 0.5, 0), std::domain_error);
    CHECK_THROWS_AS(near_star_bound(10, 2, 0.5, 7), std::domain_error);  // i >= M
    CHECK_THROWS_AS(near_star_bound(10, 2, 0.5, 12), std::domain_error);
}

TEST_CASE("transfer bound") {
    CHECK(near_star_transfer_bound(10, 2, 0.2, 2, 75.497472) ==
          doctest::Approx(58.98240).epsilon(1e-10));
    CHECK(near_star_transfer_bound(10, 2, 0.0, 1, 360.0) ==
          doctest::Approx(360.0).epsilon(1e-15));
    CHECK_THROWS_AS(near_star_transfer_bound(10, 2, 1.0, 1, 0.0), std::domain_error);
    CHECK_THROWS_AS(near_star_transfer_bound(10, 2, 0.5, 0, 1.0), std::domain_error);

    // Nonincreasing in i * (1-p)^i wherever that product grows.
    const double e_y = expected_y(10, 2, 0.2);
    double prev_scale = 0.0;
    for (long long i = 1; i <= 4; ++i) {
        const double scale = i * std::pow(0.8, static_cast<double>(i));
        if (scale > prev_scale)
            CHECK(near_star_transfer_bound(10, 2, 0.2, i, e_y) <=
                  near_star_transfer_bound(10, 2, 0.2, 1, e_y) + 1e-12);
        prev_scale = scale;
    }
}

namespace {

// Exhaustive expectation of the deficiency-1 count: every family is a
// star minus one member plus one outside set, weighted by the
// probability that all its star-crossing edges are absent.
double exact_near_star_expectation(int n, int r, double p) {
    const GraphSpec g = graph_constants(n, r, 0);
    const std::uint32_t total = g.vertices.convert_to<std::uint32_t>();
    double expectation = 0.0;
    for (int x = 1; x <= n; ++x) {
        const auto star_ids = star_members(n, r, x);
        for (VertexId a = 0; a < total; ++a) {
            const RSet set = colex_unrank(n, r, a);
            if (std::binary_search(set.elements.begin(), set.elements.end(), x))
                continue;
            // Disjointness edges from the added set into the star.
            int crossing = 0;
            std::vector<VertexId> crossing_ids;
            for (VertexId b : star_ids) {
                if (adjacent(set, colex_unrank(n, r, b), 0)) {
                    ++crossing;
                    crossing_ids.push_back(b);
                }
            }
            for (VertexId removed : star_ids) {
                const bool removed_crossing =
                    std::find(crossing_ids.begin(), crossing_ids.end(), removed) !=
                    crossing_ids.end();
                const int exponent = crossing - (removed_crossing ? 1 : 0);
                expectation += std::pow(1.0 - p, exponent);
            }
        }
    }
    return expectation;
}

}  // namespace

TEST_CASE("enumeration oracle sits below the moment bound") {
    CHECK(exact_near_star_expectation(10, 2, 0.5) ==
          doctest::Approx(45.0).epsilon(1e-12));
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{8, 2}, {10, 2}, {9, 3}})
        for (double p : {0.3, 0.5})
            CHECK(exact_near_star_expectation(n, r, p) <= near_star_bound(n, r, p, 1));
}

TEST_CASE("log-space evaluation far from the threshold") {
    const int n = 10000, r = 2;
    const double pc = p_critical(n, r);
    CHECK(expected_y(n, r, 1.5 * pc) < 1e-2);
    CHECK(expected_y(n, r, 0.5 * pc) > 1e2);
    // The ln twin stays finite even when the linear value underflows.
    CHECK(std::isfinite(expected_y_ln(n, r, 0.9)));
    CHECK(expected_y(n, r, 0.9) == 0.0);  // underflow is the guarded outcome
}

TEST_CASE("witness count Monte Carlo vs closed form") {
    const GraphSpec g = graph_constants(5, 2, 0);
    for (double p : {0.2, 0.5}) {
        const int trials = 20000;
        double sum = 0.0, sum_sq = 0.0;
        for (int t = 0; t < trials; ++t) {
            const auto sample = sample_subgraph(g, p, derive_trial_seed(8675309, t),
                                                Backend::materialized);
            const double y = static_cast<double>(count_y(sample));
            sum += y;
            sum_sq += y * y;
        }
        const double mean = sum / trials;
        const double var = (sum_sq - trials * mean * mean) / (trials - 1);
        const double se = std::sqrt(var / trials);
        CHECK(std::abs(mean - expected_y(5, 2, p)) <= 3.0 * se);
    }
}

TEST_CASE("moment report bundles the pieces") {
    const MomentReport report = moments(10, 2, 0.5, {1, 2, 6, 7, 99});
    CHECK(report.e_y == doctest::Approx(expected_y(10, 2, 0.5)).epsilon(1e-15));
    CHECK(report.y2_approx ==
          doctest::Approx(y_second_factorial(10, 2, 0.5)).epsilon(1e-15));
    CHECK(report.near_star_bounds.count(1) == 1);
    CHECK(report.near_star_bounds.count(6) == 1);
    CHECK(report.near_star_bounds.count(7) == 0);   // i >= star degree
    CHECK(report.near_star_bounds.count(99) == 0);
    CHECK(report.transfer_bounds.count(99) == 1);   // transfer form allows any i >= 1
}
