#include "ekr/experiment.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace ekr {

namespace {

struct Rng {
    std::uint64_t counter;

    explicit Rng(std::uint64_t seed) : counter(seed) {}

    std::uint64_t next() { return mix64(counter++); }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    long long below(long long bound) {
        return static_cast<long long>(next() % static_cast<std::uint64_t>(bound));
    }
};

std::vector<VertexId> random_members(Rng& rng, std::uint32_t vertex_count,
                                     long long size) {
    std::set<VertexId> chosen;
    while (static_cast<long long>(chosen.size()) < size)
        chosen.insert(static_cast<VertexId>(rng.below(vertex_count)));
    return {chosen.begin(), chosen.end()};
}

}  // namespace

VerifyReport verify_suite(int max_n, int max_r, std::uint64_t seed) {
    if (max_n < 4 || max_r < 2)
        throw std::invalid_argument("verify_suite: need max_n >= 4, max_r >= 2");
    VerifyReport report;
    Rng rng(seed);
    auto add = [&](std::string name, bool pass, std::string detail) {
        report.items.push_back({std::move(name), pass, std::move(detail)});
    };

    {  // Exact binomial identities and the Pascal recurrence.
        bool ok = true;
        long long checks = 0;
        for (int n = 0; n <= 40 && ok; ++n) {
            for (int k = -2; k <= n + 2; ++k) {
                const BigCount direct = binom(n, k);
                if (k < 0 || k > n) {
                    ok = ok && direct == 0;
                } else {
                    ok = ok && direct == binom(n, n - k);
                    if (k == 0) ok = ok && direct == 1;
                    if (n > 0)
                        ok = ok && direct == binom(n - 1, k - 1) + binom(n - 1, k);
                }
                ++checks;
            }
        }
        add("binomial-identities", ok, std::to_string(checks) + " checks, n <= 40");
    }

    {  // Factorial bracketed by the Stirling pair, in log space.
        bool ok = true;
        std::vector<long long> grid;
        for (long long n = 1; n <= 50; ++n) grid.push_back(n);
        for (long long n : {100LL, 500LL, 1000LL, 5000LL, 10000LL}) grid.push_back(n);
        for (long long n : grid) {
            const double ln_fact = ln_factorial(n);
            const double nn = static_cast<double>(n);
            const double lower = 0.5 * std::log(2.0 * M_PI * nn) + nn * (std::log(nn) - 1.0);
            const double upper = lower + 1.0 / (12.0 * nn);
            ok = ok && lower <= ln_fact && ln_fact <= upper;
            if (n <= 2000) {
                const double via_big = ln_big(factorial(n));
                ok = ok && std::abs(via_big - ln_fact) <=
                               1e-12 * std::max(1.0, std::abs(ln_fact));
            }
        }
        add("stirling-bounds", ok, std::to_string(grid.size()) + " sizes up to 1e4");
    }

    {  // (n/k)^k <= C(n,k) <= n^k/k! <= (en/k)^k, exact where rational.
        using boost::multiprecision::pow;
        bool ok = true;
        long long checks = 0;
        auto check_pair = [&](long long n, long long k) {
            const BigCount c = binom(n, k);
            const BigCount n_pow_k = pow(BigCount(n), static_cast<unsigned>(k));
            const BigCount k_pow_k = pow(BigCount(k), static_cast<unsigned>(k));
            ok = ok && n_pow_k <= c * k_pow_k;       // (n/k)^k <= C(n,k)
            ok = ok && c * factorial(k) <= n_pow_k;  // C(n,k) <= n^k/k!
            // n^k/k! <= (en/k)^k reduces to k ln k - ln k! <= k.
            ok = ok && static_cast<double>(k) * std::log(static_cast<double>(k)) -
                               ln_factorial(k) <=
                           static_cast<double>(k);
            ++checks;
        };
        for (long long n : {2LL, 3LL, 5LL, 10LL, 64LL, 300LL, 1000LL, 10000LL}) {
            std::vector<long long> ks = {2, n / 3, n / 2, n - 1, n};
            for (long long k : ks)
                if (k >= 2 && k <= n) check_pair(n, k);
        }
        for (int i = 0; i < 40; ++i) {
            const long long n = 2 + rng.below(9999);
            const long long k = 2 + rng.below(std::max(1LL, n - 1));
            if (k <= n) check_pair(n, k);
        }
        add("binomial-crude-bounds", ok, std::to_string(checks) + " pairs, n <= 1e4");
    }

    {  // exp(x - x^2) <= 1 + x <= exp(x) on |x| <= 1/2, equality only at 0.
        bool ok = true;
        for (int k = -500; k <= 500; ++k) {
            const double x = k / 1000.0;
            const double lower = std::exp(x - x * x);
            const double upper = std::exp(x);
            const double mid = 1.0 + x;
            if (k == 0)
                ok = ok && lower == mid && mid == upper;
            else
                ok = ok && lower < mid && mid < upper;
        }
        add("exp-inequality-grid", ok, "1001 grid points on [-1/2,1/2]");
    }

    {  // Summation route for star_size - star_degree, plus its linear bound.
        bool ok = true;
        long long checks = 0;
        for (int n = 4; n <= 200; ++n) {
            for (int r = 2; r <= std::min(20, n / 2); ++r) {
                const GraphSpec g = graph_constants(n, r, 0);
                const BigCount gap = g.star_size - g.star_degree;
                ok = ok && star_gap(n, r) == gap;
                ok = ok && gap * (n - 1) <= BigCount(r) * (r - 1) * g.star_size;
                ++checks;
            }
        }
        add("star-gap-identity", ok, std::to_string(checks) + " pairs, n <= 200");
    }

    {  // Rank/unrank are inverse bijections respecting colex order.
        bool ok = true;
        long long checks = 0;
        const int n_cap = std::min(max_n, 16);
        for (int n = 1; n <= n_cap; ++n) {
            for (int r = 1; r <= n; ++r) {
                const std::uint32_t total =
                    binom(n, r).convert_to<std::uint32_t>();
                RSet prev;
                for (VertexId k = 0; k < total; ++k) {
                    const RSet set = colex_unrank(n, r, k);
                    ok = ok && valid_rset(n, r, set) && colex_rank(n, r, set) == k;
                    if (k > 0) {
                        // Colex comparison via reversed element sequences.
                        ok = ok && std::lexicographical_compare(
                                       prev.elements.rbegin(), prev.elements.rend(),
                                       set.elements.rbegin(), set.elements.rend());
                    }
                    prev = set;
                    ++checks;
                }
            }
        }
        add("rank-unrank-bijection", ok,
            std::to_string(checks) + " ranks, n <= " + std::to_string(n_cap));
    }

    {  // Neighborhood sizes match the closed form; adjacency is symmetric.
        bool ok = true;
        long long checks = 0;
        for (int n = 2; n <= std::min(max_n, 9); ++n) {
            for (int r = 1; r <= std::min({max_r + 1, 4, n}); ++r) {
                for (int s = 0; s < r; ++s) {
                    const GraphSpec g = graph_constants(n, r, s);
                    const std::uint32_t total = g.vertices.convert_to<std::uint32_t>();
                    const VertexId a = static_cast<VertexId>(rng.below(total));
                    const RSet sa = colex_unrank(n, r, a);
                    const auto nb = neighbor_ids(n, r, s, sa);
                    ok = ok && BigCount(nb.size()) == g.degree;
                    ok = ok && std::set<VertexId>(nb.begin(), nb.end()).size() == nb.size();
                    for (VertexId b : nb) {
                        const RSet sb = colex_unrank(n, r, b);
                        ok = ok && adjacent(sa, sb, s) && adjacent(sb, sa, s);
                        ok = ok && (s == r || b != a);
                    }
                    ++checks;
                }
            }
        }
        add("adjacency-degree", ok, std::to_string(checks) + " vertices probed");
    }

    {  // Stars induce no disjoint pair.
        bool ok = true;
        long long stars_checked = 0;
        for (int n = 2; n <= std::min(max_n, 12); ++n) {
            for (int r = 1; r <= std::min({max_r + 1, 4, n}); ++r) {
                for (int x = 1; x <= n; ++x) {
                    const Family fam = star(n, r, x);
                    ok = ok && fam.induced_edges == 0;
                    ok = ok && BigCount(fam.size()) == binom(n - 1, r - 1);
                    // x must be a valid center; for n = r all stars
                    // coincide, so the reported center may differ.
                    ok = ok && star_center(fam).has_value();
                    ok = ok && fam.degree_profile[static_cast<std::size_t>(x)] ==
                                   fam.size();
                    ++stars_checked;
                }
            }
        }
        add("star-independence", ok, std::to_string(stars_checked) + " stars");
    }

    {  // Pair-count lower bound on induced edges; tight for r = 2 where
       // two distinct sets never share more than one element.
        bool ok = true;
        long long equalities = 0, r2_families = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const int r = 2 + static_cast<int>(rng.below(std::min(max_r, 3) - 1));
            const int n =
                2 * r + static_cast<int>(rng.below(std::min(max_n, 10) - 2 * r + 1));
            const GraphSpec g = graph_constants(n, r, 0);
            const std::uint32_t total = g.vertices.convert_to<std::uint32_t>();
            const long long size = rng.below(std::min<long long>(total, 12) + 1);
            const Family fam = family_stats(n, r, random_members(rng, total, size));
            ok = ok && fam.induced_edges >= fam.edge_lower_bound;
            if (r == 2) {
                ++r2_families;
                ok = ok && fam.induced_edges == fam.edge_lower_bound;
                if (fam.induced_edges == fam.edge_lower_bound) ++equalities;
            }
        }
        add("edge-bound-random-families", ok,
            "1000 families; bound tight on all " + std::to_string(r2_families) +
                " r=2 families");
    }

    {  // Full graphs: the independence number is exactly the star size.
        bool ok = true;
        std::ostringstream detail;
        long long solved = 0;
        for (int r = 2; r <= max_r; ++r) {
            for (int n = 2 * r; n <= max_n; ++n) {
                const GraphSpec g = graph_constants(n, r, 0);
                if (g.vertices > 3000) continue;
                const SubgraphSample full =
                    sample_subgraph(g, 1.0, 0, default_backend(g));
                const AlphaResult res = solve_alpha(full);
                ok = ok && BigCount(res.alpha) == g.star_size;
                ++solved;
            }
        }
        detail << solved << " full graphs, r <= " << max_r << ", n <= " << max_n;
        add("ekr-equality", ok, detail.str());
    }

    {  // Maximum family classification: stars are the only maxima above
       // n = 2r; at n = 2r one picks either endpoint of each perfect
       // matching edge, so 2^(R/2) maxima of which n are stars.
        bool ok = true;
        std::ostringstream detail;
        for (int n = 5; n <= std::min(max_n, 7); ++n) {
            const GraphSpec g = graph_constants(n, 2, 0);
            const auto families =
                max_independent_families(sample_subgraph(g, 1.0, 0, Backend::materialized));
            long long stars_found = 0;
            for (const Family& fam : families)
                if (star_center(fam)) ++stars_found;
            ok = ok && static_cast<int>(families.size()) == n && stars_found == n;
        }
        {
            const GraphSpec g = graph_constants(4, 2, 0);
            const auto families =
                max_independent_families(sample_subgraph(g, 1.0, 0, Backend::materialized));
            long long stars_found = 0;
            for (const Family& fam : families)
                if (star_center(fam)) ++stars_found;
            const bool expected = families.size() == 8 && stars_found == 4;
            ok = ok && expected;
            detail << "uniqueness fails at n = 2r (" << families.size() << " maxima, "
                   << stars_found << " stars), as expected";
        }
        if (max_r >= 3 && max_n >= 6) {
            const GraphSpec g = graph_constants(6, 3, 0);
            const auto families =
                max_independent_families(sample_subgraph(g, 1.0, 0, Backend::materialized));
            long long stars_found = 0;
            for (const Family& fam : families)
                if (star_center(fam)) ++stars_found;
            ok = ok && families.size() == 1024 && stars_found == 6;  // 2^(20/2)
        }
        add("uniqueness-classification", ok, detail.str());
    }

    {  // Branch-and-bound agrees with the exhaustive oracle.
        bool ok = true;
        long long solved = 0;
        for (int n : {5, 6}) {
            const GraphSpec g = graph_constants(n, 2, 0);
            for (double p : {0.3, 0.7}) {
                for (int i = 0; i < 50; ++i) {
                    const SubgraphSample sample =
                        sample_subgraph(g, p, rng.next(), Backend::materialized);
                    const AlphaResult res = solve_alpha(sample);
                    ok = ok && res.alpha == brute_alpha(sample);
                    ok = ok && independent_in(sample, res.witness.members);
                    ++solved;
                }
            }
        }
        add("solver-oracle-agreement", ok, std::to_string(solved) + " random samples");
    }

    {  // Materialized and lazy backends answer identically.
        bool ok = true;
        const GraphSpec g = graph_constants(6, 2, 0);
        const std::uint32_t total = g.vertices.convert_to<std::uint32_t>();
        for (int i = 0; i < 100; ++i) {
            const std::uint64_t s = rng.next();
            const double p = rng.uniform();
            const SubgraphSample mat = sample_subgraph(g, p, s, Backend::materialized);
            const SubgraphSample lazy = sample_subgraph(g, p, s, Backend::lazy);
            for (VertexId a = 0; a < total; ++a)
                for (VertexId b = a + 1; b < total; ++b)
                    ok = ok && mat.has_edge(a, b) == lazy.has_edge(a, b);
        }
        add("backend-equivalence", ok, "100 seed/probability configurations on K(6,2)");
    }

    {  // One seed, two retention levels: edge sets nest, alpha decreases.
        bool ok = true;
        const GraphSpec g = graph_constants(6, 2, 0);
        const std::uint32_t total = g.vertices.convert_to<std::uint32_t>();
        for (int i = 0; i < 50; ++i) {
            const std::uint64_t s = rng.next();
            double p1 = rng.uniform(), p2 = rng.uniform();
            if (p1 > p2) std::swap(p1, p2);
            const SubgraphSample sparse = sample_subgraph(g, p1, s, Backend::materialized);
            const SubgraphSample dense = sample_subgraph(g, p2, s, Backend::materialized);
            for (VertexId a = 0; a < total; ++a)
                for (VertexId b = a + 1; b < total; ++b)
                    if (sparse.has_edge(a, b)) ok = ok && dense.has_edge(a, b);
            ok = ok && brute_alpha(sparse) >= brute_alpha(dense);
        }
        add("coupling-monotonicity", ok, "50 coupled pairs on K(6,2)");
    }

    {  // Witness counts at the endpoints and against the solver.
        bool ok = true;
        for (int n : {5, 6}) {
            const GraphSpec g = graph_constants(n, 2, 0);
            const BigCount outside = g.vertices - g.star_size;
            const SubgraphSample empty = sample_subgraph(g, 0.0, 7, Backend::materialized);
            ok = ok && BigCount(count_y(empty)) == BigCount(n) * outside;
            const SubgraphSample full = sample_subgraph(g, 1.0, 7, Backend::materialized);
            if (n > 4) ok = ok && count_y(full) == 0;
            for (int i = 0; i < 25; ++i) {
                const SubgraphSample sample =
                    sample_subgraph(g, 0.4, rng.next(), Backend::materialized);
                if (count_y(sample) > 0) ok = ok && alpha_exceeds_star(sample);
            }
        }
        add("extension-count-identities", ok, "endpoint and consistency checks");
    }

    return report;
}

}  // namespace ekr
