#pragma once

#include "ekr/sampler.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ekr {

struct SolverBudget {
    std::uint64_t max_nodes = 200'000'000;  // branch operations
    double max_seconds = 0.0;               // 0 disables the wall-clock check
};

// Budget exhaustion is an error, never a silent wrong answer.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, std::uint64_t nodes_spent)
        : std::runtime_error(what), nodes(nodes_spent) {}

    std::uint64_t nodes = 0;
};

struct AlphaResult {
    long long alpha = 0;
    Family witness;          // an independent set of size alpha
    bool exhausted = false;  // search ran to optimality
    std::uint64_t nodes = 0;
};

// Exact independence number via branch and bound on the complement
// (clique search with a greedy-coloring upper bound). For disjointness
// adjacency the incumbent starts at a full star, which is independent
// in every sample.
AlphaResult solve_alpha(const SubgraphSample& sample, const SolverBudget& budget = {});

// Decides whether some independent set beats the star size: returns
// true as soon as one of size star_size + 1 turns up, false once the
// search proves none exists.
bool alpha_exceeds_star(const SubgraphSample& sample, const SolverBudget& budget = {},
                        std::uint64_t* nodes_out = nullptr);

// Exhaustive 2^R scan; throws std::length_error beyond 24 vertices.
long long brute_alpha(const SubgraphSample& sample);

// Every maximum independent set of the sample, deduplicated, members
// sorted, families ordered lexicographically.
std::vector<Family> max_independent_families(const SubgraphSample& sample,
                                             const SolverBudget& budget = {});

// Number of pairs (x, A) with A outside the star of x such that the
// star plus A is independent in the sample. Positive values certify
// that the independence number exceeds the star size.
long long count_y(const SubgraphSample& sample);

// True iff the vertex set induces no retained edge.
bool independent_in(const SubgraphSample& sample, const std::vector<VertexId>& members);

struct StabilityVerdict {
    bool alpha_eq_star = false;
    std::optional<bool> stars_only;  // set only when alpha_eq_star and classification ran
    std::uint64_t nodes = 0;
};

StabilityVerdict ekr_stability(const SubgraphSample& sample, bool classify,
                               const SolverBudget& budget = {});

}  // namespace ekr
