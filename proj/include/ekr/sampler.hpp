#pragma once

#include "ekr/bitset.hpp"
#include "ekr/combinatorics.hpp"
#include "ekr/kneser.hpp"

#include <cstdint>
#include <vector>

namespace ekr {

// 64-bit avalanche mixer (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t z);

// Per-trial seeds derived so trials are decorrelated but reproducible.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

// Keyed uniform value on an unordered vertex pair. Symmetric in (a,b),
// in [0,1), identical across platforms and runs. Replaces stored
// randomness: retaining an edge iff u < p nests the edge sets across
// the whole p range for one seed.
struct EdgeOracle {
    std::uint64_t master_seed = 0;

    double u(VertexId a, VertexId b) const;
};

enum class Backend { materialized, lazy };

// A realized random subgraph: each disjointness edge of the base graph
// kept independently iff its oracle value is below p.
class SubgraphSample {
public:
    SubgraphSample(GraphSpec spec, double p, std::uint64_t seed, Backend backend,
                   std::uint32_t materialize_cap);

    const GraphSpec& spec() const { return spec_; }
    double p() const { return p_; }
    std::uint64_t seed() const { return seed_; }
    Backend backend() const { return backend_; }
    std::uint32_t vertex_count() const { return vertex_count_; }

    // Whether the base-graph edge {a,b} survived. Callers must pass an
    // actual edge; arbitrary pairs go through has_edge.
    bool edge_retained(VertexId a, VertexId b) const;

    // Adjacency in the sample (false for non-edges of the base graph).
    bool has_edge(VertexId a, VertexId b) const;

    // Row of the materialized adjacency matrix.
    const BitRow& row(VertexId a) const;

    long long retained_edges() const;

private:
    GraphSpec spec_;
    double p_ = 0.0;
    std::uint64_t seed_ = 0;
    Backend backend_ = Backend::lazy;
    std::uint32_t vertex_count_ = 0;
    EdgeOracle oracle_;
    std::vector<BitRow> rows_;  // empty when lazy
};

// Throws std::invalid_argument for p outside [0,1] or vertex counts
// beyond the 31-bit id space, std::length_error when a materialized
// backend is requested above the cap (default 20,000 vertices).
SubgraphSample sample_subgraph(const GraphSpec& spec, double p, std::uint64_t seed,
                               Backend backend, std::uint32_t materialize_cap = 20000);

// Materialized when the vertex count fits the cap, lazy otherwise.
Backend default_backend(const GraphSpec& spec, std::uint32_t materialize_cap = 20000);

}  // namespace ekr
