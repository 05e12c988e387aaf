#include "ekr/sampler.hpp"

#include <algorithm>
#include <cmath>

namespace ekr {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    return mix64(master_seed ^ mix64(trial_index));
}

double EdgeOracle::u(VertexId a, VertexId b) const {
    if (a == b) throw std::invalid_argument("EdgeOracle::u: loop edge");
    const std::uint64_t lo = std::min(a, b);
    const std::uint64_t hi = std::max(a, b);
    const std::uint64_t bits = mix64(master_seed ^ mix64((lo << 32) | hi));
    // Top 53 bits so the quotient is an exact double strictly below 1.
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

SubgraphSample::SubgraphSample(GraphSpec spec, double p, std::uint64_t seed,
                               Backend backend, std::uint32_t materialize_cap)
    : spec_(std::move(spec)), p_(p), seed_(seed), backend_(backend) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("sample_subgraph: p must lie in [0,1]");
    if (spec_.vertices >= BigCount(1) << 31)
        throw std::invalid_argument("sample_subgraph: vertex count exceeds id space");
    vertex_count_ = spec_.vertices.convert_to<std::uint32_t>();
    oracle_.master_seed = seed;

    if (backend_ == Backend::materialized) {
        if (vertex_count_ > materialize_cap)
            throw std::length_error("sample_subgraph: materialized cap exceeded");
        rows_.assign(vertex_count_, BitRow(vertex_count_));
        for (VertexId a = 0; a < vertex_count_; ++a) {
            const RSet set = colex_unrank(spec_.n, spec_.r, a);
            for (VertexId b : neighbor_ids(spec_.n, spec_.r, spec_.s, set)) {
                if (b <= a) continue;
                if (oracle_.u(a, b) < p_) {
                    rows_[a].set(b);
                    rows_[b].set(a);
                }
            }
        }
    }
}

bool SubgraphSample::edge_retained(VertexId a, VertexId b) const {
    if (backend_ == Backend::materialized) return rows_[a].test(b);
    return oracle_.u(a, b) < p_;
}

bool SubgraphSample::has_edge(VertexId a, VertexId b) const {
    if (a == b) return false;
    if (backend_ == Backend::materialized) return rows_[a].test(b);
    const RSet sa = colex_unrank(spec_.n, spec_.r, a);
    const RSet sb = colex_unrank(spec_.n, spec_.r, b);
    return adjacent(sa, sb, spec_.s) && oracle_.u(a, b) < p_;
}

const BitRow& SubgraphSample::row(VertexId a) const {
    if (backend_ != Backend::materialized)
        throw std::logic_error("SubgraphSample::row: lazy backend has no rows");
    return rows_[a];
}

long long SubgraphSample::retained_edges() const {
    long long total = 0;
    if (backend_ == Backend::materialized) {
        for (VertexId a = 0; a < vertex_count_; ++a)
            total += static_cast<long long>(rows_[a].count());
        return total / 2;
    }
    for (VertexId a = 0; a < vertex_count_; ++a) {
        const RSet set = colex_unrank(spec_.n, spec_.r, a);
        for (VertexId b : neighbor_ids(spec_.n, spec_.r, spec_.s, set))
            if (b > a && oracle_.u(a, b) < p_) ++total;
    }
    return total;
}

SubgraphSample sample_subgraph(const GraphSpec& spec, double p, std::uint64_t seed,
                               Backend backend, std::uint32_t materialize_cap) {
    return SubgraphSample(spec, p, seed, backend, materialize_cap);
}

Backend default_backend(const GraphSpec& spec, std::uint32_t materialize_cap) {
    return spec.vertices <= BigCount(materialize_cap) ? Backend::materialized
                                                      : Backend::lazy;
}

}  // namespace ekr
