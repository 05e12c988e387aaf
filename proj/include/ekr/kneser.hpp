#pragma once

#include "ekr/combinatorics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ekr {

// Dense vertex index: the colexicographic rank of an r-set. Ranks are
// kept below 2^31 so a pair packs into one 64-bit edge key.
using VertexId = std::uint32_t;

// An r-element subset of {1,...,n}, sorted ascending.
struct RSet {
    std::vector<int> elements;

    bool operator==(const RSet& other) const = default;
};

// "{a,b,c}" with 1-based sorted elements.
std::string to_string(const RSet& set);

bool valid_rset(int n, int r, const RSet& set);

// The k-th r-set in colexicographic order. Throws std::out_of_range
// when k >= C(n,r).
RSet colex_unrank(int n, int r, VertexId k);

// Colex rank = sum_i C(a_i - 1, i) over sorted elements a_1 < ... < a_r.
// Throws std::invalid_argument on a malformed set.
VertexId colex_rank(int n, int r, const RSet& set);

// True iff |A ∩ B| = s.
bool adjacent(const RSet& a, const RSet& b, int s);

// All B with |A ∩ B| = s, no duplicates; C(r,s) * C(n-r,r-s) of them.
std::vector<RSet> neighbors(int n, int r, int s, const RSet& a);

// Same neighborhood as vertex ids.
std::vector<VertexId> neighbor_ids(int n, int r, int s, const RSet& a);

// Ranks of all r-sets containing the ground element x, sorted.
std::vector<VertexId> star_members(int n, int r, int x);

// A vertex set with its cached statistics. Families are immutable
// snapshots; mutate the member list and call family_stats again.
struct Family {
    int n = 0;
    int r = 0;
    std::vector<VertexId> members;          // sorted, unique
    std::vector<long long> degree_profile;  // index x in 1..n; [0] unused
    long long max_degree = 0;
    // Edges of the full disjointness graph (s = 0) induced by the family,
    // and the pair-count lower bound C(size,2) - sum_x C(profile[x],2).
    long long induced_edges = 0;
    long long edge_lower_bound = 0;

    long long size() const { return static_cast<long long>(members.size()); }
};

// Fills all cached statistics. The degree sum identity and the edge
// lower bound are checked on construction.
Family family_stats(int n, int r, std::vector<VertexId> members);

// The full star centred at x, as a Family.
Family star(int n, int r, int x);

// x iff the family is exactly the full star centred at x, else nullopt.
std::optional<int> star_center(const Family& family);

}  // namespace ekr
