#include "ekr/kneser.hpp"

#include <algorithm>
#include <sstream>

namespace ekr {

namespace {

// C(m,j) in native words. Safe for every (m,j) reachable from a valid
// VertexId domain (total count < 2^31 keeps the partial products small).
std::uint64_t binom_u64(int m, int j) {
    if (j < 0 || j > m) return 0;
    if (j > m - j) j = m - j;
    std::uint64_t result = 1;
    for (int i = 0; i < j; ++i) {
        result = result * static_cast<std::uint64_t>(m - i) /
                 static_cast<std::uint64_t>(i + 1);
    }
    return result;
}

// Enumerates all j-subsets of pool in lexicographic index order.
template <typename Fn>
void for_each_subset(const std::vector<int>& pool, int j, Fn&& fn) {
    const int m = static_cast<int>(pool.size());
    if (j < 0 || j > m) return;
    std::vector<int> idx(j);
    for (int i = 0; i < j; ++i) idx[i] = i;
    std::vector<int> chosen(j);
    while (true) {
        for (int i = 0; i < j; ++i) chosen[i] = pool[idx[i]];
        fn(chosen);
        int i = j - 1;
        while (i >= 0 && idx[i] == m - j + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
    }
}

}  // namespace

std::string to_string(const RSet& set) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < set.elements.size(); ++i) {
        if (i) out << ',';
        out << set.elements[i];
    }
    out << '}';
    return out.str();
}

bool valid_rset(int n, int r, const RSet& set) {
    if (static_cast<int>(set.elements.size()) != r) return false;
    for (int i = 0; i < r; ++i) {
        const int e = set.elements[i];
        if (e < 1 || e > n) return false;
        if (i > 0 && e <= set.elements[i - 1]) return false;
    }
    return true;
}

RSet colex_unrank(int n, int r, VertexId k) {
    if (BigCount(k) >= binom(n, r))
        throw std::out_of_range("colex_unrank: rank out of range");
    std::vector<int> elems(static_cast<std::size_t>(r));
    std::uint64_t remaining = k;
    int upper = n;
    for (int i = r; i >= 1; --i) {
        // Largest c in [i, upper] with C(c-1, i) <= remaining.
        int c = upper;
        std::uint64_t count = binom_u64(c - 1, i);
        while (c > i && count > remaining) {
            count = count * static_cast<std::uint64_t>(c - 1 - i) /
                    static_cast<std::uint64_t>(c - 1);
            --c;
        }
        elems[static_cast<std::size_t>(i - 1)] = c;
        remaining -= count;
        upper = c - 1;
    }
    return RSet{std::move(elems)};
}

VertexId colex_rank(int n, int r, const RSet& set) {
    if (!valid_rset(n, r, set))
        throw std::invalid_argument("colex_rank: malformed r-set " + to_string(set));
    std::uint64_t rank = 0;
    for (int i = 1; i <= r; ++i)
        rank += binom_u64(set.elements[static_cast<std::size_t>(i - 1)] - 1, i);
    return static_cast<VertexId>(rank);
}

bool adjacent(const RSet& a, const RSet& b, int s) {
    int common = 0;
    std::size_t i = 0, j = 0;
    while (i < a.elements.size() && j < b.elements.size()) {
        if (a.elements[i] == b.elements[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a.elements[i] < b.elements[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return common == s;
}

std::vector<RSet> neighbors(int n, int r, int s, const RSet& a) {
    if (!valid_rset(n, r, a))
        throw std::invalid_argument("neighbors: malformed r-set");
    std::vector<int> outside;
    outside.reserve(static_cast<std::size_t>(n - r));
    for (int e = 1, i = 0; e <= n; ++e) {
        if (i < r && a.elements[static_cast<std::size_t>(i)] == e) {
            ++i;
            continue;
        }
        outside.push_back(e);
    }
    std::vector<RSet> result;
    for_each_subset(a.elements, s, [&](const std::vector<int>& kept) {
        for_each_subset(outside, r - s, [&](const std::vector<int>& fresh) {
            RSet b;
            b.elements.reserve(static_cast<std::size_t>(r));
            std::merge(kept.begin(), kept.end(), fresh.begin(), fresh.end(),
                       std::back_inserter(b.elements));
            result.push_back(std::move(b));
        });
    });
    return result;
}

std::vector<VertexId> neighbor_ids(int n, int r, int s, const RSet& a) {
    std::vector<VertexId> ids;
    for (const RSet& b : neighbors(n, r, s, a))
        ids.push_back(colex_rank(n, r, b));
    return ids;
}

std::vector<VertexId> star_members(int n, int r, int x) {
    if (x < 1 || x > n)
        throw std::invalid_argument("star_members: element out of range");
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n - 1));
    for (int e = 1; e <= n; ++e)
        if (e != x) rest.push_back(e);
    std::vector<VertexId> ids;
    for_each_subset(rest, r - 1, [&](const std::vector<int>& part) {
        RSet set;
        set.elements = part;
        set.elements.insert(
            std::lower_bound(set.elements.begin(), set.elements.end(), x), x);
        ids.push_back(colex_rank(n, r, set));
    });
    std::sort(ids.begin(), ids.end());
    return ids;
}

static long long pairs(long long k) { return k * (k - 1) / 2; }

Family family_stats(int n, int r, std::vector<VertexId> members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("family_stats: duplicate member");

    Family fam;
    fam.n = n;
    fam.r = r;
    fam.members = std::move(members);
    fam.degree_profile.assign(static_cast<std::size_t>(n) + 1, 0);

    std::vector<RSet> sets;
    sets.reserve(fam.members.size());
    for (VertexId id : fam.members) {
        sets.push_back(colex_unrank(n, r, id));
        for (int e : sets.back().elements)
            ++fam.degree_profile[static_cast<std::size_t>(e)];
    }

    long long profile_sum = 0;
    for (int x = 1; x <= n; ++x) {
        profile_sum += fam.degree_profile[static_cast<std::size_t>(x)];
        fam.max_degree =
            std::max(fam.max_degree, fam.degree_profile[static_cast<std::size_t>(x)]);
    }
    if (profile_sum != static_cast<long long>(r) * fam.size())
        throw std::logic_error("family_stats: degree profile sum mismatch");

    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (adjacent(sets[i], sets[j], 0)) ++fam.induced_edges;

    long long overcount = 0;
    for (int x = 1; x <= n; ++x)
        overcount += pairs(fam.degree_profile[static_cast<std::size_t>(x)]);
    fam.edge_lower_bound = pairs(fam.size()) - overcount;

    if (fam.induced_edges < fam.edge_lower_bound)
        throw std::logic_error("family_stats: edge bound violated");
    return fam;
}

Family star(int n, int r, int x) {
    return family_stats(n, r, star_members(n, r, x));
}

std::optional<int> star_center(const Family& family) {
    if (BigCount(family.size()) != binom(family.n - 1, family.r - 1))
        return std::nullopt;
    for (int x = 1; x <= family.n; ++x)
        if (family.degree_profile[static_cast<std::size_t>(x)] == family.size())
            return x;
    return std::nullopt;
}

}  // namespace ekr
