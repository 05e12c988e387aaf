#include "ekr/solver.hpp"

#include <algorithm>
#include <chrono>

namespace ekr {

namespace {

constexpr std::uint32_t kSolverVertexCap = 50000;

// Adjacency of the complement of the sample: base-graph non-edges plus
// deleted base-graph edges. Independent sets of the sample are cliques
// here.
std::vector<BitRow> complement_adjacency(const SubgraphSample& sample) {
    const std::uint32_t count = sample.vertex_count();
    std::vector<BitRow> comp(count, BitRow(count));
    if (sample.backend() == Backend::materialized) {
        for (VertexId a = 0; a < count; ++a) {
            comp[a] = sample.row(a);
            comp[a].flip_all();
            comp[a].reset(a);
        }
        return comp;
    }
    const GraphSpec& g = sample.spec();
    for (VertexId a = 0; a < count; ++a) {
        comp[a].set_all();
        comp[a].reset(a);
    }
    for (VertexId a = 0; a < count; ++a) {
        const RSet set = colex_unrank(g.n, g.r, a);
        for (VertexId b : neighbor_ids(g.n, g.r, g.s, set)) {
            if (b <= a) continue;
            if (sample.edge_retained(a, b)) {
                comp[a].reset(b);
                comp[b].reset(a);
            }
        }
    }
    return comp;
}

class CliqueSearch {
public:
    CliqueSearch(const std::vector<BitRow>& adj, const SolverBudget& budget)
        : adj_(adj), budget_(budget), start_(std::chrono::steady_clock::now()) {}

    // Grows the incumbent; stops early once it exceeds stop_above (if >= 0).
    void maximize(long long seed_size, std::vector<VertexId> seed_set, long long stop_above) {
        best_ = seed_size;
        best_set_ = std::move(seed_set);
        stop_above_ = stop_above;
        BitRow all(adj_.size());
        all.set_all();
        expand(std::move(all));
    }

    // Collects every clique with exactly target vertices.
    void enumerate(long long target, std::vector<std::vector<VertexId>>& out) {
        BitRow all(adj_.size());
        all.set_all();
        collect(std::move(all), target, out);
    }

    long long best() const { return best_; }
    const std::vector<VertexId>& best_set() const { return best_set_; }
    bool stopped_early() const { return stopped_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void tick() {
        if (++nodes_ > budget_.max_nodes)
            throw budget_error("solver: node budget exhausted", nodes_);
        if (budget_.max_seconds > 0.0 && (nodes_ & 0xFFFULL) == 0) {
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > budget_.max_seconds)
                throw budget_error("solver: time budget exhausted", nodes_);
        }
    }

    // Vertices of P sorted by (degree within P desc, id asc), then
    // greedily colored in that order. Output lists vertices by color
    // ascending; a clique inside the first i+1 of them has at most
    // colors[i] vertices.
    void order_and_color(const BitRow& P, std::vector<VertexId>& order,
                         std::vector<int>& colors) const {
        std::vector<VertexId> verts;
        verts.reserve(P.count());
        for (std::size_t v = P.find_first(); v != BitRow::npos; v = P.find_next(v))
            verts.push_back(static_cast<VertexId>(v));
        std::vector<std::size_t> deg(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            deg[i] = adj_[verts[i]].and_count(P);
        std::vector<std::size_t> idx(verts.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (deg[a] != deg[b]) return deg[a] > deg[b];
            return verts[a] < verts[b];
        });

        std::vector<BitRow> class_bits;
        std::vector<std::vector<VertexId>> class_members;
        for (std::size_t pos : idx) {
            const VertexId v = verts[pos];
            std::size_t c = 0;
            while (c < class_bits.size() && adj_[v].and_count(class_bits[c]) != 0) ++c;
            if (c == class_bits.size()) {
                class_bits.emplace_back(adj_.size());
                class_members.emplace_back();
            }
            class_bits[c].set(v);
            class_members[c].push_back(v);
        }

        order.clear();
        colors.clear();
        for (std::size_t c = 0; c < class_members.size(); ++c) {
            for (VertexId v : class_members[c]) {
                order.push_back(v);
                colors.push_back(static_cast<int>(c) + 1);
            }
        }
    }

    void expand(BitRow P) {
        if (stopped_ || P.none()) return;
        std::vector<VertexId> order;
        std::vector<int> colors;
        order_and_color(P, order, colors);
        BitRow avail = P;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<long long>(cur_.size()) + colors[static_cast<std::size_t>(i)] <=
                best_)
                return;
            const VertexId v = order[static_cast<std::size_t>(i)];
            tick();
            cur_.push_back(v);
            if (static_cast<long long>(cur_.size()) > best_) {
                best_ = static_cast<long long>(cur_.size());
                best_set_ = cur_;
                if (stop_above_ >= 0 && best_ > stop_above_) {
                    stopped_ = true;
                    cur_.pop_back();
                    return;
                }
            }
            BitRow next = avail;
            next &= adj_[v];
            expand(std::move(next));
            cur_.pop_back();
            if (stopped_) return;
            avail.reset(v);
        }
    }

    void collect(BitRow P, long long target, std::vector<std::vector<VertexId>>& out) {
        if (static_cast<long long>(cur_.size()) == target) {
            out.push_back(cur_);
            return;
        }
        if (P.none()) return;
        std::vector<VertexId> order;
        std::vector<int> colors;
        order_and_color(P, order, colors);
        BitRow avail = P;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<long long>(cur_.size()) + colors[static_cast<std::size_t>(i)] <
                target)
                return;
            const VertexId v = order[static_cast<std::size_t>(i)];
            tick();
            cur_.push_back(v);
            BitRow next = avail;
            next &= adj_[v];
            collect(std::move(next), target, out);
            cur_.pop_back();
            avail.reset(v);
        }
    }

    const std::vector<BitRow>& adj_;
    SolverBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    std::vector<VertexId> cur_;
    long long best_ = 0;
    std::vector<VertexId> best_set_;
    long long stop_above_ = -1;
    bool stopped_ = false;
};

void check_solver_size(const SubgraphSample& sample) {
    if (sample.vertex_count() > kSolverVertexCap)
        throw std::length_error("solver: graph too large for exact search");
}

long long star_size_ll(const GraphSpec& g) {
    return g.star_size.convert_to<long long>();
}

}  // namespace

bool independent_in(const SubgraphSample& sample, const std::vector<VertexId>& members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (sample.has_edge(members[i], members[j])) return false;
    return true;
}

AlphaResult solve_alpha(const SubgraphSample& sample, const SolverBudget& budget) {
    check_solver_size(sample);
    const GraphSpec& g = sample.spec();
    const auto comp = complement_adjacency(sample);
    CliqueSearch search(comp, budget);

    std::vector<VertexId> seed_set;
    long long seed_size = 0;
    if (g.s == 0) {
        seed_set = star_members(g.n, g.r, 1);
        seed_size = static_cast<long long>(seed_set.size());
    }
    search.maximize(seed_size, std::move(seed_set), -1);

    AlphaResult result;
    result.alpha = search.best();
    result.witness = family_stats(g.n, g.r, search.best_set());
    result.exhausted = true;
    result.nodes = search.nodes();
    if (!independent_in(sample, result.witness.members))
        throw std::logic_error("solve_alpha: witness not independent");
    return result;
}

bool alpha_exceeds_star(const SubgraphSample& sample, const SolverBudget& budget,
                        std::uint64_t* nodes_out) {
    check_solver_size(sample);
    const long long star = star_size_ll(sample.spec());
    const auto comp = complement_adjacency(sample);
    CliqueSearch search(comp, budget);
    // The star size is a valid pruning floor whether or not a star is
    // independent here; the question is only whether something beats it.
    search.maximize(star, {}, star);
    if (nodes_out) *nodes_out = search.nodes();
    return search.stopped_early();
}

long long brute_alpha(const SubgraphSample& sample) {
    const std::uint32_t count = sample.vertex_count();
    if (count > 24) throw std::length_error("brute_alpha: more than 24 vertices");
    const GraphSpec& g = sample.spec();
    std::vector<std::uint32_t> mask(count, 0);
    for (VertexId a = 0; a < count; ++a) {
        const RSet set = colex_unrank(g.n, g.r, a);
        for (VertexId b : neighbor_ids(g.n, g.r, g.s, set)) {
            if (b <= a) continue;
            if (sample.edge_retained(a, b)) {
                mask[a] |= 1u << b;
                mask[b] |= 1u << a;
            }
        }
    }
    const std::uint32_t limit = 1u << count;
    std::vector<bool> indep(limit);
    indep[0] = true;
    long long best = 0;
    for (std::uint32_t m = 1; m < limit; ++m) {
        const int v = std::countr_zero(m);
        const std::uint32_t rest = m & (m - 1);
        const bool ok = indep[rest] && (mask[static_cast<std::size_t>(v)] & rest) == 0;
        indep[m] = ok;
        if (ok) best = std::max(best, static_cast<long long>(std::popcount(m)));
    }
    return best;
}

std::vector<Family> max_independent_families(const SubgraphSample& sample,
                                             const SolverBudget& budget) {
    check_solver_size(sample);
    const GraphSpec& g = sample.spec();
    const AlphaResult exact = solve_alpha(sample, budget);

    const auto comp = complement_adjacency(sample);
    CliqueSearch search(comp, budget);
    std::vector<std::vector<VertexId>> raw;
    search.enumerate(exact.alpha, raw);

    std::vector<Family> families;
    families.reserve(raw.size());
    for (auto& members : raw) {
        std::sort(members.begin(), members.end());
        families.push_back(family_stats(g.n, g.r, std::move(members)));
    }
    std::sort(families.begin(), families.end(),
              [](const Family& a, const Family& b) { return a.members < b.members; });
    return families;
}

long long count_y(const SubgraphSample& sample) {
    const GraphSpec& g = sample.spec();
    if (g.s != 0) throw infeasible_error("count_y: defined for disjointness adjacency");
    const std::uint32_t count = sample.vertex_count();

    std::vector<RSet> sets;
    sets.reserve(count);
    for (VertexId a = 0; a < count; ++a) sets.push_back(colex_unrank(g.n, g.r, a));

    long long total = 0;
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(g.n));
    for (int x = 1; x <= g.n; ++x) {
        for (VertexId a = 0; a < count; ++a) {
            const RSet& set = sets[a];
            if (std::binary_search(set.elements.begin(), set.elements.end(), x)) continue;

            // Members of the star of x adjacent to `set`: x plus r-1
            // elements drawn outside set and x.
            pool.clear();
            for (int e = 1; e <= g.n; ++e) {
                if (e == x) continue;
                if (std::binary_search(set.elements.begin(), set.elements.end(), e)) continue;
                pool.push_back(e);
            }
            const int pick = g.r - 1;
            bool blocked = false;
            if (pick <= static_cast<int>(pool.size())) {
                std::vector<int> idx(static_cast<std::size_t>(pick));
                for (int i = 0; i < pick; ++i) idx[static_cast<std::size_t>(i)] = i;
                const int m = static_cast<int>(pool.size());
                while (true) {
                    RSet b;
                    b.elements.reserve(static_cast<std::size_t>(g.r));
                    for (int i = 0; i < pick; ++i)
                        b.elements.push_back(pool[static_cast<std::size_t>(
                            idx[static_cast<std::size_t>(i)])]);
                    b.elements.insert(
                        std::lower_bound(b.elements.begin(), b.elements.end(), x), x);
                    const VertexId bid = colex_rank(g.n, g.r, b);
                    if (sample.edge_retained(a, bid)) {
                        blocked = true;
                        break;
                    }
                    int i = pick - 1;
                    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - pick + i) --i;
                    if (i < 0) break;
                    ++idx[static_cast<std::size_t>(i)];
                    for (int t = i + 1; t < pick; ++t)
                        idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
                }
            }
            if (!blocked) ++total;
        }
    }
    return total;
}

StabilityVerdict ekr_stability(const SubgraphSample& sample, bool classify,
                               const SolverBudget& budget) {
    if (sample.spec().s != 0)
        throw infeasible_error("ekr_stability: defined for disjointness adjacency");
    StabilityVerdict verdict;
    std::uint64_t nodes = 0;
    const bool exceeds = alpha_exceeds_star(sample, budget, &nodes);
    verdict.alpha_eq_star = !exceeds;
    verdict.nodes = nodes;
    if (classify && verdict.alpha_eq_star) {
        const auto families = max_independent_families(sample, budget);
        bool all_stars = true;
        for (const Family& family : families)
            if (!star_center(family)) all_stars = false;
        verdict.stars_only = all_stars;
    }
    return verdict;
}

}  // namespace ekr
