#include "ghw/oracle.hpp"

#include "ghw/combinations.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace ghw {

namespace {

// H over local vertex indices 0..n-1 as bitmasks.
struct MaskGraph {
    int n = 0;
    std::vector<int> ids;                // local index -> vertex id
    std::vector<std::uint32_t> edges;    // edge masks
    std::vector<std::uint32_t> adj;      // primal-graph neighbourhoods
};

MaskGraph to_masks(const Hypergraph& h) {
    MaskGraph g;
    g.ids = members(h.vertices());
    g.n = static_cast<int>(g.ids.size());
    std::unordered_map<int, int> local;
    for (int i = 0; i < g.n; ++i) local.emplace(g.ids[static_cast<std::size_t>(i)], i);
    g.adj.assign(static_cast<std::size_t>(g.n), 0);
    for (const auto& e : h.edges()) {
        std::uint32_t m = 0;
        for_each_member(e.vertices, [&](int v) { m |= 1U << local.at(v); });
        g.edges.push_back(m);
        for (int i = 0; i < g.n; ++i) {
            if (m & (1U << i)) g.adj[static_cast<std::size_t>(i)] |= m;
        }
    }
    for (int i = 0; i < g.n; ++i) g.adj[static_cast<std::size_t>(i)] &= ~(1U << i);
    return g;
}

// Marks every mask that lies inside a union of at most k edges.
std::vector<char> coverable(const MaskGraph& g, int k) {
    std::vector<char> cand(std::size_t{1} << g.n, 0);
    const int m = static_cast<int>(g.edges.size());
    for (int r = 0; r <= std::min(k, m); ++r) {
        for_each_combination(m, r, [&](const std::vector<int>& idx) {
            std::uint32_t u = 0;
            for (int i : idx) u |= g.edges[static_cast<std::size_t>(i)];
            cand[u] = 1;
            return true;
        });
    }
    for (int bit = 0; bit < g.n; ++bit) {
        for (std::uint32_t s = 0; s < (1U << g.n); ++s) {
            if ((s & (1U << bit)) && cand[s]) cand[s & ~(1U << bit)] = 1;
        }
    }
    return cand;
}

class GhwDecider {
public:
    GhwDecider(const MaskGraph& g, std::vector<char> cand) : g_(g), cand_(std::move(cand)) {}

    bool decide(std::uint32_t c) {
        auto it = memo_.find(c);
        if (it != memo_.end()) return it->second;
        const std::uint32_t nb = neighbourhood(c);
        bool ok = false;
        for (std::uint32_t t = c; t != 0 && !ok; t = (t - 1) & c) {
            if (!cand_[nb | t]) continue;
            ok = true;
            for (std::uint32_t rest = c & ~t; rest != 0 && ok;) {
                const std::uint32_t comp = component(rest, rest & (~rest + 1));
                rest &= ~comp;
                ok = decide(comp);
            }
        }
        memo_.emplace(c, ok);
        return ok;
    }

    std::uint32_t component(std::uint32_t within, std::uint32_t seed) const {
        std::uint32_t seen = seed;
        std::uint32_t frontier = seed;
        while (frontier != 0) {
            std::uint32_t next = 0;
            for (int i = 0; i < g_.n; ++i) {
                if (frontier & (1U << i)) next |= g_.adj[static_cast<std::size_t>(i)];
            }
            next &= within & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

private:
    std::uint32_t neighbourhood(std::uint32_t c) const {
        std::uint32_t nb = 0;
        for (int i = 0; i < g_.n; ++i) {
            if (c & (1U << i)) nb |= g_.adj[static_cast<std::size_t>(i)];
        }
        return nb & ~c;
    }

    const MaskGraph& g_;
    std::vector<char> cand_;
    std::unordered_map<std::uint32_t, bool> memo_;
};

bool is_subedge(const Hypergraph& h, const VertexSet& s) {
    for (const auto& e : h.edges()) {
        if (s.is_subset_of(e.vertices)) return true;
    }
    return false;
}

bool incompatible(const Hypergraph& h, const VertexSet& a, const VertexSet& b) { return !is_subedge(h, a | b); }

}  // namespace

std::optional<int> exact_ghw(const Hypergraph& h, int k_max, const OracleBudget& budget) {
    if (static_cast<int>(h.num_vertices()) > budget.max_vertices ||
        static_cast<int>(h.num_edges()) > budget.max_edges || k_max > budget.max_k || h.num_vertices() > 24) {
        throw BudgetExceeded("exact_ghw: instance over budget");
    }
    if (h.num_vertices() == 0) return 0;
    const MaskGraph g = to_masks(h);
    const std::uint32_t all = g.n == 32 ? ~0U : ((1U << g.n) - 1);
    for (int k = 1; k <= k_max; ++k) {
        GhwDecider dec(g, coverable(g, k));
        if (dec.decide(all)) return k;
    }
    return std::nullopt;
}

bool gyo_acyclic(const Hypergraph& h) {
    std::vector<VertexSet> edges;
    for (const auto& e : h.edges()) edges.push_back(e.vertices);
    bool changed = true;
    while (changed && !edges.empty()) {
        changed = false;
        // Vertices in at most one edge.
        VertexSet seen_once(h.universe_size());
        VertexSet seen_twice(h.universe_size());
        for (const auto& e : edges) {
            seen_twice |= seen_once & e;
            seen_once |= e;
        }
        const VertexSet lonely = seen_once - seen_twice;
        if (lonely.any()) {
            for (auto& e : edges) e -= lonely;
            changed = true;
        }
        // Edges empty or contained in another edge.
        for (std::size_t i = 0; i < edges.size(); ++i) {
            bool drop = edges[i].none();
            for (std::size_t j = 0; j < edges.size() && !drop; ++j) {
                drop = j != i && edges[i].is_subset_of(edges[j]);
            }
            if (drop) {
                edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return edges.empty();
}

std::optional<OracleSeparator> exact_min_separator(const Hypergraph& h, const VertexSet& a, const VertexSet& b,
                                                   const VertexSet& restrict_to, int k0, long long max_subsets) {
    const int m = static_cast<int>(h.num_edges());
    long long total = 0;
    for (int r = 0; r <= std::min(k0, m); ++r) {
        long long c = 1;
        for (int i = 0; i < r; ++i) c = c * (m - i) / (i + 1);
        total += c;
    }
    if (total > max_subsets) throw BudgetExceeded("exact_min_separator: too many edge subsets");

    std::optional<OracleSeparator> found;
    for (int r = 0; r <= std::min(k0, m) && !found; ++r) {
        for_each_combination(m, r, [&](const std::vector<int>& idx) {
            VertexSet s = h.edge_union(idx) & restrict_to;
            if (!is_separator(h, a, b, s)) return true;
            found = OracleSeparator{std::move(s), idx};
            return false;
        });
    }
    return found;
}

std::vector<std::pair<VertexSet, std::vector<int>>> enumerate_small_covered_subsets(const Hypergraph& h,
                                                                                    const VertexSet& u, int k0) {
    const std::vector<int> us = members(u);
    const int n = static_cast<int>(us.size());
    if (n > 14) throw BudgetExceeded("enumerate_small_covered_subsets: |U| > 14");
    const int m = static_cast<int>(h.num_edges());
    std::vector<int> witness(std::size_t{1} << n, -1);
    std::vector<std::vector<int>> combos;
    for (int r = 0; r <= std::min(k0, m); ++r) {
        for_each_combination(m, r, [&](const std::vector<int>& idx) {
            const VertexSet cov = h.edge_union(idx);
            std::uint32_t mask = 0;
            for (int i = 0; i < n; ++i) {
                if (cov.test(static_cast<std::size_t>(us[static_cast<std::size_t>(i)]))) mask |= 1U << i;
            }
            if (witness[mask] < 0) {
                witness[mask] = static_cast<int>(combos.size());
                combos.push_back(idx);
            }
            return true;
        });
    }
    // Push witnesses down to every subset.
    for (int bit = 0; bit < n; ++bit) {
        for (std::uint32_t s = 0; s < (1U << n); ++s) {
            const std::uint32_t t = s & ~(1U << bit);
            if ((s & (1U << bit)) && witness[s] >= 0 && witness[t] < 0) witness[t] = witness[s];
        }
    }
    std::vector<std::pair<VertexSet, std::vector<int>>> out;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if (witness[s] < 0) continue;
        VertexSet w = h.empty_set();
        for (int i = 0; i < n; ++i) {
            if (s & (1U << i)) w.set(static_cast<std::size_t>(us[static_cast<std::size_t>(i)]));
        }
        out.emplace_back(std::move(w), combos[static_cast<std::size_t>(witness[s])]);
    }
    return out;
}

bool is_shyg(const Hypergraph& h, const Shyg& g, int a, int b) {
    if (static_cast<int>(g.u.size()) != a || static_cast<int>(g.s.size()) != b) return false;
    std::vector<VertexSet> all = g.u;
    all.insert(all.end(), g.s.begin(), g.s.end());
    for (const auto& x : all) {
        if (x.none() || !is_subedge(h, x)) return false;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (!incompatible(h, all[i], all[j])) return false;
        }
    }
    for (std::size_t i = 0; i < g.u.size(); ++i) {
        for (std::size_t j = i + 1; j < g.u.size(); ++j) {
            if (g.u[i].intersects(g.u[j])) return false;
        }
    }
    for (const auto& s : g.s) {
        for (const auto& u : g.u) {
            if (!s.intersects(u)) return false;
        }
    }
    return true;
}

std::optional<Shyg> find_shyg_bruteforce(const Hypergraph& h, int a, int b, long long max_steps) {
    std::vector<VertexSet> pool;
    std::unordered_set<VertexSet> seen;
    auto offer = [&](VertexSet s) {
        if (s.any() && seen.insert(s).second) pool.push_back(std::move(s));
    };
    for (std::size_t i = 0; i < h.num_edges(); ++i) offer(h.edge(static_cast<int>(i)).vertices);
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        VertexSet priv = h.edge(static_cast<int>(i)).vertices;
        for (std::size_t j = 0; j < h.num_edges(); ++j) {
            if (j != i) priv -= h.edge(static_cast<int>(j)).vertices;
        }
        offer(std::move(priv));
    }
    const int n = static_cast<int>(pool.size());
    if (n > 512) throw BudgetExceeded("find_shyg_bruteforce: subedge pool too large");

    std::vector<std::vector<char>> incomp(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const char v = incompatible(h, pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]) ? 1 : 0;
            incomp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            incomp[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    }

    long long steps = 0;
    auto tick = [&] {
        if (++steps > max_steps) throw BudgetExceeded("find_shyg_bruteforce: step budget exhausted");
    };

    // Picks `need` pairwise incompatible pool members from cand, in order.
    std::vector<int> chosen;
    std::function<bool(const std::vector<int>&, std::size_t, int)> clique =
        [&](const std::vector<int>& cand, std::size_t from, int need) -> bool {
        if (need == 0) return true;
        for (std::size_t i = from; i + static_cast<std::size_t>(need) <= cand.size(); ++i) {
            tick();
            const int c = cand[i];
            bool fits = std::all_of(chosen.begin(), chosen.end(), [&](int x) {
                return incomp[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)] != 0;
            });
            if (!fits) continue;
            chosen.push_back(c);
            if (clique(cand, i + 1, need - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    std::vector<int> us;
    std::function<std::optional<Shyg>(int)> pick_u = [&](int from) -> std::optional<Shyg> {
        if (static_cast<int>(us.size()) == a) {
            std::vector<int> cand;
            for (int c = 0; c < n; ++c) {
                if (std::find(us.begin(), us.end(), c) != us.end()) continue;
                bool ok = true;
                for (int u : us) {
                    ok = ok && pool[static_cast<std::size_t>(c)].intersects(pool[static_cast<std::size_t>(u)]) &&
                         incomp[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)];
                }
                if (ok) cand.push_back(c);
            }
            chosen.clear();
            if (static_cast<int>(cand.size()) < b || !clique(cand, 0, b)) return std::nullopt;
            Shyg g;
            for (int u : us) g.u.push_back(pool[static_cast<std::size_t>(u)]);
            for (int s : chosen) g.s.push_back(pool[static_cast<std::size_t>(s)]);
            return g;
        }
        for (int c = from; c < n; ++c) {
            tick();
            bool ok = true;
            for (int u : us) {
                ok = ok && !pool[static_cast<std::size_t>(c)].intersects(pool[static_cast<std::size_t>(u)]) &&
                     incomp[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)];
            }
            if (!ok) continue;
            us.push_back(c);
            if (auto g = pick_u(c + 1)) return g;
            us.pop_back();
        }
        return std::nullopt;
    };
    return pick_u(0);
}

}  // namespace ghw
