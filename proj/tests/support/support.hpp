// Shared helpers for the unit and acceptance tests: small builders, random
// instances, random decompositions, and brute-force checks that do not go
// through the library's solvers.
#ifndef GHW_TEST_SUPPORT_HPP
#define GHW_TEST_SUPPORT_HPP

#include "ghw/generators.hpp"
#include "ghw/hypergraph.hpp"
#include "ghw/tree_decomposition.hpp"
#include "ghw/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ghw::test {

using NamedEdges = std::vector<std::pair<std::string, std::vector<std::string>>>;

inline Hypergraph hg(NamedEdges edges) { return Hypergraph::from_named_edges(std::move(edges)); }

inline VertexSet vs(const Hypergraph& h, const std::vector<std::string>& names) {
    VertexSet s = h.empty_set();
    for (const auto& n : names) s.set(static_cast<std::size_t>(*h.find_vertex(n)));
    return s;
}

inline std::vector<std::string> names_of(const Hypergraph& h, const VertexSet& s) {
    std::vector<std::string> out;
    for_each_member(s, [&](int v) { out.push_back(h.vertex_name(v)); });
    return out;
}

inline Hypergraph triangle() { return hg({{"ab", {"a", "b"}}, {"bc", {"b", "c"}}, {"ca", {"c", "a"}}}); }

// Chain e00..e(m-1) with e_i = {v_i, v_{i+1}, private_i...}; alpha-acyclic,
// rho(V) = m when every edge has a private vertex.
inline Hypergraph chain(int m, int extra_private = 0) {
    NamedEdges edges;
    auto pad = [](char c, int i) {
        std::string s = std::to_string(i);
        return std::string(1, c) + std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
    };
    for (int i = 0; i < m; ++i) {
        std::vector<std::string> vs{pad('v', i), pad('v', i + 1)};
        for (int j = 0; j < extra_private; ++j) vs.push_back(pad('p', i) + "_" + std::to_string(j));
        edges.emplace_back(pad('e', i), std::move(vs));
    }
    return hg(std::move(edges));
}

// Random (2,d) instance. When the sampler gives up a few times in a row the
// edge count is lowered, since small n cannot host many distinct edges.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m, int d) {
    for (int attempt = 0;; ++attempt) {
        try {
            return gen_2d_hypergraph(n, m, d, rng());
        } catch (const Infeasible&) {
            if (attempt % 4 == 3 && m > 1) --m;
        }
    }
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline VertexSet random_subset(std::mt19937_64& rng, const VertexSet& from, double prob) {
    VertexSet s(from.size());
    std::bernoulli_distribution coin(prob);
    for_each_member(from, [&](int v) {
        if (coin(rng)) s.set(static_cast<std::size_t>(v));
    });
    return s;
}

// Tree decomposition from a random elimination order of the primal graph:
// one node per vertex, bag = the vertex and its later neighbours after
// fill-in, parent = earliest later neighbour. Roots are chained.
inline TreeDecomposition random_td(std::mt19937_64& rng, const Hypergraph& h) {
    TreeDecomposition td(h.universe_size());
    const std::vector<int> verts = members(h.vertices());
    if (verts.empty()) {
        td.add_node(h.empty_set());
        return td;
    }
    std::vector<int> order = verts;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> pos(h.universe_size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    std::vector<VertexSet> nb(h.universe_size(), h.empty_set());
    for (const auto& e : h.edges()) {
        for_each_member(e.vertices, [&](int v) { nb[static_cast<std::size_t>(v)] |= e.vertices; });
    }
    for (int v : verts) nb[static_cast<std::size_t>(v)].reset(static_cast<std::size_t>(v));

    std::vector<int> node_of(h.universe_size(), -1);
    std::vector<int> parent_vertex(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        VertexSet later = h.empty_set();
        for_each_member(nb[static_cast<std::size_t>(v)], [&](int u) {
            if (pos[static_cast<std::size_t>(u)] > static_cast<int>(i)) later.set(static_cast<std::size_t>(u));
        });
        for_each_member(later, [&](int u) {
            nb[static_cast<std::size_t>(u)] |= later;
            nb[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(u));
        });
        VertexSet bag = later;
        bag.set(static_cast<std::size_t>(v));
        node_of[static_cast<std::size_t>(v)] = td.add_node(bag);
        int best = -1;
        for_each_member(later, [&](int u) {
            if (best < 0 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(best)]) best = u;
        });
        parent_vertex[i] = best;
    }
    int prev_root = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int t = node_of[static_cast<std::size_t>(order[i])];
        if (parent_vertex[i] >= 0) {
            td.add_edge(t, node_of[static_cast<std::size_t>(parent_vertex[i])]);
        } else {
            if (prev_root >= 0) td.add_edge(prev_root, t);
            prev_root = t;
        }
    }
    return td;
}

// Marks a random subset of leaves inactive, keeping at least min_active
// active nodes. Non-leaves always stay active.
inline void random_active(std::mt19937_64& rng, TreeDecomposition& td, double drop_prob, int min_active = 1) {
    td.active.assign(static_cast<std::size_t>(td.size()), true);
    if (td.size() < 2) return;
    std::bernoulli_distribution coin(drop_prob);
    int active = td.size();
    for (int t = 0; t < td.size(); ++t) {
        if (td.degree(t) == 1 && active > min_active && coin(rng)) {
            // A leaf whose only neighbour is also an inactive leaf would leave
            // the pair disconnected from X; forbid that.
            const int n = td.adj[static_cast<std::size_t>(t)].front();
            if (!td.active[static_cast<std::size_t>(n)]) continue;
            td.active[static_cast<std::size_t>(t)] = false;
            --active;
        }
    }
}

// Random tree on n nodes with empty bags: node i hangs off a random earlier node.
inline TreeDecomposition random_tree(std::mt19937_64& rng, int n) {
    TreeDecomposition td(0);
    for (int i = 0; i < n; ++i) td.add_node(VertexSet(0));
    for (int i = 1; i < n; ++i) td.add_edge(i, uniform(rng, 0, i - 1));
    return td;
}

// Independent brute force over edge subsets (|E| <= 20): minimum number of
// edges whose union contains u, or nullopt when none do.
inline std::optional<int> brute_rho(const Hypergraph& h, const VertexSet& u) {
    const int m = static_cast<int>(h.num_edges());
    std::optional<int> best;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        const int w = std::popcount(mask);
        if (best && w >= *best) continue;
        VertexSet cov = h.empty_set();
        for (int e = 0; e < m; ++e) {
            if (mask & (1u << e)) cov |= h.edge(e).vertices;
        }
        if (u.is_subset_of(cov)) best = w;
    }
    return best;
}

// All edge subsets of weight <= cap covering u, as local-index masks.
inline std::vector<std::uint32_t> brute_covers(const Hypergraph& h, const VertexSet& u, int cap) {
    const int m = static_cast<int>(h.num_edges());
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) > cap) continue;
        VertexSet cov = h.empty_set();
        for (int e = 0; e < m; ++e) {
            if (mask & (1u << e)) cov |= h.edge(e).vertices;
        }
        if (u.is_subset_of(cov)) out.push_back(mask);
    }
    return out;
}

inline VertexSet root_union(const Hypergraph& root, const std::vector<int>& root_ids) {
    VertexSet s = root.empty_set();
    for (int e : root_ids) s |= root.universe()->root_edges[static_cast<std::size_t>(e)];
    return s;
}

// Independent separator check by BFS on the primal graph of h minus s.
inline bool brute_separates(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& s) {
    VertexSet seen = (a & h.vertices()) - s;
    std::vector<int> stack = members(seen);
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& e : h.edges()) {
            if (!e.vertices.test(static_cast<std::size_t>(v))) continue;
            for_each_member(e.vertices - s, [&](int u) {
                if (!seen.test(static_cast<std::size_t>(u))) {
                    seen.set(static_cast<std::size_t>(u));
                    stack.push_back(u);
                }
            });
        }
    }
    return !seen.intersects(b - s);
}

}  // namespace ghw::test

#endif  // GHW_TEST_SUPPORT_HPP
