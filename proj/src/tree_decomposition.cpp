#include "ghw/tree_decomposition.hpp"

#include "ghw/edge_cover.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ghw {

int TreeDecomposition::add_node(VertexSet bag, bool is_active) {
    bag.resize(universe);
    bags.push_back(std::move(bag));
    adj.emplace_back();
    covers.emplace_back();
    active.push_back(is_active);
    return size() - 1;
}

void TreeDecomposition::add_edge(int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
}

std::vector<int> TreeDecomposition::active_nodes() const {
    std::vector<int> out;
    for (int t = 0; t < size(); ++t) {
        if (active[static_cast<std::size_t>(t)]) out.push_back(t);
    }
    return out;
}

VertexSet TreeDecomposition::bag_union(const std::vector<int>& nodes) const {
    VertexSet s(universe);
    for (int t : nodes) s |= bag(t);
    return s;
}

VertexSet TreeDecomposition::bag_union() const {
    VertexSet s(universe);
    for (const auto& b : bags) s |= b;
    return s;
}

int TreeDecomposition::find_node_containing(const VertexSet& s) const {
    for (int t = 0; t < size(); ++t) {
        if (s.is_subset_of(bag(t))) return t;
    }
    return -1;
}

bool ValidationReport::has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(),
                       [k](const Violation& v) { return v.kind == k; });
}

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::NoNodes: return "no-nodes";
        case ViolationKind::NotATree: return "not-a-tree";
        case ViolationKind::VertexOutsideHypergraph: return "vertex-outside-hypergraph";
        case ViolationKind::EdgeNotContained: return "edge-not-contained";
        case ViolationKind::Disconnected: return "disconnected";
        case ViolationKind::InactiveNotLeaf: return "inactive-not-leaf";
        case ViolationKind::BadCover: return "bad-cover";
    }
    return "unknown";
}

namespace {

// Nodes reachable from `from` using only nodes with allowed[node] set.
std::vector<char> flood(const TreeDecomposition& td, int from, const std::vector<char>& allowed) {
    std::vector<char> seen(static_cast<std::size_t>(td.size()), 0);
    std::vector<int> stack{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int n : td.adj[static_cast<std::size_t>(t)]) {
            if (!allowed[static_cast<std::size_t>(n)] || seen[static_cast<std::size_t>(n)]) continue;
            seen[static_cast<std::size_t>(n)] = 1;
            stack.push_back(n);
        }
    }
    return seen;
}

}  // namespace

ValidationReport validate(const Hypergraph& h, const TreeDecomposition& td) {
    ValidationReport rep;
    const int n = td.size();
    if (n == 0) {
        rep.violations.push_back({ViolationKind::NoNodes, "decomposition has no nodes"});
        return rep;
    }

    std::size_t degree_sum = 0;
    for (const auto& a : td.adj) degree_sum += a.size();
    std::vector<char> all(static_cast<std::size_t>(n), 1);
    auto reach = flood(td, 0, all);
    bool connected = std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
    if (degree_sum != 2 * static_cast<std::size_t>(n - 1) || !connected) {
        rep.violations.push_back({ViolationKind::NotATree,
                                  connected ? "cycle in tree edges" : "tree edges not connected"});
        return rep;
    }

    for (int t = 0; t < n; ++t) {
        VertexSet extra = td.bag(t) - h.vertices();
        if (extra.any()) {
            rep.violations.push_back({ViolationKind::VertexOutsideHypergraph,
                                      "node " + std::to_string(t) + " has vertex " +
                                          h.vertex_name(static_cast<int>(extra.find_first()))});
        }
    }

    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        if (td.find_node_containing(h.edge(static_cast<int>(e)).vertices) < 0) {
            rep.violations.push_back({ViolationKind::EdgeNotContained,
                                      "edge " + h.edge(static_cast<int>(e)).name});
        }
    }

    VertexSet used = td.bag_union();
    for_each_member(used, [&](int v) {
        std::vector<char> holds(static_cast<std::size_t>(n), 0);
        int first = -1;
        for (int t = 0; t < n; ++t) {
            if (td.bag(t).test(static_cast<std::size_t>(v))) {
                holds[static_cast<std::size_t>(t)] = 1;
                if (first < 0) first = t;
            }
        }
        auto r = flood(td, first, holds);
        for (int t = 0; t < n; ++t) {
            if (holds[static_cast<std::size_t>(t)] && !r[static_cast<std::size_t>(t)]) {
                rep.violations.push_back({ViolationKind::Disconnected,
                                          "vertex " + h.vertex_name(v)});
                break;
            }
        }
    });

    for (int t = 0; t < n; ++t) {
        if (!td.active[static_cast<std::size_t>(t)] && td.degree(t) > 1) {
            rep.violations.push_back({ViolationKind::InactiveNotLeaf, "node " + std::to_string(t)});
        }
    }

    const auto& root_edges = h.universe()->root_edges;
    for (int t = 0; t < n; ++t) {
        const auto& c = td.covers[static_cast<std::size_t>(t)];
        if (!c) continue;
        VertexSet u(td.universe);
        bool ok = true;
        for (int e : *c) {
            if (e < 0 || static_cast<std::size_t>(e) >= root_edges.size()) {
                ok = false;
                break;
            }
            u |= root_edges[static_cast<std::size_t>(e)];
        }
        if (!ok || !td.bag(t).is_subset_of(u)) {
            rep.violations.push_back({ViolationKind::BadCover, "node " + std::to_string(t)});
        }
    }
    return rep;
}

int ghw_of(const Hypergraph& h, TreeDecomposition& td) { return ghw_of(h, td, td.active_nodes()); }

int ghw_of(const Hypergraph& h, TreeDecomposition& td, const std::vector<int>& nodes) {
    int width = 0;
    const int cap = static_cast<int>(h.num_edges());
    for (int t : nodes) {
        auto c = min_edge_cover(h, td.bag(t), cap);
        if (!c) throw std::invalid_argument("bag not coverable by edges of the hypergraph");
        td.covers[static_cast<std::size_t>(t)] = to_root_edges(h, c->edges);
        width = std::max(width, c->weight());
    }
    return width;
}

TreeDecomposition subtree_restrict(const TreeDecomposition& td, int t, const std::vector<int>& y,
                                   std::vector<int>* old_ids) {
    std::vector<int> order{t};
    std::vector<int> parent(static_cast<std::size_t>(td.size()), -2);
    parent[static_cast<std::size_t>(t)] = -1;
    for (int n : y) {
        parent[static_cast<std::size_t>(n)] = t;
        order.push_back(n);
    }
    for (std::size_t i = 1; i < order.size(); ++i) {
        int cur = order[i];
        for (int n : td.adj[static_cast<std::size_t>(cur)]) {
            if (parent[static_cast<std::size_t>(n)] != -2) continue;
            parent[static_cast<std::size_t>(n)] = cur;
            order.push_back(n);
        }
    }
    std::vector<int> new_id(static_cast<std::size_t>(td.size()), -1);
    TreeDecomposition out(td.universe);
    for (int old : order) {
        new_id[static_cast<std::size_t>(old)] = out.add_node(td.bag(old), td.active[static_cast<std::size_t>(old)]);
        out.covers.back() = td.covers[static_cast<std::size_t>(old)];
    }
    for (std::size_t i = 1; i < order.size(); ++i) {
        int old = order[i];
        out.add_edge(new_id[static_cast<std::size_t>(parent[static_cast<std::size_t>(old)])],
                     new_id[static_cast<std::size_t>(old)]);
    }
    if (old_ids != nullptr) *old_ids = order;
    return out;
}

TreeDecomposition subtree_extend(const TreeDecomposition& td, int t, const std::vector<int>& y,
                                 std::vector<int>* old_ids) {
    std::vector<int> ids;
    TreeDecomposition out = subtree_restrict(td, t, y, &ids);
    std::vector<char> inside(static_cast<std::size_t>(td.size()), 0);
    for (int i : ids) inside[static_cast<std::size_t>(i)] = 1;
    VertexSet rest(td.universe);
    for (int s = 0; s < td.size(); ++s) {
        if (!inside[static_cast<std::size_t>(s)]) rest |= td.bag(s);
    }
    int r = out.add_node(std::move(rest), false);
    out.add_edge(0, r);
    if (old_ids != nullptr) {
        ids.push_back(-1);
        *old_ids = std::move(ids);
    }
    return out;
}

TreeDecomposition remove_vertices(const TreeDecomposition& td, const VertexSet& w) {
    TreeDecomposition out = td;
    for (auto& b : out.bags) b -= w;
    return out;
}

TreeDecomposition restrict_bags(const TreeDecomposition& td, const VertexSet& u) {
    TreeDecomposition out = td;
    for (auto& b : out.bags) b &= u;
    return out;
}

TreeDecomposition glue(std::size_t universe, const VertexSet& root_bag,
                       const std::vector<std::pair<TreeDecomposition, int>>& children) {
    TreeDecomposition out(universe);
    out.add_node(root_bag);
    for (const auto& [child, attach] : children) {
        const int offset = out.size();
        for (int s = 0; s < child.size(); ++s) {
            out.add_node(child.bag(s), child.active[static_cast<std::size_t>(s)]);
            out.covers.back() = child.covers[static_cast<std::size_t>(s)];
        }
        for (int s = 0; s < child.size(); ++s) {
            for (int n : child.adj[static_cast<std::size_t>(s)]) {
                if (s < n) out.add_edge(offset + s, offset + n);
            }
        }
        out.add_edge(0, offset + attach);
    }
    return out;
}

TreeDecomposition add_vertex_to_all_bags(const TreeDecomposition& td, int v) {
    TreeDecomposition out = td;
    for (auto& b : out.bags) b.set(static_cast<std::size_t>(v));
    for (auto& c : out.covers) c.reset();
    return out;
}

std::vector<int> active_neighbors(const TreeDecomposition& td, int t) {
    std::vector<int> out;
    for (int n : td.adj[static_cast<std::size_t>(t)]) {
        if (td.active[static_cast<std::size_t>(n)]) out.push_back(n);
    }
    return out;
}

}  // namespace ghw
