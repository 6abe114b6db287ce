#include "ghw/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ghw {

Hypergraph::Hypergraph() : universe_(std::make_shared<Universe>()) {}

Hypergraph::Hypergraph(std::shared_ptr<const Universe> universe, VertexSet vertices,
                       std::vector<Hyperedge> edges)
    : universe_(std::move(universe)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    incidence_.assign(universe_size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        for_each_member(edges_[i].vertices, [&](int v) {
            incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
        });
    }
    intersection_bound_ = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        for (std::size_t j = i + 1; j < edges_.size(); ++j) {
            int c = static_cast<int>((edges_[i].vertices & edges_[j].vertices).count());
            intersection_bound_ = std::max(intersection_bound_, c);
        }
    }
}

Hypergraph Hypergraph::from_named_edges(
    std::vector<std::pair<std::string, std::vector<std::string>>> edges) {
    std::set<std::string> names;
    std::set<std::string> vertex_names;
    for (const auto& [name, vs] : edges) {
        if (vs.empty()) throw std::invalid_argument("empty edge: " + name);
        if (!names.insert(name).second) throw std::invalid_argument("duplicate edge name: " + name);
        vertex_names.insert(vs.begin(), vs.end());
    }
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    auto u = std::make_shared<Universe>();
    u->vertex_names.assign(vertex_names.begin(), vertex_names.end());
    for (std::size_t i = 0; i < u->vertex_names.size(); ++i) {
        u->vertex_index.emplace(u->vertex_names[i], static_cast<int>(i));
    }
    const std::size_t n = u->vertex_names.size();

    std::vector<Hyperedge> out;
    out.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        VertexSet s(n);
        for (const auto& v : edges[i].second) s.set(static_cast<std::size_t>(u->vertex_index.at(v)));
        u->edge_names.push_back(edges[i].first);
        u->root_edges.push_back(s);
        u->edge_index.emplace(edges[i].first, static_cast<int>(i));
        out.push_back(Hyperedge{edges[i].first, std::move(s), {static_cast<int>(i)}});
    }
    VertexSet all(n);
    all.set();
    return Hypergraph(std::move(u), std::move(all), std::move(out));
}

std::optional<int> Hypergraph::find_vertex(std::string_view name) const {
    auto it = universe_->vertex_index.find(std::string(name));
    if (it == universe_->vertex_index.end() || !vertices_.test(static_cast<std::size_t>(it->second))) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<int> Hypergraph::find_edge(std::string_view name) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].name == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

VertexSet Hypergraph::edge_union(const std::vector<int>& local_edges) const {
    VertexSet s = empty_set();
    for (int e : local_edges) s |= edge(e).vertices;
    return s;
}

Hypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& u,
                                 std::vector<std::vector<int>>* provenance) {
    std::vector<Hyperedge> edges;
    std::vector<std::vector<int>> prov;
    std::unordered_map<VertexSet, std::size_t> seen;
    VertexSet verts = h.empty_set();
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        const Hyperedge& e = h.edge(static_cast<int>(i));
        VertexSet r = e.vertices & u;
        if (r.none()) continue;
        auto it = seen.find(r);
        if (it != seen.end()) {
            Hyperedge& kept = edges[it->second];
            kept.origins.insert(kept.origins.end(), e.origins.begin(), e.origins.end());
            prov[it->second].push_back(static_cast<int>(i));
            continue;
        }
        verts |= r;
        seen.emplace(r, edges.size());
        edges.push_back(Hyperedge{e.name, std::move(r), e.origins});
        prov.push_back({static_cast<int>(i)});
    }
    for (auto& e : edges) std::sort(e.origins.begin(), e.origins.end());
    if (provenance != nullptr) *provenance = std::move(prov);
    return Hypergraph(h.universe(), std::move(verts), std::move(edges));
}

Hypergraph remove_vertices(const Hypergraph& h, const VertexSet& w) {
    return induced_subhypergraph(h, h.vertices() - w);
}

VertexSet reachable(const Hypergraph& h, const VertexSet& start, const VertexSet& blocked) {
    VertexSet seen = (start & h.vertices()) - blocked;
    std::vector<int> stack = members(seen);
    std::vector<char> edge_done(h.num_edges(), 0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : h.incident(v)) {
            if (edge_done[static_cast<std::size_t>(e)]) continue;
            edge_done[static_cast<std::size_t>(e)] = 1;
            VertexSet fresh = (h.edge(e).vertices - blocked) - seen;
            seen |= fresh;
            for_each_member(fresh, [&](int x) { stack.push_back(x); });
        }
    }
    return seen;
}

std::vector<VertexSet> connected_components(const Hypergraph& h) {
    std::vector<VertexSet> out;
    VertexSet left = h.vertices();
    VertexSet none = h.empty_set();
    while (left.any()) {
        VertexSet seed = h.empty_set();
        seed.set(left.find_first());
        VertexSet comp = reachable(h, seed, none);
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_separator(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& s) {
    VertexSet bs = (b & h.vertices()) - s;
    if (bs.none()) return true;
    VertexSet r = reachable(h, a, s);
    return !r.intersects(bs);
}

int max_pairwise_intersection(const Hypergraph& h) { return h.intersection_bound(); }

}  // namespace ghw
