#ifndef GHW_HYPERGRAPH_HPP
#define GHW_HYPERGRAPH_HPP

#include "ghw/vertex_set.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ghw {

struct Hyperedge {
    std::string name;
    VertexSet vertices;
    // Root edge indices whose restriction equals this edge. A root edge has
    // origins == {its own index}.
    std::vector<int> origins;
};

// Names shared by a root hypergraph and everything derived from it.
struct Universe {
    std::vector<std::string> vertex_names;
    std::vector<std::string> edge_names;
    std::vector<VertexSet> root_edges;
    std::unordered_map<std::string, int> vertex_index;
    std::unordered_map<std::string, int> edge_index;
};

// Immutable hypergraph. Vertex ids index the root universe (lexicographic by
// name); edges are ordered lexicographically by name at the root and keep the
// parent's order in induced subhypergraphs.
class Hypergraph {
public:
    Hypergraph();

    // Builds a root hypergraph. Vertex lists are deduplicated.
    // Throws std::invalid_argument on an empty edge or a duplicate edge name.
    static Hypergraph from_named_edges(
        std::vector<std::pair<std::string, std::vector<std::string>>> edges);

    std::size_t universe_size() const { return universe_->vertex_names.size(); }
    const std::shared_ptr<const Universe>& universe() const { return universe_; }

    const VertexSet& vertices() const { return vertices_; }
    std::size_t num_vertices() const { return vertices_.count(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Hyperedge>& edges() const { return edges_; }
    const Hyperedge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& incident(int v) const { return incidence_[static_cast<std::size_t>(v)]; }

    const std::string& vertex_name(int v) const { return universe_->vertex_names[static_cast<std::size_t>(v)]; }
    std::optional<int> find_vertex(std::string_view name) const;
    // Local index of the edge with this name, if present in this hypergraph.
    std::optional<int> find_edge(std::string_view name) const;

    // Max |e ∩ e'| over distinct edges; computed once at construction.
    int intersection_bound() const { return intersection_bound_; }

    VertexSet empty_set() const { return VertexSet(universe_size()); }
    VertexSet edge_union(const std::vector<int>& local_edges) const;

    // Internal: assemble from parts over an existing universe.
    Hypergraph(std::shared_ptr<const Universe> universe, VertexSet vertices, std::vector<Hyperedge> edges);

private:
    std::shared_ptr<const Universe> universe_;
    VertexSet vertices_;
    std::vector<Hyperedge> edges_;
    std::vector<std::vector<int>> incidence_;
    int intersection_bound_ = 0;
};

// H[U]: edges {e ∩ U} with empty restrictions dropped and identical
// restrictions merged (first occurrence keeps its name). When provenance is
// given it receives, per new edge, the indices of the parent edges merged into
// it.
Hypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& u,
                                 std::vector<std::vector<int>>* provenance = nullptr);

// H \ W, i.e. H[V(H) \ W].
Hypergraph remove_vertices(const Hypergraph& h, const VertexSet& w);

// Components ordered by their smallest vertex id.
std::vector<VertexSet> connected_components(const Hypergraph& h);

// Vertices of V(H) \ blocked reachable from start \ blocked without entering
// blocked.
VertexSet reachable(const Hypergraph& h, const VertexSet& start, const VertexSet& blocked);

// True iff no path in H[V(H) \ S] joins A \ S to B \ S.
bool is_separator(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& s);

int max_pairwise_intersection(const Hypergraph& h);

}  // namespace ghw

#endif  // GHW_HYPERGRAPH_HPP
