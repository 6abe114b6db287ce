#ifndef GHW_EDGE_COVER_HPP
#define GHW_EDGE_COVER_HPP

#include "ghw/hypergraph.hpp"

#include <optional>
#include <vector>

namespace ghw {

struct EdgeCover {
    VertexSet target;
    std::vector<int> edges;  // local edge indices of the hypergraph, ascending
    int weight() const { return static_cast<int>(edges.size()); }
};

// Minimum cover of U by edges of H, or nullopt when rho(U) > budget (also when
// U has a vertex outside V(H)). Branch and bound; edges of H[U] with more than
// budget*d vertices are forced first.
std::optional<EdgeCover> min_edge_cover(const Hypergraph& h, const VertexSet& u, int budget);

// Weight of a minimum cover, or nullopt when it exceeds cap.
std::optional<int> rho(const Hypergraph& h, const VertexSet& u, int cap);

// rho(union of edges) == |edges|. Edge indices are local to h.
bool is_rho_stable(const Hypergraph& h, const std::vector<int>& edges);

struct StableExtension {
    VertexSet w;             // W plus the vertices that were added
    std::vector<int> edges;  // rho-stable, |edges| == m, W' within their union
};

// Grows W one vertex at a time (smallest id outside the current cover) until
// its minimum cover has weight m. nullopt iff rho(V(H)) < m.
// Requires rho(W) <= m.
std::optional<StableExtension> rho_stable_extend(const Hypergraph& h, const VertexSet& w, int m);

// Root edge ids for a cover expressed in local indices (first origin each).
std::vector<int> to_root_edges(const Hypergraph& h, const std::vector<int>& local_edges);

}  // namespace ghw

#endif  // GHW_EDGE_COVER_HPP
