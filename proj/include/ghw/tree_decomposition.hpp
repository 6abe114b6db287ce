#ifndef GHW_TREE_DECOMPOSITION_HPP
#define GHW_TREE_DECOMPOSITION_HPP

#include "ghw/hypergraph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ghw {

// Nodes are 0..size()-1. Covers, when present, hold root edge ids.
struct TreeDecomposition {
    std::size_t universe = 0;
    std::vector<VertexSet> bags;
    std::vector<std::vector<int>> adj;
    std::vector<std::optional<std::vector<int>>> covers;
    std::vector<bool> active;

    TreeDecomposition() = default;
    explicit TreeDecomposition(std::size_t universe_size) : universe(universe_size) {}

    int size() const { return static_cast<int>(bags.size()); }
    int add_node(VertexSet bag, bool is_active = true);
    void add_edge(int a, int b);
    int degree(int t) const { return static_cast<int>(adj[static_cast<std::size_t>(t)].size()); }
    const VertexSet& bag(int t) const { return bags[static_cast<std::size_t>(t)]; }

    std::vector<int> active_nodes() const;
    VertexSet bag_union(const std::vector<int>& nodes) const;
    VertexSet bag_union() const;
    // First node (by id) whose bag contains s, or -1.
    int find_node_containing(const VertexSet& s) const;
};

enum class ViolationKind {
    NoNodes,
    NotATree,
    VertexOutsideHypergraph,
    EdgeNotContained,
    Disconnected,
    InactiveNotLeaf,
    BadCover,
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(ViolationKind k) const;
};

const char* to_string(ViolationKind k);

ValidationReport validate(const Hypergraph& h, const TreeDecomposition& td);

// Max rho(bag) over the given nodes (default: the active ones). Writes the
// minimum covers found into td.covers. Throws std::invalid_argument when a bag
// leaves V(H).
int ghw_of(const Hypergraph& h, TreeDecomposition& td);
int ghw_of(const Hypergraph& h, TreeDecomposition& td, const std::vector<int>& nodes);

// T_{t,Y}: t plus everything reachable from t through Y. Node t becomes 0;
// old_ids (if given) receives the original id of each new node. Active flags
// carry over.
TreeDecomposition subtree_restrict(const TreeDecomposition& td, int t, const std::vector<int>& y,
                                   std::vector<int>* old_ids = nullptr);

// T+_{t,Y}: subtree_restrict plus an inactive leaf r (the last node) adjacent
// to t whose bag is the union of the bags left out.
TreeDecomposition subtree_extend(const TreeDecomposition& td, int t, const std::vector<int>& y,
                                 std::vector<int>* old_ids = nullptr);

// B^{-W}: every bag loses W.
TreeDecomposition remove_vertices(const TreeDecomposition& td, const VertexSet& w);

// Every bag intersected with u.
TreeDecomposition restrict_bags(const TreeDecomposition& td, const VertexSet& u);

// New root (node 0) with root_bag; each child tree hangs off its attach node.
TreeDecomposition glue(std::size_t universe, const VertexSet& root_bag,
                       const std::vector<std::pair<TreeDecomposition, int>>& children);

TreeDecomposition add_vertex_to_all_bags(const TreeDecomposition& td, int v);

// Neighbours of t inside the active set.
std::vector<int> active_neighbors(const TreeDecomposition& td, int t);

}  // namespace ghw

#endif  // GHW_TREE_DECOMPOSITION_HPP
