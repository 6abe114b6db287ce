#ifndef GHW_COMPRESS_HPP
#define GHW_COMPRESS_HPP

#include "ghw/gap_cover.hpp"
#include "ghw/hypergraph.hpp"
#include "ghw/separator.hpp"
#include "ghw/tree_decomposition.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace ghw {

struct BalancedPartition {
    std::vector<int> e0, e1, e2;  // local edge indices, a weak partition of E_W
    SeparatorResult separator;
};

struct PartitionNotFound {
    bool shyg = false;  // some candidate was rejected with a certificate
    std::optional<ShygRejectCertificate> certificate;
};

using PartitionOutcome = std::variant<BalancedPartition, PartitionNotFound>;

// Weak partitions with |E0| <= k and |E1|, |E2| <= 2 alpha, as ternary
// vectors over E_W in lexicographic order; the first one for which AppSep
// (k0 = k, p = 4 alpha + 1, all nodes active) separates U E1 from U E2 wins.
// A prefix whose partial unions already admit no separator is skipped whole:
// AppSep rejections without a certificate persist when A and B grow.
PartitionOutcome find_balanced_partition(const Hypergraph& h, const std::vector<int>& e_w, int k, int d,
                                         const TreeDecomposition& td, SeparatorContext& ctx,
                                         long long* candidates_tried = nullptr);

struct CompressStats {
    long long calls = 0;
    long long partitions_tried = 0;
    int max_depth = 0;        // deepest recursion level seen (top call is 1)
    long long leaf_calls = 0;  // calls that made no recursive call
    // Counters for properties the recursion is expected to keep.
    long long depth_violations = 0;      // recursion deeper than |V(H)| of the top call
    long long leaf_violations = 0;       // more leaves than rho(H)^2 of the top call
    long long shrink_violations = 0;     // |V(H_i)| >= |V(H)|
    long long interface_violations = 0;  // rho(W_i) > 3 alpha
    long long component_violations = 0;  // recursion with fewer than two components
};

struct CompressReject {
    enum class Kind { ShygTriggered, SeparatorExhausted };
    Kind kind = Kind::SeparatorExhausted;
    std::optional<ShygRejectCertificate> certificate;
};

using CompressOutcome = std::variant<TreeDecomposition, CompressReject>;

// Requires: td a decomposition of h with ghw <= 4 alpha + 1, rho(W) <= 3 alpha,
// and rho(H) >= 3 alpha + 1. Accepted output has ghw <= 4 alpha and W inside
// its root bag (node 0).
CompressOutcome compress(const Hypergraph& h, int k, int d, const TreeDecomposition& td, const VertexSet& w,
                         SeparatorContext& ctx, CompressStats& stats);

}  // namespace ghw

#endif  // GHW_COMPRESS_HPP
