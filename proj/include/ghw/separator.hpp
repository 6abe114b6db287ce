#ifndef GHW_SEPARATOR_HPP
#define GHW_SEPARATOR_HPP

#include "ghw/gap_cover.hpp"
#include "ghw/hypergraph.hpp"
#include "ghw/tree_decomposition.hpp"

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <variant>
#include <vector>

namespace ghw {

struct SeparatorResult {
    VertexSet separator;
    std::vector<int> cover;          // root edge ids covering the separator
    std::vector<VertexSet> pieces;   // gap-cover members whose union it is
};

struct SepReject {
    enum class Kind { ShygTriggered, NoSeparator };
    Kind kind = Kind::NoSeparator;
    std::optional<ShygRejectCertificate> certificate;
};

using SepOutcome = std::variant<SeparatorResult, SepReject>;

struct SeparatorStats {
    long long app_sep_calls = 0;
    long long small_sep_calls = 0;
    long long gap_cover_calls = 0;
    long long gap_cover_cache_hits = 0;
    // Recursive calls made from a node with |X| >= 3, and those whose child
    // active set exceeded floor(3|X|/4).
    long long shrink_checks = 0;
    long long shrink_violations = 0;
};

// Shared state for a run: counters plus memoised gap cover families. A family
// depends only on H[U], and every hypergraph in a run is an induced
// subhypergraph of one root, so the key is U with the parameters.
class SeparatorContext {
public:
    SeparatorStats stats;
    const GapCoverOutcome& gap_cover(const Hypergraph& h, const VertexSet& u, const ApproxParams& params);

private:
    using Key = std::tuple<VertexSet, int, int, int, int>;
    std::map<Key, GapCoverOutcome> cache_;
    const Universe* universe_ = nullptr;
};

struct BalancedVertex {
    int t = -1;
    std::vector<int> y1;
    std::vector<int> y2;
};

// Balanced split of the active nodes. Requires |X| >= 3 and every inactive node
// a leaf. Y1 and Y2 partition N_T(t); inactive neighbours go to Y2.
BalancedVertex get_bal_vert(const TreeDecomposition& td);

// Number of active nodes in T_{t,Y}.
int active_count_in_subtree(const TreeDecomposition& td, int t, const std::vector<int>& y);

// Active set X is td.active; p bounds rho of every active bag.
SepOutcome small_sep(const Hypergraph& h, const VertexSet& a, const VertexSet& b, int k0, int k, int d,
                     int p, const TreeDecomposition& td, SeparatorContext& ctx);

SepOutcome app_sep(const Hypergraph& h, const VertexSet& a, const VertexSet& b, int k0, int k, int d, int p,
                   const TreeDecomposition& td, SeparatorContext& ctx);

// Cover bound of an accepted separator: (3k+d+1)(2k-1)k0.
long long separator_cover_bound(int k0, int k, int d);

}  // namespace ghw

#endif  // GHW_SEPARATOR_HPP
