#ifndef GHW_ORACLE_HPP
#define GHW_ORACLE_HPP

#include "ghw/hypergraph.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ghw {

// Brute-force engines for tests and the `exact` verb. They refuse loudly when
// an instance is over budget instead of degrading.

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct OracleBudget {
    int max_vertices = 16;
    int max_edges = 32;
    int max_k = 6;
};

// Smallest k <= k_max with ghw(H) <= k, or nullopt when ghw(H) > k_max.
std::optional<int> exact_ghw(const Hypergraph& h, int k_max, const OracleBudget& budget = {});

// GYO ear removal; true iff H is alpha-acyclic (ghw 1).
bool gyo_acyclic(const Hypergraph& h);

struct OracleSeparator {
    VertexSet separator;
    std::vector<int> edges;  // local edge indices whose union (within restrict_to) it is
};

// An (A,B)-separator S within restrict_to with rho(S) <= k0, or nullopt if
// none exists. Tries S = (union F) & restrict_to for every |F| <= k0; this is
// exhaustive because supersets of separators separate.
std::optional<OracleSeparator> exact_min_separator(const Hypergraph& h, const VertexSet& a, const VertexSet& b,
                                                   const VertexSet& restrict_to, int k0,
                                                   long long max_subsets = 20'000'000);

// Every W within U coverable by at most k0 edges, each with a witness cover
// (local edge indices). Requires |U| <= 14.
std::vector<std::pair<VertexSet, std::vector<int>>> enumerate_small_covered_subsets(const Hypergraph& h,
                                                                                    const VertexSet& u, int k0);

struct Shyg {
    std::vector<VertexSet> u;  // a pairwise disjoint subedges
    std::vector<VertexSet> s;  // b subedges touching every u
};

// Searches for an (a,b)-shyg built only from whole edges and private parts of
// edges (vertices in no other edge). nullopt is not a proof that none exists.
std::optional<Shyg> find_shyg_bruteforce(const Hypergraph& h, int a, int b, long long max_steps = 50'000'000);

// The defining conditions of an (a,b)-shyg, checked directly.
bool is_shyg(const Hypergraph& h, const Shyg& g, int a, int b);

}  // namespace ghw

#endif  // GHW_ORACLE_HPP
