#ifndef GHW_GAP_COVER_HPP
#define GHW_GAP_COVER_HPP

#include "ghw/hypergraph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <variant>
#include <vector>

namespace ghw {

using BigInt = boost::multiprecision::cpp_int;

struct ApproxParams {
    int k = 1;
    int d = 1;
    int k0 = 1;
    int p = 1;
};

// k(3k+d+1)(2k-1)
long long alpha(int k, int d);

// xi'(0) = (3k+1)d + 1, xi'(n) = ((3k+1)d)^2 xi'(n-1) + 1; xi(k,d) = xi'(d).
BigInt xi_prime(int n, int k, int d);
BigInt xi(int k, int d);

struct BigEdgeStructure {
    VertexSet u;
    Hypergraph sub;                    // H[U]
    std::vector<int> big;              // edges of sub with more than p*d vertices
    std::vector<VertexSet> boundary;   // parallel to big: e minus the other big edges
    VertexSet u1;                      // union of the boundaries
    VertexSet u0;                      // U \ u1
    std::vector<int> small;            // the remaining edges of sub
    std::vector<EdgeIndexSet> sp;      // parallel to small, over boundary indices
    std::vector<int> long_edges;       // positions in `small` with |sp| > 3k+d
};

BigEdgeStructure build_big_edge_structure(const Hypergraph& h, const VertexSet& u,
                                          const ApproxParams& params);

struct GapCoverFamily {
    std::vector<VertexSet> members;
    // Per member, root edge ids whose union contains it; at most beta of them.
    std::vector<std::vector<int>> covers;
    int beta = 0;
    int gamma = 0;
};

struct ShygRejectCertificate {
    std::vector<VertexSet> boundaries;  // the chosen E', 3k+d+1 disjoint subedges
    std::vector<VertexSet> witnesses;   // small edges meeting all of them
    std::vector<int> witness_edges;     // root ids of the witnesses
    BigInt threshold;                   // xi(k,d); witnesses.size() exceeds it
};

using GapCoverOutcome = std::variant<GapCoverFamily, ShygRejectCertificate>;

// A (3k+d+1)k0, k0-gap cover approximator of U, or Reject when some 3k+d+1
// boundaries are all met by more than xi(k,d) small edges.
// Requires rho(U) <= p; throws std::invalid_argument if |BE| > p.
// Only inclusion-maximal members are kept.
GapCoverOutcome gap_cover_approx(const Hypergraph& h, const VertexSet& u, const ApproxParams& params);

bool certificate_is_valid(const ShygRejectCertificate& cert, int k, int d);

}  // namespace ghw

#endif  // GHW_GAP_COVER_HPP
