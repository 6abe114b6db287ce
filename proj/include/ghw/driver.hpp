#ifndef GHW_DRIVER_HPP
#define GHW_DRIVER_HPP

#include "ghw/compress.hpp"
#include "ghw/hypergraph.hpp"
#include "ghw/separator.hpp"
#include "ghw/tree_decomposition.hpp"

#include <optional>
#include <vector>

namespace ghw {

struct DriverStats {
    // Upper bound on the maintained decomposition's width after each vertex.
    std::vector<int> widths;
    long long compress_calls = 0;
    long long bag_resolves = 0;
    CompressStats compress;
    SeparatorStats separator;
};

struct DriverResult {
    enum class Outcome { Accepted, Rejected };
    Outcome outcome = Outcome::Accepted;
    std::optional<TreeDecomposition> decomposition;  // covers materialised
    int width = 0;                                   // exact ghw of the decomposition
    CompressReject::Kind reject_kind = CompressReject::Kind::SeparatorExhausted;
    std::optional<ShygRejectCertificate> certificate;
    int k = 0;
    int d = 0;
    long long target = 0;  // 4 alpha(k, d)
    DriverStats stats;

    bool accepted() const { return outcome == Outcome::Accepted; }
};

// Iterative compression over vertices in id (= name) order. Without d the
// hypergraph's own intersection bound is used (at least 1). Throws
// std::invalid_argument if k < 1 or H is not a (2,d)-hypergraph.
DriverResult approx_ghw(const Hypergraph& h, int k, std::optional<int> d = std::nullopt);

}  // namespace ghw

#endif  // GHW_DRIVER_HPP
