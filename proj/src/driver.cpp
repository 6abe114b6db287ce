#include "ghw/driver.hpp"

#include "ghw/debug.hpp"
#include "ghw/edge_cover.hpp"
#include "ghw/gap_cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghw {

namespace {

// Per-bag covers (root edge ids) kept alongside the decomposition so that
// widening only re-solves bags whose cover can no longer absorb the new vertex.
class CoverBook {
public:
    CoverBook(const Hypergraph& root, int limit) : root_(root), limit_(limit) {}

    std::vector<std::vector<int>> covers;

    bool covers_vertex(const std::vector<int>& c, int v) const {
        const auto& edges = root_.universe()->root_edges;
        return std::any_of(c.begin(), c.end(),
                           [&](int e) { return edges[static_cast<std::size_t>(e)].test(static_cast<std::size_t>(v)); });
    }

    // Recomputes every cover exactly on hi; returns false if some bag needs
    // more than `cap` edges.
    bool rebuild(const Hypergraph& hi, const TreeDecomposition& td, int cap) {
        covers.assign(static_cast<std::size_t>(td.size()), {});
        for (int t = 0; t < td.size(); ++t) {
            auto c = min_edge_cover(hi, td.bag(t), cap);
            if (!c) return false;
            covers[static_cast<std::size_t>(t)] = to_root_edges(hi, c->edges);
        }
        return true;
    }

    // Bag t just gained v. Returns the new cover size, or limit+1 when the bag
    // needs more than `limit` edges.
    int widen(const Hypergraph& hi, const TreeDecomposition& td, int t, int v, long long& resolves) {
        auto& c = covers[static_cast<std::size_t>(t)];
        if (covers_vertex(c, v)) return static_cast<int>(c.size());
        if (static_cast<int>(c.size()) + 1 <= limit_) {
            c.push_back(root_.edge(root_.incident(v).front()).origins.front());
            std::sort(c.begin(), c.end());
            return static_cast<int>(c.size());
        }
        ++resolves;
        auto exact = min_edge_cover(hi, td.bag(t), limit_);
        if (!exact) return limit_ + 1;
        c = to_root_edges(hi, exact->edges);
        return static_cast<int>(c.size());
    }

    int width() const {
        std::size_t w = 0;
        for (const auto& c : covers) w = std::max(w, c.size());
        return static_cast<int>(w);
    }

private:
    const Hypergraph& root_;
    int limit_;
};

}  // namespace

DriverResult approx_ghw(const Hypergraph& h, int k, std::optional<int> d) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const int bound = max_pairwise_intersection(h);
    if (d) {
        if (*d < 1) throw std::invalid_argument("d must be at least 1");
        if (*d < bound) throw std::invalid_argument("hypergraph is not a (2,d)-hypergraph for the given d");
    }
    DriverResult result;
    result.k = k;
    result.d = d ? *d : std::max(1, bound);
    result.target = 4 * alpha(k, result.d);
    const int limit = static_cast<int>(result.target);

    const std::vector<int> order = members(h.vertices());
    TreeDecomposition td(h.universe_size());
    if (order.empty()) {
        td.add_node(h.empty_set());
        result.decomposition = td;
        return result;
    }

    SeparatorContext ctx;
    CoverBook book(h, limit);
    VertexSet prefix = h.empty_set();
    prefix.set(static_cast<std::size_t>(order.front()));
    td.add_node(prefix);
    book.covers.push_back({h.edge(h.incident(order.front()).front()).origins.front()});
    result.stats.widths.push_back(1);

    for (std::size_t i = 1; i < order.size(); ++i) {
        const int v = order[i];
        prefix.set(static_cast<std::size_t>(v));
        const Hypergraph hi = induced_subhypergraph(h, prefix);
        td = add_vertex_to_all_bags(td, v);

        bool over = false;
        for (int t = 0; t < td.size(); ++t) {
            if (book.widen(hi, td, t, v, result.stats.bag_resolves) > limit) over = true;
        }
        if (over) {
            // Adding one vertex raises the width by at most one.
            for (int t = 0; t < td.size(); ++t) {
                check_invariant(min_edge_cover(hi, td.bag(t), limit + 1).has_value(),
                                "driver: widened decomposition exceeds 4 alpha + 1");
            }
            ++result.stats.compress_calls;
            CompressOutcome out = compress(hi, k, result.d, td, h.empty_set(), ctx, result.stats.compress);
            if (auto* rej = std::get_if<CompressReject>(&out)) {
                result.outcome = DriverResult::Outcome::Rejected;
                result.reject_kind = rej->kind;
                result.certificate = rej->certificate;
                result.stats.separator = ctx.stats;
                return result;
            }
            td = std::move(std::get<TreeDecomposition>(out));
            check_invariant(book.rebuild(hi, td, limit), "driver: compressed decomposition exceeds 4 alpha");
        }
        debug_check([&] { return validate(hi, td).ok(); }, "driver: maintained pair is not a decomposition");
        result.stats.widths.push_back(book.width());
    }

    td.active.assign(static_cast<std::size_t>(td.size()), true);
    result.width = ghw_of(h, td);
    check_invariant(result.width <= limit, "driver: output width exceeds 4 alpha");
    result.decomposition = std::move(td);
    result.stats.separator = ctx.stats;
    return result;
}

}  // namespace ghw
