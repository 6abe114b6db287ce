#include "ghw/compress.hpp"

#include "ghw/debug.hpp"
#include "ghw/edge_cover.hpp"

#include <stdexcept>

namespace ghw {

namespace {

class PartitionSearch {
public:
    PartitionSearch(const Hypergraph& h, const std::vector<int>& e_w, int k, int d, const TreeDecomposition& td,
                    SeparatorContext& ctx)
        : h_(h), e_w_(e_w), k_(k), d_(d), td_(td), ctx_(ctx),
          cap_{k, static_cast<int>(2 * alpha(k, d)), static_cast<int>(2 * alpha(k, d))},
          p_(static_cast<int>(4 * alpha(k, d) + 1)) {}

    PartitionOutcome run(long long* tried) {
        std::vector<int> side(e_w_.size(), -1);
        std::vector<int> count{0, 0, 0};
        std::optional<BalancedPartition> found = dfs(0, side, count);
        if (tried != nullptr) *tried += tried_;
        if (found) return *found;
        return not_found_;
    }

private:
    VertexSet union_of(const std::vector<int>& side, std::size_t upto, int which) const {
        VertexSet s = h_.empty_set();
        for (std::size_t i = 0; i < upto; ++i) {
            if (side[i] == which) s |= h_.edge(e_w_[i]).vertices;
        }
        return s;
    }

    SepOutcome separate(const std::vector<int>& side, std::size_t upto) {
        return app_sep(h_, union_of(side, upto, 1), union_of(side, upto, 2), k_, k_, d_, p_, td_, ctx_);
    }

    std::optional<BalancedPartition> dfs(std::size_t pos, std::vector<int>& side, std::vector<int>& count) {
        if (pos == e_w_.size()) {
            ++tried_;
            SepOutcome out = separate(side, pos);
            if (auto* res = std::get_if<SeparatorResult>(&out)) {
                BalancedPartition bp;
                for (std::size_t i = 0; i < side.size(); ++i) {
                    auto& dst = side[i] == 0 ? bp.e0 : (side[i] == 1 ? bp.e1 : bp.e2);
                    dst.push_back(e_w_[i]);
                }
                bp.separator = std::move(*res);
                return bp;
            }
            note_reject(std::get<SepReject>(out));
            return std::nullopt;
        }
        // Partial check: once both sides are non-empty, a rejection without a
        // certificate rules out every completion.
        if (pos > 0 && count[1] > 0 && count[2] > 0 && side[pos - 1] != 0) {
            SepOutcome out = separate(side, pos);
            if (auto* rej = std::get_if<SepReject>(&out)) {
                if (rej->kind == SepReject::Kind::NoSeparator) return std::nullopt;
            }
        }
        for (int s = 0; s < 3; ++s) {
            if (count[static_cast<std::size_t>(s)] >= cap_[s]) continue;
            side[pos] = s;
            ++count[static_cast<std::size_t>(s)];
            auto got = dfs(pos + 1, side, count);
            --count[static_cast<std::size_t>(s)];
            side[pos] = -1;
            if (got) return got;
        }
        return std::nullopt;
    }

    void note_reject(const SepReject& rej) {
        if (rej.kind == SepReject::Kind::ShygTriggered && !not_found_.shyg) {
            not_found_.shyg = true;
            not_found_.certificate = rej.certificate;
        }
    }

    const Hypergraph& h_;
    const std::vector<int>& e_w_;
    int k_;
    int d_;
    const TreeDecomposition& td_;
    SeparatorContext& ctx_;
    int cap_[3];
    int p_;
    long long tried_ = 0;
    PartitionNotFound not_found_;
};

struct Frame {
    int depth;
    std::size_t top_vertices;
};

CompressOutcome compress_rec(const Hypergraph& h, int k, int d, const TreeDecomposition& td, const VertexSet& w,
                             SeparatorContext& ctx, CompressStats& stats, const Frame& frame) {
    ++stats.calls;
    if (frame.depth > stats.max_depth) stats.max_depth = frame.depth;
    if (static_cast<std::size_t>(frame.depth) > frame.top_vertices) ++stats.depth_violations;

    const long long a = alpha(k, d);
    const int width = static_cast<int>(4 * a);
    debug_check([&] { return validate(h, td).ok(); }, "compress: input is not a tree decomposition");

    auto ext = rho_stable_extend(h, w, static_cast<int>(3 * a + 1));
    if (!ext) throw std::invalid_argument("compress: rho(H) is below 3 alpha + 1");
    const std::vector<int>& e_w = ext->edges;

    TreeDecomposition all_active = td;
    all_active.active.assign(static_cast<std::size_t>(td.size()), true);
    PartitionOutcome part = find_balanced_partition(h, e_w, k, d, all_active, ctx, &stats.partitions_tried);
    if (auto* nf = std::get_if<PartitionNotFound>(&part)) {
        if (nf->shyg) return CompressReject{CompressReject::Kind::ShygTriggered, nf->certificate};
        return CompressReject{CompressReject::Kind::SeparatorExhausted, std::nullopt};
    }
    const VertexSet x = std::get<BalancedPartition>(part).separator.separator;
    const VertexSet ew_union = h.edge_union(e_w);

    const std::vector<VertexSet> comps = connected_components(remove_vertices(h, x));
    std::vector<VertexSet> large;
    std::vector<VertexSet> small;
    for (const auto& c : comps) {
        if (rho(h, c | x, width)) {
            small.push_back(c);
        } else {
            large.push_back(c);
        }
    }
    if (!large.empty() && comps.size() < 2) ++stats.component_violations;
    if (large.empty()) ++stats.leaf_calls;

    std::vector<std::pair<TreeDecomposition, int>> children;
    for (const auto& c : large) {
        const VertexSet scope = c | x;
        const Hypergraph hi = induced_subhypergraph(h, scope);
        if (hi.num_vertices() >= h.num_vertices()) {
            ++stats.shrink_violations;
            throw InvariantViolation("compress: recursive instance does not shrink");
        }
        const VertexSet wi = (ew_union & c) | x;
        if (!rho(h, wi, static_cast<int>(3 * a))) ++stats.interface_violations;
        CompressOutcome sub = compress_rec(hi, k, d, restrict_bags(td, scope), wi, ctx, stats,
                                           Frame{frame.depth + 1, frame.top_vertices});
        if (std::holds_alternative<CompressReject>(sub)) return sub;
        TreeDecomposition& out = std::get<TreeDecomposition>(sub);
        int attach = out.find_node_containing(wi);
        check_invariant(attach >= 0, "compress: interface missing from recursive output");
        children.emplace_back(std::move(out), attach);
    }
    for (const auto& c : small) {
        TreeDecomposition leaf(h.universe_size());
        leaf.add_node(c | x);
        children.emplace_back(std::move(leaf), 0);
    }
    TreeDecomposition result = glue(h.universe_size(), w | x, children);
    debug_check([&] { return validate(h, result).ok(); }, "compress: output is not a tree decomposition");
    return result;
}

}  // namespace

PartitionOutcome find_balanced_partition(const Hypergraph& h, const std::vector<int>& e_w, int k, int d,
                                         const TreeDecomposition& td, SeparatorContext& ctx,
                                         long long* candidates_tried) {
    PartitionSearch search(h, e_w, k, d, td, ctx);
    return search.run(candidates_tried);
}

CompressOutcome compress(const Hypergraph& h, int k, int d, const TreeDecomposition& td, const VertexSet& w,
                         SeparatorContext& ctx, CompressStats& stats) {
    const long long before_leaves = stats.leaf_calls;
    CompressOutcome out = compress_rec(h, k, d, td, w, ctx, stats, Frame{1, h.num_vertices()});
    // rho(H) > 4 alpha on entry, so (4 alpha + 1)^2 is a lower bound on rho(H)^2.
    const long long bound = (4 * alpha(k, d) + 1) * (4 * alpha(k, d) + 1);
    if (stats.leaf_calls - before_leaves > bound) ++stats.leaf_violations;
    return out;
}

}  // namespace ghw
