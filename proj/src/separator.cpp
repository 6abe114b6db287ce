#include "ghw/separator.hpp"

#include "ghw/debug.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghw {

const GapCoverOutcome& SeparatorContext::gap_cover(const Hypergraph& h, const VertexSet& u,
                                                   const ApproxParams& params) {
    if (universe_ != h.universe().get()) {
        cache_.clear();
        universe_ = h.universe().get();
    }
    ++stats.gap_cover_calls;
    Key key{u & h.vertices(), params.k, params.d, params.k0, params.p};
    auto it = cache_.find(key);
    if (it != cache_.end()) {
        ++stats.gap_cover_cache_hits;
        return it->second;
    }
    return cache_.emplace(std::move(key), gap_cover_approx(h, u, params)).first->second;
}

long long separator_cover_bound(int k0, int k, int d) {
    return static_cast<long long>(3 * k + d + 1) * (2 * k - 1) * k0;
}

namespace {

// Active-node subtree sizes of T[X] rooted at `root`.
struct ActiveTree {
    std::vector<int> parent;
    std::vector<int> size;
};

ActiveTree root_active_tree(const TreeDecomposition& td, int root) {
    ActiveTree at{std::vector<int>(static_cast<std::size_t>(td.size()), -1),
                  std::vector<int>(static_cast<std::size_t>(td.size()), 0)};
    std::vector<int> order{root};
    std::vector<char> seen(static_cast<std::size_t>(td.size()), 0);
    seen[static_cast<std::size_t>(root)] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int n : active_neighbors(td, order[i])) {
            if (seen[static_cast<std::size_t>(n)]) continue;
            seen[static_cast<std::size_t>(n)] = 1;
            at.parent[static_cast<std::size_t>(n)] = order[i];
            order.push_back(n);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        at.size[static_cast<std::size_t>(*it)] += 1;
        int par = at.parent[static_cast<std::size_t>(*it)];
        if (par >= 0) at.size[static_cast<std::size_t>(par)] += at.size[static_cast<std::size_t>(*it)];
    }
    return at;
}

// Active nodes on y's side once the edge x-y is cut.
int side_size(const ActiveTree& at, int n, int x, int y) {
    if (at.parent[static_cast<std::size_t>(y)] == x) return at.size[static_cast<std::size_t>(y)];
    return n - at.size[static_cast<std::size_t>(x)];
}

SeparatorResult combine(const SeparatorResult& a, const SeparatorResult& b, const VertexSet& w,
                        const std::vector<int>& w_cover) {
    SeparatorResult out{a.separator | b.separator | w, a.cover, a.pieces};
    out.cover.insert(out.cover.end(), b.cover.begin(), b.cover.end());
    out.cover.insert(out.cover.end(), w_cover.begin(), w_cover.end());
    std::sort(out.cover.begin(), out.cover.end());
    out.cover.erase(std::unique(out.cover.begin(), out.cover.end()), out.cover.end());
    out.pieces.insert(out.pieces.end(), b.pieces.begin(), b.pieces.end());
    out.pieces.push_back(w);
    return out;
}

void count_shrink(SeparatorContext& ctx, int parent_x, int child_x) {
    ++ctx.stats.shrink_checks;
    if (child_x > (3 * parent_x) / 4) ++ctx.stats.shrink_violations;
}

}  // namespace

BalancedVertex get_bal_vert(const TreeDecomposition& td) {
    const std::vector<int> x_nodes = td.active_nodes();
    const int n = static_cast<int>(x_nodes.size());
    if (n < 3) throw std::invalid_argument("get_bal_vert needs at least three active nodes");
    for (int t = 0; t < td.size(); ++t) {
        if (!td.active[static_cast<std::size_t>(t)] && td.degree(t) > 1) {
            throw std::invalid_argument("get_bal_vert: inactive node is not a leaf");
        }
    }
    const ActiveTree at = root_active_tree(td, x_nodes.front());

    int x = x_nodes.front();
    int prev = -1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int y : active_neighbors(td, x)) {
            if (y != prev && 3 * side_size(at, n, x, y) > 2 * n) {
                prev = x;
                x = y;
                moved = true;
                break;
            }
        }
    }

    std::vector<int> w1;
    int t = x;
    for (int y : active_neighbors(td, x)) {
        if (y != prev && 2 * side_size(at, n, x, y) > n) {
            t = y;
            for (int z : active_neighbors(td, y)) {
                if (z != x) w1.push_back(z);
            }
            break;
        }
    }
    if (t == x) {
        std::vector<int> nbrs = active_neighbors(td, x);
        std::stable_sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
            return side_size(at, n, x, a) > side_size(at, n, x, b);
        });
        int sum = 0;
        for (int y : nbrs) {
            w1.push_back(y);
            sum += side_size(at, n, x, y);
            if (3 * sum > n - 1) break;
        }
    }

    BalancedVertex out;
    out.t = t;
    for (int y : td.adj[static_cast<std::size_t>(t)]) {
        if (std::find(w1.begin(), w1.end(), y) != w1.end()) {
            out.y1.push_back(y);
        } else {
            out.y2.push_back(y);
        }
    }
    return out;
}

int active_count_in_subtree(const TreeDecomposition& td, int t, const std::vector<int>& y) {
    std::vector<int> ids;
    subtree_restrict(td, t, y, &ids);
    int c = 0;
    for (int i : ids) c += td.active[static_cast<std::size_t>(i)] ? 1 : 0;
    return c;
}

SepOutcome small_sep(const Hypergraph& h, const VertexSet& a, const VertexSet& b, int k0, int k, int d,
                     int p, const TreeDecomposition& td, SeparatorContext& ctx) {
    ++ctx.stats.small_sep_calls;
    const std::vector<int> x_nodes = td.active_nodes();
    if (x_nodes.size() > 2) throw std::invalid_argument("small_sep needs at most two active nodes");
    if (x_nodes.empty()) {
        VertexSet none = h.empty_set();
        if (is_separator(h, a, b, none)) return SeparatorResult{none, {}, {}};
        return SepReject{SepReject::Kind::NoSeparator, std::nullopt};
    }

    const VertexSet u = td.bag_union(x_nodes);
    const int p_eff = static_cast<int>(x_nodes.size()) * p;
    const GapCoverOutcome& sets = ctx.gap_cover(h, u, ApproxParams{k, d, k0, p_eff});
    if (const auto* cert = std::get_if<ShygRejectCertificate>(&sets)) {
        return SepReject{SepReject::Kind::ShygTriggered, *cert};
    }
    const auto& fam = std::get<GapCoverFamily>(sets);
    // The full family lists the empty set first; the maximal-only family drops
    // it, so try it here to keep the same first hit.
    if (is_separator(h, a, b, h.empty_set())) return SeparatorResult{h.empty_set(), {}, {}};
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        if (is_separator(h, a, b, fam.members[i])) {
            return SeparatorResult{fam.members[i], fam.covers[i], {fam.members[i]}};
        }
    }
    return SepReject{SepReject::Kind::NoSeparator, std::nullopt};
}

SepOutcome app_sep(const Hypergraph& h, const VertexSet& a, const VertexSet& b, int k0, int k, int d, int p,
                   const TreeDecomposition& td, SeparatorContext& ctx) {
    ++ctx.stats.app_sep_calls;
    const int n_x = static_cast<int>(td.active_nodes().size());
    if (n_x <= 2) return small_sep(h, a, b, k0, k, d, p, td, ctx);

    const BalancedVertex bv = get_bal_vert(td);
    for (const auto* y : {&bv.y1, &bv.y2}) {
        TreeDecomposition ext = subtree_extend(td, bv.t, *y);
        count_shrink(ctx, n_x, static_cast<int>(ext.active_nodes().size()));
        SepOutcome out = app_sep(h, a, b, k0, k, d, p, ext, ctx);
        if (std::holds_alternative<SeparatorResult>(out)) return out;
        if (std::get<SepReject>(out).kind == SepReject::Kind::ShygTriggered) return out;
    }

    const VertexSet& bag_t = td.bag(bv.t);
    const GapCoverOutcome& sets = ctx.gap_cover(h, bag_t, ApproxParams{k, d, k0, p});
    if (const auto* cert = std::get_if<ShygRejectCertificate>(&sets)) {
        return SepReject{SepReject::Kind::ShygTriggered, *cert};
    }
    const auto& fam = std::get<GapCoverFamily>(sets);
    if (k0 < 2) return SepReject{SepReject::Kind::NoSeparator, std::nullopt};

    const TreeDecomposition side_td[2] = {subtree_restrict(td, bv.t, bv.y1),
                                          subtree_restrict(td, bv.t, bv.y2)};
    const VertexSet side_v[2] = {side_td[0].bag_union() & h.vertices(), side_td[1].bag_union() & h.vertices()};
    const int side_x[2] = {static_cast<int>(side_td[0].active_nodes().size()),
                           static_cast<int>(side_td[1].active_nodes().size())};

    for (std::size_t wi = 0; wi < fam.members.size(); ++wi) {
        const VertexSet& w = fam.members[wi];
        const Hypergraph around = induced_subhypergraph(h, bag_t - w);
        const std::vector<VertexSet> comps = connected_components(around);
        if (comps.size() >= 31) throw std::runtime_error("app_sep: too many components to 2-colour");

        Hypergraph side_h[2] = {induced_subhypergraph(h, side_v[0] - w), induced_subhypergraph(h, side_v[1] - w)};
        TreeDecomposition side_w[2] = {remove_vertices(side_td[0], w), remove_vertices(side_td[1], w)};
        VertexSet side_a[2] = {(a & side_v[0]) - w, (a & side_v[1]) - w};
        VertexSet side_b[2] = {(b & side_v[0]) - w, (b & side_v[1]) - w};

        for (int k1 = 1; k1 < k0; ++k1) {
            for (int k2 = 1; k1 + k2 <= k0; ++k2) {
                const int budget[2] = {k1, k2};
                const unsigned long colourings = 1UL << comps.size();
                for (unsigned long mask = 0; mask < colourings; ++mask) {
                    VertexSet c1 = h.empty_set();
                    VertexSet c2 = h.empty_set();
                    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
                        if ((mask >> ci) & 1UL) {
                            c2 |= comps[ci];
                        } else {
                            c1 |= comps[ci];
                        }
                    }
                    SeparatorResult got[2];
                    bool ok = true;
                    for (int i = 0; i < 2 && ok; ++i) {
                        count_shrink(ctx, n_x, side_x[i]);
                        SepOutcome out = app_sep(side_h[i], side_a[i] | c1, side_b[i] | c2, budget[i], k, d, p,
                                                 side_w[i], ctx);
                        if (auto* rej = std::get_if<SepReject>(&out)) {
                            if (rej->kind == SepReject::Kind::ShygTriggered) return out;
                            ok = false;
                        } else {
                            got[i] = std::move(std::get<SeparatorResult>(out));
                        }
                    }
                    if (ok) return combine(got[0], got[1], w, fam.covers[wi]);
                }
            }
        }
    }
    return SepReject{SepReject::Kind::NoSeparator, std::nullopt};
}

}  // namespace ghw
