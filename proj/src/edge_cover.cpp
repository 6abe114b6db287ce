#include "ghw/edge_cover.hpp"

#include <algorithm>
#include <unordered_set>

namespace ghw {

namespace {

class CoverSearch {
public:
    CoverSearch(std::vector<VertexSet> sets, std::vector<int> ids, int limit)
        : sets_(std::move(sets)), ids_(std::move(ids)), best_size_(limit + 1) {}

    // Smallest subfamily covering `need`, if it has at most `limit` sets.
    std::optional<std::vector<int>> run(const VertexSet& need) {
        if (need.none()) return std::vector<int>{};
        greedy(need);
        std::vector<int> chosen;
        dfs(need, chosen);
        if (!found_) return std::nullopt;
        std::vector<int> out;
        for (int i : best_) out.push_back(ids_[static_cast<std::size_t>(i)]);
        return out;
    }

private:
    void record(const std::vector<int>& chosen) {
        if (static_cast<int>(chosen.size()) < best_size_) {
            best_size_ = static_cast<int>(chosen.size());
            best_ = chosen;
            found_ = true;
        }
    }

    // Seeds the incumbent; record() ignores it when over the limit.
    void greedy(const VertexSet& need) {
        VertexSet left = need;
        std::vector<int> chosen;
        while (left.any()) {
            int pick = -1;
            std::size_t gain = 0;
            for (std::size_t i = 0; i < sets_.size(); ++i) {
                std::size_t g = (sets_[i] & left).count();
                if (g > gain) {
                    gain = g;
                    pick = static_cast<int>(i);
                }
            }
            if (pick < 0) return;
            chosen.push_back(pick);
            left -= sets_[static_cast<std::size_t>(pick)];
        }
        record(chosen);
    }

    int lower_bound(const VertexSet& left) const {
        // Vertices no two of which share a set each need their own set.
        int packed = 0;
        VertexSet blocked(left.size());
        std::size_t largest = 0;
        for (const auto& s : sets_) largest = std::max(largest, (s & left).count());
        for_each_member(left, [&](int v) {
            if (blocked.test(static_cast<std::size_t>(v))) return;
            ++packed;
            for (const auto& s : sets_) {
                if (s.test(static_cast<std::size_t>(v))) blocked |= s;
            }
        });
        if (largest == 0) return 1 << 28;
        int by_size = static_cast<int>((left.count() + largest - 1) / largest);
        return std::max(packed, by_size);
    }

    void dfs(const VertexSet& left, std::vector<int>& chosen) {
        if (left.none()) {
            record(chosen);
            return;
        }
        if (static_cast<int>(chosen.size()) + lower_bound(left) >= best_size_) return;

        // Branch on the uncovered vertex lying in the fewest sets.
        int pivot = -1;
        std::size_t pivot_deg = sets_.size() + 1;
        for_each_member(left, [&](int v) {
            std::size_t deg = 0;
            for (const auto& s : sets_) deg += s.test(static_cast<std::size_t>(v)) ? 1 : 0;
            if (deg < pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        });
        if (pivot_deg == 0) return;

        std::vector<std::pair<std::size_t, int>> order;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            if (sets_[i].test(static_cast<std::size_t>(pivot))) {
                order.emplace_back((sets_[i] & left).count(), static_cast<int>(i));
            }
        }
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        for (const auto& [gain, i] : order) {
            chosen.push_back(i);
            dfs(left - sets_[static_cast<std::size_t>(i)], chosen);
            chosen.pop_back();
            if (static_cast<int>(chosen.size()) + 1 >= best_size_) return;
        }
    }

    std::vector<VertexSet> sets_;
    std::vector<int> ids_;
    std::vector<int> best_;
    int best_size_;
    bool found_ = false;
};

}  // namespace

std::optional<EdgeCover> min_edge_cover(const Hypergraph& h, const VertexSet& u, int budget) {
    if (budget < 0) return std::nullopt;
    if (!u.is_subset_of(h.vertices())) return std::nullopt;
    EdgeCover result{u, {}};
    if (u.none()) return result;

    const long long d = h.intersection_bound();
    std::vector<int> forced;
    VertexSet covered(u.size());
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        const VertexSet r = h.edge(static_cast<int>(i)).vertices & u;
        if (static_cast<long long>(r.count()) > static_cast<long long>(budget) * d) {
            forced.push_back(static_cast<int>(i));
            covered |= r;
        }
    }
    if (static_cast<int>(forced.size()) > budget) return std::nullopt;
    const VertexSet need = u - covered;

    // Candidate sets restricted to what is still uncovered: dedupe, then drop
    // sets strictly contained in another.
    std::vector<VertexSet> sets;
    std::vector<int> ids;
    std::unordered_set<VertexSet> seen;
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        VertexSet r = h.edge(static_cast<int>(i)).vertices & need;
        if (r.none() || !seen.insert(r).second) continue;
        sets.push_back(std::move(r));
        ids.push_back(static_cast<int>(i));
    }
    std::vector<VertexSet> kept_sets;
    std::vector<int> kept_ids;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
            dominated = j != i && sets[i].is_proper_subset_of(sets[j]);
        }
        if (!dominated) {
            kept_sets.push_back(sets[i]);
            kept_ids.push_back(ids[i]);
        }
    }

    CoverSearch search(std::move(kept_sets), std::move(kept_ids),
                       budget - static_cast<int>(forced.size()));
    auto rest = search.run(need);
    if (!rest) return std::nullopt;
    result.edges = forced;
    result.edges.insert(result.edges.end(), rest->begin(), rest->end());
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

std::optional<int> rho(const Hypergraph& h, const VertexSet& u, int cap) {
    auto c = min_edge_cover(h, u, cap);
    if (!c) return std::nullopt;
    return c->weight();
}

bool is_rho_stable(const Hypergraph& h, const std::vector<int>& edges) {
    const int n = static_cast<int>(edges.size());
    auto r = rho(h, h.edge_union(edges), n);
    return r && *r == n;
}

std::optional<StableExtension> rho_stable_extend(const Hypergraph& h, const VertexSet& w, int m) {
    VertexSet cur = w;
    auto cover = min_edge_cover(h, cur, m);
    if (!cover) return std::nullopt;
    while (cover->weight() < m) {
        VertexSet outside = h.vertices() - h.edge_union(cover->edges);
        if (outside.none()) return std::nullopt;
        cur.set(outside.find_first());
        cover = min_edge_cover(h, cur, m);
        if (!cover) return std::nullopt;
    }
    return StableExtension{cur, cover->edges};
}

std::vector<int> to_root_edges(const Hypergraph& h, const std::vector<int>& local_edges) {
    std::vector<int> out;
    out.reserve(local_edges.size());
    for (int e : local_edges) out.push_back(h.edge(e).origins.front());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace ghw
