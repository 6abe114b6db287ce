#include "ghw/gap_cover.hpp"

#include "ghw/combinations.hpp"
#include "ghw/debug.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ghw {

long long alpha(int k, int d) {
    const long long kk = k;
    return kk * (3 * kk + d + 1) * (2 * kk - 1);
}

BigInt xi_prime(int n, int k, int d) {
    const BigInt base = BigInt((3 * k + 1)) * d;
    BigInt v = base + 1;
    for (int i = 1; i <= n; ++i) v = base * base * v + 1;
    return v;
}

BigInt xi(int k, int d) { return xi_prime(d, k, d); }

BigEdgeStructure build_big_edge_structure(const Hypergraph& h, const VertexSet& u,
                                          const ApproxParams& params) {
    BigEdgeStructure s{u, induced_subhypergraph(h, u), {}, {}, h.empty_set(), h.empty_set(), {}, {}, {}};
    const std::size_t threshold = static_cast<std::size_t>(params.p) * static_cast<std::size_t>(params.d);
    for (std::size_t i = 0; i < s.sub.num_edges(); ++i) {
        if (s.sub.edge(static_cast<int>(i)).vertices.count() > threshold) {
            s.big.push_back(static_cast<int>(i));
        } else {
            s.small.push_back(static_cast<int>(i));
        }
    }
    for (std::size_t i = 0; i < s.big.size(); ++i) {
        VertexSet b = s.sub.edge(s.big[i]).vertices;
        for (std::size_t j = 0; j < s.big.size(); ++j) {
            if (j != i) b -= s.sub.edge(s.big[j]).vertices;
        }
        s.u1 |= b;
        s.boundary.push_back(std::move(b));
    }
    s.u0 = (u & h.vertices()) - s.u1;

    const std::size_t span_limit = static_cast<std::size_t>(3 * params.k + params.d);
    for (std::size_t j = 0; j < s.small.size(); ++j) {
        const VertexSet& e = s.sub.edge(s.small[j]).vertices;
        EdgeIndexSet key(s.boundary.size());
        for (std::size_t i = 0; i < s.boundary.size(); ++i) {
            if (e.intersects(s.boundary[i])) key.set(i);
        }
        if (key.count() > span_limit) s.long_edges.push_back(static_cast<int>(j));
        s.sp.push_back(std::move(key));
    }

    debug_check([&] { return s.big.size() <= static_cast<std::size_t>(params.p); },
                "more than p big edges");
    debug_check(
        [&] {
            return std::all_of(s.boundary.begin(), s.boundary.end(), [&](const VertexSet& b) {
                return b.count() >= static_cast<std::size_t>(params.d) + 1;
            });
        },
        "boundary smaller than d+1");
    debug_check(
        [&] {
            const std::size_t p = static_cast<std::size_t>(params.p);
            return s.u0.count() <= 2 * p * p * static_cast<std::size_t>(params.d);
        },
        "U0 larger than 2p^2 d");
    return s;
}

namespace {

std::optional<ShygRejectCertificate> find_reject(const BigEdgeStructure& s, const ApproxParams& params) {
    const int r = 3 * params.k + params.d + 1;
    const BigInt threshold = xi(params.k, params.d);
    if (static_cast<int>(s.boundary.size()) < r) return std::nullopt;
    // Every witness is a long edge, so few long edges rule out a reject.
    if (BigInt(s.long_edges.size()) <= threshold) return std::nullopt;

    // Count, per r-subset of boundaries, the small edges meeting all of it.
    std::map<std::vector<int>, std::vector<int>> hits;
    const std::size_t cap = threshold + 1 > BigInt(s.small.size())
                                ? s.small.size()
                                : static_cast<std::size_t>(threshold + 1);
    for (int pos : s.long_edges) {
        const std::vector<int> span = members(s.sp[static_cast<std::size_t>(pos)]);
        for_each_combination(static_cast<int>(span.size()), r, [&](const std::vector<int>& idx) {
            std::vector<int> key;
            key.reserve(idx.size());
            for (int i : idx) key.push_back(span[static_cast<std::size_t>(i)]);
            auto& list = hits[key];
            if (list.size() < cap) list.push_back(pos);
            return true;
        });
    }
    for (const auto& [key, list] : hits) {
        if (BigInt(list.size()) <= threshold) continue;
        ShygRejectCertificate cert;
        cert.threshold = threshold;
        for (int b : key) cert.boundaries.push_back(s.boundary[static_cast<std::size_t>(b)]);
        for (int pos : list) {
            const Hyperedge& e = s.sub.edge(s.small[static_cast<std::size_t>(pos)]);
            cert.witnesses.push_back(e.vertices);
            cert.witness_edges.push_back(e.origins.front());
        }
        return cert;
    }
    return std::nullopt;
}

// Traces of edges on `part`, deduplicated, proper subsets of other traces
// dropped. Returns (trace, root edge id) pairs.
std::vector<std::pair<VertexSet, int>> maximal_traces(const Hypergraph& sub, const VertexSet& part) {
    std::vector<std::pair<VertexSet, int>> all;
    std::unordered_set<VertexSet> seen;
    for (const auto& e : sub.edges()) {
        VertexSet t = e.vertices & part;
        if (t.none() || !seen.insert(t).second) continue;
        all.emplace_back(std::move(t), e.origins.front());
    }
    std::vector<std::pair<VertexSet, int>> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
            dominated = j != i && all[i].first.is_proper_subset_of(all[j].first);
        }
        if (!dominated) out.push_back(all[i]);
    }
    return out;
}

}  // namespace

GapCoverOutcome gap_cover_approx(const Hypergraph& h, const VertexSet& u, const ApproxParams& params) {
    BigEdgeStructure s = build_big_edge_structure(h, u, params);
    if (static_cast<int>(s.big.size()) > params.p) {
        throw std::invalid_argument("gap_cover_approx: more than p big edges, so rho(U) > p");
    }
    if (auto cert = find_reject(s, params)) return *cert;

    const int k0 = params.k0;
    const int span_limit = 3 * params.k + params.d;
    GapCoverFamily fam;
    fam.beta = (span_limit + 1) * k0;
    fam.gamma = k0;

    // Covering sets of U0 with at most k0 edges: only the maximal choices
    // matter, since every member is later compared by inclusion.
    const auto traces = maximal_traces(s.sub, s.u0);
    std::vector<std::pair<VertexSet, std::vector<int>>> bases;
    const int f_size = std::min<int>(k0, static_cast<int>(traces.size()));
    for_each_combination(static_cast<int>(traces.size()), f_size, [&](const std::vector<int>& idx) {
        VertexSet w = h.empty_set();
        std::vector<int> cov;
        for (int i : idx) {
            w |= traces[static_cast<std::size_t>(i)].first;
            cov.push_back(traces[static_cast<std::size_t>(i)].second);
        }
        bases.emplace_back(std::move(w), std::move(cov));
        return true;
    });

    const int n_big = static_cast<int>(s.big.size());
    const int n_long = static_cast<int>(s.long_edges.size());
    std::unordered_map<VertexSet, std::size_t> index;
    auto add = [&](VertexSet m, std::vector<int> cov) {
        if (index.count(m) != 0) return;
        std::sort(cov.begin(), cov.end());
        cov.erase(std::unique(cov.begin(), cov.end()), cov.end());
        index.emplace(m, fam.members.size());
        fam.members.push_back(std::move(m));
        fam.covers.push_back(std::move(cov));
    };

    for (const auto& [base, base_cov] : bases) {
        for (int big = 0; big <= std::min(k0, n_big); ++big) {
            for (int lng = 0; lng <= std::min(k0 - big, n_long); ++lng) {
                const int shrt = k0 - big - lng;
                const int s_size = std::min(span_limit * shrt, n_big);
                for_each_combination(n_big, big, [&](const std::vector<int>& bi) {
                    VertexSet with_b = base;
                    std::vector<int> cov_b = base_cov;
                    for (int i : bi) {
                        const Hyperedge& e = s.sub.edge(s.big[static_cast<std::size_t>(i)]);
                        with_b |= e.vertices;
                        cov_b.push_back(e.origins.front());
                    }
                    for_each_combination(n_big, s_size, [&](const std::vector<int>& si) {
                        VertexSet with_s = with_b;
                        std::vector<int> cov_s = cov_b;
                        for (int i : si) {
                            with_s |= s.boundary[static_cast<std::size_t>(i)];
                            cov_s.push_back(s.sub.edge(s.big[static_cast<std::size_t>(i)]).origins.front());
                        }
                        for_each_combination(n_long, lng, [&](const std::vector<int>& li) {
                            VertexSet m = with_s;
                            std::vector<int> cov = cov_s;
                            for (int i : li) {
                                const int pos = s.long_edges[static_cast<std::size_t>(i)];
                                const Hyperedge& e = s.sub.edge(s.small[static_cast<std::size_t>(pos)]);
                                m |= e.vertices;
                                cov.push_back(e.origins.front());
                            }
                            add(std::move(m), std::move(cov));
                            return true;
                        });
                        return true;
                    });
                    return true;
                });
            }
        }
    }

    // Drop members strictly inside another member.
    std::vector<char> keep(fam.members.size(), 1);
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        for (std::size_t j = 0; j < fam.members.size(); ++j) {
            if (j != i && fam.members[i].is_proper_subset_of(fam.members[j])) {
                keep[i] = 0;
                break;
            }
        }
    }
    GapCoverFamily out;
    out.beta = fam.beta;
    out.gamma = fam.gamma;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        if (!keep[i]) continue;
        out.members.push_back(std::move(fam.members[i]));
        out.covers.push_back(std::move(fam.covers[i]));
    }
    return out;
}

bool certificate_is_valid(const ShygRejectCertificate& cert, int k, int d) {
    if (static_cast<int>(cert.boundaries.size()) < 3 * k + d + 1) return false;
    if (BigInt(cert.witnesses.size()) <= cert.threshold) return false;
    for (std::size_t i = 0; i < cert.boundaries.size(); ++i) {
        for (std::size_t j = i + 1; j < cert.boundaries.size(); ++j) {
            if (cert.boundaries[i].intersects(cert.boundaries[j])) return false;
        }
    }
    std::unordered_set<VertexSet> distinct;
    for (const auto& w : cert.witnesses) {
        if (!distinct.insert(w).second) return false;
        for (const auto& b : cert.boundaries) {
            if (!w.intersects(b)) return false;
        }
    }
    return true;
}

}  // namespace ghw
