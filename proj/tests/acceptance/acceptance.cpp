// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero if
// any criterion fails.
#include "support.hpp"

#include "ghw/compress.hpp"
#include "ghw/driver.hpp"
#include "ghw/edge_cover.hpp"
#include "ghw/gap_cover.hpp"
#include "ghw/generators.hpp"
#include "ghw/oracle.hpp"
#include "ghw/separator.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <queue>
#include <sstream>

namespace ghw {
namespace {

struct Outcome {
    long long violations = 0;
    std::string detail;
};

// Counters gathered from every suite that runs Compress or AppSep.
struct Recursion {
    long long compress_calls = 0;
    long long compress_leaves = 0;
    int max_depth_seen = 0;
    long long depth_over_v = 0;  // independent: max depth against |V| of the input
    long long depth_violations = 0;
    long long leaf_violations = 0;
    long long shrink_violations = 0;
    long long sep_shrink_checks = 0;
    long long sep_shrink_violations = 0;

    void add(const Hypergraph& h, const DriverResult& r) {
        compress_calls += r.stats.compress.calls;
        compress_leaves += r.stats.compress.leaf_calls;
        max_depth_seen = std::max(max_depth_seen, r.stats.compress.max_depth);
        if (r.stats.compress.max_depth > static_cast<int>(h.num_vertices())) ++depth_over_v;
        depth_violations += r.stats.compress.depth_violations;
        leaf_violations += r.stats.compress.leaf_violations;
        shrink_violations += r.stats.compress.shrink_violations;
        add(r.stats.separator);
    }
    void add(const SeparatorStats& s) {
        sep_shrink_checks += s.shrink_checks;
        sep_shrink_violations += s.shrink_violations;
    }
};

Recursion recursion;

std::string fmt(const char* f, long long a, long long b = 0, long long c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// Criterion 1
Outcome formulas() {
    Outcome o;
    o.violations += alpha(1, 1) != 5;
    o.violations += alpha(2, 1) != 48;
    o.violations += alpha(2, 3) != 60;
    o.violations += xi_prime(0, 1, 1) != 5;
    o.violations += xi(1, 1) != 81;
    o.violations += xi_prime(1, 2, 2) != 2941;
    o.detail = "6 values";
    return o;
}

// Criterion 2
Outcome edge_cover_oracle() {
    std::mt19937_64 rng(1002);
    Outcome o;
    long long forced = 0;
    for (int iter = 0; iter < 500; ++iter) {
        const int d = test::uniform(rng, 1, 3);
        auto h = test::random_hypergraph(rng, test::uniform(rng, 3, 16), test::uniform(rng, 1, 12), d);
        auto u = test::random_subset(rng, h.vertices(), 0.75);
        const int truth = *test::brute_rho(h, u);
        auto c = min_edge_cover(h, u, static_cast<int>(h.num_edges()));
        if (!c || c->weight() != truth || !u.is_subset_of(h.edge_union(c->edges))) ++o.violations;
        if (truth > 0 && min_edge_cover(h, u, truth - 1)) ++o.violations;

        // every optimal cover of U within H[U] uses each edge with > p*d vertices
        auto sub = induced_subhypergraph(h, u);
        const int p = std::max(truth, 1);
        for (auto mask : test::brute_covers(sub, u, p)) {
            if (std::popcount(mask) != truth) continue;
            for (int e = 0; e < static_cast<int>(sub.num_edges()); ++e) {
                if (static_cast<int>(sub.edge(e).vertices.count()) > p * d) {
                    ++forced;
                    if (!(mask & (1u << e))) ++o.violations;
                }
            }
        }
    }
    o.detail = fmt("500 instances, %lld forced-edge checks", forced);
    return o;
}

// Criterion 3
Outcome gap_cover_contract() {
    std::mt19937_64 rng(1003);
    Outcome o;
    long long members = 0;
    long long subsets = 0;
    int instances = 0;
    while (instances < 200) {
        const int d = test::uniform(rng, 1, 3);
        auto h = test::random_hypergraph(rng, test::uniform(rng, 4, 14), test::uniform(rng, 2, 12), d);
        auto u = test::random_subset(rng, h.vertices(), 0.8);
        if (u.count() > 14) continue;
        const int r = *test::brute_rho(h, u);
        if (r > 3) continue;
        const int p = test::uniform(rng, std::max(r, 1), 3);
        const int k = test::uniform(rng, 1, p);
        const int k0 = test::uniform(rng, 0, k);
        ++instances;
        auto out = gap_cover_approx(h, u, {k, d, k0, p});
        if (!std::holds_alternative<GapCoverFamily>(out)) {
            ++o.violations;
            continue;
        }
        const auto& fam = std::get<GapCoverFamily>(out);
        const long long beta = static_cast<long long>(3 * k + d + 1) * k0;
        for (const auto& m : fam.members) {
            ++members;
            if (!m.is_subset_of(u) || *test::brute_rho(h, m) > beta) ++o.violations;
        }
        for (const auto& [w, cover] : enumerate_small_covered_subsets(h, u, k0)) {
            ++subsets;
            bool inside = false;
            for (const auto& m : fam.members) inside = inside || w.is_subset_of(m);
            if (!inside) ++o.violations;
        }
    }
    o.detail = fmt("200 instances, %lld members, %lld covered subsets", members, subsets);
    return o;
}

// Criterion 4
Outcome shyg_reject() {
    Outcome o;
    auto h = gen_shyg_instance(1, 1);
    auto out = gap_cover_approx(h, h.vertices(), {1, 1, 1, 5});
    const auto* cert = std::get_if<ShygRejectCertificate>(&out);
    if (!cert || !certificate_is_valid(*cert, 1, 1)) ++o.violations;
    if (gyo_acyclic(h)) ++o.violations;
    o.detail = cert ? fmt("%lld witnesses over threshold %lld", static_cast<long long>(cert->witnesses.size()),
                          static_cast<long long>(cert->threshold))
                    : "no certificate";
    return o;
}

// Active nodes reachable from t through y, t included.
int count_side(const TreeDecomposition& td, int t, const std::vector<int>& y) {
    std::vector<char> seen(static_cast<std::size_t>(td.size()), 0);
    seen[static_cast<std::size_t>(t)] = 1;
    std::queue<int> q;
    for (int n : y) {
        seen[static_cast<std::size_t>(n)] = 1;
        q.push(n);
    }
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int n : td.adj[static_cast<std::size_t>(x)]) {
            if (!seen[static_cast<std::size_t>(n)]) {
                seen[static_cast<std::size_t>(n)] = 1;
                q.push(n);
            }
        }
    }
    int c = 0;
    for (int i = 0; i < td.size(); ++i) c += seen[static_cast<std::size_t>(i)] && td.active[static_cast<std::size_t>(i)];
    return c;
}

// Criterion 5
Outcome balanced_splitter() {
    std::mt19937_64 rng(1005);
    Outcome o;
    int trees = 0;
    while (trees < 1000) {
        auto td = test::random_tree(rng, test::uniform(rng, 3, 200));
        test::random_active(rng, td, 0.4, 3);
        const int nx = static_cast<int>(td.active_nodes().size());
        if (nx < 3) continue;
        ++trees;
        const BalancedVertex bv = get_bal_vert(td);
        bool ok = bv.t >= 0 && td.active[static_cast<std::size_t>(bv.t)];
        if (ok) {
            int deg = 0;
            for (int n : td.adj[static_cast<std::size_t>(bv.t)]) deg += td.active[static_cast<std::size_t>(n)];
            ok = deg >= 2 && count_side(td, bv.t, bv.y1) <= 3 * nx / 4 && count_side(td, bv.t, bv.y2) <= 3 * nx / 4;
            std::vector<int> both = bv.y1;
            both.insert(both.end(), bv.y2.begin(), bv.y2.end());
            std::sort(both.begin(), both.end());
            std::vector<int> nb = td.adj[static_cast<std::size_t>(bv.t)];
            std::sort(nb.begin(), nb.end());
            ok = ok && both == nb;
        }
        if (!ok) ++o.violations;
    }
    o.detail = "1000 trees";
    return o;
}

// Criterion 6
Outcome separator_contract() {
    std::mt19937_64 rng(1006);
    Outcome o;
    int accepted = 0;
    int rejected = 0;
    for (int iter = 0; iter < 300; ++iter) {
        const int d = test::uniform(rng, 1, 2);
        auto h = test::random_hypergraph(rng, test::uniform(rng, 4, 12), test::uniform(rng, 3, 10), d);
        auto td = test::random_td(rng, h);
        test::random_active(rng, td, 0.5);
        const int k = test::uniform(rng, 1, 2);
        const int k0 = test::uniform(rng, 1, k);
        const int p = std::max(k, ghw_of(h, td));
        auto a = test::random_subset(rng, h.vertices(), 0.3);
        auto b = test::random_subset(rng, h.vertices(), 0.3);
        const VertexSet bx = td.bag_union(td.active_nodes());
        SeparatorContext ctx;
        auto out = app_sep(h, a, b, k0, k, d, p, td, ctx);
        recursion.add(ctx.stats);
        if (const auto* r = std::get_if<SeparatorResult>(&out)) {
            ++accepted;
            VertexSet joined = h.empty_set();
            for (const auto& piece : r->pieces) joined |= piece;
            const bool ok = r->separator.is_subset_of(bx) && test::brute_separates(h, a, b, r->separator) &&
                            static_cast<long long>(r->cover.size()) <= separator_cover_bound(k0, k, d) &&
                            r->separator.is_subset_of(test::root_union(h, r->cover)) &&
                            static_cast<int>(r->pieces.size()) <= 2 * k0 - 1 && joined == r->separator;
            if (!ok) ++o.violations;
            continue;
        }
        const auto& rej = std::get<SepReject>(out);
        if (rej.kind == SepReject::Kind::ShygTriggered) {
            if (!rej.certificate || !certificate_is_valid(*rej.certificate, k, d)) ++o.violations;
            continue;
        }
        ++rejected;
        if (exact_min_separator(h, a, b, bx, k0)) ++o.violations;
    }
    o.detail = fmt("300 instances, %lld accepted, %lld rejected", accepted, rejected);
    return o;
}

// Criterion 7
Outcome composition_fuzz() {
    std::mt19937_64 rng(1007);
    Outcome o;
    for (int iter = 0; iter < 500; ++iter) {
        auto h = test::random_hypergraph(rng, test::uniform(rng, 4, 12), test::uniform(rng, 3, 10),
                                         test::uniform(rng, 1, 3));
        const VertexSet y = test::random_subset(rng, h.vertices(), 0.3);
        VertexSet v1 = y;
        VertexSet v2 = y;
        for (const auto& c : connected_components(remove_vertices(h, y))) (rng() & 1 ? v1 : v2) |= c;
        const VertexSet w = test::random_subset(rng, y, 0.3);
        const VertexSet c1 = test::random_subset(rng, y - w, 0.5);
        const VertexSet c2 = (y - w) - c1;
        const VertexSet a = test::random_subset(rng, h.vertices(), 0.3);
        const VertexSet b = test::random_subset(rng, h.vertices(), 0.3);

        VertexSet wi[2];
        const VertexSet sides[2] = {v1, v2};
        for (int i = 0; i < 2; ++i) {
            auto hi = induced_subhypergraph(h, sides[i] - w);
            const VertexSet ai = (a & hi.vertices()) | c1;
            const VertexSet bi = (b & hi.vertices()) | c2;
            // any separator of the side instance will do; mix minimal and padded ones
            auto s = exact_min_separator(hi, ai, bi, hi.vertices(), static_cast<int>(hi.num_edges()));
            switch (rng() % 3) {
            case 0: wi[i] = s ? s->separator | test::random_subset(rng, hi.vertices(), 0.2) : bi; break;
            case 1: wi[i] = ai | test::random_subset(rng, hi.vertices(), 0.2); break;
            default: wi[i] = bi; break;
            }
            if (!test::brute_separates(hi, ai, bi, wi[i])) ++o.violations;  // setup error, counted too
        }
        if (!test::brute_separates(h, a, b, wi[0] | wi[1] | w)) ++o.violations;
    }
    o.detail = "500 setups";
    return o;
}

bool sound(const Hypergraph& h, const DriverResult& r) {
    if (!r.accepted()) return true;
    if (!r.decomposition) return false;
    TreeDecomposition td = *r.decomposition;
    if (!validate(h, td).ok()) return false;
    const int w = ghw_of(h, td);
    return w <= 4 * alpha(r.k, r.d) && w == r.width;
}

// Criterion 8
Outcome end_to_end_width() {
    std::mt19937_64 rng(1008);
    Outcome o;
    int accepted = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const int d = test::uniform(rng, 1, 3);
        const int k = test::uniform(rng, 1, 2);
        auto h = test::random_hypergraph(rng, test::uniform(rng, 3, 30), test::uniform(rng, 2, 30), d);
        auto r = approx_ghw(h, k, d);
        recursion.add(h, r);
        accepted += r.accepted();
        if (!sound(h, r)) ++o.violations;
    }
    o.detail = fmt("200 instances, %lld accepted", accepted);
    return o;
}

// Criterion 9
Outcome completeness() {
    std::mt19937_64 rng(1009);
    Outcome o;
    long long oracle_bad = 0;
    for (int iter = 0; iter < 100; ++iter) {
        const int d = test::uniform(rng, 1, 3);
        const int k = test::uniform(rng, 1, 2);
        auto h = test::random_hypergraph(rng, test::uniform(rng, 3, 10), test::uniform(rng, 2, 12), d);
        auto r = approx_ghw(h, k, d);
        recursion.add(h, r);
        const bool within = exact_ghw(h, k).has_value();
        // completeness and reject soundness are the same implication
        if (within && !r.accepted()) ++oracle_bad;
        if (!sound(h, r)) ++oracle_bad;
    }

    long long gyo_bad = 0;
    int cyclic = 0;
    for (int iter = 0; iter < 100; ++iter) {
        const int d = test::uniform(rng, 1, 3);
        auto h = test::random_hypergraph(rng, test::uniform(rng, 4, 25), test::uniform(rng, 2, 20), d);
        auto r = approx_ghw(h, 1, d);
        recursion.add(h, r);
        const bool acyclic = gyo_acyclic(h);
        cyclic += !acyclic;
        if (r.accepted() != acyclic) ++gyo_bad;
        if (!sound(h, r)) ++gyo_bad;
    }
    o.violations = oracle_bad + gyo_bad;
    o.detail = fmt("exact-oracle mismatches %lld/100, gyo mismatches %lld/100 (%lld cyclic)", oracle_bad, gyo_bad,
                   cyclic);
    return o;
}

Hypergraph grid(int n) {
    test::NamedEdges es;
    auto v = [](int i, int j) { return "g" + std::to_string(i) + "_" + std::to_string(j); };
    int c = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i + 1 < n) es.push_back({"e" + std::to_string(1000 + c++), {v(i, j), v(i + 1, j)}});
            if (j + 1 < n) es.push_back({"e" + std::to_string(1000 + c++), {v(i, j), v(i, j + 1)}});
        }
    }
    return test::hg(es);
}

// Criterion 10. Adds runs that actually reach Compress (rho(H) > 4 alpha), then
// checks the counters gathered here and in criteria 6, 8 and 9.
Outcome recursion_accounting() {
    Outcome o;
    long long extra = 0;
    for (int m : {22, 30, 45, 60}) {
        auto h = test::chain(m, 1);
        auto r = approx_ghw(h, 1, 1);
        recursion.add(h, r);
        if (!r.accepted() || !sound(h, r)) ++o.violations;
        ++extra;
    }
    {
        auto h = grid(7);
        auto r = approx_ghw(h, 1, 1);
        recursion.add(h, r);
        if (!sound(h, r) || (!r.accepted() && gyo_acyclic(h))) ++o.violations;
        ++extra;
    }
    const Recursion& s = recursion;
    if (s.compress_calls == 0) ++o.violations;  // the check would be vacuous
    o.violations += s.depth_over_v + s.depth_violations + s.leaf_violations + s.shrink_violations +
                    s.sep_shrink_violations;
    std::ostringstream out;
    out << s.compress_calls << " compress calls, " << s.compress_leaves << " leaves, max depth " << s.max_depth_seen
        << ", " << s.sep_shrink_checks << " AppSep shrink checks; violations depth " << s.depth_over_v + s.depth_violations
        << " leaves " << s.leaf_violations << " shrink " << s.shrink_violations + s.sep_shrink_violations;
    o.detail = out.str();
    return o;
}

}  // namespace
}  // namespace ghw

int main() {
    using namespace ghw;
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"formulas", formulas},
        {"edge cover vs exhaustive", edge_cover_oracle},
        {"gap cover contract", gap_cover_contract},
        {"shyg reject", shyg_reject},
        {"balanced splitter", balanced_splitter},
        {"separator contract", separator_contract},
        {"composition fuzz", composition_fuzz},
        {"end-to-end width", end_to_end_width},
        {"completeness vs oracles", completeness},
        {"recursion accounting", recursion_accounting},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.violations = 1;
            o.detail = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        const bool pass = o.violations == 0;
        failed += !pass;
        std::printf("criterion %2zu %s  %-26s violations=%lld  %s  [%lld ms]\n", i + 1, pass ? "PASS" : "FAIL",
                    criteria[i].first, o.violations, o.detail.c_str(), static_cast<long long>(ms));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
