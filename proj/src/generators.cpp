#include "ghw/generators.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace ghw {

namespace {

std::string padded(char prefix, int i, int count) {
    std::ostringstream out;
    out << prefix << std::setw(static_cast<int>(std::to_string(std::max(count - 1, 0)).size())) << std::setfill('0') << i;
    return out.str();
}

}  // namespace

Hypergraph gen_2d_hypergraph(int n, int m, int d, std::uint64_t seed) {
    if (n < 1 || m < 1 || d < 1) throw std::invalid_argument("gen: need n, m, d >= 1");
    std::mt19937_64 rng(seed);
    const int lo = std::min(2, n);
    const int hi = std::max(lo, std::min(n, d + 2));
    std::uniform_int_distribution<int> size_dist(lo, hi);
    std::uniform_int_distribution<int> vertex_dist(0, n - 1);

    std::vector<std::set<int>> edges;
    const int attempts_per_edge = 2000;
    for (int e = 0; e < m; ++e) {
        bool placed = false;
        for (int attempt = 0; attempt < attempts_per_edge && !placed; ++attempt) {
            const int size = size_dist(rng);
            std::set<int> cand;
            while (static_cast<int>(cand.size()) < size) cand.insert(vertex_dist(rng));
            bool ok = true;
            for (const auto& other : edges) {
                int common = 0;
                for (int v : cand) common += other.count(v) != 0 ? 1 : 0;
                if (common > d || other == cand) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                edges.push_back(std::move(cand));
                placed = true;
            }
        }
        if (!placed) throw Infeasible("gen: could not place edge " + std::to_string(e));
    }

    // A vertex outside every edge can join any edge without raising an
    // intersection.
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges) {
        for (int v : e) used[static_cast<std::size_t>(v)] = 1;
    }
    std::uniform_int_distribution<int> edge_dist(0, m - 1);
    for (int v = 0; v < n; ++v) {
        if (!used[static_cast<std::size_t>(v)]) edges[static_cast<std::size_t>(edge_dist(rng))].insert(v);
    }

    std::vector<std::pair<std::string, std::vector<std::string>>> named;
    for (int e = 0; e < m; ++e) {
        std::vector<std::string> vs;
        for (int v : edges[static_cast<std::size_t>(e)]) vs.push_back(padded('v', v, n));
        named.emplace_back(padded('e', e, m), std::move(vs));
    }
    return Hypergraph::from_named_edges(std::move(named));
}

Hypergraph gen_shyg_instance(int k, int d) {
    if (k != 1 || d != 1) {
        throw Unsupported("gen-shyg supports only k = 1, d = 1 (got k = " + std::to_string(k) + ", d = " +
                          std::to_string(d) + ")");
    }
    constexpr int rows = 5;   // 3k + d + 1 boundaries
    constexpr int q = 11;     // field size; lines over GF(11) meet in at most one point
    constexpr int lines = 82; // xi(1,1) + 1
    auto vname = [](int i, int s) { return "x" + std::to_string(i) + "_" + (s < 10 ? "0" : "") + std::to_string(s); };

    std::vector<std::pair<std::string, std::vector<std::string>>> named;
    for (int i = 0; i < rows; ++i) {
        std::vector<std::string> vs;
        for (int s = 0; s < q; ++s) vs.push_back(vname(i, s));
        named.emplace_back("B" + std::to_string(i), std::move(vs));
    }
    int made = 0;
    for (int b = 0; b < q && made < lines; ++b) {
        for (int a = 0; a < q && made < lines; ++a, ++made) {
            std::vector<std::string> vs;
            for (int i = 0; i < rows; ++i) vs.push_back(vname(i, (a + b * i) % q));
            std::string num = std::to_string(made);
            named.emplace_back("S" + std::string(3 - num.size(), '0') + num, std::move(vs));
        }
    }
    return Hypergraph::from_named_edges(std::move(named));
}

}  // namespace ghw
