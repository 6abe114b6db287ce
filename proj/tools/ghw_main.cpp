// Command-line front end: decompose, validate, exact, gen, gen-shyg, stats.
// Exit codes: 0 accepted/valid, 1 rejected/invalid, 2 input error, 3 internal
// invariant violation.

#include "ghw/debug.hpp"
#include "ghw/driver.hpp"
#include "ghw/generators.hpp"
#include "ghw/io.hpp"
#include "ghw/oracle.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const char* reject_name(ghw::CompressReject::Kind k) {
    return k == ghw::CompressReject::Kind::ShygTriggered ? "shyg-triggered" : "separator-exhausted";
}

nlohmann::json stats_json(const ghw::DriverResult& r) {
    const auto& s = r.stats;
    return {
        {"outcome", r.accepted() ? "accepted" : "rejected"},
        {"k", r.k},
        {"d", r.d},
        {"target_width", r.target},
        {"width", r.width},
        {"iteration_widths", s.widths},
        {"compress_calls", s.compress_calls},
        {"bag_resolves", s.bag_resolves},
        {"compress",
         {{"calls", s.compress.calls},
          {"partitions_tried", s.compress.partitions_tried},
          {"max_depth", s.compress.max_depth},
          {"leaf_calls", s.compress.leaf_calls}}},
        {"separator",
         {{"app_sep_calls", s.separator.app_sep_calls},
          {"small_sep_calls", s.separator.small_sep_calls},
          {"gap_cover_calls", s.separator.gap_cover_calls},
          {"gap_cover_cache_hits", s.separator.gap_cover_cache_hits},
          {"shrink_checks", s.separator.shrink_checks},
          {"shrink_violations", s.separator.shrink_violations}}},
    };
}

int run_decompose(const std::string& in, int k, int d, bool emit_stats, const std::string& out_path) {
    const ghw::Hypergraph h = ghw::parse_hypergraph(read_file(in));
    const ghw::DriverResult r = ghw::approx_ghw(h, k, d > 0 ? std::optional<int>(d) : std::nullopt);
    if (emit_stats) std::cerr << stats_json(r).dump(2) << '\n';
    if (!r.accepted()) {
        std::cout << "rejected " << reject_name(r.reject_kind) << ": ghw > " << k << '\n';
        return 1;
    }
    const std::string text = ghw::emit_decomposition(h, *r.decomposition);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
    }
    return 0;
}

int run_validate(const std::string& in, const std::string& td_path) {
    const ghw::Hypergraph h = ghw::parse_hypergraph(read_file(in));
    const ghw::TreeDecomposition td = ghw::parse_decomposition(h, read_file(td_path), false);
    const ghw::ValidationReport rep = ghw::validate(h, td);
    if (rep.ok()) {
        ghw::TreeDecomposition copy = td;
        copy.active.assign(static_cast<std::size_t>(copy.size()), true);
        std::cout << "valid, ghw " << ghw::ghw_of(h, copy) << '\n';
        return 0;
    }
    for (const auto& v : rep.violations) std::cout << ghw::to_string(v.kind) << ": " << v.detail << '\n';
    return 1;
}

int run_exact(const std::string& in, int kmax) {
    const ghw::Hypergraph h = ghw::parse_hypergraph(read_file(in));
    auto w = ghw::exact_ghw(h, kmax);
    if (w) {
        std::cout << *w << '\n';
    } else {
        std::cout << "> " << kmax << '\n';
    }
    return 0;
}

int run_stats(const std::string& in) {
    const ghw::Hypergraph h = ghw::parse_hypergraph(read_file(in));
    nlohmann::json j = {
        {"vertices", h.num_vertices()},
        {"edges", h.num_edges()},
        {"max_pairwise_intersection", ghw::max_pairwise_intersection(h)},
        {"components", ghw::connected_components(h).size()},
        {"alpha_acyclic", ghw::gyo_acyclic(h)},
    };
    std::cout << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalised hypertree width approximation for (2,d)-hypergraphs"};
    app.require_subcommand(1);

    std::string in;
    std::string td_path;
    std::string out_path;
    int k = 1;
    int d = 0;
    int kmax = 3;
    int n = 10;
    int m = 10;
    std::uint64_t seed = 1;
    bool emit_stats = false;
    bool debug = false;

    auto* dec = app.add_subcommand("decompose", "decomposition of width at most 4 alpha(k,d), or reject");
    dec->add_option("--k", k, "target width")->required();
    dec->add_option("--d", d, "intersection bound (default: inferred)");
    dec->add_flag("--emit-stats", emit_stats, "print run statistics as JSON on stderr");
    dec->add_flag("--debug", debug, "validate every intermediate decomposition (slow)");
    dec->add_option("-o", out_path, "output file (default: stdout)");
    dec->add_option("IN", in, "hypergraph file")->required();

    auto* val = app.add_subcommand("validate", "check a decomposition against a hypergraph");
    val->add_option("IN", in, "hypergraph file")->required();
    val->add_option("TD", td_path, "decomposition file")->required();

    auto* ex = app.add_subcommand("exact", "exact ghw by brute force (tiny inputs)");
    ex->add_option("--kmax", kmax, "largest width to try")->required();
    ex->add_option("IN", in, "hypergraph file")->required();

    auto* gen = app.add_subcommand("gen", "random (2,d)-hypergraph");
    gen->add_option("--n", n, "vertices")->required();
    gen->add_option("--m", m, "edges")->required();
    gen->add_option("--d", d, "intersection bound")->required();
    gen->add_option("--seed", seed, "random seed")->required();

    auto* shyg = app.add_subcommand("gen-shyg", "instance that triggers the big-edge reject");
    shyg->add_option("--k", k, "width parameter")->required();
    shyg->add_option("--d", d, "intersection bound")->required();

    auto* st = app.add_subcommand("stats", "basic statistics of a hypergraph");
    st->add_option("IN", in, "hypergraph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ghw::set_debug_checks(debug);
    try {
        if (*dec) return run_decompose(in, k, d, emit_stats, out_path);
        if (*val) return run_validate(in, td_path);
        if (*ex) return run_exact(in, kmax);
        if (*gen) {
            std::cout << ghw::emit_hypergraph(ghw::gen_2d_hypergraph(n, m, d, seed));
            return 0;
        }
        if (*shyg) {
            std::cout << ghw::emit_hypergraph(ghw::gen_shyg_instance(k, d));
            return 0;
        }
        if (*st) return run_stats(in);
    } catch (const ghw::InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const ghw::InvalidDecomposition& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
