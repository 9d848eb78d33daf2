// Command-line surface: color / verify / oracle / classify / gen / dot over
// the line-oriented edge-list format.
//
// Exit codes: 0 success, 1 failed verification, 2 mathematically
// uncolorable input, 64 usage error, 65 malformed or out-of-domain input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lir/blocks.hpp"
#include "lir/cactus_color.hpp"
#include "lir/edgelist.hpp"
#include "lir/generate.hpp"
#include "lir/oracle.hpp"
#include "lir/tree_color.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lir::ParseError(0, "cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

lir::EdgeListDocument load(const std::string& path) { return lir::parse_edge_list(slurp(path)); }

// Deterministic parallel oracle: workers own fixed first-edge digits; the
// merged result takes the lexicographically smallest successful branch, so
// the answer matches the sequential enumeration bit for bit.
lir::LirResult oracle_jobs(const lir::SimpleGraph& g, int jobs) {
    if (jobs <= 1 || g.edge_count() == 0) return lir::brute_lir2(g);
    if (lir::monochromatic_ok(g)) return lir::brute_lir2(g);
    std::vector<lir::LirResult> results(3);
    std::vector<std::thread> workers;
    for (int d = 0; d < 3; ++d)
        workers.emplace_back(
            [&, d]() { results[static_cast<size_t>(d)] = lir::brute_lir2_prefix(g, {d}); });
    for (auto& w : workers) w.join();
    for (auto& r : results)
        if (r.value == lir::LirResult::Value::two) return std::move(r);
    return {lir::LirResult::Value::more_than_2_or_uncolorable, std::nullopt};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally irregular decompositions of doubled cacti"};
    app.require_subcommand(1);
    std::string format = "edgelist";
    app.add_option("--format", format)->check(CLI::IsMember({"edgelist"}));

    std::string path;
    bool debug_verify = false;
    int jobs = 1;

    auto* cmd_color = app.add_subcommand("color", "2-color the doubling of a cactus");
    cmd_color->add_option("file", path)->required();
    cmd_color->add_flag("--debug-verify", debug_verify, "verify after every attachment event");

    auto* cmd_verify = app.add_subcommand("verify", "check a coloring document");
    cmd_verify->add_option("file", path)->required();

    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive lir of the doubling");
    cmd_oracle->add_option("file", path)->required();
    cmd_oracle->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* cmd_classify = app.add_subcommand("classify", "membership in the uncolorable family");
    cmd_classify->add_option("file", path)->required();

    auto* cmd_gen = app.add_subcommand("gen", "deterministic random cactus");
    lir::GenSpec spec;
    cmd_gen->add_option("--n", spec.n)->required();
    uint64_t seed = 0;
    cmd_gen->add_option("--seed", seed);
    cmd_gen->add_option("--cycle-ratio", spec.cycle_ratio);
    cmd_gen->add_option("--max-cycle-len", spec.max_cycle_len);
    cmd_gen->add_option("--spike-bias", spec.spike_bias);

    auto* cmd_dot = app.add_subcommand("dot", "DOT rendering of the doubled graph");
    cmd_dot->add_option("file", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 64;
    }

    try {
        if (cmd_color->parsed()) {
            auto doc = load(path);
            lir::EngineOptions opts;
            opts.debug_verify = debug_verify;
            try {
                lir::DoubledColoring c = lir::color_cactus(doc.graph, opts);
                std::cout << lir::emit_edge_list(doc.graph, c);
            } catch (const lir::UncolorableError&) {
                std::cout << "UNCOLORABLE\n";
                return 2;
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            auto doc = load(path);
            if (!doc.coloring) {
                std::cerr << "verify: document carries no coloring block\n";
                return 65;
            }
            auto rep = lir::verify(doc.graph, *doc.coloring);
            if (rep.ok) {
                std::cout << "OK\n";
                return 0;
            }
            for (int e : rep.red_conflicts) {
                auto [u, v] = doc.graph.edge(e);
                std::cout << "red conflict " << u << " " << v << "\n";
            }
            for (int e : rep.blue_conflicts) {
                auto [u, v] = doc.graph.edge(e);
                std::cout << "blue conflict " << u << " " << v << "\n";
            }
            return 1;
        }
        if (cmd_oracle->parsed()) {
            auto doc = load(path);
            auto res = oracle_jobs(doc.graph, jobs);
            std::cout << lir::lir_value_name(res.value) << "\n";
            if (res.witness) std::cout << lir::emit_edge_list(doc.graph, *res.witness);
            return 0;
        }
        if (cmd_classify->parsed()) {
            auto doc = load(path);
            auto cls = lir::classify_tprime(doc.graph);
            std::cout << lir::tprime_kind_name(cls.kind) << "\n";
            return 0;
        }
        if (cmd_gen->parsed()) {
            spec.seed = seed;
            std::cout << lir::emit_edge_list(lir::gen_cactus(spec));
            return 0;
        }
        if (cmd_dot->parsed()) {
            auto doc = load(path);
            std::cout << lir::emit_dot(doc.graph,
                                       doc.coloring ? &*doc.coloring : nullptr);
            return 0;
        }
    } catch (const lir::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 65;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return 64;
}
