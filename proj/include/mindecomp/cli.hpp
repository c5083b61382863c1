#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mindecomp/decomposition.hpp"
#include "mindecomp/gadgets.hpp"
#include "mindecomp/graph.hpp"
#include "mindecomp/solver.hpp"

namespace mindecomp::cli {

/// Exit codes: feasible/valid, infeasible/invalid, usage or input error.
enum Exit : int { ok = 0, negative = 1, error = 2 };

struct RunConfig {
    DecompositionKind mode = DecompositionKind::path;
    std::size_t width = 1;
    std::optional<std::size_t> max_bags;
    std::optional<std::string> witness;
    bool stats = false;
    CandidatePolicy candidates = CandidatePolicy::exhaustive;
    MemoKeying keying = MemoKeying::canonical;
    bool anonymized = false;

    SolveOptions options() const {
        SolveOptions o;
        o.candidates = candidates;
        o.keying = keying;
        o.key_mode = anonymized ? KeyMode::anonymized : KeyMode::per_x;
        return o;
    }
};

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

struct SolveOutcome {
    BagCount size;
    SolveStats stats;
    std::optional<std::string> witness_td;
};

inline SolveOutcome solve_graph(const Graph& g, const RunConfig& cfg, bool want_witness) {
    Solver solver(g, cfg.width, cfg.mode, cfg.options());
    const auto result = solver.solve_all();
    SolveOutcome out{result.size, {}, std::nullopt};
    if (want_witness && result.size.feasible()) {
        std::ostringstream td;
        if (cfg.mode == DecompositionKind::path) write_td(td, solver.reconstruct_path(*result.root, result.size), g.order());
        else write_td(td, solver.reconstruct_tree(*result.root, result.size), g.order());
        out.witness_td = td.str();
    }
    out.stats = solver.stats();
    return out;
}

inline int cmd_solve(const RunConfig& cfg, const std::string& graph_path, std::ostream& out, std::ostream& err) {
    try {
        const Graph g = read_graph_file(graph_path);
        const auto r = solve_graph(g, cfg, cfg.witness.has_value());
        if (r.size.feasible()) out << "SIZE " << r.size.value() << '\n';
        else out << "INFEASIBLE\n";
        if (cfg.max_bags) out << "DECISION " << (r.size.feasible() && r.size.value() <= *cfg.max_bags ? "YES" : "NO") << '\n';
        if (r.witness_td) write_file(*cfg.witness, *r.witness_td);
        if (cfg.stats) r.stats.write(out);
        return r.size.feasible() ? ok : negative;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return error;
    }
}

inline int cmd_validate(const std::string& graph_path, const std::string& td_path, DecompositionKind mode,
                        std::size_t width, std::optional<std::size_t> max_bags, std::ostream& out, std::ostream& err) {
    Graph g;
    TdFile f;
    try {
        g = read_graph_file(graph_path);
        std::ifstream in(td_path);
        if (!in) throw std::runtime_error("cannot open " + td_path);
        f = parse_td(in);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return error;
    }
    auto invalid = [&](const std::string& why) {
        out << "INVALID: " << why << '\n';
        return negative;
    };
    if (f.vertex_count != g.order()) return invalid("structure");
    const auto tree = to_tree(f);
    if (!tree) return invalid("structure");
    ValidationReport report;
    if (mode == DecompositionKind::path) {
        if (!is_path_shaped(*tree)) return invalid("not a path");
        report = validate_path(g, as_path(*tree), width, max_bags);
    } else {
        report = validate_tree(g, *tree, width, max_bags);
    }
    if (!report.valid()) {
        err << report.detail << '\n';
        return invalid(to_string(report.violation));
    }
    out << "VALID\n";
    return ok;
}

struct GenerateConfig {
    std::string family;
    std::string output;  ///< path prefix; files get .gr / .s3g / .meta.json appended
    std::size_t capacity = 0;
    std::vector<std::size_t> w;
    std::string input;
    std::size_t legs = 0, length = 0;
    std::size_t n = 0, k = 0;
    double keep = 1.0;
    std::uint64_t seed = 1;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> id_lists(const std::vector<std::vector<Vertex>>& parts, Vertex offset = 0) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : parts) {
        std::vector<std::size_t> ids;
        for (auto v : p) ids.push_back(static_cast<std::size_t>(v + offset) + 1);
        out.push_back(std::move(ids));
    }
    return out;
}

inline void emit_graph(const GenerateConfig& cfg, const Graph& g, const nlohmann::json& meta) {
    std::ostringstream gr;
    write_graph(gr, g);
    write_file(cfg.output + ".gr", gr.str());
    write_file(cfg.output + ".meta.json", meta.dump(2) + "\n");
}

}  // namespace detail

inline int cmd_generate(const GenerateConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        nlohmann::json meta;
        meta["family"] = cfg.family;
        if (cfg.family == "clique-chain") {
            const auto ch = clique_chain({cfg.capacity, cfg.w});
            meta["capacity"] = ch.capacity;
            meta["width"] = ch.capacity - 1;
            meta["w"] = ch.w;
            meta["target_size"] = ch.w.size();
            meta["base_cliques"] = detail::id_lists(ch.base);
            meta["pendant_cliques"] = detail::id_lists(ch.pendant);
            detail::emit_graph(cfg, ch.graph, meta);
            out << "wrote " << cfg.output << ".gr (" << ch.graph.order() << " vertices)\n";
        } else if (cfg.family == "s3g-from-3dm") {
            std::ifstream in(cfg.input);
            if (!in) throw std::runtime_error("cannot open " + cfg.input);
            const auto s = s3g_from_3dm(parse_3dm(in));
            std::ostringstream text;
            write_s3g(text, s);
            write_file(cfg.output + ".s3g", text.str());
            out << "wrote " << cfg.output << ".s3g (" << s.n() << " strings per side, length " << s.length() << ")\n";
        } else if (cfg.family == "mspd-hard") {
            std::ifstream in(cfg.input);
            if (!in) throw std::runtime_error("cannot open " + cfg.input);
            const auto s = palindromize(parse_s3g(in));
            const auto h = mspd_hard_instance(s);
            meta["capacity"] = h.capacity;
            meta["width"] = h.width();
            meta["n"] = h.n;
            meta["ell"] = h.ell;
            meta["target_size"] = h.target_size;
            meta["a_chain"] = {{"capacity", h.a_chain.capacity}, {"w", h.a_chain.w}};
            meta["a_vertices"] = detail::id_lists(h.a_vertices);
            meta["b_vertices"] = detail::id_lists(h.b_vertices);
            meta["c_vertices"] = detail::id_lists(h.c_vertices);
            detail::emit_graph(cfg, h.graph, meta);
            out << "wrote " << cfg.output << ".gr (" << h.graph.order() << " vertices)\n";
            out << "capacity " << h.capacity << " = width " << h.width() << '\n';
            out << "target size " << h.target_size << '\n';
        } else if (cfg.family == "partial-ktree") {
            const auto g = random_partial_ktree(cfg.n, cfg.k, cfg.keep, cfg.seed);
            meta["n"] = cfg.n;
            meta["k"] = cfg.k;
            meta["width"] = cfg.k;
            meta["keep"] = cfg.keep;
            meta["seed"] = cfg.seed;
            detail::emit_graph(cfg, g, meta);
            out << "wrote " << cfg.output << ".gr (" << g.order() << " vertices)\n";
        } else if (cfg.family == "spider") {
            const auto g = spider(cfg.legs, cfg.length);
            meta["legs"] = cfg.legs;
            meta["length"] = cfg.length;
            meta["width"] = 1;
            meta["centre"] = 1;
            detail::emit_graph(cfg, g, meta);
            out << "wrote " << cfg.output << ".gr (" << g.order() << " vertices)\n";
        } else {
            throw std::invalid_argument("unknown family '" + cfg.family + "'");
        }
        return ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return error;
    }
}

/// One TSV row per (instance, mode); unreadable files are reported on err and skipped.
inline int cmd_bench(const std::string& dir, const RunConfig& cfg, const std::vector<DecompositionKind>& modes,
                     std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
        err << "error: " << dir << " is not a directory\n";
        return error;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".gr") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    out << "instance\tmode\tn\tm\twidth\tresult\twall_ms\tmemo_entries\tmemo_hits\tcanon_calls\n";
    for (const auto& file : files) {
        Graph g;
        try {
            g = read_graph_file(file.string());
        } catch (const std::exception& e) {
            err << file.filename().string() << ": " << e.what() << '\n';
            continue;
        }
        for (auto mode : modes) {
            RunConfig c = cfg;
            c.mode = mode;
            const auto t0 = std::chrono::steady_clock::now();
            const auto r = solve_graph(g, c, false);
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            std::ostringstream result;
            result << r.size;
            out << file.filename().string() << '\t' << (mode == DecompositionKind::path ? "path" : "tree") << '\t'
                << g.order() << '\t' << g.edge_count() << '\t' << c.width << '\t' << result.str() << '\t'
                << static_cast<long long>(ms + 0.5) << '\t' << r.stats.memo_entries << '\t' << r.stats.memo_hits << '\t'
                << r.stats.canon_calls << '\n';
        }
    }
    return ok;
}

namespace detail {

inline void add_solver_flags(CLI::App* cmd, RunConfig& cfg, std::string& mode, std::vector<std::string> modes) {
    cmd->add_option("--width,-k", cfg.width, "Maximum width (bag size minus one)")->required();
    cmd->add_option("--max-bags", cfg.max_bags, "Decision bound on the number of bags")->check(CLI::PositiveNumber);
    cmd->add_option("--mode", mode, "Decomposition shape")->check(CLI::IsMember(modes));
    cmd->add_flag("--pruned", "Only normalized predecessor bags and full-size roots");
    cmd->add_flag("--plain-memo", "Key the memo by raw (X, W) instead of isomorphism class");
    cmd->add_flag("--anonymized", cfg.anonymized, "Key classes up to any permutation of X");
}

inline void apply_solver_flags(CLI::App* cmd, RunConfig& cfg, const std::string& mode) {
    cfg.mode = mode == "tree" ? DecompositionKind::tree : DecompositionKind::path;
    if (cmd->count("--pruned")) cfg.candidates = CandidatePolicy::normalized;
    if (cmd->count("--plain-memo")) cfg.keying = MemoKeying::plain;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Minimum-size tree and path decompositions of bounded width"};
    app.require_subcommand(1);

    RunConfig solve_cfg;
    std::string solve_mode = "path", solve_graph_path, witness;
    auto* solve = app.add_subcommand("solve", "Minimum number of bags at the given width");
    solve->add_option("graph", solve_graph_path, "Input .gr file")->required();
    detail::add_solver_flags(solve, solve_cfg, solve_mode, {"path", "tree"});
    solve->add_option("--witness", witness, "Write an optimal decomposition as .td");
    solve->add_flag("--stats", solve_cfg.stats, "Print solver counters");

    std::string val_graph, val_td, val_mode = "tree";
    std::size_t val_width = 0;
    std::optional<std::size_t> val_max;
    auto* validate = app.add_subcommand("validate", "Check a .td file against a graph");
    validate->add_option("graph", val_graph, "Input .gr file")->required();
    validate->add_option("td", val_td, "Decomposition .td file")->required();
    validate->add_option("--mode", val_mode, "path or tree")->check(CLI::IsMember({"path", "tree"}));
    validate->add_option("--width,-k", val_width, "Maximum width")->required();
    validate->add_option("--max-bags", val_max, "Maximum number of bags")->check(CLI::PositiveNumber);

    GenerateConfig gen;
    std::string w_list;
    auto* generate = app.add_subcommand("generate", "Write a generated instance");
    generate->add_option("family", gen.family, "clique-chain, s3g-from-3dm, mspd-hard, partial-ktree or spider")
        ->required()
        ->check(CLI::IsMember({"clique-chain", "s3g-from-3dm", "mspd-hard", "partial-ktree", "spider"}));
    generate->add_option("--output,-o", gen.output, "Output path prefix")->required();
    generate->add_option("--capacity", gen.capacity, "Clique-chain capacity K");
    generate->add_option("--w", w_list, "Comma-separated clique sizes");
    generate->add_option("--input,-i", gen.input, "Input .3dm or .s3g file");
    generate->add_option("--legs", gen.legs, "Spider legs");
    generate->add_option("--len", gen.length, "Spider leg length");
    generate->add_option("--n", gen.n, "Vertices");
    generate->add_option("--k", gen.k, "k-tree parameter");
    generate->add_option("--keep", gen.keep, "Edge retention probability");
    generate->add_option("--seed", gen.seed, "Random seed");

    RunConfig bench_cfg;
    std::string bench_mode = "path", bench_dir;
    auto* bench = app.add_subcommand("bench", "Solve every .gr file in a directory and print a TSV table");
    bench->add_option("suite", bench_dir, "Directory of .gr files")->required();
    detail::add_solver_flags(bench, bench_cfg, bench_mode, {"path", "tree", "both"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return error;
    }

    if (solve->parsed()) {
        detail::apply_solver_flags(solve, solve_cfg, solve_mode);
        if (!witness.empty()) solve_cfg.witness = witness;
        return cmd_solve(solve_cfg, solve_graph_path, out, err);
    }
    if (validate->parsed())
        return cmd_validate(val_graph, val_td, val_mode == "path" ? DecompositionKind::path : DecompositionKind::tree,
                            val_width, val_max, out, err);
    if (generate->parsed()) {
        try {
            std::stringstream ss(w_list);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) continue;
                gen.w.push_back(static_cast<std::size_t>(std::stoul(item)));
            }
        } catch (const std::exception&) {
            err << "error: --w expects comma-separated positive integers\n";
            return error;
        }
        return cmd_generate(gen, out, err);
    }
    detail::apply_solver_flags(bench, bench_cfg, bench_mode == "both" ? "path" : bench_mode);
    std::vector<DecompositionKind> modes;
    if (bench_mode == "both") modes = {DecompositionKind::path, DecompositionKind::tree};
    else modes = {bench_cfg.mode};
    return cmd_bench(bench_dir, bench_cfg, modes, out, err);
}

}  // namespace mindecomp::cli
