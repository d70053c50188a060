#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kalliance/alliance.hpp"
#include "kalliance/bounds.hpp"
#include "kalliance/corpus.hpp"
#include "kalliance/errors.hpp"
#include "kalliance/generators.hpp"
#include "kalliance/graph_io.hpp"
#include "kalliance/report.hpp"
#include "kalliance/solver.hpp"
#include "kalliance/verifier.hpp"

namespace {

using kalliance::AllianceSpec;
using kalliance::Graph;
using kalliance::Kind;
using kalliance::Objective;

constexpr int kExitFinding = 1;   // VIOLATED bound or theorem counterexample
constexpr int kExitUsage = 2;     // parse failures, invalid k, unknown ids
constexpr int kExitCap = 3;       // exact computation out of reach

struct GraphSource {
    std::string gen_spec;
    std::string file;

    // label doubles as the corpus-entry name for generated graphs
    std::pair<std::string, Graph> load() const {
        if (!gen_spec.empty() && !file.empty())
            throw kalliance::parse_error("pass either --gen or --graph, not both");
        if (!gen_spec.empty()) return {gen_spec, kalliance::generate(gen_spec)};
        if (!file.empty()) return {file, kalliance::load_graph(file)};
        throw kalliance::parse_error("no graph given: pass --gen SPEC or --graph FILE");
    }
    bool present() const { return !gen_spec.empty() || !file.empty(); }
};

void add_graph_flags(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("--gen", src.gen_spec,
                    "generate a graph (complete:N, cycle:N, path:N, star:LEAVES, "
                    "grid:RxC, random:N,P,SEED, c8-chords; join with commas plus "
                    "a -disjoint suffix for disjoint unions)");
    cmd->add_option("--graph", src.file, "read a graph file (edge list or DIMACS)");
}

// "a..b" inclusive, or a single integer
std::pair<int, int> parse_k_range(const std::string& text) {
    auto pos = text.find("..");
    try {
        size_t used = 0;
        if (pos == std::string::npos) {
            int k = std::stoi(text, &used);
            if (used != text.size()) throw kalliance::parse_error("bad k: " + text);
            return {k, k};
        }
        int lo = std::stoi(text.substr(0, pos), &used);
        if (used != pos) throw kalliance::parse_error("bad k range: " + text);
        std::string hi_text = text.substr(pos + 2);
        int hi = std::stoi(hi_text, &used);
        if (used != hi_text.size() || lo > hi)
            throw kalliance::parse_error("bad k range: " + text);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw kalliance::parse_error("bad k value: " + text);
    } catch (const std::out_of_range&) {
        throw kalliance::parse_error("k out of integer range: " + text);
    }
}

// The CLI exposes the nine named invariants; other (kind, global)
// combinations exist in the library but have no standing name here.
std::pair<std::string, Objective> resolve_invariant(const std::string& name, Kind kind,
                                                    bool global) {
    if (name == "a") {
        if (kind != Kind::defensive || global)
            throw std::invalid_argument(
                "invariant a is defensive and non-global; use gamma for global forms");
        return {"a_k", Objective::min_alliance};
    }
    if (name == "gamma") {
        if (!global)
            throw std::invalid_argument(
                "invariant gamma is global; pass --global (a is the non-global defensive form)");
        return {kind == Kind::defensive ? "gamma_k" : "gamma_k^o", Objective::min_alliance};
    }
    if (name == "phi") {
        if (kind == Kind::defensive && global)
            throw std::invalid_argument("phi has no defensive global form");
        if (kind == Kind::defensive) return {"phi_k", Objective::max_free};
        return {global ? "phi_k^go" : "phi_k^o", Objective::max_free};
    }
    if (name == "zeta") {
        if (kind == Kind::defensive && global)
            throw std::invalid_argument("zeta has no defensive global form");
        if (kind == Kind::defensive) return {"zeta_k", Objective::min_cover};
        return {global ? "zeta_k^go" : "zeta_k^o", Objective::min_cover};
    }
    throw std::invalid_argument("unknown invariant: " + name +
                                " (expected a, gamma, phi, or zeta)");
}

std::vector<kalliance::CorpusEntry> load_corpus(const std::string& corpus_arg,
                                                const GraphSource& src) {
    if (!corpus_arg.empty() && src.present())
        throw kalliance::parse_error("pass either --corpus or a graph source, not both");
    if (src.present()) {
        auto [label, g] = src.load();
        return {{label, std::move(g)}};
    }
    if (corpus_arg.empty() || corpus_arg == "default") return kalliance::default_corpus();
    if (corpus_arg.rfind("dir:", 0) == 0) return kalliance::corpus_from_dir(corpus_arg.substr(4));
    throw kalliance::parse_error("bad --corpus value: " + corpus_arg +
                                 " (expected 'default' or 'dir:PATH')");
}

int run_compute(const GraphSource& src, const std::string& kind_name, bool global,
                const std::string& k_text, const std::string& invariant, bool timing) {
    auto [label, g] = src.load();
    auto [lo, hi] = parse_k_range(k_text);
    if (lo != hi) throw kalliance::parse_error("compute takes a single k, got a range");
    Kind kind = kind_name == "offensive" ? Kind::offensive : Kind::defensive;
    if (kind_name != "defensive" && kind_name != "offensive")
        throw std::invalid_argument("unknown kind: " + kind_name);
    auto [inv_name, objective] = resolve_invariant(invariant, kind, global);

    AllianceSpec spec{kind, lo, global};
    auto t0 = std::chrono::steady_clock::now();
    kalliance::InvariantResult r;
    switch (objective) {
        case Objective::min_alliance: r = kalliance::min_alliance(g, spec); break;
        case Objective::max_free: r = kalliance::max_free(g, spec); break;
        case Objective::min_cover: r = kalliance::min_cover(g, spec); break;
    }
    std::optional<double> elapsed;
    if (timing) {
        auto t1 = std::chrono::steady_clock::now();
        elapsed = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    std::cout << kalliance::invariant_json(r, elapsed).dump(2) << '\n';
    std::cerr << kalliance::invariant_human_line(r, label) << '\n';
    return 0;
}

int run_bounds(const GraphSource& src, const std::string& k_text,
               const std::string& format, bool timing) {
    auto [label, g] = src.load();
    auto [lo, hi] = parse_k_range(k_text);
    auto t0 = std::chrono::steady_clock::now();

    std::vector<kalliance::BoundEvaluation> rows;
    for (int k = lo; k <= hi; ++k)
        for (auto& ev : kalliance::evaluate_bounds(g, k)) rows.push_back(ev);

    long long violated = 0, tight = 0, slack = 0, unmet = 0;
    for (const auto& ev : rows) {
        switch (ev.status) {
            case kalliance::BoundStatus::holds_tight: ++tight; break;
            case kalliance::BoundStatus::holds_slack: ++slack; break;
            case kalliance::BoundStatus::premise_unmet: ++unmet; break;
            case kalliance::BoundStatus::violated: ++violated; break;
        }
    }

    if (format == "csv") {
        std::cout << kalliance::bound_csv_header() << '\n';
        for (const auto& ev : rows) std::cout << kalliance::bound_csv_row(ev) << '\n';
    } else if (format == "json") {
        kalliance::ordered_json arr = kalliance::ordered_json::array();
        for (const auto& ev : rows) arr.push_back(kalliance::bound_json(ev));
        std::cout << arr.dump(2) << '\n';
    } else {
        throw kalliance::parse_error("bad --format value: " + format);
    }

    std::cerr << "bounds on " << label << " k=" << lo << ".." << hi << ": " << rows.size()
              << " rows, " << tight << " tight, " << slack << " slack, " << unmet
              << " premise-unmet, " << violated << " VIOLATED";
    if (timing) {
        auto t1 = std::chrono::steady_clock::now();
        std::cerr << "  ("
                  << std::chrono::duration<double, std::milli>(t1 - t0).count() << " ms)";
    }
    std::cerr << '\n';
    return violated > 0 ? kExitFinding : 0;
}

int run_verify(const std::string& corpus_arg, const GraphSource& src,
               const std::string& theorems_arg, const std::string& k_text, int threads,
               bool timing) {
    auto corpus = load_corpus(corpus_arg, src);
    std::vector<std::string> theorems;
    if (theorems_arg.empty() || theorems_arg == "all") {
        theorems = kalliance::all_theorem_ids();
    } else {
        std::string tok;
        std::istringstream is(theorems_arg);
        while (std::getline(is, tok, ','))
            if (!tok.empty()) theorems.push_back(tok);
    }
    std::optional<std::pair<int, int>> k_range;
    if (!k_text.empty()) k_range = parse_k_range(k_text);

    auto rep = kalliance::corpus_run(corpus, theorems, k_range, threads, timing);
    std::cout << kalliance::corpus_run_json(rep).dump(2) << '\n';
    std::cerr << "verify: " << corpus.size() << " graphs, " << theorems.size()
              << " theorems, " << rep.total_instances << " instances, "
              << rep.total_counterexamples << " counterexamples\n";
    return rep.ok ? 0 : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact k-alliance invariants, bounds, and structural checks"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value file");

    int threads = 1;
    app.add_option("--threads", threads, "worker threads for corpus runs")
        ->envname("ALLIANCE_THREADS")
        ->check(CLI::PositiveNumber);
    bool timing = false;
    app.add_flag("--timing", timing,
                 "report wall-clock times (off by default so output is byte-stable)");

    auto* compute = app.add_subcommand("compute", "compute one invariant exactly");
    compute->fallthrough();
    GraphSource csrc;
    add_graph_flags(compute, csrc);
    std::string kind = "defensive", k_text = "0", invariant = "phi";
    bool global = false;
    compute->add_option("--kind", kind, "defensive or offensive")
        ->check(CLI::IsMember({"defensive", "offensive"}));
    compute->add_flag("--global", global, "require the alliance to dominate");
    compute->add_option("--k", k_text, "alliance threshold k");
    compute->add_option("--invariant", invariant, "a, gamma, phi, or zeta")
        ->check(CLI::IsMember({"a", "gamma", "phi", "zeta"}));

    auto* bounds = app.add_subcommand("bounds", "evaluate bound rows B1-B7");
    bounds->fallthrough();
    GraphSource bsrc;
    add_graph_flags(bounds, bsrc);
    std::string bk_text = "0", format = "json";
    bounds->add_option("--k", bk_text, "k or inclusive range a..b");
    bounds->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "machine-check theorem statements");
    verify->fallthrough();
    GraphSource vsrc;
    add_graph_flags(verify, vsrc);
    std::string corpus_arg, theorems_arg = "all", vk_text;
    verify->add_option("--corpus", corpus_arg, "default, or dir:PATH of graph files");
    verify->add_option("--theorems", theorems_arg, "all, or comma-separated theorem ids");
    verify->add_option("--k", vk_text, "restrict to k or inclusive range a..b");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed())
            return run_compute(csrc, kind, global, k_text, invariant, timing);
        if (bounds->parsed()) return run_bounds(bsrc, bk_text, format, timing);
        return run_verify(corpus_arg, vsrc, theorems_arg, vk_text, threads, timing);
    } catch (const kalliance::cap_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    }
}
