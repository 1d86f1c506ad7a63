#ifndef SUPERTOUGH_TOOLS_CLI_HPP_
#define SUPERTOUGH_TOOLS_CLI_HPP_

// The supertough command line as a function of (args, streams) so tests can
// drive it without spawning processes.
//
// Exit codes: 0 ok, 2 usage, 3 parse, 4 envelope, 5 verification failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "supertough/supertough.hpp"

namespace supertough::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitEnvelope = 4;
inline constexpr int kExitVerification = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MRange {
    int lo = 3;
    int hi = 9;
};

/// "5" or "3..7".
inline MRange parse_m_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw UsageError{"--m: expected N or LO..HI, got \"" + text + "\""};
        return v;
    };
    const auto dots = text.find("..");
    MRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = to_int(text);
    } else {
        r.lo = to_int(text.substr(0, dots));
        r.hi = to_int(text.substr(dots + 2));
    }
    if (r.lo < 3 || r.hi < r.lo) throw UsageError{"--m: need 3 <= LO <= HI"};
    return r;
}

inline bool color_enabled() { return std::getenv("NO_COLOR") == nullptr; }

inline std::string paint(const std::string& text, const char* code, bool color) {
    return color ? std::string{"\x1b["} + code + "m" + text + "\x1b[0m" : text;
}

inline std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>{in}, {}}; }

struct Session {
    std::ostream& out;
    std::ostream& err;
    std::istream& in;
};

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
    std::string family;
    int m = 0;
    int n = 0;
    int k = 0;
    double p = 0.3;
    std::uint64_t seed = 1;
    std::string format = "graph6";
    bool labels = false;
};

inline json graph_json(const Graph& g, const JmLabeling* labels) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json out{{"n", g.order()}, {"m", g.edge_count()}, {"edges", edges}, {"graph6", serialize_graph6(g)}};
    if (labels != nullptr) out["labels"] = labels->names();
    return out;
}

inline int cmd_gen(const GenArgs& a, Session& s) {
    std::optional<JmLabeling> labeling;
    Graph g = [&] {
        auto need = [&](int value, const char* flag) {
            if (value <= 0) throw UsageError{"gen " + a.family + ": " + flag + " is required"};
            return value;
        };
        if (a.family == "jm") {
            if (a.m < 3) throw UsageError{"gen jm: --m must be >= 3"};
            LabeledGraph jm = build_jm(a.m);
            labeling = jm.labeling;
            return jm.graph;
        }
        if (a.family == "cycle_power") return cycle_power(need(a.n, "--n"), need(a.k, "--k"));
        if (a.family == "cycle") return cycle(need(a.n, "--n"));
        if (a.family == "path") return path(need(a.n, "--n"));
        if (a.family == "complete") return complete(need(a.n, "--n"));
        if (a.family == "star") return star(need(a.k, "--k"));
        if (a.family == "petersen") return petersen();
        if (a.family == "random") {
            std::mt19937_64 rng{a.seed};
            return random_connected_graph(need(a.n, "--n"), a.p, rng);
        }
        throw UsageError{"gen: unknown family \"" + a.family + "\""};
    }();
    if (a.labels && !labeling) throw UsageError{"gen: --labels applies to the jm family only"};
    const JmLabeling* names = a.labels ? &*labeling : nullptr;

    if (a.format == "graph6")
        s.out << serialize_graph6(g) << '\n';
    else if (a.format == "edges")
        s.out << serialize_edge_list(g);
    else if (a.format == "dot")
        s.out << to_dot(g, names);
    else if (a.format == "json")
        s.out << graph_json(g, names).dump(2) << '\n';
    else
        throw UsageError{"gen: --format must be graph6, edges, dot or json"};
    return kExitOk;
}

// ---------------------------------------------------------------------------
// invariant

struct InvariantArgs {
    std::string which;
    std::string g6;
    std::string input;
    std::string input_format = "graph6";
    std::string format = "json";
    unsigned workers = 0;
};

inline Graph load_graph(const InvariantArgs& a, Session& s) {
    std::string text;
    if (!a.g6.empty()) {
        if (a.input_format != "graph6") throw UsageError{"--g6 implies --input-format graph6"};
        text = a.g6;
    } else if (!a.input.empty()) {
        std::ifstream file{a.input, std::ios::binary};
        if (!file) throw UsageError{"cannot read " + a.input};
        text = read_all(file);
    } else {
        text = read_all(s.in);
    }
    if (a.input_format == "graph6") {
        // A single graph; surrounding whitespace is not part of graph6.
        const auto first = text.find_first_not_of(" \t\r\n");
        const auto last = text.find_last_not_of(" \t\r\n");
        return parse_graph6(first == std::string::npos ? std::string_view{} : std::string_view{text}.substr(first, last - first + 1));
    }
    if (a.input_format == "edges") return parse_edge_list(text);
    throw UsageError{"--input-format must be graph6 or edges"};
}

inline void print_certificate_table(const json& cert, Session& s) {
    const json& v = cert["value"];
    const std::string value = v.is_string() ? v.get<std::string>()
                                            : std::to_string(v["num"].get<long>()) +
                                                  (v["den"].get<long>() == 1 ? "" : "/" + std::to_string(v["den"].get<long>()));
    s.out << "invariant   " << cert["invariant"].get<std::string>() << '\n'
          << "value       " << value << '\n'
          << "witness     " << cert["witness"].dump() << '\n'
          << "components  " << cert["components"].dump() << '\n';
}

inline int cmd_invariant(const InvariantArgs& a, Session& s) {
    if (a.format != "json" && a.format != "table") throw UsageError{"invariant: --format must be json or table"};
    const Graph g = load_graph(a, s);
    json cert;
    if (a.which == "toughness")
        cert = toughness_json(toughness(g, SolverOptions{a.workers}));
    else if (a.which == "connectivity")
        cert = connectivity_json(g, connectivity(g));
    else if (a.which == "independence")
        cert = independence_json(independence_number(g));
    else if (a.which == "claws")
        cert = claws_json(g);
    else
        throw UsageError{"invariant: unknown invariant \"" + a.which + "\""};
    if (a.format == "json")
        s.out << cert.dump(2) << '\n';
    else
        print_certificate_table(cert, s);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string m = "3..9";
    bool odd_only = false;
    std::vector<std::string> claims;
    bool exploratory = false;
    std::string format = "json";
    unsigned workers = 0;
};

inline void print_ledger_table(const std::vector<ClaimReport>& reports, Session& s) {
    const bool color = color_enabled();
    s.out << "claim               parameter       verdict\n";
    for (const auto& r : reports) {
        std::string param = r.parameter.contains("m") ? "m=" + std::to_string(r.parameter["m"].get<int>())
                                                      : r.parameter["graph"].get<std::string>();
        if (r.exploratory) param += " (expl.)";
        std::string claim = to_string(r.claim);
        claim.resize(std::max<std::size_t>(claim.size(), 20), ' ');
        param.resize(std::max<std::size_t>(param.size(), 16), ' ');
        s.out << claim << param << (r.passed() ? paint("PASS", "32", color) : paint("FAIL", "31", color)) << '\n';
    }
}

inline int cmd_verify(const VerifyArgs& a, Session& s) {
    if (a.format != "json" && a.format != "table") throw UsageError{"verify: --format must be json or table"};
    const MRange range = parse_m_range(a.m);
    LedgerOptions opt;
    opt.m_min = range.lo;
    opt.m_max = range.hi;
    opt.odd_only = a.odd_only;
    opt.exploratory = a.exploratory;
    opt.solver.workers = a.workers;
    for (const auto& name : a.claims) {
        const auto c = parse_claim(name);
        if (!c) throw UsageError{"verify: unknown claim \"" + name + "\""};
        opt.claims.push_back(*c);
    }
    std::vector<ClaimReport> reports;
    try {
        reports = run_ledger(opt);
    } catch (const HypothesisError& e) {
        throw UsageError{std::string{e.what()} + " (use --exploratory to run it anyway)"};
    }
    if (a.format == "json")
        s.out << ledger_json(reports).dump(2) << '\n';
    else
        print_ledger_table(reports, s);
    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.passed(); });
    return all_pass ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// census

struct CensusArgs {
    int n = 0;
    int r = 0;
    bool connected = false;
    bool supertough = false;
    bool claw_free = false;
    bool has_claw = false;
    bool from_stdin = false;
    std::string input;
    std::string survivors;
    std::string emit_dot;
    bool strict = false;
    std::string format = "json";
    unsigned workers = 0;
};

inline void print_census_table(const CensusResult& r, Session& s) {
    s.out << "n=" << r.spec.n << " r=" << r.spec.r << " examined=" << r.examined << " complete=" << r.complete_graphs << '\n';
    for (const auto& [p, count] : r.passed) s.out << "  " << to_string(p) << ": " << count << '\n';
    s.out << "survivors: " << r.survivors.size() << '\n';
    for (const auto& sv : r.survivors)
        s.out << "  " << sv.canonical_graph6 << "  toughness " << sv.toughness.value << "  claws "
              << (sv.claw_centers.empty() ? "no" : "yes") << '\n';
    for (const auto& e : r.errors) s.out << "error line " << e.line << ": " << e.message << '\n';
}

inline int cmd_census(const CensusArgs& a, Session& s) {
    if (a.format != "json" && a.format != "table" && a.format != "graph6")
        throw UsageError{"census: --format must be json, table or graph6"};
    if (a.from_stdin && !a.input.empty()) throw UsageError{"census: --stdin and --input are exclusive"};
    // Paths first, so a bad destination fails before the search runs.
    if (!a.emit_dot.empty() && !std::filesystem::is_directory(a.emit_dot))
        throw UsageError{"census: --emit-dot " + a.emit_dot + " is not a directory"};
    if (!a.survivors.empty()) {
        const auto parent = std::filesystem::path{a.survivors}.parent_path();
        if (!parent.empty() && !std::filesystem::is_directory(parent))
            throw UsageError{"census: directory of --survivors does not exist"};
    }
    std::ifstream file;
    if (!a.input.empty()) {
        file.open(a.input);
        if (!file) throw UsageError{"census: cannot read " + a.input};
    }

    SearchSpec spec;
    spec.n = a.n;
    spec.r = a.r;
    if (a.connected) spec.predicates.push_back(Predicate::Connected);
    if (a.claw_free) spec.predicates.push_back(Predicate::ClawFree);
    if (a.has_claw) spec.predicates.push_back(Predicate::HasClaw);
    if (a.supertough) spec.predicates.push_back(Predicate::Supertough);
    std::istream* stream = nullptr;
    if (a.from_stdin) stream = &s.in;
    if (!a.input.empty()) stream = &file;
    spec.source = stream != nullptr ? Source::Graph6Stream : Source::BuiltinEnumeration;

    const CensusResult result = run_census(spec, stream, CensusOptions{a.workers});

    if (!a.survivors.empty()) {
        std::ofstream out{a.survivors};
        for (const auto& sv : result.survivors) out << sv.canonical_graph6 << '\n';
    }
    if (!a.emit_dot.empty()) {
        for (std::size_t i = 0; i < result.survivors.size(); ++i) {
            std::ofstream out{std::filesystem::path{a.emit_dot} / ("survivor_" + std::to_string(i + 1) + ".dot")};
            out << to_dot(result.survivors[i].graph);
        }
    }
    if (a.format == "json") {
        s.out << census_json(result).dump(2) << '\n';
    } else if (a.format == "graph6") {
        for (const auto& sv : result.survivors) s.out << sv.canonical_graph6 << '\n';
    } else {
        print_census_table(result, s);
    }
    for (const auto& e : result.errors) s.err << "line " << e.line << ": " << e.message << '\n';
    return a.strict && !result.errors.empty() ? kExitParse : kExitOk;
}

// ---------------------------------------------------------------------------

inline unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

/// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    Session session{out, err, in};
    CLI::App app{"Exact toughness, connectivity and claw tools for small graphs", "supertough"};
    app.require_subcommand(1);
    const auto format_check = CLI::IsMember({"json", "table", "graph6", "edges", "dot"});
    const auto workers_check = CLI::PositiveNumber;

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Emit a graph from a named family");
    gen_cmd->add_option("family", gen.family, "jm, cycle_power, cycle, path, complete, star, petersen, random")
        ->required();
    gen_cmd->add_option("--m", gen.m, "J_m parameter");
    gen_cmd->add_option("--n", gen.n, "Order");
    gen_cmd->add_option("--k", gen.k, "Cycle power or number of star leaves");
    gen_cmd->add_option("--p", gen.p, "Edge probability (random)");
    gen_cmd->add_option("--seed", gen.seed, "Seed (random)");
    gen_cmd->add_option("--format", gen.format, "graph6, edges, dot or json")->check(format_check);
    gen_cmd->add_flag("--labels", gen.labels, "Use J_m role names in DOT/JSON");

    InvariantArgs inv;
    inv.workers = default_workers();
    auto* inv_cmd = app.add_subcommand("invariant", "Compute one invariant with its certificate");
    inv_cmd->add_option("which", inv.which, "toughness, connectivity, independence or claws")->required();
    inv_cmd->add_option("--g6", inv.g6, "Graph in graph6");
    inv_cmd->add_option("--input", inv.input, "Read the graph from a file (default: stdin)");
    inv_cmd->add_option("--input-format", inv.input_format, "graph6 or edges");
    inv_cmd->add_option("--format", inv.format, "json or table")->check(format_check);
    inv_cmd->add_option("--workers", inv.workers)->check(workers_check);

    VerifyArgs ver;
    ver.workers = default_workers();
    auto* ver_cmd = app.add_subcommand("verify", "Check the J_m claims and background facts");
    ver_cmd->add_option("--m", ver.m, "N or LO..HI");
    ver_cmd->add_flag("--odd-only", ver.odd_only);
    ver_cmd->add_option("--claim", ver.claims, "Claim id; repeatable");
    ver_cmd->add_flag("--exploratory", ver.exploratory, "Allow m outside a claim's hypothesis");
    ver_cmd->add_option("--format", ver.format, "json or table")->check(format_check);
    ver_cmd->add_option("--workers", ver.workers)->check(workers_check);

    CensusArgs cen;
    cen.workers = default_workers();
    auto* cen_cmd = app.add_subcommand("census", "Filter regular graphs of one order and degree");
    cen_cmd->add_option("--n", cen.n, "Order")->required();
    cen_cmd->add_option("--r", cen.r, "Degree")->required();
    cen_cmd->add_flag("--connected", cen.connected);
    cen_cmd->add_flag("--supertough", cen.supertough);
    cen_cmd->add_flag("--claw-free", cen.claw_free);
    cen_cmd->add_flag("--has-claw", cen.has_claw);
    cen_cmd->add_flag("--stdin", cen.from_stdin, "Read graph6 lines from stdin");
    cen_cmd->add_option("--input", cen.input, "Read graph6 lines from a file");
    cen_cmd->add_option("--survivors", cen.survivors, "Write survivors as graph6");
    cen_cmd->add_option("--emit-dot", cen.emit_dot, "Write one DOT file per survivor into this directory");
    cen_cmd->add_flag("--strict", cen.strict, "Exit 3 if any input line fails");
    cen_cmd->add_option("--format", cen.format, "json, table or graph6")->check(format_check);
    cen_cmd->add_option("--workers", cen.workers)->check(workers_check);

    try {
        std::vector<std::string> reversed{args.rbegin(), args.rend()};
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen, session);
        if (inv_cmd->parsed()) return cmd_invariant(inv, session);
        if (ver_cmd->parsed()) return cmd_verify(ver, session);
        return cmd_census(cen, session);
    } catch (const ParseError& e) {
        err << "parse error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitParse;
    } catch (const EnvelopeError& e) {
        err << "envelope: " << e.what() << '\n';
        return kExitEnvelope;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace supertough::cli

#endif  // SUPERTOUGH_TOOLS_CLI_HPP_
