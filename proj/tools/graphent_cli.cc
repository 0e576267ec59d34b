// graphent: Scott-measure profiles of qubit graph states.
//
// Exit codes: 0 success, 1 input error, 2 subset size outside the valid
// window, 3 dense/stabilizer disagreement (a bug sentinel), 4 a verify-paper
// claim failed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "graphent/error.h"
#include "graphent/report.h"

using namespace graphent;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitWindow = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitClaimFailed = 4;
constexpr size_t kMaxProfileVertices = 7;

struct RunConfig {
    std::string engine = "both";
    bool allow_complement = false;
    std::string format = "json";
    uint64_t seed = VerifyOptions{}.seed;
    std::vector<size_t> ms;
    bool connected_only = false;
    bool up_to_iso = false;
    std::string out_path;
    std::string input;
    size_t n = 0;
};

/// One parsed input: a graph, or a raw state for the built-in G* tables.
struct Input {
    std::string label;
    std::variant<Graph, PureState> value;
};

std::vector<Input> load_inputs(const std::string &arg) {
    if (arg == "gstar") {
        return {Input{"gstar", gstar_state()}};
    }
    if (arg == "gstar-printed") {
        return {Input{"gstar-printed", gstar_state_as_printed()}};
    }
    auto parse_line = [](const std::string &line) -> Graph {
        return line.find(':') != std::string::npos ? parse_edge_list(line) : parse_graph6(line);
    };
    if (arg.find(':') == std::string::npos && std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::vector<Input> out;
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            Graph g = parse_line(line);
            out.push_back(Input{to_graph6(g), std::move(g)});
        }
        if (out.empty()) {
            throw Error(ErrorCode::kSyntax, "no graphs in " + arg);
        }
        return out;
    }
    Graph g = parse_line(arg);
    return {Input{to_graph6(g), std::move(g)}};
}

void write_payload(const RunConfig &cfg, const std::string &payload) {
    if (cfg.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::kSyntax, "cannot open output file " + cfg.out_path);
    }
    out << payload;
}

QmReport profile_input(const Input &input, const RunConfig &cfg) {
    QmRequest req{cfg.ms, cfg.allow_complement, parse_engine(cfg.engine)};
    if (const Graph *g = std::get_if<Graph>(&input.value)) {
        return q_profile(*g, req);
    }
    return q_profile(std::get<PureState>(input.value), req);
}

QmReport purities_of_input(const Input &input, const RunConfig &cfg) {
    const size_t n = std::visit([](const auto &v) { return v.n(); }, input.value);
    std::vector<size_t> sizes = cfg.ms;
    if (sizes.empty()) {
        for (size_t m = 1; m < n; m++) {
            sizes.push_back(m);
        }
    }
    if (const Graph *g = std::get_if<Graph>(&input.value)) {
        return purity_table(*g, sizes, parse_engine(cfg.engine));
    }
    if (parse_engine(cfg.engine) == Engine::kStabilizer) {
        throw Error(ErrorCode::kEngineMismatch, "the stabilizer engine needs a graph, not a raw state");
    }
    return purity_table(std::get<PureState>(input.value), sizes);
}

std::string emit_reports(const std::vector<Input> &inputs, const std::vector<QmReport> &reports, Format format) {
    if (format == Format::kCsv) {
        std::string out = csv_header();
        for (size_t i = 0; i < reports.size(); i++) {
            out += report_to_csv(reports[i], inputs[i].label);
        }
        return out;
    }
    if (format == Format::kText) {
        std::string out;
        for (size_t i = 0; i < reports.size(); i++) {
            out += "graph " + inputs[i].label + "\n" + report_to_text(reports[i]);
        }
        return out;
    }
    json all = json::array();
    for (size_t i = 0; i < reports.size(); i++) {
        json j;
        j["input"] = inputs[i].label;
        if (const Graph *g = std::get_if<Graph>(&inputs[i].value)) {
            j["edges"] = to_edge_list(*g);
        }
        j.update(report_to_json(reports[i]));
        all.push_back(std::move(j));
    }
    return (all.size() == 1 ? all[0] : all).dump(2) + "\n";
}

int cmd_qm(const RunConfig &cfg, bool purities_only) {
    const std::vector<Input> inputs = load_inputs(cfg.input);
    std::vector<QmReport> reports;
    for (const Input &in : inputs) {
        reports.push_back(purities_only ? purities_of_input(in, cfg) : profile_input(in, cfg));
    }
    write_payload(cfg, emit_reports(inputs, reports, parse_format(cfg.format)));
    return kExitOk;
}

std::string csv_quote(const std::string &s) {
    return "\"" + s + "\"";
}

int cmd_enumerate(const RunConfig &cfg) {
    const Format format = parse_format(cfg.format);
    const std::vector<Graph> graphs = enumerate_graphs(cfg.n, cfg.connected_only, cfg.up_to_iso);
    const bool with_q = cfg.n >= 2 && cfg.n <= kMaxProfileVertices;
    if (!with_q && cfg.n > kMaxProfileVertices) {
        std::cerr << "note: Q profiles are limited to n <= " << kMaxProfileVertices << "; listing graphs only\n";
    }
    QmRequest req{cfg.ms, cfg.allow_complement, parse_engine(cfg.engine)};

    std::ostringstream out;
    json rows = json::array();
    std::vector<size_t> ms;
    if (with_q) {
        QmReport probe = q_profile(graphs.front(), req);
        for (const auto &[m, q] : probe.values) {
            ms.push_back(m);
        }
    }
    if (format == Format::kCsv) {
        out << "graph6,edges";
        for (size_t m : ms) {
            out << ",Q_" << m;
        }
        out << "\n";
    }
    for (const Graph &g : graphs) {
        std::optional<QmReport> r;
        if (with_q) {
            r = q_profile(g, req);
        }
        if (format == Format::kCsv) {
            out << to_graph6(g) << "," << csv_quote(to_edge_list(g));
            for (size_t m : ms) {
                out << "," << format12(r->values.at(m));
            }
            out << "\n";
        } else if (format == Format::kText) {
            out << to_graph6(g) << "  " << to_edge_list(g);
            for (size_t m : ms) {
                out << "  Q_" << m << "=" << format12(r->values.at(m));
            }
            out << "\n";
        } else {
            json row;
            row["graph6"] = to_graph6(g);
            row["edges"] = to_edge_list(g);
            if (r) {
                json full = report_to_json(*r);
                row["values"] = full["values"];
                row["exact_values"] = full["exact_values"];
            }
            rows.push_back(std::move(row));
        }
    }
    if (format == Format::kJson) {
        json j;
        j["version"] = kReportSchemaVersion;
        j["n"] = cfg.n;
        j["connected_only"] = cfg.connected_only;
        j["up_to_iso"] = cfg.up_to_iso;
        j["engine"] = cfg.engine;
        j["count"] = graphs.size();
        j["graphs"] = rows;
        out << j.dump(2) << "\n";
    }
    write_payload(cfg, out.str());
    return kExitOk;
}

int cmd_ame_search(const RunConfig &cfg) {
    const Format format = parse_format(cfg.format);
    const std::vector<Graph> ame = find_ame_graphs(cfg.n);
    std::optional<GstarMatch> match;
    if (cfg.n == 6) {
        match = match_gstar(ame);
    }
    std::ostringstream out;
    if (format == Format::kJson) {
        json j;
        j["version"] = kReportSchemaVersion;
        j["n"] = cfg.n;
        j["count"] = ame.size();
        j["graphs"] = json::array();
        for (const Graph &g : ame) {
            j["graphs"].push_back({{"graph6", to_graph6(g)}, {"edges", to_edge_list(g)}});
        }
        if (cfg.n == 6) {
            j["gstar_match"] = match ? json{{"edges", to_edge_list(match->graph)},
                                            {"candidate_graph6", to_graph6(match->candidate)},
                                            {"z_mask", match->z_mask},
                                            {"fidelity", round12(match->fidelity)}}
                                     : json(nullptr);
        }
        out << j.dump(2) << "\n";
    } else {
        if (format == Format::kCsv) {
            out << "graph6,edges\n";
        }
        for (const Graph &g : ame) {
            out << to_graph6(g) << (format == Format::kCsv ? "," + csv_quote(to_edge_list(g)) : "  " + to_edge_list(g))
                << "\n";
        }
        if (format == Format::kText && cfg.n == 6) {
            out << "G* match: " << (match ? to_edge_list(match->graph) : std::string("none")) << "\n";
        }
    }
    write_payload(cfg, out.str());
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    const std::vector<ClaimRecord> claims = verify_paper(opt);
    write_payload(cfg, emit_claims(claims, parse_format(cfg.format)));
    return any_failed(claims) ? kExitClaimFailed : kExitOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::kMOutOfRange:
        case ErrorCode::kEmptyMRange:
            return kExitWindow;
        case ErrorCode::kEngineDisagreement:
            return kExitDisagreement;
        default:
            return kExitInput;
    }
}

void add_common(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--engine", cfg.engine, "dense | stabilizer | both")
        ->check(CLI::IsMember({"dense", "stabilizer", "both"}));
    cmd->add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", cfg.out_path, "write the payload to this file instead of stdout");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Scott-measure (generalized Meyer-Wallach) profiles of qubit graph states"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *qm = app.add_subcommand("qm", "Q_m values of a graph state");
    qm->add_option("input", cfg.input, "edge list \"n: a-b, ...\", graph6 string, graph file, or gstar")->required();
    qm->add_option("--m", cfg.ms, "subset size (repeatable); default 1..floor(N/2)");
    qm->add_flag("--allow-complement", cfg.allow_complement, "allow m > floor(N/2), annotated");
    add_common(qm, cfg);

    auto *pur = app.add_subcommand("purities", "per-subset purities Tr[rho_S^2]");
    pur->add_option("input", cfg.input, "edge list, graph6 string, graph file, or gstar")->required();
    pur->add_option("--m", cfg.ms, "subset size (repeatable); default 1..N-1");
    add_common(pur, cfg);

    auto *enu = app.add_subcommand("enumerate", "all graphs on n vertices with their Q profiles");
    enu->add_option("n", cfg.n, "vertex count")->required();
    enu->add_flag("--connected-only", cfg.connected_only);
    enu->add_flag("--up-to-iso", cfg.up_to_iso, "one canonical representative per isomorphism class");
    enu->add_option("--m", cfg.ms, "subset size (repeatable)");
    enu->add_flag("--allow-complement", cfg.allow_complement);
    add_common(enu, cfg);

    auto *ame = app.add_subcommand("ame-search", "graphs whose states are absolutely maximally entangled");
    ame->add_option("n", cfg.n, "vertex count")->required();
    add_common(ame, cfg);

    auto *ver = app.add_subcommand("verify-paper", "check every claim and print pass/fail records");
    ver->add_option("--seed", cfg.seed, "seed for the random-state checks");
    add_common(ver, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (qm->parsed()) {
            return cmd_qm(cfg, false);
        }
        if (pur->parsed()) {
            return cmd_qm(cfg, true);
        }
        if (enu->parsed()) {
            return cmd_enumerate(cfg);
        }
        if (ame->parsed()) {
            return cmd_ame_search(cfg);
        }
        return cmd_verify(cfg);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
