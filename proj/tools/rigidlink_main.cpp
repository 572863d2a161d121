#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rigidlink/connectivity.hpp"
#include "rigidlink/graph_io.hpp"
#include "rigidlink/linkedness.hpp"
#include "rigidlink/oracle.hpp"
#include "rigidlink/pebble.hpp"
#include "rigidlink/report_json.hpp"

namespace {

using nlohmann::json;
using namespace rigidlink;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitMismatch = 3;

struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    if (format == "edge-list") return parse_graph(text, GraphFormat::EdgeList);
    if (format == "json") return parse_graph(text, GraphFormat::Json);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return parse_graph(text, GraphFormat::Json);
    return parse_graph_auto(text);
}

int resolve_vertex(const Graph& g, const std::string& token) {
    try {
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos == token.size()) {
            g.check_vertex(v);
            return v;
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    if (auto v = g.vertex_by_label(token)) return *v;
    throw PreconditionError("unknown vertex label: " + token);
}

uint64_t default_seed() {
    if (const char* env = std::getenv("RIGIDLINK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw PreconditionError("RIGIDLINK_SEED must be an integer");
        }
    }
    return kDefaultOracleSeed;
}

void emit(const std::string& command, const Graph& g, const json& result,
          std::chrono::steady_clock::time_point started) {
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             started);
    json report;
    report["command"] = command;
    report["input_digest"] = graph_digest(g);
    report["result"] = result;
    report["timing_ms"] = elapsed.count();
    std::cout << report.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigidlink: weakly globally linked pairs and global rigidity in the plane"};
    app.require_subcommand(1);

    std::string file, format = "auto", vertex_u, vertex_v, convert_to, convert_out;
    int dim = 2, reps = 2, trials = 100, threads = 1, samples = 20;
    uint64_t seed = 0;
    bool seed_given = false, oracle_check = false;
    std::string certificate = "on";

    auto add_common = [&](CLI::App* cmd, bool with_pair) {
        cmd->add_option("file", file, "graph file (edge-list or JSON)")->required();
        cmd->add_option("--format", format, "input format: edge-list|json|auto")
            ->check(CLI::IsMember({"edge-list", "json", "auto"}));
        if (with_pair) {
            cmd->add_option("u", vertex_u, "first vertex (id or label)")->required();
            cmd->add_option("v", vertex_v, "second vertex (id or label)")->required();
        }
    };

    CLI::App* rank_cmd = app.add_subcommand("rank", "rank of the 2-dimensional rigidity matroid");
    add_common(rank_cmd, false);
    rank_cmd->add_flag("--oracle-check", oracle_check, "cross-check against the numeric oracle");

    CLI::App* rigid_cmd = app.add_subcommand("is-rigid", "generic rigidity in the plane");
    add_common(rigid_cmd, false);
    rigid_cmd->add_flag("--oracle-check", oracle_check, "cross-check against the numeric oracle");

    CLI::App* grigid_cmd = app.add_subcommand("is-globally-rigid", "global rigidity in the plane");
    add_common(grigid_cmd, false);

    CLI::App* pair_cmd =
        app.add_subcommand("pair", "classify a vertex pair (weakly globally linked / loose)");
    add_common(pair_cmd, true);
    pair_cmd->add_option("--certificate", certificate, "emit the decision certificate: on|off")
        ->check(CLI::IsMember({"on", "off"}));

    CLI::App* all_cmd = app.add_subcommand("all-pairs", "classify every non-adjacent pair");
    add_common(all_cmd, false);
    std::string all_certificate = "off";
    all_cmd->add_option("--certificate", all_certificate, "emit certificates: on|off")
        ->check(CLI::IsMember({"on", "off"}));
    all_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    CLI::App* block_cmd = app.add_subcommand("three-block", "3-block of a pair");
    add_common(block_cmd, true);

    CLI::App* circuit_cmd =
        app.add_subcommand("circuit", "fundamental circuit of a linked pair");
    add_common(circuit_cmd, true);

    CLI::App* audit_cmd = app.add_subcommand("audit-mgr", "minimal-global-rigidity audit");
    add_common(audit_cmd, false);
    audit_cmd->add_option("--samples", samples, "random subsets to check")
        ->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--seed", seed, "subset sampling seed")->each([&](const std::string&) {
        seed_given = true;
    });

    CLI::App* oracle_cmd = app.add_subcommand("oracle-rank", "numeric generic rank oracle");
    add_common(oracle_cmd, false);
    bool float_rank = false;
    oracle_cmd->add_option("-d,--dim", dim, "dimension")->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--seed", seed, "oracle seed")->each([&](const std::string&) {
        seed_given = true;
    });
    oracle_cmd->add_option("--reps", reps, "repetitions (min 2)")->check(CLI::PositiveNumber);
    oracle_cmd->add_flag("--float", float_rank,
                         "also report the double-precision elimination rank (debug)");

    CLI::App* sample_cmd =
        app.add_subcommand("sample-equivalence", "search for a looseness witness");
    add_common(sample_cmd, true);
    sample_cmd->add_option("-d,--dim", dim, "dimension (1..3)")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--trials", trials, "trial count")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", seed, "sampler seed")->each([&](const std::string&) {
        seed_given = true;
    });

    CLI::App* convert_cmd = app.add_subcommand("convert", "translate between the two file formats");
    add_common(convert_cmd, false);
    convert_cmd->add_option("--to", convert_to, "target format: edge-list|json")
        ->required()
        ->check(CLI::IsMember({"edge-list", "json"}));
    convert_cmd->add_option("-o,--output", convert_out, "write the converted graph to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        json err;
        err["error"] = {{"kind", "usage"}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return kExitPrecondition;
    }

    auto started = std::chrono::steady_clock::now();
    try {
        Graph g = load_graph(file, format);
        uint64_t effective_seed = seed_given ? seed : default_seed();

        if (*rank_cmd) {
            json result;
            result["rank"] = rank2(g);
            if (oracle_check) {
                RankOracleReport oracle = generic_rank(g, 2, effective_seed);
                result["oracle"] = oracle_report_json(oracle);
                if (oracle.rank != result["rank"].get<int>())
                    throw OracleMismatch("pebble rank " + result["rank"].dump() +
                                         " != oracle rank " + std::to_string(oracle.rank));
            }
            emit("rank", g, result, started);
        } else if (*rigid_cmd) {
            json result;
            result["rigid"] = is_rigid2(g);
            result["rank"] = rank2(g);
            if (oracle_check) {
                RankOracleReport oracle = generic_rank(g, 2, effective_seed);
                result["oracle"] = oracle_report_json(oracle);
                bool oracle_rigid = g.vertex_count() <= 1 ||
                                    (g.vertex_count() == 2 && g.edge_count() == 1) ||
                                    (g.vertex_count() > 2 &&
                                     oracle.rank == 2 * g.vertex_count() - 3);
                if (oracle_rigid != result["rigid"].get<bool>())
                    throw OracleMismatch("combinatorial and numeric rigidity verdicts differ");
            }
            emit("is-rigid", g, result, started);
        } else if (*grigid_cmd) {
            emit("is-globally-rigid", g, rigidity_verdict_json(is_globally_rigid2(g)), started);
        } else if (*pair_cmd) {
            int u = resolve_vertex(g, vertex_u), v = resolve_vertex(g, vertex_v);
            emit("pair", g, classification_json(classify_pair(g, u, v, certificate == "on")),
                 started);
        } else if (*all_cmd) {
            json pairs = json::array();
            json linked = json::array();
            for (const PairClassification& pc :
                 classify_all_pairs(g, threads, all_certificate == "on")) {
                pairs.push_back(classification_json(pc));
                if (pc.verdict == Verdict::WeaklyGloballyLinked) linked.push_back({pc.u, pc.v});
            }
            json result;
            result["pairs"] = pairs;
            result["weakly_globally_linked"] = linked;
            emit("all-pairs", g, result, started);
        } else if (*block_cmd) {
            int u = resolve_vertex(g, vertex_u), v = resolve_vertex(g, vertex_v);
            ThreeBlockResult r = three_block(g, u, v);
            json result;
            result["separating_pair"] = r.separating_pair;
            result["block"] = r.block ? three_block_json(*r.block) : json(nullptr);
            emit("three-block", g, result, started);
        } else if (*circuit_cmd) {
            int u = resolve_vertex(g, vertex_u), v = resolve_vertex(g, vertex_v);
            emit("circuit", g, circuit_json(fundamental_circuit(g, u, v)), started);
        } else if (*audit_cmd) {
            emit("audit-mgr", g,
                 mgr_audit_json(audit_minimally_globally_rigid(g, samples, effective_seed)),
                 started);
        } else if (*oracle_cmd) {
            json result = oracle_report_json(generic_rank(g, dim, effective_seed, reps));
            if (float_rank) result["float_rank"] = generic_rank_float(g, dim, effective_seed);
            emit("oracle-rank", g, result, started);
        } else if (*sample_cmd) {
            int u = resolve_vertex(g, vertex_u), v = resolve_vertex(g, vertex_v);
            auto witness = equivalence_sampler(g, u, v, dim, trials, effective_seed);
            json result;
            result["witness_found"] = witness.has_value();
            result["trials"] = trials;
            result["witness"] = witness ? witness_json(*witness) : json(nullptr);
            emit("sample-equivalence", g, result, started);
        } else if (*convert_cmd) {
            GraphFormat target =
                convert_to == "json" ? GraphFormat::Json : GraphFormat::EdgeList;
            std::string content = serialize_graph(g, target);
            if (!convert_out.empty()) {
                std::ofstream out(convert_out, std::ios::binary);
                if (!out) throw PreconditionError("cannot write file: " + convert_out);
                out << content;
            }
            json result;
            result["format"] = convert_to;
            result["content"] = content;
            emit("convert", g, result, started);
        }
        return kExitOk;
    } catch (const ParseError& e) {
        json err;
        err["error"] = {{"kind", "parse"}, {"message", e.what()}, {"line", e.line()}};
        std::cerr << err.dump() << '\n';
        return kExitParse;
    } catch (const OracleMismatch& e) {
        json err;
        err["error"] = {{"kind", "oracle-mismatch"}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return kExitMismatch;
    } catch (const PreconditionError& e) {
        json err;
        err["error"] = {{"kind", "precondition"}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"kind", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << '\n';
        return kExitPrecondition;
    }
}
