// chordalkit: exact connectivity and edge-ideal Betti diagnostics for small
// graphs, with exhaustive corpus verification at desk scale.
//
// Reports go to stdout as JSON; progress goes to stderr. Exit codes:
//   0 success / all checks passed
//   1 a corpus check failed
//   2 bad input (arguments, graph literals, graph6 files)
//   3 a resource budget was exceeded

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordal/canonical.hpp"
#include "chordal/errors.hpp"
#include "chordal/graph6.hpp"
#include "chordal/harness.hpp"
#include "chordal/invariants.hpp"

namespace {

using chordal::Graph;

// Graph literals: graph6, or an edge list like "0-1,1-2,2-3" (vertex count
// defaults to max index + 1; --n can pad isolated vertices).
Graph parse_graph_arg(const std::string& text, std::optional<int> n_flag) {
    if (text.find('-') == std::string::npos) {
        Graph g = chordal::parse_graph6(text);
        if (n_flag && *n_flag != g.order())
            throw std::invalid_argument("--n disagrees with the graph6 header");
        return g;
    }
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string token = text.substr(pos, comma - pos);
        const std::size_t dash = token.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
            throw std::invalid_argument("bad edge token '" + token + "' (expected u-v)");
        const int u = std::stoi(token.substr(0, dash));
        const int v = std::stoi(token.substr(dash + 1));
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
        pos = comma + 1;
    }
    const int n = n_flag.value_or(max_vertex + 1);
    return Graph::from_edges(n, edges);
}

void emit(const nlohmann::json& report, const std::string& out_path, const std::string& csv) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << report.dump(2) << "\n";
    if (!csv.empty()) {
        std::string csv_path = out_path;
        const std::size_t dot = csv_path.rfind('.');
        csv_path = (dot == std::string::npos ? csv_path : csv_path.substr(0, dot)) + ".csv";
        std::ofstream csv_out(csv_path);
        if (!csv_out) throw std::invalid_argument("cannot write " + csv_path);
        csv_out << csv;
        std::cerr << "wrote " << out_path << " and " << csv_path << "\n";
    } else {
        std::cerr << "wrote " << out_path << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact connectivity and edge-ideal Betti toolkit"};
    app.require_subcommand(1);

    std::optional<int> n_flag;
    std::string input_path, out_path, field_name = "gf2", graph_arg;
    int jobs = 1;
    std::uint64_t seed = chordal::kDefaultSearchSeed;
    int kappa = 0;
    bool with_betti = false;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--field", field_name, "coefficient field: gf2 or q");
        cmd->add_option("--jobs", jobs, "worker threads for corpus runs");
        cmd->add_option("--seed", seed, "seed for the construction search");
        cmd->add_option("--out", out_path, "write the JSON report here (plus a CSV summary for corpora)");
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "invariants of a single graph");
    analyze_cmd->add_option("graph", graph_arg, "graph6 string or edge list u-v,u-v,...")->required();
    analyze_cmd->add_option("--n", n_flag, "vertex count for edge-list literals");
    analyze_cmd->add_flag("--with-betti", with_betti, "attach the full Betti table (n <= 16)");
    add_common(analyze_cmd);

    CLI::App* betti_cmd = app.add_subcommand("betti", "Betti table of the complement edge ideal");
    betti_cmd->add_option("graph", graph_arg, "graph6 string or edge list u-v,u-v,...")->required();
    betti_cmd->add_option("--n", n_flag, "vertex count for edge-list literals");
    add_common(betti_cmd);

    CLI::App* construct_cmd = app.add_subcommand("construct", "build a verified chordal* graph with given kappa");
    construct_cmd->add_option("--n", n_flag, "vertex count")->required();
    construct_cmd->add_option("--kappa", kappa, "target vertex connectivity")->required();
    add_common(construct_cmd);

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "witnesses for every admissible kappa");
    spectrum_cmd->add_option("--n", n_flag, "vertex count")->required();
    add_common(spectrum_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify-corpus", "run checks K1-K7 over a corpus");
    verify_cmd->add_option("--n", n_flag, "order for the built-in enumeration (1..9)");
    verify_cmd->add_option("--input", input_path, "graph6 file (one graph per line)");
    add_common(verify_cmd);

    CLI::App* classify_cmd = app.add_subcommand("classify-extremal", "chordal* graphs meeting the kappa ceiling");
    classify_cmd->add_option("--n", n_flag, "order for the built-in enumeration (1..9)");
    classify_cmd->add_option("--input", input_path, "graph6 file (one graph per line)");
    add_common(classify_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        const chordal::Field field = chordal::field_from_name(field_name);

        const auto corpus_options = [&]() {
            chordal::CorpusOptions opts;
            if (!input_path.empty()) {
                opts.source = chordal::CorpusSource::graph6_file;
                opts.path = input_path;
            } else if (n_flag) {
                opts.source = chordal::CorpusSource::builtin_enumeration;
                opts.n = *n_flag;
            } else {
                throw std::invalid_argument("need --n (built-in corpus) or --input (graph6 file)");
            }
            opts.field = field;
            opts.jobs = jobs;
            opts.progress = true;
            return opts;
        };

        if (*analyze_cmd) {
            const Graph g = parse_graph_arg(graph_arg, n_flag);
            emit(to_json(chordal::analyze(g, with_betti, field)), out_path, "");
        } else if (*betti_cmd) {
            const Graph g = parse_graph_arg(graph_arg, n_flag);
            emit(to_json(chordal::betti_table_hochster(g, field)), out_path, "");
        } else if (*construct_cmd) {
            const chordal::Construction c = chordal::construct_chordal_star(*n_flag, kappa, seed);
            nlohmann::json j{{"version", 1},
                             {"kind", "construction"},
                             {"n", *n_flag},
                             {"kappa", kappa},
                             {"family", family_name(c.recipe.family)},
                             {"params", c.recipe.params},
                             {"graph6", chordal::write_graph6(c.graph)},
                             {"canonical_graph6", chordal::canonical_form(c.graph)}};
            emit(j, out_path, "");
        } else if (*spectrum_cmd) {
            const chordal::SpectrumReport report = chordal::spectrum_report(*n_flag, seed, jobs);
            emit(to_json(report), out_path, "");
            if (!report.all_ok) return 1;
        } else if (*verify_cmd) {
            const chordal::CorpusReport report = chordal::verify_corpus(corpus_options());
            emit(to_json(report), out_path, corpus_csv(report));
            if (!report.all_passed) {
                std::cerr << "failing checks:";
                for (const auto& check : report.checks)
                    if (!check.skipped && check.failed() != 0) std::cerr << " " << check.id;
                std::cerr << "\n";
                return 1;
            }
        } else if (*classify_cmd) {
            const auto graphs = chordal::classify_extremal(corpus_options());
            nlohmann::json j{{"version", 1},
                             {"kind", "extremal_classification"},
                             {"count", graphs.size()},
                             {"graphs", graphs}};
            if (n_flag) j["n"] = *n_flag;
            j["source"] = input_path.empty() ? "builtin_enumeration" : "graph6_file";
            emit(j, out_path, "");
        }
    } catch (const chordal::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const chordal::construction_error& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
