#include "chordal/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

#include "chordal/canonical.hpp"
#include "chordal/errors.hpp"
#include "chordal/graph6.hpp"
#include "chordal/invariants.hpp"

namespace chordal {

namespace {

constexpr double kFiedlerTolerance = 1e-7;

constexpr int kCheckCount = 7;
const char* kCheckIds[kCheckCount] = {"K1", "K2", "K3", "K4", "K5", "K6", "K7"};
const char* kCheckDescriptions[kCheckCount] = {
    "kappa + tau_max(complement) <= n-1 on chordal graphs without universal vertices",
    "0 <= kappa <= (n-1) - ceil(2*sqrt(n)-2) on chordal graphs without universal vertices",
    "n - kappa = projdim + 1 on chordal graphs without universal vertices",
    "Betti table concentrated on the linear strand for chordal graphs",
    "tau_max >= ceil(2*sqrt(n)-2) on graphs without isolated vertices",
    "projdim >= tau_max(complement) on chordal graphs without universal vertices",
    "algebraic connectivity <= kappa + 1e-7 on non-complete graphs",
};

enum class Verdict : std::uint8_t { not_applicable, pass, fail };

struct PerGraph {
    std::string graph6;
    std::string sort_key;
    bool chordal = false;
    bool chordal_star = false;
    bool extremal = false;
    Verdict verdict[kCheckCount] = {};
    nlohmann::json observed[kCheckCount];
};

std::vector<Graph> load_corpus(const CorpusOptions& opts, int& n_out) {
    std::vector<Graph> graphs;
    if (opts.source == CorpusSource::builtin_enumeration) {
        graphs = enumerate_graphs(opts.n);
        n_out = opts.n;
    } else {
        graphs = read_graph6_file(opts.path);
        if (graphs.empty()) throw std::invalid_argument(opts.path + ": no graphs found");
        n_out = graphs.front().order();
        for (std::size_t i = 0; i < graphs.size(); ++i)
            if (graphs[i].order() != n_out)
                throw std::invalid_argument(opts.path + ": mixed graph orders (line " + std::to_string(i + 1) + ")");
        if (n_out < 1) throw std::invalid_argument(opts.path + ": graphs must have n >= 1");
    }
    return graphs;
}

template <typename Fn>
void parallel_over(const std::vector<Graph>& graphs, int jobs, bool progress, Fn&& fn) {
    const std::size_t total = graphs.size();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex err_mutex;
    std::exception_ptr error;
    const std::size_t report_every = std::max<std::size_t>(1, total / 20);

    const auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) return;
            try {
                fn(i, graphs[i]);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!error)
                    error = std::make_exception_ptr(
                        std::runtime_error("while processing " + write_graph6(graphs[i]) + ": " + e.what()));
                return;
            }
            const std::size_t d = done.fetch_add(1) + 1;
            if (progress && d % report_every == 0) {
                std::lock_guard<std::mutex> lock(err_mutex);
                std::cerr << "  processed " << d << "/" << total << " graphs\n";
            }
        }
    };

    const int threads = std::max(1, jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
}

PerGraph examine(const Graph& g, int n, bool betti_enabled, Field field) {
    PerGraph out;
    out.graph6 = write_graph6(g);
    out.sort_key = n <= 16 ? canonical_form(g) : out.graph6;

    const bool universal = has_universal_vertex(g);
    out.chordal = is_chordal(g);
    out.chordal_star = out.chordal && !universal;
    const bool complete = g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2;
    const bool isolated_free = !has_isolated_vertex(g);
    const int bound = kappa_upper_bound(n);
    const int floor_tau = ceil_two_sqrt_minus_two(n);

    const int kappa = vertex_connectivity(g);
    out.extremal = out.chordal_star && kappa == bound;

    const auto record = [&](int check, bool ok, nlohmann::json observed) {
        out.verdict[check] = ok ? Verdict::pass : Verdict::fail;
        if (!ok) out.observed[check] = std::move(observed);
    };

    if (out.chordal_star) {
        const int tau_comp = tau_max(g.complement()).value;
        record(0, kappa + tau_comp <= n - 1,
               {{"kappa", kappa}, {"tau_max_complement", tau_comp}, {"n_minus_1", n - 1}});
        record(1, kappa >= 0 && kappa <= bound, {{"kappa", kappa}, {"bound", bound}});
        if (betti_enabled) {
            const BettiTable table = betti_table_hochster(g, field);
            const int pd = proj_dim(table);
            record(2, n - kappa == pd + 1, {{"kappa", kappa}, {"projdim", pd}});
            record(3, has_linear_resolution(table), {{"projdim", pd}});
            record(5, pd >= tau_comp, {{"projdim", pd}, {"tau_max_complement", tau_comp}});
        }
    } else if (out.chordal && betti_enabled) {
        const BettiTable table = betti_table_hochster(g, field);
        record(3, has_linear_resolution(table), {{"projdim", proj_dim(table)}});
    }

    if (isolated_free) {
        const int tau_self = tau_max(g).value;
        record(4, tau_self >= floor_tau, {{"tau_max", tau_self}, {"floor", floor_tau}});
    }

    if (!complete) {
        const double alg = algebraic_connectivity(g);
        record(6, alg <= kappa + kFiedlerTolerance, {{"algebraic_connectivity", alg}, {"kappa", kappa}});
    }
    return out;
}

}  // namespace

std::string source_name(CorpusSource s) {
    return s == CorpusSource::builtin_enumeration ? "builtin_enumeration" : "graph6_file";
}

AnalyzeResult analyze(const Graph& g, bool with_betti, Field field) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("analyze needs n >= 1");
    if (with_betti && n > 16) throw unsupported_error("betti analysis supports n <= 16");

    AnalyzeResult res;
    res.graph6 = write_graph6(g);
    InvariantRecord& r = res.record;
    r.n = n;
    r.kappa = vertex_connectivity(g);
    r.tau_max_self = tau_max(g).value;
    r.tau_max_complement = tau_max(g.complement()).value;
    if (n >= 2) r.alg_connectivity = algebraic_connectivity(g);
    r.chordal = is_chordal(g);
    r.universal_vertex = has_universal_vertex(g);
    r.chordal_star = r.chordal && !r.universal_vertex;
    r.gapfree = is_gapfree(g);
    r.kappa_bound = kappa_upper_bound(n);
    r.extremal = r.chordal_star && r.kappa == r.kappa_bound;

    if (with_betti) res.betti = betti_table_hochster(g, field);
    if (r.chordal_star && n <= 16) {
        res.kappa_betti = kappa_via_betti(g, field);
        if (res.betti) {
            ProjdimIdentity identity;
            identity.n_minus_kappa = n - r.kappa;
            identity.projdim_plus_one = proj_dim(*res.betti) + 1;
            identity.holds = identity.n_minus_kappa == identity.projdim_plus_one;
            res.projdim_identity = identity;
        } else {
            // Chordal tables live on the linear strand, so the strand alone
            // pins the projective dimension.
            const auto strand = linear_strand_chordal(g);
            int pd = 0;
            for (int i = 1; i < n; ++i)
                if (strand[static_cast<std::size_t>(i)] != 0) pd = i;
            ProjdimIdentity identity;
            identity.n_minus_kappa = n - r.kappa;
            identity.projdim_plus_one = pd + 1;
            identity.holds = identity.n_minus_kappa == identity.projdim_plus_one;
            res.projdim_identity = identity;
        }
    }
    return res;
}

CorpusReport verify_corpus(const CorpusOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    CorpusReport report;
    report.source = opts.source;
    report.input = opts.path;
    report.field = opts.field;

    int n = 0;
    const std::vector<Graph> graphs = load_corpus(opts, n);
    report.n = n;
    report.scanned = static_cast<long long>(graphs.size());
    const bool betti_enabled = n <= 16;

    std::vector<PerGraph> facts(graphs.size());
    parallel_over(graphs, opts.jobs, opts.progress,
                  [&](std::size_t i, const Graph& g) { facts[i] = examine(g, n, betti_enabled, opts.field); });

    for (int c = 0; c < kCheckCount; ++c) {
        CheckResult check;
        check.id = kCheckIds[c];
        check.description = kCheckDescriptions[c];
        check.skipped = !betti_enabled && (c == 2 || c == 3 || c == 5);
        report.checks.push_back(std::move(check));
    }

    std::vector<std::pair<std::string, Counterexample>> failures;
    for (const PerGraph& f : facts) {
        report.chordal_count += f.chordal;
        report.chordal_star_count += f.chordal_star;
        for (int c = 0; c < kCheckCount; ++c) {
            if (f.verdict[c] == Verdict::not_applicable) continue;
            ++report.checks[c].applicable;
            if (f.verdict[c] == Verdict::pass) {
                ++report.checks[c].passed;
            } else {
                failures.push_back({f.sort_key, {f.graph6, kCheckIds[c], f.observed[c]}});
            }
        }
        if (f.extremal) report.extremal.push_back(f.sort_key);
    }
    std::sort(failures.begin(), failures.end(),
              [](const auto& a, const auto& b) { return std::tie(a.second.check, a.first) < std::tie(b.second.check, b.first); });
    for (auto& [key, cex] : failures) {
        const auto idx = static_cast<std::size_t>(
            std::find(kCheckIds, kCheckIds + kCheckCount, cex.check) - kCheckIds);
        report.checks[idx].counterexamples.push_back(std::move(cex));
    }
    std::sort(report.extremal.begin(), report.extremal.end());
    report.extremal.erase(std::unique(report.extremal.begin(), report.extremal.end()), report.extremal.end());

    for (const CheckResult& check : report.checks)
        if (!check.skipped && check.failed() != 0) report.all_passed = false;
    report.timing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<std::string> classify_extremal(const CorpusOptions& opts) {
    int n = 0;
    const std::vector<Graph> graphs = load_corpus(opts, n);
    const int bound = kappa_upper_bound(n);
    std::vector<std::string> found(graphs.size());
    parallel_over(graphs, opts.jobs, opts.progress, [&](std::size_t i, const Graph& g) {
        if (!is_chordal_star(g)) return;
        if (vertex_connectivity(g) != bound) return;
        found[i] = n <= 16 ? canonical_form(g) : write_graph6(g);
    });
    std::vector<std::string> out;
    for (auto& s : found)
        if (!s.empty()) out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SpectrumReport spectrum_report(int n, std::uint64_t seed, int jobs) {
    if (n < 4) throw std::domain_error("spectrum needs n >= 4");
    const auto start = std::chrono::steady_clock::now();
    SpectrumReport report;
    report.n = n;
    report.kappa_bound = kappa_upper_bound(n);
    std::set<int> achieved;
    for (int kappa = 0; kappa <= report.kappa_bound; ++kappa) {
        SpectrumRow row;
        row.kappa = kappa;
        try {
            const Construction c = construct_chordal_star(n, kappa, seed);
            row.ok = true;
            row.family = family_name(c.recipe.family);
            row.params = c.recipe.params;
            row.graph6 = write_graph6(c.graph);
            achieved.insert(kappa);
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
            report.all_ok = false;
        }
        report.rows.push_back(std::move(row));
    }

    if (n <= 9) {
        const std::vector<Graph> graphs = enumerate_graphs(n);
        std::vector<int> kappas(graphs.size(), -1);
        parallel_over(graphs, jobs, false, [&](std::size_t i, const Graph& g) {
            if (is_chordal_star(g)) kappas[i] = vertex_connectivity(g);
        });
        std::set<int> observed;
        for (const int k : kappas)
            if (k >= 0) observed.insert(k);
        report.corpus_cross_check = observed == achieved ? "pass" : "fail";
        if (report.corpus_cross_check == "fail") report.all_ok = false;
    } else {
        report.corpus_cross_check = "skipped";
    }
    report.timing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const BettiTable& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, value] : t.entries)
        entries.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
    return {{"n", t.n},
            {"field", field_name(t.field)},
            {"entries", entries},
            {"projdim", proj_dim(t)},
            {"linear_resolution", has_linear_resolution(t)}};
}

nlohmann::json to_json(const InvariantRecord& r) {
    nlohmann::json j{{"n", r.n},
                     {"kappa", r.kappa},
                     {"tau_max_self", r.tau_max_self},
                     {"tau_max_complement", r.tau_max_complement},
                     {"is_chordal", r.chordal},
                     {"has_universal_vertex", r.universal_vertex},
                     {"is_chordal_star", r.chordal_star},
                     {"is_gapfree", r.gapfree},
                     {"kappa_bound", r.kappa_bound},
                     {"extremal", r.extremal}};
    if (r.alg_connectivity)
        j["alg_connectivity"] = *r.alg_connectivity;
    else
        j["alg_connectivity"] = nullptr;
    return j;
}

nlohmann::json to_json(const AnalyzeResult& r) {
    nlohmann::json j{{"version", 1}, {"kind", "analyze"}, {"graph6", r.graph6}, {"record", to_json(r.record)}};
    j["kappa_via_betti"] = r.kappa_betti ? nlohmann::json(*r.kappa_betti) : nlohmann::json(nullptr);
    if (r.projdim_identity) {
        j["projdim_identity"] = {{"n_minus_kappa", r.projdim_identity->n_minus_kappa},
                                 {"projdim_plus_one", r.projdim_identity->projdim_plus_one},
                                 {"holds", r.projdim_identity->holds}};
    } else {
        j["projdim_identity"] = nullptr;
    }
    if (r.betti) j["betti"] = to_json(*r.betti);
    return j;
}

nlohmann::json to_json(const CorpusReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& check : r.checks) {
        nlohmann::json counterexamples = nlohmann::json::array();
        for (const Counterexample& cex : check.counterexamples)
            counterexamples.push_back({{"graph6", cex.graph6}, {"check", cex.check}, {"observed", cex.observed}});
        checks.push_back({{"id", check.id},
                          {"description", check.description},
                          {"applicable", check.applicable},
                          {"passed", check.passed},
                          {"failed", check.failed()},
                          {"skipped", check.skipped},
                          {"counterexamples", counterexamples}});
    }
    return {{"version", 1},
            {"kind", "corpus_report"},
            {"n", r.n},
            {"source", source_name(r.source)},
            {"input", r.source == CorpusSource::graph6_file ? nlohmann::json(r.input) : nlohmann::json(nullptr)},
            {"field", field_name(r.field)},
            {"totals",
             {{"scanned", r.scanned}, {"chordal", r.chordal_count}, {"chordal_star", r.chordal_star_count}}},
            {"checks", checks},
            {"extremal", r.extremal},
            {"all_passed", r.all_passed},
            {"timing_seconds", r.timing_seconds}};
}

nlohmann::json to_json(const SpectrumReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SpectrumRow& row : r.rows) {
        nlohmann::json j{{"kappa", row.kappa}, {"ok", row.ok}};
        if (row.ok) {
            j["family"] = row.family;
            j["params"] = row.params;
            j["graph6"] = row.graph6;
        } else {
            j["error"] = row.error;
        }
        rows.push_back(std::move(j));
    }
    return {{"version", 1},
            {"kind", "spectrum"},
            {"n", r.n},
            {"kappa_bound", r.kappa_bound},
            {"rows", rows},
            {"corpus_cross_check", r.corpus_cross_check},
            {"all_ok", r.all_ok},
            {"timing_seconds", r.timing_seconds}};
}

std::string corpus_csv(const CorpusReport& r) {
    std::string csv = "check,applicable,passed,failed,skipped\n";
    for (const CheckResult& check : r.checks)
        csv += check.id + "," + std::to_string(check.applicable) + "," + std::to_string(check.passed) + "," +
               std::to_string(check.failed()) + "," + (check.skipped ? "true" : "false") + "\n";
    return csv;
}

}  // namespace chordal
