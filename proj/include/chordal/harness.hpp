#ifndef CHORDAL_HARNESS_HPP
#define CHORDAL_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chordal/betti.hpp"
#include "chordal/constructions.hpp"
#include "chordal/graph.hpp"
#include "chordal/homology.hpp"

namespace chordal {

struct InvariantRecord {
    int n = 0;
    int kappa = 0;
    int tau_max_self = 0;
    int tau_max_complement = 0;
    std::optional<double> alg_connectivity;
    bool chordal = false;
    bool universal_vertex = false;
    bool chordal_star = false;
    bool gapfree = false;
    int kappa_bound = 0;
    bool extremal = false;
};

struct AnalyzeResult {
    std::string graph6;
    InvariantRecord record;
    // Present for chordal-star inputs with n <= 16.
    std::optional<int> kappa_betti;
    std::optional<ProjdimIdentity> projdim_identity;
    std::optional<BettiTable> betti;  // only with with_betti
};

AnalyzeResult analyze(const Graph& g, bool with_betti, Field field = Field::GF2);

enum class CorpusSource { builtin_enumeration, graph6_file };

struct CorpusOptions {
    int n = 0;  // ignored for file sources (taken from the file)
    CorpusSource source = CorpusSource::builtin_enumeration;
    std::string path;
    Field field = Field::GF2;
    int jobs = 1;
    bool progress = false;
};

struct Counterexample {
    std::string graph6;
    std::string check;
    nlohmann::json observed;
};

struct CheckResult {
    std::string id;
    std::string description;
    long long applicable = 0;
    long long passed = 0;
    bool skipped = false;
    std::vector<Counterexample> counterexamples;

    long long failed() const { return applicable - passed; }
};

struct CorpusReport {
    int n = 0;
    CorpusSource source = CorpusSource::builtin_enumeration;
    std::string input;
    Field field = Field::GF2;
    long long scanned = 0;
    long long chordal_count = 0;
    long long chordal_star_count = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> extremal;  // canonical graph6, ascending
    bool all_passed = true;
    double timing_seconds = 0.0;
};

// Runs checks K1..K7 over the corpus. Betti-backed checks (K3, K4, K6) are
// marked skipped for n > 16 instead of silently dropped.
CorpusReport verify_corpus(const CorpusOptions& opts);

// Chordal graphs without universal vertices meeting the connectivity
// ceiling, one canonical graph6 string per isomorphism class, sorted.
std::vector<std::string> classify_extremal(const CorpusOptions& opts);

struct SpectrumRow {
    int kappa = 0;
    bool ok = false;
    std::string family;
    std::vector<int> params;
    std::string graph6;
    std::string error;
};

struct SpectrumReport {
    int n = 0;
    int kappa_bound = 0;
    std::vector<SpectrumRow> rows;
    std::string corpus_cross_check;  // "pass", "fail" or "skipped"
    bool all_ok = true;
    double timing_seconds = 0.0;
};

// One witness construction per admissible kappa; for n <= 9 the achieved set
// is cross-checked against the exhaustive corpus.
SpectrumReport spectrum_report(int n, std::uint64_t seed = kDefaultSearchSeed, int jobs = 1);

std::string source_name(CorpusSource s);

nlohmann::json to_json(const BettiTable& t);
nlohmann::json to_json(const InvariantRecord& r);
nlohmann::json to_json(const AnalyzeResult& r);
nlohmann::json to_json(const CorpusReport& r);
nlohmann::json to_json(const SpectrumReport& r);
std::string corpus_csv(const CorpusReport& r);

}  // namespace chordal

#endif
