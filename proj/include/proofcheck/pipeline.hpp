#pragma once

#include "proofcheck/ast.hpp"
#include "proofcheck/compiler_client.hpp"
#include "proofcheck/legality.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace proofcheck {

enum class Layer { Syntax, Target, Ast };
constexpr int kLayerCount = 3;

const char* layer_name(Layer layer);                 // "SYNTAX" | "TARGET" | "AST"
std::optional<Layer> layer_from(std::string_view name);

enum class Outcome { Pass, Sorry, Fail, Skipped };
const char* outcome_name(Outcome outcome);           // "PASS" | "SORRY" | ...

struct LayerOutcome {
    Layer layer = Layer::Syntax;
    bool enabled = true;
    Outcome outcome = Outcome::Skipped;
    /// True when the layer was skipped for an operational reason (compiler
    /// unavailable, request failed) that must not be mistaken for a pass.
    bool flagged = false;
    std::string note;
    std::vector<Finding> findings;              // AST layer
    std::vector<CompileDiagnostic> diagnostics; // SYNTAX layer
};

struct PipelineReport {
    std::string id;
    std::string problem_id;
    /// Record-level failure (unreadable problem, target missing from the
    /// problem). When set, no layers were evaluated.
    std::string error;
    std::array<LayerOutcome, kLayerCount> layers{};
    bool final_valid = false;

    const LayerOutcome& layer(Layer l) const {
        return layers[static_cast<int>(l)];
    }
    /// A record clears layer `l` when every layer up to and including `l`
    /// either passed or is disabled by configuration.
    bool passes_through(Layer l) const;
};

struct CorpusRecord {
    std::string id;
    std::string problem_id;
    std::string problem;
    std::string candidate;
    std::string target;
    std::vector<RuleId> expected_rules;
    bool has_expected = false;
};

struct PipelineConfig {
    std::set<Layer> enabled = {Layer::Syntax, Layer::Target, Layer::Ast};
    RuleOptions rules;
    int parallelism = 1;
    std::vector<int> pass_at_ks = {1, 32};
};

struct ProblemTally {
    int n = 0; // evaluated records
    int c = 0; // records with final_valid
};

struct CorpusStats {
    std::size_t total = 0;     // every input line, malformed included
    std::size_t malformed = 0; // unparseable lines + record-level errors
    std::array<std::size_t, kLayerCount> pass_after{};
    std::map<std::string, ProblemTally> per_problem;
};

struct MalformedLine {
    std::size_t line = 0; // 1-based input line
    std::string message;
};

struct CorpusResult {
    std::vector<PipelineReport> reports; // input order
    CorpusStats stats;
    std::vector<MalformedLine> malformed_lines;
};

/// Unbiased estimator: probability that at least one of k samples drawn
/// without replacement from n attempts (c of them correct) is correct.
/// Throws std::domain_error when k < 1, k > n, c < 0, or c > n.
double pass_at_k(int n, int c, int k);

/// Three-row cumulative funnel, one line per layer:
///   Syntax Verification 1003 / 1024 (97.9%)
///   + Target Consistency 999 / 1024 (97.6%)
///   + AST Checking 286 / 1024 (27.9%)
/// An empty corpus renders "0 / 0 (—)" rows.
std::string render_layer_table(const std::array<std::size_t, kLayerCount>& pass_after,
                               std::size_t total);

class Pipeline {
public:
    explicit Pipeline(PipelineConfig config,
                      std::shared_ptr<CompilerClient> client = nullptr);

    PipelineReport verify(const CorpusRecord& record) const;

    /// Runs every JSONL record in `in`. Lines that do not parse as corpus
    /// records are counted as malformed and reported, never dropped
    /// silently. Reports come back in input order regardless of
    /// `config.parallelism`.
    CorpusResult run_corpus(std::istream& in) const;

    const PipelineConfig& config() const { return config_; }

private:
    PipelineConfig config_;
    std::shared_ptr<CompilerClient> client_;
};

/// One corpus line -> record. Returns an error message instead when the
/// line is not a JSON object with string id/problem_id/problem/candidate/
/// target (expected_rules, when present, must be an array of rule ids).
std::variant<CorpusRecord, std::string> parse_corpus_record(const std::string& line);

std::string report_to_json(const PipelineReport& report);
std::string corpus_summary_to_json(const CorpusStats& stats,
                                   const std::vector<int>& ks);

} // namespace proofcheck
