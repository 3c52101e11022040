#include "proofcheck/pipeline.hpp"

#include "proofcheck/lexer.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace proofcheck {

using nlohmann::json;

const char* layer_name(Layer layer) {
    switch (layer) {
    case Layer::Syntax: return "SYNTAX";
    case Layer::Target: return "TARGET";
    case Layer::Ast: return "AST";
    }
    return "?";
}

std::optional<Layer> layer_from(std::string_view name) {
    if (name == "SYNTAX") return Layer::Syntax;
    if (name == "TARGET") return Layer::Target;
    if (name == "AST") return Layer::Ast;
    return std::nullopt;
}

const char* outcome_name(Outcome outcome) {
    switch (outcome) {
    case Outcome::Pass: return "PASS";
    case Outcome::Sorry: return "SORRY";
    case Outcome::Fail: return "FAIL";
    case Outcome::Skipped: return "SKIPPED";
    }
    return "?";
}

bool PipelineReport::passes_through(Layer l) const {
    if (!error.empty()) return false;
    for (int i = 0; i <= static_cast<int>(l); ++i) {
        const LayerOutcome& lo = layers[i];
        if (lo.enabled && lo.outcome != Outcome::Pass) return false;
    }
    return true;
}

double pass_at_k(int n, int c, int k) {
    if (k < 1) throw std::domain_error("pass_at_k: k < 1");
    if (k > n) throw std::domain_error("pass_at_k: k > n");
    if (c < 0) throw std::domain_error("pass_at_k: c < 0");
    if (c > n) throw std::domain_error("pass_at_k: c > n");
    if (c == 0) return 0.0;
    if (n - c < k) return 1.0;
    double fail_all = 1.0;
    for (int i = n - c + 1; i <= n; ++i)
        fail_all *= 1.0 - static_cast<double>(k) / i;
    return 1.0 - fail_all;
}

std::string render_layer_table(
    const std::array<std::size_t, kLayerCount>& pass_after,
    std::size_t total) {
    static const char* kLabels[kLayerCount] = {
        "Syntax Verification", "+ Target Consistency", "+ AST Checking"};
    std::string out;
    for (int i = 0; i < kLayerCount; ++i) {
        out += kLabels[i];
        out += " ";
        out += std::to_string(pass_after[i]);
        out += " / ";
        out += std::to_string(total);
        if (total == 0) {
            out += " (—)";
        } else {
            char pct[32];
            std::snprintf(pct, sizeof pct, "%.1f",
                          100.0 * static_cast<double>(pass_after[i]) /
                              static_cast<double>(total));
            out += " (";
            out += pct;
            out += "%)";
        }
        out += "\n";
    }
    return out;
}

namespace {

bool has_sorry_token(const TokenStream& tokens) {
    for (const Token& tok : tokens) {
        if (tok.kind != TokenKind::Keyword) continue;
        if (tok.text == "sorry" || tok.text == "admit") return true;
    }
    return false;
}

bool mentions_sorry(const CompileResponse& resp) {
    for (const CompileDiagnostic& diag : resp.errors)
        if (diag.data.find("sorry") != std::string::npos) return true;
    return false;
}

std::string lex_error_note(const LexError& err) {
    std::ostringstream out;
    out << lex_error_reason_name(err.reason) << " at " << err.span.line << ":"
        << err.span.column;
    return out.str();
}

} // namespace

Pipeline::Pipeline(PipelineConfig config,
                   std::shared_ptr<CompilerClient> client)
    : config_(std::move(config)), client_(std::move(client)) {}

PipelineReport Pipeline::verify(const CorpusRecord& record) const {
    PipelineReport report;
    report.id = record.id;
    report.problem_id = record.problem_id;
    for (int i = 0; i < kLayerCount; ++i) {
        report.layers[i].layer = static_cast<Layer>(i);
        report.layers[i].enabled =
            config_.enabled.count(static_cast<Layer>(i)) != 0;
        report.layers[i].outcome = Outcome::Skipped;
    }

    ParseSourceResult problem = parse_source(record.problem);
    if (problem.lex_error) {
        report.error = "problem: " + lex_error_note(*problem.lex_error);
        return report;
    }
    ExtractResult problem_target =
        extract_theorem(problem.file, record.target);
    if (problem_target.status != ExtractStatus::Found) {
        report.error = "TARGET_MISSING_IN_PROBLEM: " + record.target;
        return report;
    }

    ParseSourceResult candidate = parse_source(record.candidate);
    LexResult candidate_lex = tokenize(record.candidate);
    bool candidate_broken = candidate.lex_error.has_value();

    // SYNTAX: whole-file compile. Works on raw text, so a lex error does
    // not block it.
    LayerOutcome& syn = report.layers[static_cast<int>(Layer::Syntax)];
    if (syn.enabled) {
        if (!client_) {
            syn.outcome = Outcome::Skipped;
            syn.flagged = true;
            syn.note = "COMPILER_UNAVAILABLE";
        } else {
            CompileResult result =
                client_->compile(CompileRequest{record.candidate});
            if (!compile_ok(result)) {
                const CompileError& err = std::get<CompileError>(result);
                syn.outcome = Outcome::Skipped;
                syn.flagged = true;
                syn.note = std::string("COMPILER_UNAVAILABLE: ") +
                           compile_error_kind_name(err.kind);
                if (!err.detail.empty()) syn.note += " (" + err.detail + ")";
            } else {
                const CompileResponse& resp =
                    std::get<CompileResponse>(result);
                syn.diagnostics = resp.errors;
                if (!resp.pass) {
                    syn.outcome = Outcome::Fail;
                    syn.note = "compiler rejected the candidate";
                } else if (mentions_sorry(resp) ||
                           has_sorry_token(candidate_lex.tokens)) {
                    syn.outcome = Outcome::Sorry;
                    syn.note = "compiles but the proof is not closed";
                } else {
                    syn.outcome = Outcome::Pass;
                }
            }
        }
    } else {
        syn.note = "disabled by configuration";
    }

    // TARGET: the candidate must declare the target with the problem's
    // signature.
    LayerOutcome& tgt = report.layers[static_cast<int>(Layer::Target)];
    if (!tgt.enabled) {
        tgt.note = "disabled by configuration";
    } else if (candidate_broken) {
        tgt.outcome = Outcome::Skipped;
        tgt.flagged = true;
        tgt.note = "candidate: " + lex_error_note(*candidate.lex_error);
    } else {
        ExtractResult cand_target =
            extract_theorem(candidate.file, record.target);
        switch (cand_target.status) {
        case ExtractStatus::NotFound:
            tgt.outcome = Outcome::Fail;
            tgt.note = "target theorem not found in candidate";
            break;
        case ExtractStatus::Duplicate:
            tgt.outcome = Outcome::Fail;
            tgt.note = "target theorem declared more than once";
            break;
        case ExtractStatus::Found:
            if (normalize_signature(cand_target.decl->signature) ==
                normalize_signature(problem_target.decl->signature)) {
                tgt.outcome = Outcome::Pass;
            } else {
                tgt.outcome = Outcome::Fail;
                tgt.note = "target theorem signature differs from the "
                           "problem statement";
            }
            break;
        }
    }

    // AST: full legality check.
    LayerOutcome& ast = report.layers[static_cast<int>(Layer::Ast)];
    if (!ast.enabled) {
        ast.note = "disabled by configuration";
    } else if (candidate_broken) {
        ast.outcome = Outcome::Skipped;
        ast.flagged = true;
        ast.note = "candidate: " + lex_error_note(*candidate.lex_error);
    } else {
        Verdict verdict = check_legality(problem.file, candidate.file,
                                         record.target, config_.rules);
        ast.findings = std::move(verdict.findings);
        if (verdict.legal) {
            ast.outcome = Outcome::Pass;
        } else {
            ast.outcome = Outcome::Fail;
            ast.note = "legality violations detected";
        }
    }

    report.final_valid = true;
    for (const LayerOutcome& lo : report.layers)
        if (lo.enabled && lo.outcome != Outcome::Pass)
            report.final_valid = false;
    return report;
}

std::variant<CorpusRecord, std::string> parse_corpus_record(
    const std::string& line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) return std::string("line is not valid JSON");
    if (!j.is_object()) return std::string("line is not a JSON object");
    CorpusRecord record;
    for (const char* key : {"id", "problem_id", "problem", "candidate",
                            "target"}) {
        if (!j.contains(key) || !j[key].is_string())
            return std::string("missing or non-string field '") + key + "'";
    }
    record.id = j["id"].get<std::string>();
    record.problem_id = j["problem_id"].get<std::string>();
    record.problem = j["problem"].get<std::string>();
    record.candidate = j["candidate"].get<std::string>();
    record.target = j["target"].get<std::string>();
    if (j.contains("expected_rules")) {
        if (!j["expected_rules"].is_array())
            return std::string("'expected_rules' is not an array");
        record.has_expected = true;
        for (const json& r : j["expected_rules"]) {
            if (!r.is_string())
                return std::string("'expected_rules' entry is not a string");
            std::optional<RuleId> rule =
                rule_id_from(r.get<std::string>());
            if (!rule)
                return std::string("unknown rule id '") +
                       r.get<std::string>() + "'";
            record.expected_rules.push_back(*rule);
        }
    }
    return record;
}

CorpusResult Pipeline::run_corpus(std::istream& in) const {
    struct Slot {
        bool malformed = false;
        std::size_t line = 0;
        std::string error;
        CorpusRecord record;
    };
    std::vector<Slot> slots;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Slot slot;
        slot.line = line_no;
        auto parsed = parse_corpus_record(line);
        if (auto* err = std::get_if<std::string>(&parsed)) {
            slot.malformed = true;
            slot.error = *err;
        } else {
            slot.record = std::move(std::get<CorpusRecord>(parsed));
        }
        slots.push_back(std::move(slot));
    }

    CorpusResult result;
    result.reports.resize(slots.size());

    int workers = config_.parallelism < 1 ? 1 : config_.parallelism;
    if (static_cast<std::size_t>(workers) > slots.size() && !slots.empty())
        workers = static_cast<int>(slots.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= slots.size()) return;
            if (slots[i].malformed) {
                PipelineReport report;
                report.id = "line " + std::to_string(slots[i].line);
                report.error = "malformed record: " + slots[i].error;
                for (int l = 0; l < kLayerCount; ++l) {
                    report.layers[l].layer = static_cast<Layer>(l);
                    report.layers[l].enabled =
                        config_.enabled.count(static_cast<Layer>(l)) != 0;
                }
                result.reports[i] = std::move(report);
            } else {
                result.reports[i] = verify(slots[i].record);
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    CorpusStats& stats = result.stats;
    stats.total = slots.size();
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const PipelineReport& report = result.reports[i];
        if (!report.error.empty()) {
            ++stats.malformed;
            result.malformed_lines.push_back(
                MalformedLine{slots[i].line, report.error});
            continue;
        }
        for (int l = 0; l < kLayerCount; ++l)
            if (report.passes_through(static_cast<Layer>(l)))
                ++stats.pass_after[l];
        ProblemTally& tally = stats.per_problem[report.problem_id];
        ++tally.n;
        if (report.final_valid) ++tally.c;
    }
    return result;
}

namespace {

json finding_to_json(const Finding& f) {
    return json{{"rule", rule_id_name(f.rule)},
                {"severity", severity_name(f.severity)},
                {"line", f.span.line},
                {"column", f.span.column},
                {"message", f.message}};
}

json diagnostic_to_json(const CompileDiagnostic& d) {
    json j{{"severity", d.severity}, {"data", d.data}};
    if (d.pos) j["pos"] = json{{"line", d.pos->line}, {"column", d.pos->column}};
    if (d.end_pos)
        j["endPos"] = json{{"line", d.end_pos->line},
                           {"column", d.end_pos->column}};
    return j;
}

} // namespace

std::string report_to_json(const PipelineReport& report) {
    json j{{"id", report.id},
           {"problem_id", report.problem_id},
           {"finalValid", report.final_valid}};
    if (!report.error.empty()) j["error"] = report.error;
    json layers = json::array();
    for (const LayerOutcome& lo : report.layers) {
        json l{{"layer", layer_name(lo.layer)},
               {"enabled", lo.enabled},
               {"outcome", outcome_name(lo.outcome)},
               {"flagged", lo.flagged}};
        if (!lo.note.empty()) l["note"] = lo.note;
        if (!lo.findings.empty()) {
            json fs = json::array();
            for (const Finding& f : lo.findings)
                fs.push_back(finding_to_json(f));
            l["findings"] = std::move(fs);
        }
        if (!lo.diagnostics.empty()) {
            json ds = json::array();
            for (const CompileDiagnostic& d : lo.diagnostics)
                ds.push_back(diagnostic_to_json(d));
            l["diagnostics"] = std::move(ds);
        }
        layers.push_back(std::move(l));
    }
    j["layers"] = std::move(layers);
    return j.dump();
}

std::string corpus_summary_to_json(const CorpusStats& stats,
                                   const std::vector<int>& ks) {
    json j{{"total", stats.total}, {"malformed", stats.malformed}};
    json layers;
    for (int l = 0; l < kLayerCount; ++l)
        layers[layer_name(static_cast<Layer>(l))] = stats.pass_after[l];
    j["passAfterLayer"] = std::move(layers);

    json problems;
    for (const auto& [pid, tally] : stats.per_problem)
        problems[pid] = json{{"n", tally.n}, {"c", tally.c}};
    j["problems"] = std::move(problems);

    json pk = json::object();
    for (int k : ks) {
        double sum = 0.0;
        int counted = 0;
        for (const auto& [pid, tally] : stats.per_problem) {
            if (tally.n < k) continue;
            sum += pass_at_k(tally.n, tally.c, k);
            ++counted;
        }
        if (counted > 0) pk[std::to_string(k)] = sum / counted;
    }
    j["passAtK"] = std::move(pk);
    return j.dump();
}

} // namespace proofcheck
