// Acceptance checks for the proofcheck library. Each criterion prints one
// [PASS]/[FAIL] line; the exit code is the number of failures.

#include "proofcheck/ast.hpp"
#include "proofcheck/compiler_client.hpp"
#include "proofcheck/fixtures.hpp"
#include "proofcheck/legality.hpp"
#include "proofcheck/lexer.hpp"
#include "proofcheck/pipeline.hpp"
#include "proofcheck/token_tree.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace proofcheck;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               Clock::now() - start)
        .count();
}

std::string fixture(std::string_view path) {
    auto text = fixtures::content(path);
    if (!text) throw std::runtime_error("missing fixture " + std::string(path));
    return std::string(*text);
}

ParsedFile parse_clean(const std::string& text, const std::string& what) {
    ParseSourceResult result = parse_source(text);
    if (result.lex_error)
        throw std::runtime_error(what + ": unexpected lex error");
    return std::move(result.file);
}

struct Expectation {
    std::string id;
    std::string target;
    std::string problem_path;
    std::string candidate_path;
    std::set<std::string> rules;
    bool legal = false;
};

std::vector<Expectation> load_expectations() {
    std::vector<Expectation> out;
    for (const fixtures::FixtureFile& file : fixtures::all()) {
        if (file.path.find("expectations/") != 0) continue;
        nlohmann::json j = nlohmann::json::parse(std::string(file.content));
        Expectation e;
        e.id = std::string(file.path);
        e.target = j["target"].get<std::string>();
        e.problem_path = j["problem"].get<std::string>();
        e.candidate_path = j["candidate"].get<std::string>();
        e.legal = j["legal"].get<bool>();
        for (const auto& rule : j["expected_rules"])
            e.rules.insert(rule.get<std::string>());
        out.push_back(std::move(e));
    }
    return out;
}

std::set<std::string> rule_names(const Verdict& verdict) {
    std::set<std::string> out;
    for (const Finding& f : verdict.findings) out.insert(rule_id_name(f.rule));
    return out;
}

std::string join(const std::set<std::string>& items) {
    std::string out;
    for (const std::string& item : items) {
        if (!out.empty()) out += ", ";
        out += item;
    }
    return out.empty() ? "none" : out;
}

std::shared_ptr<CompilerClient> mock_client() {
    fs::path dir = fs::temp_directory_path() / "proofcheck-acceptance";
    fs::create_directories(dir);
    fs::path store = dir / "responses.jsonl";
    {
        std::ofstream out(store, std::ios::binary);
        out << fixture("mock/compile_responses.jsonl");
    }
    ClientConfig config;
    config.mode = ClientMode::Mock;
    config.mock_path = store.string();
    return std::make_shared<CompilerClient>(config);
}

// --- criterion 1: the nine hack patterns -----------------------------------

std::string check_patterns() {
    std::vector<Expectation> expectations = load_expectations();
    Clock::time_point start = Clock::now();
    int flagged = 0;
    for (const Expectation& e : expectations) {
        if (e.legal) continue;
        ParsedFile problem = parse_clean(fixture(e.problem_path), e.id);
        ParsedFile candidate = parse_clean(fixture(e.candidate_path), e.id);
        Verdict verdict = check_legality(problem, candidate, e.target);
        if (verdict.legal) return e.id + " was not flagged";
        std::set<std::string> got = rule_names(verdict);
        if (got != e.rules)
            return e.id + " rules mismatch: got {" + join(got) +
                   "}, want {" + join(e.rules) + "}";
        ++flagged;
    }
    long elapsed = ms_since(start);
    if (flagged != 9)
        return "expected 9 illegal fixtures, saw " + std::to_string(flagged);
    if (elapsed >= 1000)
        return "detection took " + std::to_string(elapsed) + " ms (limit 1000)";
    return "";
}

// --- criterion 2: clean proofs stay legal -----------------------------------

std::string check_soundness() {
    for (const Expectation& e : load_expectations()) {
        if (!e.legal) continue;
        ParsedFile problem = parse_clean(fixture(e.problem_path), e.id);
        ParsedFile candidate = parse_clean(fixture(e.candidate_path), e.id);
        Verdict verdict = check_legality(problem, candidate, e.target);
        if (!verdict.legal) return e.id + " was wrongly flagged";
        if (!verdict.findings.empty())
            return e.id + " produced " +
                   std::to_string(verdict.findings.size()) +
                   " findings on a clean proof";
    }

    Pipeline pipeline{PipelineConfig{}, mock_client()};
    CorpusRecord record;
    record.id = "worked-case";
    record.problem_id = "putnam_1990_a1";
    record.problem = fixture("problems/putnam_1990_a1.lean");
    record.candidate = fixture("candidates/putnam_1990_a1_proof.lean");
    record.target = "putnam_1990_a1";
    PipelineReport report = pipeline.verify(record);
    if (report.layer(Layer::Target).outcome != Outcome::Pass)
        return "worked case did not pass TARGET";
    if (report.layer(Layer::Ast).outcome != Outcome::Pass)
        return "worked case did not pass AST";
    if (!report.final_valid) return "worked case not finally valid";
    return "";
}

// --- criterion 3: layer funnel rendering ------------------------------------

std::string check_layer_tables() {
    const std::string easy = render_layer_table({1003, 999, 286}, 1024);
    const std::string want_easy =
        "Syntax Verification 1003 / 1024 (97.9%)\n"
        "+ Target Consistency 999 / 1024 (97.6%)\n"
        "+ AST Checking 286 / 1024 (27.9%)\n";
    if (easy != want_easy) return "mismatch for (1003, 999, 286) of 1024";

    const std::string hard = render_layer_table({715, 702, 499}, 1024);
    const std::string want_hard =
        "Syntax Verification 715 / 1024 (69.8%)\n"
        "+ Target Consistency 702 / 1024 (68.6%)\n"
        "+ AST Checking 499 / 1024 (48.7%)\n";
    if (hard != want_hard) return "mismatch for (715, 702, 499) of 1024";
    return "";
}

// --- criterion 4: pass@k against exhaustive enumeration ----------------------

std::string check_pass_at_k() {
    Clock::time_point start = Clock::now();
    for (int n = 1; n <= 10; ++n) {
        for (int c = 0; c <= n; ++c) {
            for (int k = 1; k <= n; ++k) {
                // Enumerate every k-subset of n attempts; the first c
                // attempts are the correct ones.
                long total = 0;
                long hits = 0;
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    if (__builtin_popcount(mask) != k) continue;
                    ++total;
                    if (mask & ((1u << c) - 1)) ++hits;
                }
                double exact = static_cast<double>(hits) /
                               static_cast<double>(total);
                double got = pass_at_k(n, c, k);
                if (std::abs(got - exact) > 1e-12) {
                    char buf[128];
                    std::snprintf(buf, sizeof buf,
                                  "n=%d c=%d k=%d: got %.15f want %.15f", n,
                                  c, k, got, exact);
                    return buf;
                }
            }
        }
    }
    for (int k = 1; k < 10; ++k)
        if (pass_at_k(10, 4, k) > pass_at_k(10, 4, k + 1) + 1e-15)
            return "not monotone in k at k=" + std::to_string(k);
    for (int c = 0; c < 10; ++c)
        if (pass_at_k(10, c, 3) > pass_at_k(10, c + 1, 3) + 1e-15)
            return "not monotone in c at c=" + std::to_string(c);
    for (auto [n, c, k] : {std::array<int, 3>{10, 5, 0},
                           std::array<int, 3>{10, 5, 11},
                           std::array<int, 3>{5, -1, 1},
                           std::array<int, 3>{5, 6, 1}}) {
        try {
            pass_at_k(n, c, k);
            return "out-of-domain input accepted";
        } catch (const std::domain_error&) {
        }
    }
    long elapsed = ms_since(start);
    if (elapsed >= 5000)
        return "took " + std::to_string(elapsed) + " ms (limit 5000)";
    return "";
}

// --- criterion 5: lossless lexing ---------------------------------------------

std::string lex_round_trip(const std::string& source, const std::string& what) {
    LexResult lexed = tokenize(source);
    if (!lexed.ok()) return what + ": lex error";
    std::string rebuilt;
    std::size_t cursor = 0;
    for (const Token& tok : lexed.tokens) {
        if (tok.span.start != cursor) return what + ": span gap";
        if (tok.span.end - tok.span.start != tok.text.size())
            return what + ": span width mismatch";
        cursor = tok.span.end;
        rebuilt += tok.text;
    }
    if (cursor != source.size()) return what + ": spans do not cover the file";
    if (rebuilt != source) return what + ": round trip mismatch";
    return "";
}

std::string check_lexer_round_trip() {
    for (const fixtures::FixtureFile& file : fixtures::all()) {
        if (file.path.size() < 5 ||
            file.path.substr(file.path.size() - 5) != ".lean")
            continue;
        std::string err =
            lex_round_trip(std::string(file.content), std::string(file.path));
        if (!err.empty()) return err;
    }

    const std::vector<std::string> pieces = {
        "theorem", "def",     "foo",     "ℕ",        "h₀",
        "42",      "0x1F",    "3.14",    "\"text\"", "'c'",
        ":=",      "=>",      "<;>",     "->",       "(",
        ")",       "{",       "}",       "⟨",        "⟩",
        "∀",       "→",       "--ok\n",  "/- b -/",  " ",
        "\n",      "sorry",   "#check",  "@[simp]",  "x.y.z",
    };
    std::mt19937 rng(20250815u);
    std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
    std::uniform_int_distribution<int> len(1, 24);
    for (int round = 0; round < 10000; ++round) {
        std::string source;
        int parts = len(rng);
        for (int i = 0; i < parts; ++i) {
            const std::string& piece = pieces[pick(rng)];
            if (!source.empty() && piece[0] == '-' &&
                (source.back() == '-' || source.back() == '/'))
                source += ' ';
            source += piece;
        }
        std::string err =
            lex_round_trip(source, "round " + std::to_string(round));
        if (!err.empty()) return err;
    }
    return "";
}

// --- criterion 6: trivia injection invariance ---------------------------------

std::string check_trivia_invariance() {
    const std::vector<std::string> snippets = {
        " ", "  ", "\t", "\n", "\n  ", "-- injected\n", "/- injected -/"};
    std::mt19937 rng(424243u);

    for (const Expectation& e : load_expectations()) {
        std::string problem_text = fixture(e.problem_path);
        std::string candidate_text = fixture(e.candidate_path);
        ParsedFile problem = parse_clean(problem_text, e.id);
        ParsedFile candidate = parse_clean(candidate_text, e.id);

        Verdict base = check_legality(problem, candidate, e.target);
        std::set<std::string> base_rules = rule_names(base);
        ExtractResult base_target = extract_theorem(candidate, e.target);
        std::string base_sig;
        if (base_target.status == ExtractStatus::Found)
            base_sig = normalize_signature(base_target.decl->signature);

        LexResult lexed = tokenize(candidate_text);
        if (!lexed.ok()) return e.id + ": fixture does not lex";
        std::vector<std::size_t> boundaries;
        boundaries.push_back(0);
        for (const Token& tok : lexed.tokens)
            boundaries.push_back(tok.span.end);
        std::uniform_int_distribution<std::size_t> pick_boundary(
            0, boundaries.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_snippet(
            0, snippets.size() - 1);

        for (int round = 0; round < 1000; ++round) {
            std::size_t at = boundaries[pick_boundary(rng)];
            std::string snippet = snippets[pick_snippet(rng)];
            // A leading '-' can be absorbed by the previous token: '-' or
            // '/' would open a comment one byte early, '<' would munch the
            // "<-" symbol. Those edits change the token stream, so fall
            // back to plain whitespace there.
            if (snippet[0] == '-' && at > 0 &&
                (candidate_text[at - 1] == '-' ||
                 candidate_text[at - 1] == '/' ||
                 candidate_text[at - 1] == '<'))
                snippet = " ";
            std::string mutated = candidate_text;
            mutated.insert(at, snippet);

            ParseSourceResult reparsed = parse_source(mutated);
            if (reparsed.lex_error)
                return e.id + ": injection broke lexing at round " +
                       std::to_string(round);
            Verdict verdict =
                check_legality(problem, reparsed.file, e.target);
            if (verdict.legal != base.legal)
                return e.id + ": verdict flipped at round " +
                       std::to_string(round);
            if (rule_names(verdict) != base_rules)
                return e.id + ": rule set changed at round " +
                       std::to_string(round);
            ExtractResult target = extract_theorem(reparsed.file, e.target);
            if (target.status != base_target.status)
                return e.id + ": target extraction changed at round " +
                       std::to_string(round);
            if (target.status == ExtractStatus::Found &&
                normalize_signature(target.decl->signature) != base_sig)
                return e.id + ": normalized signature changed at round " +
                       std::to_string(round);
        }
    }
    return "";
}

// --- criterion 7: hack injections flip the verdict ----------------------------

std::string check_hack_injections() {
    const std::vector<std::pair<std::string, std::string>> hacks = {
        {"axiom", "axiom hack_axiom : False\n"},
        {"#exit", "#exit\n"},
        {"macro", "macro \"hack_tac\" : tactic => `(tactic| sorry)\n"},
        {"unsafe def", "unsafe def hack_helper : Nat := 0\n"},
        {"variable", "variable (hack_var : False)\n"},
        {"local instance",
         "local instance hackInst : Inhabited Nat := ⟨⟨0⟩⟩\n"},
    };

    int flips = 0;
    for (const Expectation& e : load_expectations()) {
        if (!e.legal) continue;
        std::string problem_text = fixture(e.problem_path);
        std::string candidate_text = fixture(e.candidate_path);
        ParsedFile problem = parse_clean(problem_text, e.id);
        std::size_t first_break = candidate_text.find('\n');
        if (first_break == std::string::npos) return e.id + ": no newline";

        for (const auto& [name, hack] : hacks) {
            for (std::size_t at :
                 {first_break + 1, candidate_text.size()}) {
                std::string mutated = candidate_text;
                mutated.insert(at, hack);
                ParseSourceResult reparsed = parse_source(mutated);
                if (reparsed.lex_error)
                    return e.id + " + " + name + ": injection broke lexing";
                Verdict verdict =
                    check_legality(problem, reparsed.file, e.target);
                if (verdict.legal)
                    return e.id + " + " + name + " at offset " +
                           std::to_string(at) + " stayed legal";
                ++flips;
            }
        }
    }
    if (flips != 24)
        return "expected 24 injection checks, ran " + std::to_string(flips);
    return "";
}

// --- criterion 8: recorded compiler outcomes ----------------------------------

std::string check_mock_outcomes() {
    std::shared_ptr<CompilerClient> client = mock_client();

    CompileResult first =
        client->compile({fixture("candidates/putnam_1990_a1_first_attempt.lean")});
    if (!compile_ok(first)) return "first attempt missing from the store";
    const CompileResponse& first_resp = std::get<CompileResponse>(first);
    if (first_resp.pass) return "first attempt unexpectedly passed";
    if (first_resp.errors.empty() ||
        first_resp.errors[0].data.find("application type mismatch") != 0)
        return "first attempt lacks the type mismatch diagnostic";

    CompileResult final_attempt =
        client->compile({fixture("candidates/putnam_1990_a1_proof.lean")});
    if (!compile_ok(final_attempt)) return "final proof missing from the store";
    if (!std::get<CompileResponse>(final_attempt).pass)
        return "final proof did not pass";

    Pipeline pipeline{PipelineConfig{}, client};
    auto record = [](std::string id, std::string candidate) {
        CorpusRecord r;
        r.id = std::move(id);
        r.problem_id = "putnam_1990_a1";
        r.problem = fixture("problems/putnam_1990_a1.lean");
        r.candidate = std::move(candidate);
        r.target = "putnam_1990_a1";
        return r;
    };
    Outcome first_outcome =
        pipeline
            .verify(record("first",
                           fixture("candidates/putnam_1990_a1_first_attempt.lean")))
            .layer(Layer::Syntax)
            .outcome;
    if (first_outcome != Outcome::Fail) return "first attempt SYNTAX != FAIL";
    Outcome final_outcome =
        pipeline
            .verify(record("final",
                           fixture("candidates/putnam_1990_a1_proof.lean")))
            .layer(Layer::Syntax)
            .outcome;
    if (final_outcome != Outcome::Pass) return "final proof SYNTAX != PASS";
    Outcome raw_outcome =
        pipeline
            .verify(record("raw", fixture("problems/putnam_1990_a1.lean")))
            .layer(Layer::Syntax)
            .outcome;
    if (raw_outcome != Outcome::Sorry) return "raw problem SYNTAX != SORRY";
    return "";
}

// --- criterion 9: offline check speed ------------------------------------------

std::string check_offline_speed() {
    std::string candidate = fixture("candidates/putnam_1990_a1_proof.lean");
    std::size_t lines = 0;
    for (char c : candidate)
        if (c == '\n') ++lines;
    std::size_t pad = 0;
    while (lines < 1000) {
        candidate += "theorem pad_" + std::to_string(pad++) +
                     " : True := trivial\n";
        ++lines;
    }
    if (lines != 1000)
        return "candidate has " + std::to_string(lines) + " lines";

    PipelineConfig config;
    config.enabled = {Layer::Target, Layer::Ast};
    Pipeline pipeline{config, nullptr};
    CorpusRecord record;
    record.id = "padded";
    record.problem_id = "putnam_1990_a1";
    record.problem = fixture("problems/putnam_1990_a1.lean");
    record.candidate = candidate;
    record.target = "putnam_1990_a1";

    Clock::time_point start = Clock::now();
    PipelineReport report = pipeline.verify(record);
    long elapsed = ms_since(start);
    if (!report.final_valid) return "padded candidate did not stay valid";
    if (elapsed >= 100)
        return "took " + std::to_string(elapsed) + " ms (limit 100)";
    return "";
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<std::string()>>>
        criteria = {
            {"all nine hack patterns are flagged with the expected rules "
             "in under a second",
             check_patterns},
            {"clean proofs pass TARGET and AST with zero findings",
             check_soundness},
            {"layer funnel tables render the reference corpora exactly",
             check_layer_tables},
            {"pass@k matches exhaustive enumeration for n <= 10 and is "
             "monotone",
             check_pass_at_k},
            {"lexing is lossless on fixtures and 10000 random token streams",
             check_lexer_round_trip},
            {"1000 trivia injections per fixture never change a verdict",
             check_trivia_invariance},
            {"every hack injection flips a legal proof to illegal",
             check_hack_injections},
            {"recorded compiler responses reproduce the worked-case "
             "SYNTAX outcomes",
             check_mock_outcomes},
            {"offline TARGET+AST check of a 1000-line candidate stays "
             "under 100 ms",
             check_offline_speed},
        };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string reason;
        try {
            reason = criteria[i].second();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        if (reason.empty()) {
            std::printf("[PASS] criterion %zu: %s\n", i + 1,
                        criteria[i].first);
        } else {
            ++failures;
            std::printf("[FAIL] criterion %zu: %s: %s\n", i + 1,
                        criteria[i].first, reason.c_str());
        }
    }
    return failures;
}
