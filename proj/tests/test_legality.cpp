#include "proofcheck/legality.hpp"

#include "proofcheck/ast.hpp"
#include "proofcheck/fixtures.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>
#include <string>

using namespace proofcheck;

namespace {

ParsedFile parse_fixture(std::string_view path) {
    auto text = fixtures::content(path);
    REQUIRE(text.has_value());
    ParseSourceResult result = parse_source(*text);
    REQUIRE_FALSE(result.lex_error.has_value());
    return std::move(result.file);
}

ParsedFile parse_text(const std::string& text) {
    ParseSourceResult result = parse_source(text);
    REQUIRE_FALSE(result.lex_error.has_value());
    return std::move(result.file);
}

std::set<std::string> rule_set(const Verdict& verdict) {
    std::set<std::string> rules;
    for (const Finding& f : verdict.findings)
        rules.insert(rule_id_name(f.rule));
    return rules;
}

int count_rule(const Verdict& verdict, RuleId rule) {
    int n = 0;
    for (const Finding& f : verdict.findings)
        if (f.rule == rule) ++n;
    return n;
}

} // namespace

TEST_CASE("every recorded expectation holds") {
    int checked = 0;
    for (const fixtures::FixtureFile& file : fixtures::all()) {
        if (file.path.find("expectations/") != 0) continue;
        CAPTURE(file.path);
        nlohmann::json expect =
            nlohmann::json::parse(std::string(file.content));

        ParsedFile problem =
            parse_fixture(expect["problem"].get<std::string>());
        ParsedFile candidate =
            parse_fixture(expect["candidate"].get<std::string>());
        Verdict verdict = check_legality(problem, candidate,
                                         expect["target"].get<std::string>());

        CHECK(verdict.legal == expect["legal"].get<bool>());
        std::set<std::string> expected_rules;
        for (const auto& rule : expect["expected_rules"])
            expected_rules.insert(rule.get<std::string>());
        CHECK(rule_set(verdict) == expected_rules);
        ++checked;
    }
    CHECK(checked == 11);
}

TEST_CASE("tampered signature is pinpointed at the declaration") {
    ParsedFile problem = parse_fixture("problems/putnam_2025_b3.lean");
    ParsedFile candidate =
        parse_fixture("candidates/pattern1_theorem_tampering.lean");
    Verdict verdict = check_legality(problem, candidate, "putnam_2025_b3");

    REQUIRE_FALSE(verdict.legal);
    bool saw_r1 = false;
    for (const Finding& f : verdict.findings) {
        if (f.rule != RuleId::R1_TargetTampered) continue;
        saw_r1 = true;
        CHECK(f.span.line == 5);
        CHECK(f.message.find("signature differs") != std::string::npos);
    }
    CHECK(saw_r1);
}

TEST_CASE("early exit report cites the #exit location") {
    ParsedFile problem = parse_fixture("problems/putnam_2025_b3.lean");
    ParsedFile candidate =
        parse_fixture("candidates/pattern2_early_exit.lean");
    Verdict verdict = check_legality(problem, candidate, "putnam_2025_b3");

    std::string text = explain(verdict);
    CHECK(text.find("ILLEGAL (3 findings)") == 0);
    CHECK(text.find("R2_EarlyExit  Early Termination via #exit  5:1") !=
          std::string::npos);

    SUBCASE("explain is ordered by position and stable across runs") {
        std::size_t r1 = text.find("R1_TargetTampered");
        std::size_t r2 = text.find("R2_EarlyExit");
        std::size_t r10 = text.find("R10_SorryRemaining");
        REQUIRE(r1 != std::string::npos);
        REQUIRE(r2 != std::string::npos);
        REQUIRE(r10 != std::string::npos);
        CHECK(r1 < r2);
        CHECK(r2 < r10);
        CHECK(explain(check_legality(problem, candidate, "putnam_2025_b3")) ==
              text);
    }
}

TEST_CASE("finding messages name the offending construct") {
    ParsedFile problem = parse_fixture("problems/putnam_2025_b3.lean");

    SUBCASE("axiom") {
        Verdict verdict = check_legality(
            problem,
            parse_fixture("candidates/pattern3_unproven_assumption.lean"),
            "putnam_2025_b3");
        REQUIRE(verdict.findings.size() == 1);
        CHECK(verdict.findings[0].message.find("axiom cheat_axiom") !=
              std::string::npos);
    }
    SUBCASE("variable") {
        Verdict verdict = check_legality(
            problem,
            parse_fixture("candidates/pattern6_global_variable.lean"),
            "putnam_2025_b3");
        REQUIRE(verdict.findings.size() == 1);
        CHECK(verdict.findings[0].rule == RuleId::R6_GlobalVariable);
        CHECK(verdict.findings[0].message.find("cheat_var") !=
              std::string::npos);
    }
    SUBCASE("each unsafe declaration is reported separately") {
        Verdict verdict = check_legality(
            problem, parse_fixture("candidates/pattern5_unsafe_bypass.lean"),
            "putnam_2025_b3");
        CHECK(count_rule(verdict, RuleId::R5_UnsafeBypass) == 2);
    }
}

TEST_CASE("problem checked against itself only reports the placeholder") {
    ParsedFile problem = parse_fixture("problems/putnam_2025_b3.lean");
    Verdict verdict = check_legality(problem, problem, "putnam_2025_b3");

    CHECK_FALSE(verdict.legal);
    REQUIRE(verdict.findings.size() == 1);
    CHECK(verdict.findings[0].rule == RuleId::R10_SorryRemaining);
    CHECK(verdict.findings[0].span.line == 10);
}

TEST_CASE("clean proofs are legal with zero findings") {
    SUBCASE("reference solution") {
        Verdict verdict = check_legality(
            parse_fixture("problems/putnam_1990_a1.lean"),
            parse_fixture("candidates/putnam_1990_a1_proof.lean"),
            "putnam_1990_a1");
        CHECK(verdict.legal);
        CHECK(verdict.findings.empty());
        CHECK(explain(verdict) == "LEGAL (0 findings)");
    }
    SUBCASE("minimal pair") {
        Verdict verdict = check_legality(
            parse_fixture("problems/true_intro.lean"),
            parse_fixture("candidates/true_intro_proof.lean"), "true_intro");
        CHECK(verdict.legal);
        CHECK(verdict.findings.empty());
    }
}

TEST_CASE("missing target in the problem throws") {
    ParsedFile problem = parse_text("import Mathlib\n");
    ParsedFile candidate = parse_text("theorem foo : True := trivial\n");
    CHECK_THROWS_WITH_AS(check_legality(problem, candidate, "foo"),
                         "TARGET_MISSING_IN_PROBLEM: foo", TargetMissingError);
}

TEST_CASE("admit counts as an unproved placeholder") {
    ParsedFile problem = parse_fixture("problems/true_intro.lean");
    ParsedFile candidate =
        parse_text("import Mathlib\n\ntheorem true_intro : True := by admit\n");
    Verdict verdict = check_legality(problem, candidate, "true_intro");
    CHECK_FALSE(verdict.legal);
    REQUIRE(verdict.findings.size() == 1);
    CHECK(verdict.findings[0].rule == RuleId::R10_SorryRemaining);
    CHECK(verdict.findings[0].message.find("admit") != std::string::npos);
}

TEST_CASE("sorry inside strings or comments is not a placeholder") {
    ParsedFile problem = parse_fixture("problems/true_intro.lean");
    ParsedFile candidate = parse_text(
        "import Mathlib\n\n-- sorry about the pun\n"
        "theorem true_intro : True := by\n"
        "  exact trivial -- no sorry here\n");
    Verdict verdict = check_legality(problem, candidate, "true_intro");
    CHECK(verdict.legal);
    CHECK(verdict.findings.empty());
}

TEST_CASE("rule options") {
    ParsedFile problem = parse_fixture("problems/putnam_2025_b3.lean");

    SUBCASE("disabling a rule suppresses its findings") {
        RuleOptions options;
        options.disabled.insert(RuleId::R10_SorryRemaining);
        Verdict verdict =
            check_legality(problem, problem, "putnam_2025_b3", options);
        CHECK(verdict.legal);
        CHECK(verdict.findings.empty());
    }
    SUBCASE("warning severity keeps the finding but not the verdict") {
        RuleOptions options;
        options.severity_overrides[RuleId::R10_SorryRemaining] =
            Severity::Warning;
        Verdict verdict =
            check_legality(problem, problem, "putnam_2025_b3", options);
        CHECK(verdict.legal);
        REQUIRE(verdict.findings.size() == 1);
        CHECK(verdict.findings[0].severity == Severity::Warning);
        std::string text = explain(verdict);
        CHECK(text.find("LEGAL (1 finding)") == 0);
        CHECK(text.find("[warning]") != std::string::npos);
    }
    SUBCASE("denylisted set_option") {
        auto problem_text = fixtures::content("problems/putnam_2025_b3.lean");
        REQUIRE(problem_text.has_value());
        ParsedFile candidate = parse_text(
            std::string(*problem_text) +
            "\nset_option debug.skipKernelTC true\n");
        Verdict verdict =
            check_legality(problem, candidate, "putnam_2025_b3");
        CHECK(rule_set(verdict) ==
              std::set<std::string>{"R4_MetaComponent", "R10_SorryRemaining"});

        RuleOptions options;
        options.set_option_denylist.clear();
        Verdict relaxed =
            check_legality(problem, candidate, "putnam_2025_b3", options);
        CHECK(rule_set(relaxed) ==
              std::set<std::string>{"R10_SorryRemaining"});
    }
    SUBCASE("hash command denylist") {
        auto problem_text = fixtures::content("problems/putnam_2025_b3.lean");
        REQUIRE(problem_text.has_value());
        ParsedFile candidate =
            parse_text(std::string(*problem_text) + "\n#eval 1 + 1\n");

        Verdict lax = check_legality(problem, candidate, "putnam_2025_b3");
        CHECK(count_rule(lax, RuleId::R2_EarlyExit) == 0);

        RuleOptions options;
        options.hash_command_denylist.push_back("#eval");
        Verdict strict =
            check_legality(problem, candidate, "putnam_2025_b3", options);
        CHECK(count_rule(strict, RuleId::R2_EarlyExit) == 1);
    }
}

TEST_CASE("instance injection variants") {
    ParsedFile problem = parse_fixture("problems/putnam_2025_b3.lean");
    auto problem_text = fixtures::content("problems/putnam_2025_b3.lean");
    REQUIRE(problem_text.has_value());

    SUBCASE("attribute granting instance status") {
        ParsedFile candidate = parse_text(
            std::string(*problem_text) +
            "\nattribute [local instance] Classical.propDecidable\n");
        Verdict verdict =
            check_legality(problem, candidate, "putnam_2025_b3");
        CHECK(count_rule(verdict, RuleId::R8_InstanceInjection) == 1);
    }
    SUBCASE("plain simp attribute is not an instance") {
        ParsedFile candidate = parse_text(
            std::string(*problem_text) +
            "\nattribute [simp] Nat.add_zero\n");
        Verdict verdict =
            check_legality(problem, candidate, "putnam_2025_b3");
        CHECK(count_rule(verdict, RuleId::R8_InstanceInjection) == 0);
    }
}

TEST_CASE("whitespace-only differences are not tampering") {
    ParsedFile problem = parse_fixture("problems/true_intro.lean");
    ParsedFile candidate = parse_text(
        "import   Mathlib\n\n"
        "theorem true_intro :\n"
        "    True := by  -- reformatted\n"
        "  trivial\n");
    Verdict verdict = check_legality(problem, candidate, "true_intro");
    CHECK(verdict.legal);
    CHECK(verdict.findings.empty());
}
