#include "proofcheck/lexer.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

using namespace proofcheck;

namespace {

std::string roundtrip(const std::string& source) {
    LexResult result = tokenize(source);
    std::string rebuilt;
    for (const Token& tok : result.tokens) rebuilt += tok.text;
    return rebuilt;
}

/// Spans must cover the consumed prefix exactly, in order, with no gaps.
void check_span_coverage(const std::string& source) {
    LexResult result = tokenize(source);
    std::size_t cursor = 0;
    for (const Token& tok : result.tokens) {
        REQUIRE(tok.span.start == cursor);
        REQUIRE(tok.span.end > tok.span.start);
        REQUIRE(tok.text == source.substr(tok.span.start,
                                          tok.span.end - tok.span.start));
        cursor = tok.span.end;
    }
    if (!result.error) REQUIRE(cursor == source.size());
}

} // namespace

TEST_CASE("thirteen-token oracle for a one-line theorem") {
    const std::string src = "theorem t : True := by trivial";
    LexResult result = tokenize(src);
    REQUIRE(result.ok());
    REQUIRE(result.tokens.size() == 13);

    const TokenKind expected_kinds[13] = {
        TokenKind::Keyword,    TokenKind::Whitespace, TokenKind::Ident,
        TokenKind::Whitespace, TokenKind::Symbol,     TokenKind::Whitespace,
        TokenKind::Ident,      TokenKind::Whitespace, TokenKind::Symbol,
        TokenKind::Whitespace, TokenKind::Keyword,    TokenKind::Whitespace,
        TokenKind::Ident,
    };
    const char* expected_texts[13] = {"theorem", " ", "t",  " ", ":",
                                      " ",       "True", " ", ":=", " ",
                                      "by",      " ",    "trivial"};
    for (int i = 0; i < 13; ++i) {
        CAPTURE(i);
        CHECK(result.tokens[i].kind == expected_kinds[i]);
        CHECK(result.tokens[i].text == expected_texts[i]);
    }
    CHECK(result.tokens[0].span.line == 1);
    CHECK(result.tokens[0].span.column == 1);
    CHECK(result.tokens[2].span.column == 9);
}

TEST_CASE("keyword classification") {
    CHECK(is_keyword("theorem"));
    CHECK(is_keyword("sorry"));
    CHECK(is_keyword("admit"));
    CHECK(is_keyword("unsafe"));
    CHECK(is_keyword("set_option"));
    CHECK_FALSE(is_keyword("trivial"));
    CHECK_FALSE(is_keyword("Theorem"));
    CHECK_FALSE(is_keyword(""));

    LexResult result = tokenize("sorry_free");
    REQUIRE(result.tokens.size() == 1);
    CHECK(result.tokens[0].kind == TokenKind::Ident);
}

TEST_CASE("comments") {
    SUBCASE("line comment runs to end of line") {
        LexResult r = tokenize("-- hello\nx");
        REQUIRE(r.ok());
        REQUIRE(r.tokens.size() == 3);
        CHECK(r.tokens[0].kind == TokenKind::LineComment);
        CHECK(r.tokens[0].text == "-- hello");
        CHECK(r.tokens[1].kind == TokenKind::Whitespace);
        CHECK(r.tokens[2].kind == TokenKind::Ident);
    }
    SUBCASE("nested block comment is one token") {
        LexResult r = tokenize("/- a /- b -/ c -/");
        REQUIRE(r.ok());
        REQUIRE(r.tokens.size() == 1);
        CHECK(r.tokens[0].kind == TokenKind::BlockComment);
        CHECK(r.tokens[0].text == "/- a /- b -/ c -/");
    }
    SUBCASE("doc comments") {
        LexResult r = tokenize("/-- doc -/");
        REQUIRE(r.tokens.size() == 1);
        CHECK(r.tokens[0].kind == TokenKind::DocComment);
        r = tokenize("/-! module doc -/");
        REQUIRE(r.tokens.size() == 1);
        CHECK(r.tokens[0].kind == TokenKind::DocComment);
    }
    SUBCASE("sorry inside a comment is not a keyword token") {
        LexResult r = tokenize("-- sorry\n/- sorry -/");
        for (const Token& tok : r.tokens)
            CHECK(tok.kind != TokenKind::Keyword);
    }
}

TEST_CASE("string and char literals") {
    SUBCASE("string with escapes is one token") {
        LexResult r = tokenize("\"a \\\" b\"");
        REQUIRE(r.ok());
        REQUIRE(r.tokens.size() == 1);
        CHECK(r.tokens[0].kind == TokenKind::StringLit);
    }
    SUBCASE("sorry inside a string stays a string") {
        LexResult r = tokenize("\"sorry\"");
        REQUIRE(r.tokens.size() == 1);
        CHECK(r.tokens[0].kind == TokenKind::StringLit);
    }
    SUBCASE("char literal") {
        LexResult r = tokenize("'a'");
        REQUIRE(r.ok());
        REQUIRE(r.tokens.size() == 1);
        CHECK(r.tokens[0].kind == TokenKind::CharLit);
    }
    SUBCASE("escaped char literal") {
        LexResult r = tokenize("'\\n'");
        REQUIRE(r.ok());
        REQUIRE(r.tokens.size() == 1);
        CHECK(r.tokens[0].kind == TokenKind::CharLit);
    }
}

TEST_CASE("numbers") {
    for (const char* text : {"0", "42", "0x1F", "0b1010", "0o777", "3.14",
                             "1e10", "2.5e-3"}) {
        CAPTURE(text);
        LexResult r = tokenize(text);
        REQUIRE(r.ok());
        REQUIRE(r.tokens.size() == 1);
        CHECK(r.tokens[0].kind == TokenKind::NumberLit);
    }
    SUBCASE("dotted access is not a decimal point") {
        LexResult r = tokenize("1.succ");
        REQUIRE(r.tokens.size() == 3);
        CHECK(r.tokens[0].kind == TokenKind::NumberLit);
        CHECK(r.tokens[0].text == "1");
        CHECK(r.tokens[1].text == ".");
        CHECK(r.tokens[2].text == "succ");
    }
}

TEST_CASE("hash commands lex as single tokens") {
    LexResult r = tokenize("#exit\n#check 1");
    REQUIRE(r.ok());
    REQUIRE(r.tokens.size() == 5);
    CHECK(r.tokens[0].kind == TokenKind::HashCommandName);
    CHECK(r.tokens[0].text == "#exit");
    CHECK(r.tokens[2].kind == TokenKind::HashCommandName);
    CHECK(r.tokens[2].text == "#check");
    CHECK(r.tokens[4].kind == TokenKind::NumberLit);
}

TEST_CASE("unicode identifiers and symbols") {
    SUBCASE("blackboard letters are identifiers") {
        LexResult r = tokenize("ℕ");
        REQUIRE(r.ok());
        REQUIRE(r.tokens.size() == 1);
        CHECK(r.tokens[0].kind == TokenKind::Ident);
    }
    SUBCASE("subscripts continue identifiers") {
        LexResult r = tokenize("h₀");
        REQUIRE(r.tokens.size() == 1);
        CHECK(r.tokens[0].kind == TokenKind::Ident);
        CHECK(r.tokens[0].text == "h₀");
    }
    SUBCASE("arrows and forall are single symbol tokens") {
        LexResult r = tokenize("∀ x → y");
        REQUIRE(r.tokens.size() == 7);
        CHECK(r.tokens[0].kind == TokenKind::Symbol);
        CHECK(r.tokens[0].text == "∀");
        CHECK(r.tokens[4].kind == TokenKind::Symbol);
        CHECK(r.tokens[4].text == "→");
    }
    SUBCASE("columns count codepoints, not bytes") {
        LexResult r = tokenize("ℕ x");
        REQUIRE(r.tokens.size() == 3);
        CHECK(r.tokens[2].span.column == 3);
        CHECK(r.tokens[2].span.start == 4);
    }
    SUBCASE("lambda is a symbol, not an identifier") {
        LexResult r = tokenize("λ x");
        REQUIRE(r.tokens.size() == 3);
        CHECK(r.tokens[0].kind == TokenKind::Symbol);
    }
}

TEST_CASE("word-internal bang and question marks") {
    // A trailing '!' is not word-internal, so it splits off as a Symbol.
    LexResult r = tokenize("simp! x");
    REQUIRE(r.tokens.size() == 4);
    CHECK(r.tokens[0].text == "simp");
    CHECK(r.tokens[0].kind == TokenKind::Ident);
    CHECK(r.tokens[1].text == "!");
    CHECK(r.tokens[1].kind == TokenKind::Symbol);
    CHECK(r.tokens[2].kind == TokenKind::Whitespace);
    CHECK(r.tokens[3].text == "x");

    // '?' followed by an identifier character stays inside the word.
    r = tokenize("Nat.add?_ne x");
    REQUIRE(r.tokens.size() == 5);
    CHECK(r.tokens[0].text == "Nat");
    CHECK(r.tokens[1].text == ".");
    CHECK(r.tokens[2].text == "add?_ne");
    CHECK(roundtrip("Nat.add?_ne x") == "Nat.add?_ne x");
}

TEST_CASE("multi-codepoint ASCII operators munch longest") {
    LexResult r = tokenize(":=<;>->");
    REQUIRE(r.ok());
    REQUIRE(r.tokens.size() == 3);
    CHECK(r.tokens[0].text == ":=");
    CHECK(r.tokens[1].text == "<;>");
    CHECK(r.tokens[2].text == "->");
}

TEST_CASE("lex errors") {
    SUBCASE("unterminated string") {
        LexResult r = tokenize("x \"abc");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->reason == LexErrorReason::UnterminatedString);
        CHECK(r.error->span.start == 2);
        CHECK(r.tokens.size() == 2); // tokens before the error survive
    }
    SUBCASE("unterminated block comment") {
        LexResult r = tokenize("/- never closed");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->reason == LexErrorReason::UnterminatedComment);
        CHECK(r.error->span.start == 0);
    }
    SUBCASE("unterminated nested comment") {
        LexResult r = tokenize("/- outer /- inner -/");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->reason == LexErrorReason::UnterminatedComment);
    }
    SUBCASE("unterminated char") {
        LexResult r = tokenize("'a");
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->reason == LexErrorReason::UnterminatedChar);
    }
    SUBCASE("invalid utf-8") {
        std::string bad = "x ";
        bad += static_cast<char>(0xC0); // overlong lead byte
        LexResult r = tokenize(bad);
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->reason == LexErrorReason::InvalidUtf8);
        CHECK(r.error->span.start == 2);
    }
    SUBCASE("stray continuation byte") {
        std::string bad;
        bad += static_cast<char>(0x80);
        LexResult r = tokenize(bad);
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->reason == LexErrorReason::InvalidUtf8);
    }
    SUBCASE("truncated multibyte sequence") {
        std::string bad = "ok";
        bad += static_cast<char>(0xE2);
        LexResult r = tokenize(bad);
        REQUIRE_FALSE(r.ok());
        CHECK(r.error->reason == LexErrorReason::InvalidUtf8);
    }
}

TEST_CASE("losslessness on representative sources") {
    const std::string sources[] = {
        "",
        "\n\n\n",
        "theorem t : True := by\n  trivial\n",
        "/- nested /- deep -/ -/ def f := 1\n",
        "-- only a comment",
        "macro \"tp\" : tactic => `(tactic| sorry)\n",
        "example : 2 + 2 = 4 := by norm_num\n",
        "⟨a, b⟩ ∈ S ∧ ¬(x ≤ y)\n",
        "#eval 1 + 1\n#exit\nleftover tokens",
        "set_option maxHeartbeats 400000 in\ntheorem big : True := trivial\n",
    };
    for (const std::string& src : sources) {
        CAPTURE(src);
        CHECK(roundtrip(src) == src);
        check_span_coverage(src);
    }
}

TEST_CASE("line and column tracking across newlines") {
    // Whitespace tokens are maximal runs, so "\n  " is a single token.
    LexResult r = tokenize("a\nbc\n  d");
    REQUIRE(r.tokens.size() == 5);
    CHECK(r.tokens[0].span.line == 1);
    CHECK(r.tokens[1].text == "\n");
    CHECK(r.tokens[2].span.line == 2);
    CHECK(r.tokens[2].span.column == 1);
    CHECK(r.tokens[3].text == "\n  ");
    CHECK(r.tokens[4].text == "d");
    CHECK(r.tokens[4].span.line == 3);
    CHECK(r.tokens[4].span.column == 3);
}

TEST_CASE("determinism") {
    const std::string src =
        "theorem putnam : ∀ n ∈ S, 0 < n := by sorry\n";
    LexResult a = tokenize(src);
    LexResult b = tokenize(src);
    REQUIRE(a.tokens.size() == b.tokens.size());
    for (std::size_t i = 0; i < a.tokens.size(); ++i) {
        CHECK(a.tokens[i] == b.tokens[i]);
    }
}

TEST_CASE("random concatenation round-trips") {
    const std::vector<std::string> pieces = {
        "theorem", " ",     "\n",    "t",      ":=",    "by",
        "sorry",   "--c\n", "/- x -/", "\"s\"", "'c'",  "42",
        "0x1F",    "ℕ", "→", "(",     ")",    "{",
        "}",       "⟨", "⟩", "#exit", "foo.bar", "  ",
        "∀",  "h₁", ".",    ",",      "@[simp]", "3.14",
    };
    std::mt19937 rng(20250815u);
    std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
    std::uniform_int_distribution<int> len(0, 12);
    for (int iter = 0; iter < 10000; ++iter) {
        std::string src;
        int n = len(rng);
        for (int i = 0; i < n; ++i) src += pieces[pick(rng)];
        LexResult r = tokenize(src);
        REQUIRE(r.ok());
        std::string rebuilt;
        for (const Token& tok : r.tokens) rebuilt += tok.text;
        REQUIRE(rebuilt == src);
    }
}
