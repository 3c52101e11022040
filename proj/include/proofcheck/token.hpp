#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace proofcheck {

/// Half-open byte range [start, end) into the original source. `line` and
/// `column` locate the first byte, both 1-based; columns count codepoints.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
    std::uint32_t line = 1;
    std::uint32_t column = 1;

    bool operator==(const SourceSpan&) const = default;
};

enum class TokenKind {
    Ident,
    Keyword,
    NumberLit,
    StringLit,
    CharLit,
    Symbol,
    LineComment,
    BlockComment,
    DocComment,
    Whitespace,
    HashCommandName,
};

const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::Symbol;
    std::string text;
    SourceSpan span;

    bool operator==(const Token&) const = default;
};

/// Whitespace and comments: tokens that never carry meaning.
inline bool is_trivia(TokenKind kind) {
    return kind == TokenKind::Whitespace || kind == TokenKind::LineComment ||
           kind == TokenKind::BlockComment || kind == TokenKind::DocComment;
}

inline bool is_trivia(const Token& tok) { return is_trivia(tok.kind); }

using TokenStream = std::vector<Token>;

enum class LexErrorReason {
    UnterminatedString,
    UnterminatedComment,
    UnterminatedChar,
    InvalidUtf8,
};

const char* lex_error_reason_name(LexErrorReason reason);

struct LexError {
    LexErrorReason reason;
    SourceSpan span;
};

/// Outcome of lexing a file. On failure `tokens` holds everything lexed
/// before the offending position.
struct LexResult {
    TokenStream tokens;
    std::optional<LexError> error;

    bool ok() const { return !error.has_value(); }
};

} // namespace proofcheck
