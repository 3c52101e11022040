#include "proofcheck/lexer.hpp"

#include <array>
#include <cctype>
#include <string_view>
#include <unordered_set>

namespace proofcheck {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::Ident: return "Ident";
    case TokenKind::Keyword: return "Keyword";
    case TokenKind::NumberLit: return "NumberLit";
    case TokenKind::StringLit: return "StringLit";
    case TokenKind::CharLit: return "CharLit";
    case TokenKind::Symbol: return "Symbol";
    case TokenKind::LineComment: return "LineComment";
    case TokenKind::BlockComment: return "BlockComment";
    case TokenKind::DocComment: return "DocComment";
    case TokenKind::Whitespace: return "Whitespace";
    case TokenKind::HashCommandName: return "HashCommandName";
    }
    return "?";
}

const char* lex_error_reason_name(LexErrorReason reason) {
    switch (reason) {
    case LexErrorReason::UnterminatedString: return "UnterminatedString";
    case LexErrorReason::UnterminatedComment: return "UnterminatedComment";
    case LexErrorReason::UnterminatedChar: return "UnterminatedChar";
    case LexErrorReason::InvalidUtf8: return "InvalidUtf8";
    }
    return "?";
}

bool is_keyword(std::string_view word) {
    static const std::unordered_set<std::string_view> kKeywords = {
        "theorem", "lemma", "def", "abbrev", "example", "axiom", "opaque",
        "instance", "variable", "universe", "import", "open", "namespace",
        "section", "end", "mutual", "macro", "macro_rules", "elab",
        "elab_rules", "syntax", "notation", "attribute", "set_option",
        "local", "scoped", "noncomputable", "unsafe", "partial", "private",
        "protected", "by", "sorry", "admit", "where", "deriving",
        "structure", "inductive", "class",
    };
    return kKeywords.count(word) != 0;
}

namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

bool is_ascii_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Mirrors Lean's letter-like identifier alphabet. λ, Π and Σ are excluded
// because Lean reserves them as notation.
bool is_letterlike(char32_t c) {
    if (c >= 0x3b1 && c <= 0x3c9) return c != 0x3bb;            // greek lower
    if (c >= 0x391 && c <= 0x3a9) return c != 0x3a0 && c != 0x3a3; // greek upper
    if (c >= 0x3ca && c <= 0x3fb) return true;
    if (c >= 0x1f00 && c <= 0x1ffe) return true;                // polytonic greek
    if (c >= 0x2100 && c <= 0x214f) return true;                // ℕ, ℤ, ℝ, ...
    if (c >= 0x1d400 && c <= 0x1d7ff) return true;              // 𝕜, 𝒫, ...
    return false;
}

bool is_subscript(char32_t c) {
    return (c >= 0x2080 && c <= 0x2089) || (c >= 0x2090 && c <= 0x209c);
}

bool is_ident_start(char32_t c) {
    if (c < 0x80) return is_ascii_alpha(static_cast<char>(c)) || c == '_';
    return is_letterlike(c);
}

bool is_ident_continue(char32_t c) {
    if (c < 0x80) {
        char a = static_cast<char>(c);
        return is_ascii_alpha(a) || is_ascii_digit(a) || a == '_' || a == '\'';
    }
    return is_letterlike(c) || is_subscript(c);
}

struct Decoded {
    char32_t cp = 0;
    int len = 0; // 0 means invalid
};

Decoded decode_utf8(std::string_view s, std::size_t i) {
    auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) return {b0, 1};
    auto cont = [&](std::size_t k) {
        return k < s.size() && (byte(k) & 0xc0) == 0x80;
    };
    if ((b0 & 0xe0) == 0xc0) {
        if (!cont(i + 1)) return {};
        char32_t cp = ((b0 & 0x1fu) << 6) | (byte(i + 1) & 0x3fu);
        if (cp < 0x80) return {}; // overlong
        return {cp, 2};
    }
    if ((b0 & 0xf0) == 0xe0) {
        if (!cont(i + 1) || !cont(i + 2)) return {};
        char32_t cp = ((b0 & 0x0fu) << 12) | ((byte(i + 1) & 0x3fu) << 6) |
                      (byte(i + 2) & 0x3fu);
        if (cp < 0x800 || (cp >= 0xd800 && cp <= 0xdfff)) return {};
        return {cp, 3};
    }
    if ((b0 & 0xf8) == 0xf0) {
        if (!cont(i + 1) || !cont(i + 2) || !cont(i + 3)) return {};
        char32_t cp = ((b0 & 0x07u) << 18) | ((byte(i + 1) & 0x3fu) << 12) |
                      ((byte(i + 2) & 0x3fu) << 6) | (byte(i + 3) & 0x3fu);
        if (cp < 0x10000 || cp > 0x10ffff) return {};
        return {cp, 4};
    }
    return {};
}

// Multi-character ASCII symbols lexed as single tokens, longest first.
constexpr std::array<std::string_view, 17> kMultiSymbols = {
    "<;>", "<|>", ":=", "=>", "->", "<-", "==", "!=", "<=", ">=",
    "&&", "||", "++", "|>", "<|", "^^", "..",
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    LexResult run() {
        LexResult result;
        while (pos_ < src_.size()) {
            tok_start_ = pos_;
            tok_line_ = line_;
            tok_col_ = col_;
            auto err = next();
            if (err) {
                result.error = err;
                break;
            }
            result.tokens.push_back(std::move(pending_));
        }
        return result;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
    std::uint32_t col_ = 1;
    std::size_t tok_start_ = 0;
    std::uint32_t tok_line_ = 1;
    std::uint32_t tok_col_ = 1;
    Token pending_;

    char peek(std::size_t off = 0) const {
        return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
    }

    bool at_end() const { return pos_ >= src_.size(); }

    // Advances over one codepoint, maintaining line/column. Returns false on
    // malformed UTF-8.
    bool bump() {
        unsigned char b = static_cast<unsigned char>(src_[pos_]);
        if (b < 0x80) {
            if (b == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
            return true;
        }
        Decoded d = decode_utf8(src_, pos_);
        if (d.len == 0) return false;
        pos_ += static_cast<std::size_t>(d.len);
        ++col_;
        return true;
    }

    std::optional<LexError> invalid_here() {
        return LexError{LexErrorReason::InvalidUtf8,
                        {pos_, pos_ + 1, line_, col_}};
    }

    void finish(TokenKind kind) {
        pending_ = Token{
            kind,
            std::string(src_.substr(tok_start_, pos_ - tok_start_)),
            {tok_start_, pos_, tok_line_, tok_col_},
        };
    }

    SourceSpan opener_span(std::size_t len) const {
        return {tok_start_, tok_start_ + len, tok_line_, tok_col_};
    }

    std::optional<LexError> next() {
        char c = peek();
        if (is_ascii_space(c)) return lex_whitespace();
        if (c == '-' && peek(1) == '-') return lex_line_comment();
        if (c == '/' && peek(1) == '-') return lex_block_comment();
        if (c == '"') return lex_string();
        if (c == '\'') return lex_char();
        if (c == '#' && (is_ascii_alpha(peek(1)) || peek(1) == '_'))
            return lex_hash_command();
        if (is_ascii_digit(c)) return lex_number();
        Decoded d = decode_utf8(src_, pos_);
        if (d.len == 0) return invalid_here();
        if (is_ident_start(d.cp)) return lex_ident();
        return lex_symbol();
    }

    std::optional<LexError> lex_whitespace() {
        while (!at_end() && is_ascii_space(peek())) bump();
        finish(TokenKind::Whitespace);
        return std::nullopt;
    }

    std::optional<LexError> lex_line_comment() {
        while (!at_end() && peek() != '\n') {
            if (!bump()) return invalid_here();
        }
        finish(TokenKind::LineComment);
        return std::nullopt;
    }

    std::optional<LexError> lex_block_comment() {
        bump();
        bump(); // "/-"
        int depth = 1;
        while (depth > 0) {
            if (at_end())
                return LexError{LexErrorReason::UnterminatedComment, opener_span(2)};
            if (peek() == '/' && peek(1) == '-') {
                bump();
                bump();
                ++depth;
            } else if (peek() == '-' && peek(1) == '/') {
                bump();
                bump();
                --depth;
            } else if (!bump()) {
                return invalid_here();
            }
        }
        std::string_view text = src_.substr(tok_start_, pos_ - tok_start_);
        bool doc = text.size() > 2 && (text[2] == '-' || text[2] == '!');
        finish(doc ? TokenKind::DocComment : TokenKind::BlockComment);
        return std::nullopt;
    }

    std::optional<LexError> lex_string() {
        bump(); // opening quote
        while (true) {
            if (at_end())
                return LexError{LexErrorReason::UnterminatedString, opener_span(1)};
            char c = peek();
            if (c == '"') {
                bump();
                break;
            }
            if (c == '\\') {
                bump();
                if (at_end())
                    return LexError{LexErrorReason::UnterminatedString, opener_span(1)};
            }
            if (!bump()) return invalid_here();
        }
        finish(TokenKind::StringLit);
        return std::nullopt;
    }

    std::optional<LexError> lex_char() {
        bump(); // opening quote
        if (at_end())
            return LexError{LexErrorReason::UnterminatedChar, opener_span(1)};
        if (peek() == '\\') {
            bump();
            if (at_end())
                return LexError{LexErrorReason::UnterminatedChar, opener_span(1)};
            if (!bump()) return invalid_here();
        } else {
            if (!bump()) return invalid_here();
        }
        if (at_end() || peek() != '\'')
            return LexError{LexErrorReason::UnterminatedChar, opener_span(1)};
        bump(); // closing quote
        finish(TokenKind::CharLit);
        return std::nullopt;
    }

    std::optional<LexError> lex_hash_command() {
        bump(); // '#'
        while (!at_end()) {
            Decoded d = decode_utf8(src_, pos_);
            if (d.len == 0) return invalid_here();
            if (!is_ident_continue(d.cp) && !is_subscript(d.cp)) break;
            bump();
        }
        finish(TokenKind::HashCommandName);
        return std::nullopt;
    }

    std::optional<LexError> lex_number() {
        char c0 = peek();
        bump();
        auto take_while = [&](auto pred) {
            while (!at_end() && pred(peek())) bump();
        };
        if (c0 == '0' && (peek() == 'x' || peek() == 'X')) {
            bump();
            take_while([](char c) {
                return is_ascii_digit(c) || (c >= 'a' && c <= 'f') ||
                       (c >= 'A' && c <= 'F');
            });
        } else if (c0 == '0' && peek() == 'b') {
            bump();
            take_while([](char c) { return c == '0' || c == '1'; });
        } else if (c0 == '0' && peek() == 'o') {
            bump();
            take_while([](char c) { return c >= '0' && c <= '7'; });
        } else {
            take_while(is_ascii_digit);
            if (peek() == '.' && is_ascii_digit(peek(1))) {
                bump();
                take_while(is_ascii_digit);
            }
            if ((peek() == 'e' || peek() == 'E') &&
                (is_ascii_digit(peek(1)) ||
                 ((peek(1) == '+' || peek(1) == '-') && is_ascii_digit(peek(2))))) {
                bump();
                if (peek() == '+' || peek() == '-') bump();
                take_while(is_ascii_digit);
            }
        }
        finish(TokenKind::NumberLit);
        return std::nullopt;
    }

    std::optional<LexError> lex_ident() {
        while (!at_end()) {
            Decoded d = decode_utf8(src_, pos_);
            if (d.len == 0) return invalid_here();
            if (is_ident_continue(d.cp)) {
                bump();
                continue;
            }
            // '!' and '?' only when word-internal, e.g. get!x but not n!
            if ((d.cp == '!' || d.cp == '?') && pos_ + 1 < src_.size()) {
                Decoded after = decode_utf8(src_, pos_ + 1);
                if (after.len != 0 && is_ident_continue(after.cp)) {
                    bump();
                    continue;
                }
            }
            break;
        }
        std::string_view text = src_.substr(tok_start_, pos_ - tok_start_);
        finish(is_keyword(text) ? TokenKind::Keyword : TokenKind::Ident);
        return std::nullopt;
    }

    std::optional<LexError> lex_symbol() {
        std::string_view rest = src_.substr(pos_);
        for (std::string_view sym : kMultiSymbols) {
            if (rest.substr(0, sym.size()) == sym) {
                for (std::size_t k = 0; k < sym.size(); ++k) bump();
                finish(TokenKind::Symbol);
                return std::nullopt;
            }
        }
        if (!bump()) return invalid_here();
        finish(TokenKind::Symbol);
        return std::nullopt;
    }
};

} // namespace

LexResult tokenize(std::string_view source) { return Lexer(source).run(); }

} // namespace proofcheck
