#pragma once

#include "proofcheck/lexer.hpp"
#include "proofcheck/token_tree.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace proofcheck {

enum class DeclKeyword {
    Theorem,
    Lemma,
    Def,
    Abbrev,
    Example,
    Axiom,
    Opaque,
    Instance,
    Structure,
    Inductive,
    Class,
};

const char* decl_keyword_name(DeclKeyword keyword);
std::optional<DeclKeyword> decl_keyword_from(std::string_view word);

/// One declaration command. `name` is the dotted name as written; empty means
/// anonymous (only `instance` and `example` may be anonymous). `signature`
/// holds everything between the name and the first top-level `:=`, `by` or
/// `where`; `body` is absent for axiom/opaque and for bodyless declarations,
/// otherwise it starts after `:=` (exclusive) or at `by`/`where` (inclusive).
struct Declaration {
    DeclKeyword keyword = DeclKeyword::Def;
    std::vector<std::string> modifiers;
    std::vector<TokenTree> attributes;
    std::string name;
    TokenTree signature;
    std::optional<TokenTree> body;
    std::optional<std::string> doc_comment;
    SourceSpan span;

    bool has_modifier(std::string_view m) const;
};

struct ImportCmd {
    std::string module;
};
struct OpenCmd {
    std::vector<std::string> names;
};
struct SetOptionCmd {
    std::string option;
    TokenTree value;
};
struct DeclCmd {
    Declaration decl;
};
struct MetaDeclCmd {
    std::string keyword; // macro, macro_rules, elab, elab_rules, syntax, notation
    std::string name;    // best-effort; may be empty
};
struct VariableCmd {
    TokenTree binders;
};
struct AttributeCmd {};
struct HashCmd {
    std::string name; // including '#', e.g. "#exit"
    TokenTree args;
};
struct NamespaceBegin {
    std::string name;
};
struct SectionBegin {
    std::string name; // may be empty
};
struct EndCmd {
    std::string name; // may be empty
};
struct UnparsedCmd {};

struct Command;

struct MutualBlock {
    std::vector<Command> commands;
};

/// One top-level command. `raw` holds every token of the command including
/// attached leading trivia, so flattening all commands in order reproduces
/// the file's token stream.
struct Command {
    std::variant<ImportCmd, OpenCmd, SetOptionCmd, DeclCmd, MetaDeclCmd,
                 VariableCmd, AttributeCmd, HashCmd, MutualBlock,
                 NamespaceBegin, SectionBegin, EndCmd, UnparsedCmd>
        data;
    TokenTree raw;
    SourceSpan span;

    template <typename T> bool is() const {
        return std::holds_alternative<T>(data);
    }
    template <typename T> const T& get() const { return std::get<T>(data); }
};

struct ParsedFile {
    std::string source;
    std::vector<Command> commands;

    /// Every token of the file in order (flattened command raws).
    TokenStream all_tokens() const;
};

/// Total: any token stream parses into a command list; nothing recognizable
/// degrades to UnparsedCmd, never an error.
ParsedFile parse(const TokenStream& tokens, std::string_view source);

struct ParseSourceResult {
    ParsedFile file;
    std::optional<LexError> lex_error;
};

/// Lex + parse. On lex error, `file` holds whatever parsed before the error.
ParseSourceResult parse_source(std::string_view source);

enum class ExtractStatus { Found, NotFound, Duplicate };

struct ExtractResult {
    ExtractStatus status = ExtractStatus::NotFound;
    const Declaration* decl = nullptr; // valid iff status == Found
    const Command* command = nullptr;
};

/// Finds the unique theorem/lemma whose short or namespace-qualified name is
/// `name`, searching mutual blocks too. Declarations lexically after a
/// top-level `#exit` are invisible. Two visible matches yield Duplicate.
ExtractResult extract_theorem(const ParsedFile& file, std::string_view name);

/// Canonical signature text: trivia dropped, token texts joined by single
/// spaces. Idempotent; equal texts mean the signatures differ at most in
/// whitespace and comments.
std::string normalize_signature(const TokenTree& signature);

/// Identifier texts referenced by a signature. Binder-bound names
/// (introduced inside `(… : …)`/`{… : …}`/`⟨…⟩` or after ∀/∃/λ/fun) are
/// excluded; dotted names are included both in full and by final component.
std::set<std::string> referenced_identifiers(const TokenTree& tree);

} // namespace proofcheck
