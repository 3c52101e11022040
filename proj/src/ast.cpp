#include "proofcheck/ast.hpp"

#include <algorithm>
#include <functional>
#include <span>
#include <unordered_set>

namespace proofcheck {

const char* decl_keyword_name(DeclKeyword keyword) {
    switch (keyword) {
    case DeclKeyword::Theorem: return "theorem";
    case DeclKeyword::Lemma: return "lemma";
    case DeclKeyword::Def: return "def";
    case DeclKeyword::Abbrev: return "abbrev";
    case DeclKeyword::Example: return "example";
    case DeclKeyword::Axiom: return "axiom";
    case DeclKeyword::Opaque: return "opaque";
    case DeclKeyword::Instance: return "instance";
    case DeclKeyword::Structure: return "structure";
    case DeclKeyword::Inductive: return "inductive";
    case DeclKeyword::Class: return "class";
    }
    return "?";
}

std::optional<DeclKeyword> decl_keyword_from(std::string_view word) {
    if (word == "theorem") return DeclKeyword::Theorem;
    if (word == "lemma") return DeclKeyword::Lemma;
    if (word == "def") return DeclKeyword::Def;
    if (word == "abbrev") return DeclKeyword::Abbrev;
    if (word == "example") return DeclKeyword::Example;
    if (word == "axiom") return DeclKeyword::Axiom;
    if (word == "opaque") return DeclKeyword::Opaque;
    if (word == "instance") return DeclKeyword::Instance;
    if (word == "structure") return DeclKeyword::Structure;
    if (word == "inductive") return DeclKeyword::Inductive;
    if (word == "class") return DeclKeyword::Class;
    return std::nullopt;
}

bool Declaration::has_modifier(std::string_view m) const {
    return std::find(modifiers.begin(), modifiers.end(), m) != modifiers.end();
}

TokenStream ParsedFile::all_tokens() const {
    TokenStream out;
    for (const Command& cmd : commands) flatten(cmd.raw, out);
    return out;
}

namespace {

using TokenSpan = std::span<const Token>;

bool is_modifier(const Token& tok) {
    static const std::unordered_set<std::string_view> kModifiers = {
        "noncomputable", "unsafe", "partial", "private",
        "protected",     "local",  "scoped",
    };
    return tok.kind == TokenKind::Keyword && kModifiers.count(tok.text) != 0;
}

bool is_meta_keyword(std::string_view word) {
    return word == "macro" || word == "macro_rules" || word == "elab" ||
           word == "elab_rules" || word == "syntax" || word == "notation";
}

bool is_command_keyword(std::string_view word) {
    static const std::unordered_set<std::string_view> kStarters = {
        "import",   "open",    "set_option", "universe", "variable",
        "namespace", "section", "end",        "mutual",   "attribute",
    };
    return kStarters.count(word) != 0 || is_meta_keyword(word) ||
           decl_keyword_from(word).has_value();
}

std::size_t skip_trivia(TokenSpan toks, std::size_t i) {
    while (i < toks.size() && is_trivia(toks[i])) ++i;
    return i;
}

/// True when toks[i] begins a new top-level command.
bool starts_command(TokenSpan toks, std::size_t i) {
    const Token& tok = toks[i];
    if (tok.kind == TokenKind::HashCommandName) return true;
    if (tok.kind == TokenKind::Keyword)
        return is_command_keyword(tok.text) || is_modifier(tok);
    if (tok.kind == TokenKind::Symbol && tok.text == "@") {
        std::size_t j = skip_trivia(toks, i + 1);
        return j < toks.size() && toks[j].kind == TokenKind::Symbol &&
               toks[j].text == "[";
    }
    return false;
}

/// Parses `Ident (. Ident)*` starting at the first significant token at or
/// after `i`. Trivia between the parts is tolerated. Returns the dotted text
/// and the index one past the final component, or nullopt if no Ident there.
std::optional<std::pair<std::string, std::size_t>>
parse_dotted_name(TokenSpan toks, std::size_t i) {
    i = skip_trivia(toks, i);
    if (i >= toks.size() || toks[i].kind != TokenKind::Ident)
        return std::nullopt;
    std::string name = toks[i].text;
    std::size_t end = i + 1;
    while (true) {
        std::size_t dot = skip_trivia(toks, end);
        if (dot >= toks.size() || toks[dot].kind != TokenKind::Symbol ||
            toks[dot].text != ".")
            break;
        std::size_t part = skip_trivia(toks, dot + 1);
        if (part >= toks.size() || toks[part].kind != TokenKind::Ident) break;
        name += ".";
        name += toks[part].text;
        end = part + 1;
    }
    return std::make_pair(std::move(name), end);
}

SourceSpan range_span(TokenSpan toks, std::size_t lo, std::size_t hi) {
    if (lo >= hi) return SourceSpan{};
    return SourceSpan{toks[lo].span.start, toks[hi - 1].span.end,
                      toks[lo].span.line, toks[lo].span.column};
}

class Parser {
public:
    explicit Parser(TokenSpan toks) : toks_(toks) {}

    std::vector<Command> parse_range(std::size_t lo, std::size_t hi) {
        std::vector<Command> cmds;
        std::size_t i = lo;
        while (i < hi) {
            std::size_t head = skip_trivia_until(i, hi);
            if (head == hi) {
                attach_trailing(cmds, i, hi);
                break;
            }
            std::size_t end = command_end(head, hi);
            cmds.push_back(build_command(i, head, end));
            i = end;
        }
        return cmds;
    }

private:
    TokenSpan toks_;

    std::size_t skip_trivia_until(std::size_t i, std::size_t hi) const {
        while (i < hi && is_trivia(toks_[i])) ++i;
        return i;
    }

    // Trailing trivia at end of range: attach to the previous command, or
    // form an Unparsed command when there is nothing to attach to.
    void attach_trailing(std::vector<Command>& cmds, std::size_t lo,
                         std::size_t hi) {
        if (lo >= hi) return;
        if (cmds.empty()) {
            Command cmd;
            cmd.data = UnparsedCmd{};
            cmd.raw = build_token_tree(toks_.subspan(lo, hi - lo));
            cmd.span = range_span(toks_, lo, hi);
            cmds.push_back(std::move(cmd));
            return;
        }
        TokenStream all = flatten(cmds.back().raw);
        for (std::size_t k = lo; k < hi; ++k) all.push_back(toks_[k]);
        cmds.back().raw = build_token_tree(all);
        cmds.back().span.end = toks_[hi - 1].span.end;
    }

    // Skips the head cluster (modifiers, @[...] attributes, trivia) and
    // returns the index of the command's anchor token.
    std::size_t anchor_index(std::size_t head, std::size_t hi) const {
        std::size_t i = head;
        while (true) {
            i = skip_trivia_until(i, hi);
            if (i >= hi) return hi;
            if (is_modifier(toks_[i])) {
                ++i;
                continue;
            }
            if (toks_[i].kind == TokenKind::Symbol && toks_[i].text == "@") {
                std::size_t j = skip_trivia_until(i + 1, hi);
                if (j < hi && toks_[j].kind == TokenKind::Symbol &&
                    toks_[j].text == "[") {
                    i = skip_group(j, hi);
                    continue;
                }
            }
            return i;
        }
    }

    // `open_idx` points at an opening delimiter; returns index past its
    // matching closer (or hi).
    std::size_t skip_group(std::size_t open_idx, std::size_t hi) const {
        int depth = 0;
        std::size_t i = open_idx;
        while (i < hi) {
            const Token& tok = toks_[i];
            if (tok.kind == TokenKind::Symbol) {
                if (is_open_delim(tok.text)) ++depth;
                else if (is_close_delim(tok.text)) {
                    --depth;
                    if (depth <= 0) return i + 1;
                }
            }
            ++i;
        }
        return hi;
    }

    // One past the last token of the command starting at `head` (trivia that
    // belongs to the next command is excluded).
    std::size_t command_end(std::size_t head, std::size_t hi) const {
        const Token& first = toks_[head];
        if (first.kind == TokenKind::Keyword && first.text == "mutual")
            return mutual_end(head, hi);

        std::size_t anchor = anchor_index(head, hi);
        if (anchor >= hi) return hi;

        int depth = 0;
        std::size_t i = anchor;
        // The anchor itself may open a group.
        if (toks_[i].kind == TokenKind::Symbol && is_open_delim(toks_[i].text))
            ++depth;
        ++i;
        for (; i < hi; ++i) {
            const Token& tok = toks_[i];
            if (tok.kind == TokenKind::Symbol) {
                if (is_open_delim(tok.text)) ++depth;
                else if (is_close_delim(tok.text) && depth > 0) --depth;
                continue;
            }
            if (depth == 0 && !is_trivia(tok) && starts_command(toks_, i)) {
                std::size_t e = i;
                while (e > head && is_trivia(toks_[e - 1])) --e;
                return e;
            }
        }
        return hi;
    }

    std::size_t mutual_end(std::size_t head, std::size_t hi) const {
        int depth = 0;
        for (std::size_t i = head + 1; i < hi; ++i) {
            const Token& tok = toks_[i];
            if (tok.kind == TokenKind::Symbol) {
                if (is_open_delim(tok.text)) ++depth;
                else if (is_close_delim(tok.text) && depth > 0) --depth;
            } else if (depth == 0 && tok.kind == TokenKind::Keyword &&
                       tok.text == "end") {
                return i + 1;
            }
        }
        return hi;
    }

    Command build_command(std::size_t lo, std::size_t head, std::size_t end) {
        Command cmd;
        cmd.raw = build_token_tree(toks_.subspan(lo, end - lo));
        cmd.span = range_span(toks_, lo, end);

        // Head cluster: doc comment, attributes, modifiers.
        std::optional<std::string> doc;
        for (std::size_t k = lo; k < head; ++k)
            if (toks_[k].kind == TokenKind::DocComment) doc = toks_[k].text;

        std::vector<std::string> modifiers;
        std::vector<TokenTree> attributes;
        std::size_t i = head;
        while (i < end) {
            i = skip_trivia_until(i, end);
            if (i >= end) break;
            if (toks_[i].kind == TokenKind::DocComment) {
                doc = toks_[i].text;
                ++i;
                continue;
            }
            if (is_modifier(toks_[i])) {
                modifiers.push_back(toks_[i].text);
                ++i;
                continue;
            }
            if (toks_[i].kind == TokenKind::Symbol && toks_[i].text == "@") {
                std::size_t j = skip_trivia_until(i + 1, end);
                if (j < end && toks_[j].kind == TokenKind::Symbol &&
                    toks_[j].text == "[") {
                    std::size_t g = skip_group(j, end);
                    attributes.push_back(
                        build_token_tree(toks_.subspan(j, g - j)));
                    i = g;
                    continue;
                }
            }
            break;
        }
        if (i >= end) {
            cmd.data = UnparsedCmd{};
            return cmd;
        }

        const Token& anchor = toks_[i];
        if (anchor.kind == TokenKind::HashCommandName) {
            HashCmd hc;
            hc.name = anchor.text;
            hc.args = build_token_tree(toks_.subspan(i + 1, end - i - 1));
            cmd.data = std::move(hc);
            return cmd;
        }
        if (anchor.kind != TokenKind::Keyword) {
            cmd.data = UnparsedCmd{};
            return cmd;
        }

        const std::string& word = anchor.text;
        if (word == "import") {
            ImportCmd ic;
            if (auto dotted = parse_dotted_name(toks_, i + 1))
                ic.module = dotted->first;
            cmd.data = std::move(ic);
        } else if (word == "open") {
            OpenCmd oc;
            std::size_t j = i + 1;
            while (auto dotted = parse_dotted_name(toks_.first(end), j)) {
                oc.names.push_back(dotted->first);
                j = dotted->second;
            }
            cmd.data = std::move(oc);
        } else if (word == "set_option") {
            SetOptionCmd sc;
            std::size_t after = i + 1;
            if (auto dotted = parse_dotted_name(toks_.first(end), after)) {
                sc.option = dotted->first;
                after = dotted->second;
            }
            sc.value = build_token_tree(toks_.subspan(after, end - after));
            cmd.data = std::move(sc);
        } else if (word == "variable") {
            VariableCmd vc;
            vc.binders = build_token_tree(toks_.subspan(i + 1, end - i - 1));
            cmd.data = std::move(vc);
        } else if (word == "attribute") {
            cmd.data = AttributeCmd{};
        } else if (word == "namespace") {
            NamespaceBegin nb;
            if (auto dotted = parse_dotted_name(toks_.first(end), i + 1))
                nb.name = dotted->first;
            cmd.data = std::move(nb);
        } else if (word == "section") {
            SectionBegin sb;
            if (auto dotted = parse_dotted_name(toks_.first(end), i + 1))
                sb.name = dotted->first;
            cmd.data = std::move(sb);
        } else if (word == "end") {
            EndCmd ec;
            if (auto dotted = parse_dotted_name(toks_.first(end), i + 1))
                ec.name = dotted->first;
            cmd.data = std::move(ec);
        } else if (word == "mutual") {
            MutualBlock mb;
            std::size_t inner_end = end;
            if (inner_end > i + 1 && toks_[inner_end - 1].kind == TokenKind::Keyword &&
                toks_[inner_end - 1].text == "end")
                --inner_end;
            mb.commands = parse_range(i + 1, inner_end);
            cmd.data = std::move(mb);
        } else if (is_meta_keyword(word)) {
            cmd.data = build_meta(i, end, word);
        } else if (auto dk = decl_keyword_from(word)) {
            auto decl = build_decl(*dk, std::move(modifiers),
                                   std::move(attributes), doc, head, i, end);
            if (decl) {
                cmd.data = DeclCmd{std::move(*decl)};
            } else {
                cmd.data = UnparsedCmd{};
            }
        } else {
            cmd.data = UnparsedCmd{};
        }
        return cmd;
    }

    MetaDeclCmd build_meta(std::size_t anchor, std::size_t end,
                           const std::string& word) {
        MetaDeclCmd mc;
        mc.keyword = word;
        std::size_t j = anchor + 1;
        while (j < end) {
            const Token& tok = toks_[j];
            if (is_trivia(tok)) {
                ++j;
                continue;
            }
            if (tok.kind == TokenKind::StringLit && tok.text.size() >= 2) {
                mc.name = tok.text.substr(1, tok.text.size() - 2);
                break;
            }
            if (tok.kind == TokenKind::Ident) {
                mc.name = tok.text;
                break;
            }
            if (tok.kind == TokenKind::Symbol && is_open_delim(tok.text)) {
                j = skip_group(j, end);
                continue;
            }
            if (tok.kind == TokenKind::Symbol &&
                (tok.text == ":" || tok.text == "=>" || tok.text == "|"))
                break;
            ++j;
        }
        return mc;
    }

    std::optional<Declaration> build_decl(DeclKeyword keyword,
                                          std::vector<std::string> modifiers,
                                          std::vector<TokenTree> attributes,
                                          std::optional<std::string> doc,
                                          std::size_t head, std::size_t anchor,
                                          std::size_t end) {
        Declaration decl;
        decl.keyword = keyword;
        decl.modifiers = std::move(modifiers);
        decl.attributes = std::move(attributes);
        decl.doc_comment = std::move(doc);
        decl.span = range_span(toks_, head, end);

        std::size_t cursor = anchor + 1;
        if (auto dotted = parse_dotted_name(toks_.first(end), cursor)) {
            decl.name = dotted->first;
            cursor = dotted->second;
        } else if (keyword != DeclKeyword::Instance &&
                   keyword != DeclKeyword::Example) {
            return std::nullopt;
        }

        if (keyword == DeclKeyword::Axiom || keyword == DeclKeyword::Opaque) {
            decl.signature =
                build_token_tree(toks_.subspan(cursor, end - cursor));
            return decl;
        }

        // Split the header at the first top-level := / by / where.
        int depth = 0;
        std::size_t split = end;
        bool inclusive = false;
        for (std::size_t j = cursor; j < end; ++j) {
            const Token& tok = toks_[j];
            if (tok.kind == TokenKind::Symbol) {
                if (is_open_delim(tok.text)) ++depth;
                else if (is_close_delim(tok.text) && depth > 0) --depth;
                else if (depth == 0 && tok.text == ":=") {
                    split = j;
                    inclusive = false;
                    break;
                }
            } else if (depth == 0 && tok.kind == TokenKind::Keyword &&
                       (tok.text == "by" || tok.text == "where")) {
                split = j;
                inclusive = true;
                break;
            }
        }
        decl.signature = build_token_tree(toks_.subspan(cursor, split - cursor));
        if (split < end) {
            std::size_t body_lo = inclusive ? split : split + 1;
            decl.body = build_token_tree(toks_.subspan(body_lo, end - body_lo));
        }
        return decl;
    }
};

} // namespace

ParsedFile parse(const TokenStream& tokens, std::string_view source) {
    ParsedFile file;
    file.source = std::string(source);
    Parser parser(tokens);
    file.commands = parser.parse_range(0, tokens.size());
    return file;
}

ParseSourceResult parse_source(std::string_view source) {
    LexResult lexed = tokenize(source);
    ParseSourceResult result;
    result.file = parse(lexed.tokens, source);
    result.lex_error = lexed.error;
    return result;
}

namespace {

std::string qualified_name(const std::vector<std::string>& ns_stack,
                           const std::string& short_name) {
    std::string q;
    for (const std::string& ns : ns_stack) {
        if (ns.empty()) continue; // section sentinel
        q += ns;
        q += ".";
    }
    q += short_name;
    return q;
}

} // namespace

ExtractResult extract_theorem(const ParsedFile& file, std::string_view name) {
    struct Match {
        const Command* cmd;
        const Declaration* decl;
    };
    std::vector<Match> visible;

    bool after_exit = false;
    std::vector<std::string> ns_stack;

    std::function<void(const std::vector<Command>&)> walk =
        [&](const std::vector<Command>& cmds) {
            for (const Command& cmd : cmds) {
                if (cmd.is<HashCmd>()) {
                    if (cmd.get<HashCmd>().name == "#exit") after_exit = true;
                } else if (cmd.is<NamespaceBegin>()) {
                    ns_stack.push_back(cmd.get<NamespaceBegin>().name);
                } else if (cmd.is<SectionBegin>()) {
                    ns_stack.push_back("");
                } else if (cmd.is<EndCmd>()) {
                    if (!ns_stack.empty()) ns_stack.pop_back();
                } else if (cmd.is<MutualBlock>()) {
                    walk(cmd.get<MutualBlock>().commands);
                } else if (cmd.is<DeclCmd>()) {
                    const Declaration& decl = cmd.get<DeclCmd>().decl;
                    if (decl.keyword != DeclKeyword::Theorem &&
                        decl.keyword != DeclKeyword::Lemma)
                        continue;
                    if (decl.name.empty()) continue;
                    bool hit = decl.name == name ||
                               qualified_name(ns_stack, decl.name) == name;
                    if (hit && !after_exit) visible.push_back({&cmd, &decl});
                }
            }
        };
    walk(file.commands);

    ExtractResult result;
    if (visible.empty()) {
        result.status = ExtractStatus::NotFound;
    } else if (visible.size() > 1) {
        result.status = ExtractStatus::Duplicate;
    } else {
        result.status = ExtractStatus::Found;
        result.decl = visible.front().decl;
        result.command = visible.front().cmd;
    }
    return result;
}

std::string normalize_signature(const TokenTree& signature) {
    return normalize_tree(signature);
}

namespace {

bool is_binder_introducer(const Token& tok) {
    if (tok.kind == TokenKind::Symbol)
        return tok.text == "∀" || tok.text == "∃" ||
               tok.text == "λ";
    return tok.kind == TokenKind::Ident && tok.text == "fun";
}

bool is_binder_terminator(const Token& tok) {
    return tok.kind == TokenKind::Symbol &&
           (tok.text == ":" || tok.text == "," || tok.text == "=>");
}

void collect_binders(const TokenTree& tree, std::set<std::string>& out) {
    const auto& nodes = tree.nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].is_leaf()) {
            const Group& g = nodes[i].group();
            const std::string& open = g.open.text;
            if (open == "(" || open == "{") {
                std::size_t colon = g.children.nodes.size();
                for (std::size_t k = 0; k < g.children.nodes.size(); ++k) {
                    const TreeNode& child = g.children.nodes[k];
                    if (child.is_leaf() &&
                        child.leaf().kind == TokenKind::Symbol &&
                        child.leaf().text == ":") {
                        colon = k;
                        break;
                    }
                }
                if (colon < g.children.nodes.size()) {
                    for (std::size_t k = 0; k < colon; ++k) {
                        const TreeNode& child = g.children.nodes[k];
                        if (child.is_leaf() &&
                            child.leaf().kind == TokenKind::Ident)
                            out.insert(child.leaf().text);
                    }
                }
            } else if (open == "⟨") {
                for (const TreeNode& child : g.children.nodes)
                    if (child.is_leaf() &&
                        child.leaf().kind == TokenKind::Ident)
                        out.insert(child.leaf().text);
            }
            collect_binders(g.children, out);
            continue;
        }
        const Token& leaf = nodes[i].leaf();
        if (!is_binder_introducer(leaf)) continue;
        for (std::size_t k = i + 1; k < nodes.size(); ++k) {
            if (!nodes[k].is_leaf()) continue; // grouped binders handled above
            const Token& tok = nodes[k].leaf();
            if (is_trivia(tok)) continue;
            if (is_binder_terminator(tok)) break;
            if (tok.kind == TokenKind::Ident) out.insert(tok.text);
        }
    }
}

void collect_references(const TokenTree& tree, std::set<std::string>& out) {
    const auto& nodes = tree.nodes;
    std::size_t i = 0;
    while (i < nodes.size()) {
        if (!nodes[i].is_leaf()) {
            collect_references(nodes[i].group().children, out);
            ++i;
            continue;
        }
        const Token& leaf = nodes[i].leaf();
        if (leaf.kind != TokenKind::Ident || leaf.text == "fun") {
            ++i;
            continue;
        }
        std::vector<std::string> chain = {leaf.text};
        std::size_t j = i + 1;
        while (true) {
            std::size_t dot = j;
            while (dot < nodes.size() && nodes[dot].is_leaf() &&
                   is_trivia(nodes[dot].leaf()))
                ++dot;
            if (dot >= nodes.size() || !nodes[dot].is_leaf() ||
                nodes[dot].leaf().kind != TokenKind::Symbol ||
                nodes[dot].leaf().text != ".")
                break;
            std::size_t part = dot + 1;
            while (part < nodes.size() && nodes[part].is_leaf() &&
                   is_trivia(nodes[part].leaf()))
                ++part;
            if (part >= nodes.size() || !nodes[part].is_leaf() ||
                nodes[part].leaf().kind != TokenKind::Ident)
                break;
            chain.push_back(nodes[part].leaf().text);
            j = part + 1;
        }
        if (chain.size() == 1) {
            out.insert(chain[0]);
        } else {
            std::string full = chain[0];
            for (std::size_t k = 1; k < chain.size(); ++k) {
                full += ".";
                full += chain[k];
            }
            out.insert(std::move(full));
            out.insert(chain.back());
        }
        i = j;
    }
}

} // namespace

std::set<std::string> referenced_identifiers(const TokenTree& tree) {
    std::set<std::string> refs;
    collect_references(tree, refs);
    std::set<std::string> binders;
    collect_binders(tree, binders);
    std::set<std::string> result;
    for (const std::string& name : refs)
        if (binders.count(name) == 0) result.insert(name);
    return result;
}

} // namespace proofcheck
