#include "proofcheck/token_tree.hpp"

namespace proofcheck {

bool is_open_delim(const std::string& text) {
    return text == "(" || text == "[" || text == "{" || text == "⟨";
}

bool is_close_delim(const std::string& text) {
    return text == ")" || text == "]" || text == "}" || text == "⟩";
}

bool delims_match(const std::string& open, const std::string& close) {
    if (open == "(") return close == ")";
    if (open == "[") return close == "]";
    if (open == "{") return close == "}";
    if (open == "⟨") return close == "⟩";
    return false;
}

namespace {

TokenTree build_range(std::span<const Token> tokens, std::size_t& i,
                      const std::string* expected_close) {
    TokenTree tree;
    while (i < tokens.size()) {
        const Token& tok = tokens[i];
        if (tok.kind == TokenKind::Symbol && expected_close &&
            delims_match(*expected_close, tok.text)) {
            return tree; // caller consumes the closer
        }
        if (tok.kind == TokenKind::Symbol && is_open_delim(tok.text)) {
            Group g;
            g.open = tok;
            ++i;
            g.children = build_range(tokens, i, &tok.text);
            if (i < tokens.size() && tokens[i].kind == TokenKind::Symbol &&
                delims_match(tok.text, tokens[i].text)) {
                g.close = tokens[i];
                ++i;
            }
            tree.nodes.push_back(TreeNode{std::move(g)});
            continue;
        }
        tree.nodes.push_back(TreeNode{tok});
        ++i;
    }
    return tree;
}

} // namespace

TokenTree build_token_tree(std::span<const Token> tokens) {
    std::size_t i = 0;
    TokenTree tree = build_range(tokens, i, nullptr);
    // Unmatched closers at the top level come back as leaves because the
    // recursion above only stops on the closer it is looking for.
    while (i < tokens.size()) {
        tree.nodes.push_back(TreeNode{tokens[i]});
        ++i;
    }
    return tree;
}

void flatten(const TokenTree& tree, TokenStream& out) {
    for (const TreeNode& node : tree.nodes) {
        if (node.is_leaf()) {
            out.push_back(node.leaf());
        } else {
            const Group& g = node.group();
            out.push_back(g.open);
            flatten(g.children, out);
            if (g.close) out.push_back(*g.close);
        }
    }
}

TokenStream flatten(const TokenTree& tree) {
    TokenStream out;
    flatten(tree, out);
    return out;
}

std::string normalize_tree(const TokenTree& tree) {
    std::string out;
    for (const Token& tok : flatten(tree)) {
        if (is_trivia(tok)) continue;
        if (!out.empty()) out.push_back(' ');
        out += tok.text;
    }
    return out;
}

} // namespace proofcheck
