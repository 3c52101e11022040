#pragma once

#include "proofcheck/token.hpp"

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace proofcheck {

struct TreeNode;

/// Sequence of leaves and balanced groups. Flattening a tree in order
/// reproduces exactly the tokens it was built from.
struct TokenTree {
    std::vector<TreeNode> nodes;

    bool empty() const { return nodes.empty(); }
};

struct Group {
    Token open;                 // one of ( [ { ⟨
    TokenTree children;
    std::optional<Token> close; // absent when the group ran off the end
};

struct TreeNode {
    std::variant<Token, Group> data;

    bool is_leaf() const { return std::holds_alternative<Token>(data); }
    const Token& leaf() const { return std::get<Token>(data); }
    const Group& group() const { return std::get<Group>(data); }
};

/// Groups tokens by the delimiters ( ) [ ] { } ⟨ ⟩. Unmatched closers stay
/// leaves; unclosed groups absorb the remaining tokens with no close token.
TokenTree build_token_tree(std::span<const Token> tokens);

/// Appends every token of the tree, in source order, to `out`.
void flatten(const TokenTree& tree, TokenStream& out);
TokenStream flatten(const TokenTree& tree);

/// Canonical text of a tree: trivia dropped, remaining token texts joined
/// with single spaces. Two trees are whitespace-equivalent iff their
/// normalized texts are equal, and the operation is idempotent.
std::string normalize_tree(const TokenTree& tree);

bool is_open_delim(const std::string& text);
bool is_close_delim(const std::string& text);
bool delims_match(const std::string& open, const std::string& close);

} // namespace proofcheck
