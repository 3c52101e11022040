#pragma once

#include "proofcheck/token.hpp"

#include <string_view>

namespace proofcheck {

/// Splits Lean 4 source into a lossless token stream: concatenating the token
/// texts of a successful result reproduces the input byte for byte, and token
/// spans tile [0, source.size()) in order without gaps.
///
/// Comments and whitespace are kept as tokens. Nested block comments lex as a
/// single token; `/--`- and `/-!`-style comments come back as DocComment.
/// `#eval`, `#exit` and friends are single HashCommandName tokens. Dotted
/// names like `Nat.succ` lex as three tokens (the parser re-joins them).
LexResult tokenize(std::string_view source);

/// True for members of the fixed keyword set ("theorem", "by", "sorry", ...).
bool is_keyword(std::string_view word);

} // namespace proofcheck
