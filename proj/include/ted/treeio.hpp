// Text formats: bracket notation for trees, dot-bracket strings for RNA
// secondary structure, and JSON documents for cost tables and trees.
//
// Bracket grammar, whitespace-insensitive:
//   Tree  := Label [ '(' Tree (',' Tree)* ')' ]
//   Label := [A-Za-z0-9_.-]+ | '"' escaped text '"'   (backslash escapes)
// Parse errors throw std::invalid_argument with a 1-based position.
#pragma once

#include <string>
#include <string_view>

#include "ted/cost_model.hpp"
#include "ted/tree.hpp"

namespace ted {

Tree parse_bracket(std::string_view text);

// Canonical form: no whitespace, labels quoted only when necessary.
// parse_bracket(emit_bracket(t)) reproduces t exactly. The empty tree has no
// bracket form and is rejected.
std::string emit_bracket(const Tree& t);

// Dot-bracket text over '(', ')', '.'. Pairs become "pair" nodes, dots become
// "base" leaves, everything hangs under a synthetic "root". With a sequence
// of the same length, a pair opened at i and closed at j is labeled
// "seq[i]-seq[j]" and a dot at i is labeled "seq[i]".
Tree parse_dot_bracket(std::string_view structure);
Tree parse_dot_bracket(std::string_view structure, std::string_view sequence);

// JSON object with required del_default, rel_default_eq, rel_default_neq,
// optional del map {label: cost} and rel map {"from|to": cost}.
CostTable load_cost_table(const std::string& json_text);

// JSON alternative tree form {"label": "a", "children": [...]}.
Tree parse_tree_json(const std::string& json_text);

// Bracket text unless the first non-space byte is '{', then JSON.
Tree parse_tree_auto(const std::string& text);

}  // namespace ted
