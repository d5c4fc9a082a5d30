#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "aleph/cardinal.hpp"
#include "aleph/error.hpp"
#include "aleph/ordinal.hpp"

namespace aleph::expr {

// Ordinal expression grammar: atoms `w` (or unicode omega) and nonnegative
// integer literals; binary `+`, `*`, `^` with precedence ^ > * > +, all
// left-associative; parentheses; whitespace insignificant. The parser
// evaluates as it goes, so the result is already in Cantor normal form.
// Throws ParseError with the byte offset and expected-token set.
ordinal::Ordinal parse_ordinal(std::string_view text);

// Canonical rendering, e.g. `w^w + w*2 + 3`. parse(render(x)) == x.
std::string render_ordinal(const ordinal::Ordinal& o);

// Cardinal expression grammar: atoms `aleph(k)`, `beth(k)` and integer
// literals; `+`, `*`, prefix `2^`; the whole expression may instead be
// `cmp(a, b)`. Evaluation happens under the given assumption mode.
using CardResult = std::variant<cardinal::Cardinal, cardinal::CardCmp>;
CardResult parse_cardinal(std::string_view text, cardinal::AssumptionMode mode);

std::string render_cardinal(const cardinal::Cardinal& c);
std::string render_cardinal(const CardResult& r);

cardinal::AssumptionMode parse_mode(std::string_view name);

}  // namespace aleph::expr
