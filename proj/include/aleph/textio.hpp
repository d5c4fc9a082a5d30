#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aleph/matrix.hpp"
#include "aleph/numeric.hpp"
#include "aleph/ringpoly.hpp"
#include "aleph/setcore.hpp"

namespace aleph::textio {

// Canonical text forms consumed and produced by the CLI:
//   sets       {a,b,c}
//   maps       {a->b, c->d}
//   relations  [(a,b),(c,d)]
// Atoms are integers or identifiers; whitespace is insignificant on input.

setcore::FiniteSet parse_set(std::string_view text);
std::string render_set(const setcore::FiniteSet& s);

// A map literal alone does not identify its codomain; pass one explicitly or
// default it to the image.
setcore::FiniteMap parse_map(std::string_view text);
setcore::FiniteMap parse_map(std::string_view text, const setcore::FiniteSet& codomain);
std::string render_map(const setcore::FiniteMap& m);

setcore::FiniteRelation parse_relation(std::string_view text,
                                       const setcore::FiniteSet& carrier);
// Carrier defaults to the atoms mentioned in the pairs.
setcore::FiniteRelation parse_relation(std::string_view text);
std::string render_relation(const setcore::FiniteRelation& r);

// Ring spec strings: Z, Q, Z/<n>, GF(<p>).
ringpoly::Ring parse_ring(std::string_view text);

// Polynomials in the usual notation: `3x^2 - x + 1`, `2x`, `1/2x^3`,
// with `*` between coefficient and x accepted. Coefficients are integers or
// p/q fractions.
ringpoly::Polynomial parse_polynomial(std::string_view text, const ringpoly::Ring& ring);
std::string render_polynomial(const ringpoly::Polynomial& p);

// Series render ascending with the truncation marker: `1 + 2x + O(x^4)`.
std::string render_series(const ringpoly::TruncatedSeries& s);

// Matrices and vectors as JSON arrays; entries may be numbers or decimal
// strings (for values past 2^53), and `p/q` strings in the rational case.
Mat<Int> parse_int_matrix(std::string_view text);
Mat<Rat> parse_rat_matrix(std::string_view text);
std::vector<Int> parse_int_vector(std::string_view text);
std::vector<Rat> parse_rat_vector(std::string_view text);

std::string render_int_matrix(const Mat<Int>& m);
std::string render_rat_matrix(const Mat<Rat>& m);
std::string render_int_vector(const std::vector<Int>& v);

}  // namespace aleph::textio
