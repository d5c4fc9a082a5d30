#pragma once

#include <compare>
#include <memory>
#include <span>
#include <vector>

#include "aleph/cardinal.hpp"
#include "aleph/error.hpp"
#include "aleph/numeric.hpp"

namespace aleph::ordinal {

// Ordinal below epsilon_0 in Cantor normal form:
//   w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck
// with exponents e1 > e2 > ... > ek (themselves ordinals) and coefficients
// ci >= 1. The empty term list is 0. Exponent nesting is capped at depth 64;
// operations that would build a deeper tower throw ResourceLimit.
//
// Every algorithm below recurses on exponents, which are structurally
// smaller in CNF rank, so all recursions here are instances of well-founded
// (transfinite) induction below epsilon_0.
class Ordinal {
public:
    struct Term;

    Ordinal() = default;  // zero

    static Ordinal finite(Int n);
    static Ordinal omega();
    // w^exp * coeff, coeff >= 1.
    static Ordinal single(Ordinal exp, Int coeff);
    // Validates strict exponent descent and positive coefficients; throws
    // NonCanonical otherwise.
    static Ordinal from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_finite() const;
    // Value of a finite ordinal (0 for zero).
    Int finite_value() const;

    const Ordinal& leading_exponent() const;
    const Int& leading_coefficient() const;
    // Everything after the leading term.
    Ordinal tail() const;

    std::size_t depth() const;

    bool operator==(const Ordinal& o) const;

private:
    std::vector<Term> terms_;
};

struct Ordinal::Term {
    Ordinal exponent;
    Int coefficient;
    bool operator==(const Term&) const = default;
};

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);

// Natural sum is deliberately absent: this is ordinal addition, where terms
// of a below the leading exponent of b are absorbed. 1 + w = w, w + 1 != w.
Ordinal ord_add(const Ordinal& a, const Ordinal& b);

// Ordinal multiplication (left-distributes over the CNF of b).
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);

// Ordinal exponentiation; the result stays below epsilon_0 for CNF inputs.
Ordinal ord_pow(const Ordinal& a, const Ordinal& b);

// Least upper bound of a nonempty finite family (its maximum). Throws
// EmptyFamily on an empty span.
Ordinal ord_sup(std::span<const Ordinal> xs);

// Finite(n) for finite ordinals, aleph(0) for everything else below eps_0.
cardinal::Cardinal ord_cardinality(const Ordinal& a);

// Syntax tree for a constructed well-order. Fin(n) is the n-element order,
// Omega the naturals; Concat(l, r) puts all of l before all of r;
// LexProd(base, times) is times-many copies of base, i.e. the dictionary
// order on pairs (b, t) compared by the t coordinate first.
class WellOrderExpr {
public:
    enum class Kind { fin, omega, concat, lex_prod };

    static WellOrderExpr fin(Int n);
    static WellOrderExpr omega();
    static WellOrderExpr concat(WellOrderExpr left, WellOrderExpr right);
    static WellOrderExpr lex_prod(WellOrderExpr base, WellOrderExpr times);

    Kind kind() const noexcept { return kind_; }
    const Int& count() const { return n_; }
    const WellOrderExpr& left() const { return *l_; }   // also LexProd base
    const WellOrderExpr& right() const { return *r_; }  // also LexProd times

private:
    WellOrderExpr() = default;
    Kind kind_ = Kind::fin;
    Int n_ = 0;
    std::shared_ptr<const WellOrderExpr> l_, r_;
};

// The unique ordinal order-isomorphic to the constructed well-order.
Ordinal order_type(const WellOrderExpr& e);

}  // namespace aleph::ordinal
