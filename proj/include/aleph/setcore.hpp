#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aleph/error.hpp"

namespace aleph::setcore {

// Element of a finite set: an integer or an interned symbol. Integers order
// before symbols; each kind is ordered naturally. The fixed total order makes
// every set/map operation deterministic.
class Atom {
public:
    explicit Atom(std::int64_t n) : is_int_(true), int_(n) {}
    explicit Atom(std::string s) : is_int_(false), sym_(std::move(s)) {}

    bool is_int() const noexcept { return is_int_; }
    std::int64_t int_value() const { return int_; }
    const std::string& symbol() const { return sym_; }

    std::strong_ordering operator<=>(const Atom& o) const {
        if (is_int_ != o.is_int_) return is_int_ ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
        if (is_int_) return int_ <=> o.int_;
        return sym_ <=> o.sym_;
    }
    bool operator==(const Atom& o) const { return (*this <=> o) == 0; }

    std::string str() const { return is_int_ ? std::to_string(int_) : sym_; }

private:
    bool is_int_;
    std::int64_t int_ = 0;
    std::string sym_;
};

// Strictly sorted, duplicate-free list of atoms.
class FiniteSet {
public:
    FiniteSet() = default;
    explicit FiniteSet(std::vector<Atom> elements);

    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    bool contains(const Atom& a) const;
    bool subset_of(const FiniteSet& other) const;
    const std::vector<Atom>& elements() const noexcept { return elems_; }

    bool operator==(const FiniteSet&) const = default;

private:
    std::vector<Atom> elems_;
};

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b);

// Total function between two explicit finite sets: exactly one pair per
// domain element, every image inside the codomain. Pairs are kept sorted by
// domain atom. Construction throws MalformedMap on any invariant violation.
class FiniteMap {
public:
    FiniteMap(FiniteSet domain, FiniteSet codomain,
              std::vector<std::pair<Atom, Atom>> pairs);

    static FiniteMap identity(const FiniteSet& s);

    const FiniteSet& domain() const noexcept { return domain_; }
    const FiniteSet& codomain() const noexcept { return codomain_; }
    const std::vector<std::pair<Atom, Atom>>& pairs() const noexcept { return pairs_; }

    const Atom& apply(const Atom& a) const;
    FiniteSet image() const;

    bool operator==(const FiniteMap&) const = default;

private:
    FiniteSet domain_;
    FiniteSet codomain_;
    std::vector<std::pair<Atom, Atom>> pairs_;
};

struct FunctionKind {
    bool injective = false;
    bool surjective = false;
    bool bijective = false;
};

// Exhaustive check of the two defining properties; bijective = both.
FunctionKind check_function_kind(const FiniteMap& f);

// Two-sided inverse of a bijection. Throws NotBijective carrying a witness:
// either a collision pair (two preimages of one atom) or an unhit codomain atom.
FiniteMap invert_bijection(const FiniteMap& f);

// g(f(x)); domains must chain.
FiniteMap compose(const FiniteMap& g, const FiniteMap& f);

// The back-and-forth construction: E0 = A \ g(B), E_{n+1} = g(f(E_n)),
// E = union E_n (stabilizes on finite sets); h = f on E and g^-1 off E.
// f: A->B and g: B->A must be injective (throws NotInjective naming the
// offending map and a collision).
FiniteMap schroeder_bernstein_finite(const FiniteSet& A, const FiniteSet& B,
                                     const FiniteMap& f, const FiniteMap& g);

// Two computable injections on the naturals plus a step budget. fuel bounds
// both the preimage searches and the backward-chain length.
struct CountableInjectionPair {
    std::function<std::uint64_t(std::uint64_t)> f;
    std::function<std::uint64_t(std::uint64_t)> g;
    std::uint64_t fuel = 1;
};

// Evaluate the Schroeder-Bernstein bijection h at a single point by backward
// chasing: alternately take g-preimages and f-preimages. A-side dead end
// means x entered through E0, so h(x) = f(x); a B-side dead end or a revisited
// state means the chain never reaches E0, so h(x) = g^-1(x). Preimage searches
// scan 0..fuel. Throws FuelExhausted when the chain is still producing new
// states after fuel steps, NoPreimage when the g^-1 branch cannot locate a
// preimage within fuel.
std::uint64_t sb_point_countable(const CountableInjectionPair& p, std::uint64_t x);

// Classification only (true iff x is in E); same semantics as above.
bool sb_point_in_e(const CountableInjectionPair& p, std::uint64_t x);

// All subsets, ordered by size then lexicographically. Throws TooLarge past
// the bound.
std::vector<FiniteSet> powerset(const FiniteSet& A, std::size_t max_size = 16);

// chi_A : X -> {0,1}; requires A subset of X (NotSubset otherwise).
FiniteMap characteristic_function(const FiniteSet& X, const FiniteSet& A);

// Binary relation on a carrier; pairs must live in carrier x carrier.
class FiniteRelation {
public:
    FiniteRelation(FiniteSet carrier, std::vector<std::pair<Atom, Atom>> pairs);

    // The usual order named by a comparator, materialized as explicit pairs.
    static FiniteRelation total_order(const FiniteSet& carrier);

    const FiniteSet& carrier() const noexcept { return carrier_; }
    const std::vector<std::pair<Atom, Atom>>& pairs() const noexcept { return pairs_; }
    bool related(const Atom& a, const Atom& b) const;

    bool operator==(const FiniteRelation&) const = default;

private:
    FiniteSet carrier_;
    std::vector<std::pair<Atom, Atom>> pairs_;
};

struct OrderKind {
    bool partial = false;
    bool linear = false;
    bool well = false;
};

// partial = reflexive & transitive & antisymmetric; linear adds totality.
// For carriers of size <= 12 the well-order flag is computed by checking a
// least element in every nonempty subset; larger finite carriers use the
// fact that finite linear orders are well-ordered.
OrderKind check_order(const FiniteRelation& r);

// The unique order isomorphism between two finite linear orders (i-th least
// to i-th least), or nullopt when the carriers differ in size. Throws
// NotLinear if either relation is not a linear order.
std::optional<FiniteMap> order_isomorphism(const FiniteRelation& p,
                                           const FiniteRelation& q);

}  // namespace aleph::setcore
