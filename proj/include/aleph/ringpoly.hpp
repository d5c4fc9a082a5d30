#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aleph/error.hpp"
#include "aleph/numeric.hpp"

namespace aleph::ringpoly {

enum class RingKind { integers, rationals, mod_n, prime_field };

// Exact coefficient ring: Z, Q, Z/n (n >= 2) or GF(p) (p prime, checked).
// Elements are carried as exact rationals; outside Q they are integral, and
// in the modular rings they are canonical residues in [0, n).
class Ring {
public:
    static Ring integers() { return Ring(RingKind::integers, 0); }
    static Ring rationals() { return Ring(RingKind::rationals, 0); }
    static Ring mod_n(Int n) {
        if (n < 2) throw Error("Malformed", "Z/n requires n >= 2");
        return Ring(RingKind::mod_n, std::move(n));
    }
    static Ring prime_field(Int p) {
        if (!is_prime(p)) throw Error("Malformed", "GF(p) requires a prime modulus, got " + p.str());
        return Ring(RingKind::prime_field, std::move(p));
    }

    RingKind kind() const noexcept { return kind_; }
    const Int& modulus() const noexcept { return n_; }
    bool is_field() const noexcept {
        return kind_ == RingKind::rationals || kind_ == RingKind::prime_field;
    }
    bool is_modular() const noexcept {
        return kind_ == RingKind::mod_n || kind_ == RingKind::prime_field;
    }

    bool operator==(const Ring&) const = default;

    // Canonical representative of a value (mod reduction / integrality check).
    Rat canon(const Rat& a) const;
    Rat add(const Rat& a, const Rat& b) const { return canon(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return canon(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return canon(a * b); }
    Rat neg(const Rat& a) const { return canon(-a); }
    // Multiplicative inverse where one exists (units only).
    std::optional<Rat> inv(const Rat& a) const;

    std::string str() const;

private:
    Ring(RingKind k, Int n) : kind_(k), n_(std::move(n)) {}
    RingKind kind_;
    Int n_;
};

// deg(0) = -infinity, with -inf + m = -inf and -inf < m for every m.
class Degree {
public:
    static Degree neg_infinity() { return Degree(); }
    static Degree of(long long n) {
        Degree d;
        d.finite_ = true;
        d.n_ = n;
        return d;
    }

    bool is_neg_infinity() const noexcept { return !finite_; }
    long long value() const {
        if (!finite_) throw Error("Malformed", "degree is -infinity");
        return n_;
    }

    friend Degree operator+(const Degree& a, const Degree& b) {
        if (!a.finite_ || !b.finite_) return neg_infinity();
        return of(a.n_ + b.n_);
    }
    std::strong_ordering operator<=>(const Degree& o) const {
        if (finite_ != o.finite_) return finite_ ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
        if (!finite_) return std::strong_ordering::equal;
        return n_ <=> o.n_;
    }
    bool operator==(const Degree&) const = default;

    std::string str() const { return finite_ ? std::to_string(n_) : "-inf"; }

private:
    Degree() = default;
    bool finite_ = false;
    long long n_ = 0;
};

// Dense coefficient list a_0..a_n with trailing zeros trimmed; the empty
// list is the zero polynomial.
class Polynomial {
public:
    Polynomial(Ring ring, std::vector<Rat> coeffs);

    static Polynomial zero(const Ring& r) { return Polynomial(r, {}); }
    static Polynomial constant(const Ring& r, const Rat& c) { return Polynomial(r, {c}); }
    // c * x^k
    static Polynomial monomial(const Ring& r, const Rat& c, std::size_t k);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Coefficient of x^k (0 past the end).
    Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
    Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

    bool operator==(const Polynomial&) const = default;

private:
    Ring ring_;
    std::vector<Rat> coeffs_;
};

Degree poly_deg(const Polynomial& f);
Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
// Convolution product: c_n = sum_{i=0..n} a_{n-i} b_i.
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
// Division with remainder over a field; g != 0.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g);
// Monic gcd over a field (0 for the pair of zero polynomials).
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

// Power series truncated at order N: exactly N stored coefficients
// a_0..a_{N-1}; arithmetic never reads beyond the precision.
class TruncatedSeries {
public:
    TruncatedSeries(Ring ring, std::size_t precision, std::vector<Rat> coeffs);

    static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t precision);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t precision() const noexcept { return precision_; }
    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    Ring ring_;
    std::size_t precision_;
    std::vector<Rat> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

struct UnitsAndZeroDivisors {
    std::vector<Int> units;
    std::vector<Int> zero_divisors;
    // For each zero divisor a, a partner b with a*b = 0 mod n.
    std::vector<std::pair<Int, Int>> witnesses;
};

// Exhaustive partition of the nonzero residues of Z/n. Throws TooLarge for
// n > 10^6.
UnitsAndZeroDivisors units_and_zero_divisors(const Int& n);

// Either the complete inverse table of Z/n (index a -> a^-1, slots 0 unused)
// or a zero-divisor witness pair proving Z/n is not a domain. The table is
// built by the pigeonhole scan x -> a*x until hitting 1.
using FieldCheck = std::variant<std::vector<Int>, std::pair<Int, Int>>;
FieldCheck finite_domain_to_field(const Int& n);

// Finitely generated ideal of Z.
struct IdealZ {
    std::vector<Int> generators;  // nonempty
};

// Finitely generated ideal of F[x] for a field F.
struct IdealFx {
    Ring field;
    std::vector<Polynomial> generators;  // nonempty, all over `field`
};

// Single generator: iterated gcd, normalized nonnegative (Z) / monic (F[x]).
Int ideal_principal_generator(const IdealZ& ideal);
Polynomial ideal_principal_generator(const IdealFx& ideal);

bool ideal_member(const Int& a, const IdealZ& ideal);
bool ideal_member(const Polynomial& a, const IdealFx& ideal);

// Least index N from which the chain is constant (generators associate).
// Throws NotAscending if some step is not an inclusion, NotYetStationary if
// the last two ideals still differ.
std::size_t acc_stabilize(const std::vector<IdealZ>& chain);
std::size_t acc_stabilize(const std::vector<IdealFx>& chain);

// Generators (as residues mod n) of the maximal ideals of Z/n: (p mod n) for
// each prime p dividing n. Sorted ascending. Throws TooLarge for n > 10^6.
std::vector<Int> maximal_ideals_modn(const Int& n);

}  // namespace aleph::ringpoly
