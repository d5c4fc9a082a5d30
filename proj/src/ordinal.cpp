#include "aleph/ordinal.hpp"

#include <algorithm>

namespace aleph::ordinal {

namespace {

constexpr std::size_t kMaxDepth = 64;
// Finite exponents on an infinite base expand to roughly k-fold term lists;
// cap them so a^k cannot silently exhaust memory.
const Int kMaxFinitePowOnInfinite = 4096;
const Int kMaxFiniteExponent = 1000000;

void check_depth(const Ordinal& o) {
    if (o.depth() > kMaxDepth)
        throw Error("ResourceLimit",
                    "exponent tower deeper than " + std::to_string(kMaxDepth));
}

}  // namespace

Ordinal Ordinal::finite(Int n) {
    if (n < 0) throw Error("NonCanonical", "finite ordinal must be nonnegative");
    Ordinal o;
    if (n > 0) o.terms_.push_back({Ordinal(), std::move(n)});
    return o;
}

Ordinal Ordinal::omega() { return single(finite(1), 1); }

Ordinal Ordinal::single(Ordinal exp, Int coeff) {
    if (coeff < 1) throw Error("NonCanonical", "coefficient must be positive");
    Ordinal o;
    o.terms_.push_back({std::move(exp), std::move(coeff)});
    check_depth(o);
    return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient < 1)
            throw Error("NonCanonical", "coefficient must be positive");
        if (i > 0 && ord_cmp(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater)
            throw Error("NonCanonical", "exponents must be strictly decreasing");
    }
    Ordinal o;
    o.terms_ = std::move(terms);
    check_depth(o);
    return o;
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Int Ordinal::finite_value() const {
    if (!is_finite()) throw Error("NonCanonical", "ordinal is not finite");
    return terms_.empty() ? Int(0) : terms_[0].coefficient;
}

const Ordinal& Ordinal::leading_exponent() const {
    if (terms_.empty()) throw Error("NonCanonical", "zero ordinal has no leading term");
    return terms_[0].exponent;
}

const Int& Ordinal::leading_coefficient() const {
    if (terms_.empty()) throw Error("NonCanonical", "zero ordinal has no leading term");
    return terms_[0].coefficient;
}

Ordinal Ordinal::tail() const {
    Ordinal t;
    if (terms_.size() > 1) t.terms_.assign(terms_.begin() + 1, terms_.end());
    return t;
}

std::size_t Ordinal::depth() const {
    std::size_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.exponent.depth() + 1);
    return d;
}

bool Ordinal::operator==(const Ordinal& o) const { return terms_ == o.terms_; }

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        auto e = ord_cmp(ta[i].exponent, tb[i].exponent);
        if (e != std::strong_ordering::equal) return e;
        if (ta[i].coefficient != tb[i].coefficient)
            return ta[i].coefficient < tb[i].coefficient ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
    }
    // One term list is a prefix of the other; the longer one is larger.
    return ta.size() <=> tb.size();
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Ordinal& e = b.leading_exponent();
    std::vector<Ordinal::Term> out;
    for (const auto& t : a.terms()) {
        auto c = ord_cmp(t.exponent, e);
        if (c == std::strong_ordering::greater) {
            out.push_back(t);
        } else if (c == std::strong_ordering::equal) {
            // merge into b's leading term
            out.push_back({t.exponent, t.coefficient + b.leading_coefficient()});
            out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
            return Ordinal::from_terms(std::move(out));
        } else {
            break;  // absorbed by b
        }
    }
    out.insert(out.end(), b.terms().begin(), b.terms().end());
    return Ordinal::from_terms(std::move(out));
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) return Ordinal();
    Ordinal result;
    for (const auto& [q, c] : b.terms()) {
        Ordinal piece;
        if (q.is_zero()) {
            // a * c for finite c: scale the leading coefficient, keep the tail.
            std::vector<Ordinal::Term> ts = a.terms();
            ts[0].coefficient *= c;
            piece = Ordinal::from_terms(std::move(ts));
        } else {
            // a * w^q * c = w^(lead(a) + q) * c: the limit factor wipes the tail.
            piece = Ordinal::single(ord_add(a.leading_exponent(), q), c);
        }
        result = ord_add(result, piece);
    }
    return result;
}

namespace {

Ordinal pow_finite_exponent(const Ordinal& a, const Int& k) {
    // a^k by binary exponentiation; k >= 1.
    if (!a.is_finite() && k > kMaxFinitePowOnInfinite)
        throw Error("ResourceLimit", "finite exponent " + k.str() + " on an infinite base");
    Ordinal acc = Ordinal::finite(1);
    Ordinal base = a;
    Int e = k;
    while (e > 0) {
        if ((e & 1) != 0) acc = ord_mul(acc, base);
        e >>= 1;
        if (e > 0) base = ord_mul(base, base);
    }
    return acc;
}

// The delta with 1 + delta = q: q - 1 for finite q, q itself for infinite q.
Ordinal left_predecessor(const Ordinal& q) {
    if (q.is_finite()) return Ordinal::finite(q.finite_value() - 1);
    return q;
}

}  // namespace

Ordinal ord_pow(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return Ordinal::finite(1);
    if (a.is_zero()) return Ordinal();
    if (a == Ordinal::finite(1)) return a;

    // Split b = limit part + finite part.
    std::vector<Ordinal::Term> limit_terms;
    Int fin = 0;
    for (const auto& t : b.terms()) {
        if (t.exponent.is_zero())
            fin = t.coefficient;
        else
            limit_terms.push_back(t);
    }
    Ordinal limit = Ordinal::from_terms(limit_terms);

    if (a.is_finite()) {
        const Int n = a.finite_value();  // n >= 2 here
        if (limit.is_zero()) {
            if (fin > kMaxFiniteExponent)
                throw Error("ResourceLimit", n.str() + "^" + fin.str() + " is too large");
            return Ordinal::finite(pow_int(n, fin.convert_to<std::uint64_t>()));
        }
        // n^(w^q * c + ...) = w^(w^(q-1) * c + ...): each limit exponent drops
        // one omega level against the finite base.
        std::vector<Ordinal::Term> exp_terms;
        for (const auto& [q, c] : limit_terms) exp_terms.push_back({left_predecessor(q), c});
        Ordinal tower = Ordinal::single(Ordinal::from_terms(std::move(exp_terms)), 1);
        return fin == 0 ? tower : ord_mul(tower, pow_finite_exponent(a, fin));
    }

    // Infinite base: a^(limit + fin) = w^(lead(a) * limit) * a^fin.
    Ordinal head = limit.is_zero()
                       ? Ordinal::finite(1)
                       : Ordinal::single(ord_mul(a.leading_exponent(), limit), 1);
    Ordinal fin_part = fin == 0 ? Ordinal::finite(1) : pow_finite_exponent(a, fin);
    return ord_mul(head, fin_part);
}

Ordinal ord_sup(std::span<const Ordinal> xs) {
    if (xs.empty()) throw Error("EmptyFamily", "sup of an empty family");
    Ordinal best = xs[0];
    for (const Ordinal& x : xs.subspan(1))
        if (ord_cmp(best, x) == std::strong_ordering::less) best = x;
    return best;
}

cardinal::Cardinal ord_cardinality(const Ordinal& a) {
    if (a.is_finite()) return cardinal::Cardinal::finite(a.finite_value());
    return cardinal::Cardinal::aleph(0);
}

WellOrderExpr WellOrderExpr::fin(Int n) {
    if (n < 0) throw Error("NonCanonical", "Fin count must be nonnegative");
    WellOrderExpr e;
    e.kind_ = Kind::fin;
    e.n_ = std::move(n);
    return e;
}

WellOrderExpr WellOrderExpr::omega() {
    WellOrderExpr e;
    e.kind_ = Kind::omega;
    return e;
}

WellOrderExpr WellOrderExpr::concat(WellOrderExpr left, WellOrderExpr right) {
    WellOrderExpr e;
    e.kind_ = Kind::concat;
    e.l_ = std::make_shared<const WellOrderExpr>(std::move(left));
    e.r_ = std::make_shared<const WellOrderExpr>(std::move(right));
    return e;
}

WellOrderExpr WellOrderExpr::lex_prod(WellOrderExpr base, WellOrderExpr times) {
    WellOrderExpr e;
    e.kind_ = Kind::lex_prod;
    e.l_ = std::make_shared<const WellOrderExpr>(std::move(base));
    e.r_ = std::make_shared<const WellOrderExpr>(std::move(times));
    return e;
}

Ordinal order_type(const WellOrderExpr& e) {
    switch (e.kind()) {
        case WellOrderExpr::Kind::fin: return Ordinal::finite(e.count());
        case WellOrderExpr::Kind::omega: return Ordinal::omega();
        case WellOrderExpr::Kind::concat:
            return ord_add(order_type(e.left()), order_type(e.right()));
        case WellOrderExpr::Kind::lex_prod:
            return ord_mul(order_type(e.left()), order_type(e.right()));
    }
    throw Error("NonCanonical", "unreachable");
}

}  // namespace aleph::ordinal
