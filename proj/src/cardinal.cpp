#include "aleph/cardinal.hpp"

namespace aleph::cardinal {

std::string Cardinal::str() const {
    switch (kind_) {
        case Kind::finite: return value_.str();
        case Kind::aleph: return "aleph(" + std::to_string(index_) + ")";
        case Kind::beth: return "beth(" + std::to_string(index_) + ")";
    }
    return "";
}

std::string cmp_str(CardCmp c) {
    switch (c) {
        case CardCmp::less: return "less";
        case CardCmp::equal: return "equal";
        case CardCmp::greater: return "greater";
        case CardCmp::undetermined: return "undetermined";
    }
    return "";
}

namespace {

// Collapse beths that the mode identifies with alephs: all of them under
// GCH, beth(1) only under CH (beth(0) is already aleph(0) structurally).
Cardinal normalize(const Cardinal& c, AssumptionMode m) {
    if (c.kind() != Cardinal::Kind::beth) return c;
    if (m == AssumptionMode::gch) return Cardinal::aleph(c.index());
    if (m == AssumptionMode::ch && c.index() == 1) return Cardinal::aleph(1);
    return c;
}

CardCmp from_indices(std::uint64_t j, std::uint64_t k) {
    if (j < k) return CardCmp::less;
    if (j > k) return CardCmp::greater;
    return CardCmp::equal;
}

CardCmp flip(CardCmp c) {
    if (c == CardCmp::less) return CardCmp::greater;
    if (c == CardCmp::greater) return CardCmp::less;
    return c;
}

// Provable weak order a <= b on infinite cardinals after mode normalization.
// aleph(j) <= aleph(k) and beth(j) <= beth(k) for j <= k; aleph(j) <= beth(k)
// for j <= k; beth(j) <= aleph(k) is never provable (a surviving beth has
// index >= 1 and 2^aleph(j-1) can exceed any aleph).
bool weak_leq(const Cardinal& a, const Cardinal& b) {
    using K = Cardinal::Kind;
    if (a.kind() == K::beth && b.kind() == K::aleph) return false;
    return a.index() <= b.index();
}

}  // namespace

CardCmp card_cmp(const Cardinal& a0, const Cardinal& b0, AssumptionMode m) {
    Cardinal a = normalize(a0, m);
    Cardinal b = normalize(b0, m);
    using K = Cardinal::Kind;

    if (a.is_finite() && b.is_finite()) {
        if (a.value() < b.value()) return CardCmp::less;
        if (a.value() > b.value()) return CardCmp::greater;
        return CardCmp::equal;
    }
    // aleph(0) is the smallest infinite cardinal, so every finite cardinal
    // sits below every infinite one.
    if (a.is_finite()) return CardCmp::less;
    if (b.is_finite()) return CardCmp::greater;

    if (a.kind() == b.kind()) return from_indices(a.index(), b.index());
    if (a.kind() == K::beth) return flip(card_cmp(b, a, m));

    // a = aleph(j) vs b = beth(k >= 1). aleph(j) < aleph(k) <= beth(k) is
    // provable for j < k; at j >= k the axioms do not decide.
    if (a.index() < b.index()) return CardCmp::less;
    return CardCmp::undetermined;
}

namespace {

Cardinal weak_max(const Cardinal& a, const Cardinal& b, const char* op) {
    if (weak_leq(a, b)) return b;
    if (weak_leq(b, a)) return a;
    throw Error("IncomparableOperands",
                std::string(op) + " of " + a.str() + " and " + b.str() +
                    " has no provable dominant operand in this mode");
}

}  // namespace

Cardinal card_add(const Cardinal& a0, const Cardinal& b0, AssumptionMode m) {
    Cardinal a = normalize(a0, m);
    Cardinal b = normalize(b0, m);
    if (a.is_finite() && b.is_finite()) return Cardinal::finite(a.value() + b.value());
    if (a.is_finite()) return b;  // finite + infinite absorbs
    if (b.is_finite()) return a;
    return weak_max(a, b, "sum");
}

Cardinal card_mul(const Cardinal& a0, const Cardinal& b0, AssumptionMode m) {
    Cardinal a = normalize(a0, m);
    Cardinal b = normalize(b0, m);
    if (a.is_finite() && a.value() == 0) return a;
    if (b.is_finite() && b.value() == 0) return b;
    if (a.is_finite() && b.is_finite()) return Cardinal::finite(a.value() * b.value());
    if (a.is_finite()) return b;  // nonzero finite factor absorbs
    if (b.is_finite()) return a;
    return weak_max(a, b, "product");
}

Cardinal card_pow2(const Cardinal& a, AssumptionMode m) {
    using K = Cardinal::Kind;
    switch (a.kind()) {
        case K::finite: {
            if (a.value() > 1000000)
                throw Error("ResourceLimit", "2^" + a.value().str() + " is too large to materialize");
            return Cardinal::finite(pow_int(2, a.value().convert_to<std::uint64_t>()));
        }
        case K::beth:
            return Cardinal::beth(a.index() + 1);
        case K::aleph:
            if (a.index() == 0)
                return m == AssumptionMode::base ? Cardinal::beth(1) : Cardinal::aleph(1);
            if (m == AssumptionMode::gch) return Cardinal::aleph(a.index() + 1);
            throw Error("Unrepresentable",
                        "2^" + a.str() + " has no canonical name outside GCH");
    }
    throw Error("Malformed", "unreachable");
}

}  // namespace aleph::cardinal
