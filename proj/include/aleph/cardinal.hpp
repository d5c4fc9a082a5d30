#pragma once

#include <cstdint>
#include <string>

#include "aleph/error.hpp"
#include "aleph/numeric.hpp"

namespace aleph::cardinal {

// Symbolic cardinal: an exact finite value, an aleph, or a beth. beth(0) is
// normalized to aleph(0) on construction, so a stored beth always has
// index >= 1.
class Cardinal {
public:
    enum class Kind { finite, aleph, beth };

    static Cardinal finite(Int n) {
        if (n < 0) throw Error("Malformed", "finite cardinal must be nonnegative");
        Cardinal c;
        c.kind_ = Kind::finite;
        c.value_ = std::move(n);
        return c;
    }
    static Cardinal aleph(std::uint64_t k) {
        Cardinal c;
        c.kind_ = Kind::aleph;
        c.index_ = k;
        return c;
    }
    static Cardinal beth(std::uint64_t k) {
        if (k == 0) return aleph(0);
        Cardinal c;
        c.kind_ = Kind::beth;
        c.index_ = k;
        return c;
    }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::finite; }
    bool is_infinite() const noexcept { return kind_ != Kind::finite; }
    const Int& value() const { return value_; }          // finite only
    std::uint64_t index() const { return index_; }       // aleph/beth only

    bool operator==(const Cardinal&) const = default;

    std::string str() const;

private:
    Kind kind_ = Kind::finite;
    Int value_ = 0;
    std::uint64_t index_ = 0;
};

// Which extra axiom the evaluation assumes. base = ZFC alone; ch adds
// 2^aleph(0) = aleph(1); gch identifies beth(k) = aleph(k) for every k.
enum class AssumptionMode { base, ch, gch };

// Four-valued comparison; undetermined encodes independence from the
// assumed axioms.
enum class CardCmp { less, equal, greater, undetermined };

CardCmp card_cmp(const Cardinal& a, const Cardinal& b, AssumptionMode m);

// Sum. Finite inputs are added exactly; if either operand is infinite the
// result is the larger operand under the provable weak order (aleph(j) <=
// aleph(k), beth(j) <= beth(k), aleph(j) <= beth(k), all for j <= k). Throws
// IncomparableOperands when neither side provably dominates.
Cardinal card_add(const Cardinal& a, const Cardinal& b, AssumptionMode m);

// Product. anything * 0 = 0; finite * finite exact; otherwise the weak-order
// maximum, as for card_add.
Cardinal card_mul(const Cardinal& a, const Cardinal& b, AssumptionMode m);

// 2^a. Finite(n) -> Finite(2^n); beth(k) -> beth(k+1); aleph(0) -> beth(1)
// in base mode and aleph(1) under CH/GCH; aleph(k >= 1) -> aleph(k+1) under
// GCH only, otherwise the value has no name in this type and Unrepresentable
// is thrown.
Cardinal card_pow2(const Cardinal& a, AssumptionMode m);

std::string cmp_str(CardCmp c);

}  // namespace aleph::cardinal
