#include "aleph/ringpoly.hpp"

#include <algorithm>

namespace aleph::ringpoly {

Rat Ring::canon(const Rat& a) const {
    if (kind_ == RingKind::rationals) return a;
    if (denominator(a) != 1)
        throw Error("Malformed", "non-integral value " + a.str() + " in " + str());
    if (kind_ == RingKind::integers) return a;
    return Rat(mod_floor(numerator(a), n_));
}

std::optional<Rat> Ring::inv(const Rat& a) const {
    Rat c = canon(a);
    switch (kind_) {
        case RingKind::rationals:
            if (c == 0) return std::nullopt;
            return Rat(1) / c;
        case RingKind::integers:
            if (c == 1 || c == -1) return c;
            return std::nullopt;
        case RingKind::mod_n:
        case RingKind::prime_field: {
            Int v = numerator(c);
            if (gcd(v, n_) != 1) return std::nullopt;
            return Rat(mod_inverse(v, n_));
        }
    }
    return std::nullopt;
}

std::string Ring::str() const {
    switch (kind_) {
        case RingKind::integers: return "Z";
        case RingKind::rationals: return "Q";
        case RingKind::mod_n: return "Z/" + n_.str();
        case RingKind::prime_field: return "GF(" + n_.str() + ")";
    }
    return "";
}

Polynomial::Polynomial(Ring ring, std::vector<Rat> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (Rat& c : coeffs_) c = ring_.canon(c);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Ring& r, const Rat& c, std::size_t k) {
    std::vector<Rat> cs(k + 1, Rat(0));
    cs[k] = c;
    return Polynomial(r, std::move(cs));
}

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
    if (!(a == b))
        throw Error("RingMismatch", "operands live in " + a.str() + " and " + b.str());
}

}  // namespace

Degree poly_deg(const Polynomial& f) {
    if (f.is_zero()) return Degree::neg_infinity();
    return Degree::of(static_cast<long long>(f.coeffs().size()) - 1);
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    std::vector<Rat> out(std::max(f.coeffs().size(), g.coeffs().size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) + g.coeff(i);
    return Polynomial(f.ring(), std::move(out));
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    std::vector<Rat> out(std::max(f.coeffs().size(), g.coeffs().size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) - g.coeff(i);
    return Polynomial(f.ring(), std::move(out));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    if (f.is_zero() || g.is_zero()) return Polynomial::zero(f.ring());
    std::vector<Rat> out(f.coeffs().size() + g.coeffs().size() - 1, Rat(0));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            out[i + j] += f.coeffs()[i] * g.coeffs()[j];
    return Polynomial(f.ring(), std::move(out));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    if (!f.ring().is_field())
        throw Error("Malformed", "polynomial division needs a field, got " + f.ring().str());
    if (g.is_zero()) throw Error("Malformed", "division by the zero polynomial");
    const Ring& R = f.ring();
    Rat lead_inv = *R.inv(g.leading());
    std::vector<Rat> rem = f.coeffs();
    std::size_t dg = g.coeffs().size() - 1;
    if (rem.size() < g.coeffs().size()) return {Polynomial::zero(R), f};
    std::vector<Rat> quot(rem.size() - dg, Rat(0));
    for (std::size_t i = rem.size(); i-- > dg;) {
        Rat c = R.canon(rem[i]);
        if (c == 0) continue;
        Rat q = R.mul(c, lead_inv);
        quot[i - dg] = q;
        for (std::size_t j = 0; j <= dg; ++j)
            rem[i - dg + j] = R.sub(rem[i - dg + j], q * g.coeffs()[j]);
    }
    return {Polynomial(R, std::move(quot)), Polynomial(R, std::move(rem))};
}

namespace {

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    Rat inv = *f.ring().inv(f.leading());
    std::vector<Rat> cs = f.coeffs();
    for (Rat& c : cs) c = f.ring().mul(c, inv);
    return Polynomial(f.ring(), std::move(cs));
}

}  // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    if (!f.ring().is_field())
        throw Error("Malformed", "polynomial gcd needs a field, got " + f.ring().str());
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).second;
        a = std::exchange(b, r);
    }
    return make_monic(a);
}

TruncatedSeries::TruncatedSeries(Ring ring, std::size_t precision, std::vector<Rat> coeffs)
    : ring_(std::move(ring)), precision_(precision), coeffs_(std::move(coeffs)) {
    if (precision_ < 1) throw Error("Malformed", "series precision must be >= 1");
    if (coeffs_.size() != precision_)
        throw Error("Malformed", "series must carry exactly " + std::to_string(precision_) +
                                     " coefficients, got " + std::to_string(coeffs_.size()));
    for (Rat& c : coeffs_) c = ring_.canon(c);
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t precision) {
    std::vector<Rat> cs(precision, Rat(0));
    for (std::size_t i = 0; i < precision; ++i) cs[i] = p.coeff(i);
    return TruncatedSeries(p.ring(), precision, std::move(cs));
}

namespace {

void require_compatible(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!(f.ring() == g.ring()))
        throw Error("RingMismatch",
                    "operands live in " + f.ring().str() + " and " + g.ring().str());
    if (f.precision() != g.precision())
        throw Error("PrecisionMismatch", "series precisions " + std::to_string(f.precision()) +
                                             " and " + std::to_string(g.precision()) + " differ");
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_compatible(f, g);
    std::vector<Rat> out(f.precision());
    for (std::size_t i = 0; i < f.precision(); ++i) out[i] = f.coeffs()[i] + g.coeffs()[i];
    return TruncatedSeries(f.ring(), f.precision(), std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_compatible(f, g);
    std::vector<Rat> out(f.precision(), Rat(0));
    for (std::size_t i = 0; i < f.precision(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; i + j < f.precision(); ++j)
            out[i + j] += f.coeffs()[i] * g.coeffs()[j];
    }
    return TruncatedSeries(f.ring(), f.precision(), std::move(out));
}

namespace {

const Int kModulusBound = 1000000;

void require_small_modulus(const Int& n) {
    if (n < 2) throw Error("Malformed", "modulus must be >= 2");
    if (n > kModulusBound)
        throw Error("TooLarge", "modulus " + n.str() + " exceeds the bound " + kModulusBound.str());
}

}  // namespace

UnitsAndZeroDivisors units_and_zero_divisors(const Int& n) {
    require_small_modulus(n);
    UnitsAndZeroDivisors out;
    for (Int a = 1; a < n; ++a) {
        Int g = gcd(a, n);
        if (g == 1) {
            out.units.push_back(a);
        } else {
            out.zero_divisors.push_back(a);
            out.witnesses.emplace_back(a, n / g);  // a * (n/g) = n * (a/g) = 0 mod n
        }
    }
    return out;
}

FieldCheck finite_domain_to_field(const Int& n) {
    require_small_modulus(n);
    for (Int a = 2; a * a <= n; ++a)
        if (n % a == 0) return std::make_pair(a, n / a);  // a * (n/a) = 0 mod n
    // No zero divisors: x -> a*x is injective, so scanning its multiples must
    // hit 1 (the pigeonhole argument made executable).
    std::vector<Int> table(n.convert_to<std::size_t>(), Int(0));
    for (Int a = 1; a < n; ++a) {
        Int x = 1;
        while (mod_floor(a * x, n) != 1) {
            ++x;
            if (x >= n) throw Error("Malformed", "scan failed; modulus is not prime");
        }
        table[a.convert_to<std::size_t>()] = x;
    }
    return table;
}

Int ideal_principal_generator(const IdealZ& ideal) {
    if (ideal.generators.empty()) throw Error("Malformed", "ideal needs at least one generator");
    Int g = 0;
    for (const Int& a : ideal.generators) g = gcd(g, a);
    return g;  // gcd is already nonnegative
}

Polynomial ideal_principal_generator(const IdealFx& ideal) {
    if (ideal.generators.empty()) throw Error("Malformed", "ideal needs at least one generator");
    if (!ideal.field.is_field())
        throw Error("Malformed", "polynomial ideals require a field, got " + ideal.field.str());
    Polynomial g = Polynomial::zero(ideal.field);
    for (const Polynomial& f : ideal.generators) {
        require_same_ring(f.ring(), ideal.field);
        g = poly_gcd(g, f);
    }
    return g;
}

bool ideal_member(const Int& a, const IdealZ& ideal) {
    Int g = ideal_principal_generator(ideal);
    if (g == 0) return a == 0;
    return a % g == 0;
}

bool ideal_member(const Polynomial& a, const IdealFx& ideal) {
    Polynomial g = ideal_principal_generator(ideal);
    if (g.is_zero()) return a.is_zero();
    return poly_divmod(a, g).second.is_zero();
}

namespace {

// Shared chain logic; divides(a, b) decides whether (b) contains (a), and
// associate(a, b) whether (a) = (b).
template <typename Ideal, typename Gen, typename Divides, typename Associate>
std::size_t stabilize(const std::vector<Ideal>& chain, Gen gen, Divides divides,
                      Associate associate) {
    if (chain.empty()) throw Error("Malformed", "empty chain");
    std::vector<decltype(gen(chain[0]))> gens;
    gens.reserve(chain.size());
    for (const Ideal& ideal : chain) gens.push_back(gen(ideal));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        if (!divides(gens[k + 1], gens[k]))
            throw Error("NotAscending", "ideal " + std::to_string(k) +
                                            " is not contained in ideal " + std::to_string(k + 1));
    if (chain.size() >= 2 && !associate(gens[chain.size() - 2], gens[chain.size() - 1]))
        throw Error("NotYetStationary", "the final two ideals still differ");
    std::size_t n = chain.size() - 1;
    while (n > 0 && associate(gens[n - 1], gens[n])) --n;
    return n;
}

}  // namespace

std::size_t acc_stabilize(const std::vector<IdealZ>& chain) {
    return stabilize(
        chain, [](const IdealZ& i) { return ideal_principal_generator(i); },
        [](const Int& a, const Int& b) { return a == 0 ? b == 0 : b % a == 0; },
        [](const Int& a, const Int& b) { return a == b; });
}

std::size_t acc_stabilize(const std::vector<IdealFx>& chain) {
    return stabilize(
        chain, [](const IdealFx& i) { return ideal_principal_generator(i); },
        [](const Polynomial& a, const Polynomial& b) {
            if (a.is_zero()) return b.is_zero();
            return poly_divmod(b, a).second.is_zero();
        },
        [](const Polynomial& a, const Polynomial& b) { return a == b; });
}

std::vector<Int> maximal_ideals_modn(const Int& n) {
    require_small_modulus(n);
    std::vector<Int> out;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(mod_floor(p, n));
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(mod_floor(m, n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace aleph::ringpoly
