#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <utility>

namespace aleph {

// Exact arithmetic everywhere. No floating point in this library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// Least nonnegative residue of a modulo n (n >= 1).
inline Int mod_floor(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0.
struct ExtGcd {
    Int g, x, y;
};

inline ExtGcd ext_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = std::exchange(b, r);
        Int nx = x0 - q * x1;
        Int ny = y0 - q * y1;
        x0 = std::exchange(x1, nx);
        y0 = std::exchange(y1, ny);
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    return {a, x0, y0};
}

// Inverse of a modulo n when gcd(a, n) = 1; caller checks unit-ness first.
inline Int mod_inverse(const Int& a, const Int& n) {
    ExtGcd e = ext_gcd(mod_floor(a, n), n);
    return mod_floor(e.x, n);
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

inline Int pow_int(const Int& base, std::uint64_t exp) {
    Int result = 1, b = base;
    while (exp != 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

}  // namespace aleph
