#pragma once

// Independent oracles for the test and acceptance suites. Nothing here
// shares algorithm code with the library implementations it checks.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "aleph/matrix.hpp"
#include "aleph/numeric.hpp"
#include "aleph/ordinal.hpp"

namespace oracle {

using aleph::Int;
using aleph::Mat;

// ---------------------------------------------------------------------------
// Coded well-orders below w^3 as block words. A word is the left-to-right
// concatenation of blocks: Fin(n) is n consecutive points, W a copy of the
// naturals, W2 a copy of omega^2 (pairs of naturals, second coordinate
// first). Each normalization rewrite is a concrete order isomorphism:
//   Fin(a) ++ Fin(b) = Fin(a+b)   relabeling
//   X ++ Y           = Y          when X has strictly lower limit rank than Y
//                                 (finite before a copy of N shifts away;
//                                  omega before omega^2 is the first column)
// so the canonical form is W2^c2 ++ W^c1 ++ Fin(c0).
// ---------------------------------------------------------------------------

struct CodedOrder {
    enum class Block { fin, omega, omega_sq };
    // (kind, count): count is the point count for fin blocks, 1 otherwise.
    std::vector<std::pair<Block, Int>> blocks;

    static CodedOrder fin(Int n) {
        CodedOrder c;
        if (n > 0) c.blocks.push_back({Block::fin, std::move(n)});
        return c;
    }
    static CodedOrder omega() {
        CodedOrder c;
        c.blocks.push_back({Block::omega, 1});
        return c;
    }
};

inline int limit_rank(CodedOrder::Block b) {
    switch (b) {
        case CodedOrder::Block::fin: return 0;
        case CodedOrder::Block::omega: return 1;
        case CodedOrder::Block::omega_sq: return 2;
    }
    return 0;
}

inline CodedOrder normalize(CodedOrder c) {
    std::vector<std::pair<CodedOrder::Block, Int>> out;
    for (auto& blk : c.blocks) {
        // Absorb everything to the left with strictly smaller limit rank.
        while (!out.empty() && limit_rank(out.back().first) < limit_rank(blk.first))
            out.pop_back();
        if (!out.empty() && out.back().first == CodedOrder::Block::fin &&
            blk.first == CodedOrder::Block::fin)
            out.back().second += blk.second;
        else
            out.push_back(blk);
    }
    c.blocks = std::move(out);
    return c;
}

inline CodedOrder concat(const CodedOrder& a, const CodedOrder& b) {
    CodedOrder c = a;
    c.blocks.insert(c.blocks.end(), b.blocks.begin(), b.blocks.end());
    return normalize(c);
}

// omega-many copies of a word laid end to end:
//   empty            -> empty
//   purely finite    -> W      (n * omega = omega, pairing (copy, point))
//   contains W only  -> W2     ((w*k + m) * omega = omega^2)
// A word containing W2 would land at omega^3; out of this oracle's range.
inline CodedOrder omega_copies(const CodedOrder& a) {
    CodedOrder out;
    if (a.blocks.empty()) return out;
    int top = 0;
    for (const auto& blk : a.blocks) top = std::max(top, limit_rank(blk.first));
    if (top == 2) throw std::runtime_error("oracle range exceeded (omega^3)");
    out.blocks.push_back({top == 0 ? CodedOrder::Block::omega : CodedOrder::Block::omega_sq, 1});
    return out;
}

inline CodedOrder n_copies(const CodedOrder& a, const Int& n) {
    CodedOrder out;
    for (Int i = 0; i < n; ++i) out = concat(out, a);
    return out;
}

// a * b = concatenation of a-copies shaped like b, block by block.
inline CodedOrder product(const CodedOrder& a, const CodedOrder& b) {
    CodedOrder out;
    for (const auto& [kind, count] : b.blocks) {
        switch (kind) {
            case CodedOrder::Block::fin: out = concat(out, n_copies(a, count)); break;
            case CodedOrder::Block::omega: out = concat(out, omega_copies(a)); break;
            case CodedOrder::Block::omega_sq:
                out = concat(out, omega_copies(omega_copies(a)));
                break;
        }
    }
    return out;
}

// Canonical triple (c2, c1, c0) of a normalized word.
struct OrderTriple {
    Int c2 = 0, c1 = 0, c0 = 0;
    bool operator==(const OrderTriple&) const = default;
    bool operator<(const OrderTriple& o) const {
        if (c2 != o.c2) return c2 < o.c2;
        if (c1 != o.c1) return c1 < o.c1;
        return c0 < o.c0;
    }
    bool operator>(const OrderTriple& o) const { return o < *this; }
};

inline OrderTriple triple(const CodedOrder& c) {
    OrderTriple t;
    for (const auto& [kind, count] : normalize(c).blocks) {
        switch (kind) {
            case CodedOrder::Block::omega_sq: t.c2 += 1; break;
            case CodedOrder::Block::omega: t.c1 += 1; break;
            case CodedOrder::Block::fin: t.c0 += count; break;
        }
    }
    return t;
}

// Decode a CNF ordinal known to lie below w^3 into the same triple space.
inline OrderTriple triple_of_ordinal(const aleph::ordinal::Ordinal& o) {
    using aleph::ordinal::Ordinal;
    OrderTriple t;
    for (const auto& [exp, coeff] : o.terms()) {
        if (exp.is_zero())
            t.c0 = coeff;
        else if (exp == Ordinal::finite(1))
            t.c1 = coeff;
        else if (exp == Ordinal::finite(2))
            t.c2 = coeff;
        else
            throw std::runtime_error("ordinal outside the oracle range");
    }
    return t;
}


// ---------------------------------------------------------------------------
// Explicit coded well-orders below w^2: concrete element codes, a total
// comparison predicate, and a structural immediate-successor function. A
// sorted window of such an order (all elements with coordinates < W) splits
// into successor-runs; each run of size >= W is one truncated omega block
// (possibly with a finite prefix glued on by the successor function), and a
// shorter final run is the finite tail. That reads off the order type
// w * c1 + c0 directly from the explicit order, independently of both the
// CNF implementation and the block-word rewrites above.
// ---------------------------------------------------------------------------

using Code = std::vector<long long>;

struct ExplicitOrder {
    std::function<bool(const Code&, const Code&)> less;
    std::function<std::optional<Code>(const Code&)> succ;
    std::function<std::vector<Code>(long long)> window;
    std::optional<Code> min;
    std::optional<Code> max;  // absent when the order is empty or ends in a limit
};

// Canonical carrier of w * a + b: pairs (i, n) for i < a, n in N, then tail
// points (a, 0..b-1); ordered lexicographically.
inline ExplicitOrder explicit_canonical(long long a, long long b) {
    ExplicitOrder o;
    o.less = [](const Code& x, const Code& y) { return x < y; };
    o.succ = [a, b](const Code& x) -> std::optional<Code> {
        if (x[0] < a) return Code{x[0], x[1] + 1};
        if (x[1] + 1 < b) return Code{x[0], x[1] + 1};
        return std::nullopt;
    };
    o.window = [a, b](long long w) {
        std::vector<Code> out;
        for (long long i = 0; i < a; ++i)
            for (long long n = 0; n < w; ++n) out.push_back({i, n});
        for (long long j = 0; j < b; ++j) out.push_back({a, j});
        return out;
    };
    if (a > 0 || b > 0) o.min = Code{0, 0};
    if (b > 0) o.max = Code{a, b - 1};
    return o;
}

// All of A before all of B; codes are tagged with 0 or 1. The maximum of A
// (when it exists) hands its successor over to the minimum of B.
inline ExplicitOrder explicit_concat(ExplicitOrder A, ExplicitOrder B) {
    auto tag = [](int t, const Code& c) {
        Code out{t};
        out.insert(out.end(), c.begin(), c.end());
        return out;
    };
    auto untag = [](const Code& c) { return Code(c.begin() + 1, c.end()); };
    ExplicitOrder o;
    o.less = [A, B, untag](const Code& x, const Code& y) {
        if (x[0] != y[0]) return x[0] < y[0];
        return x[0] == 0 ? A.less(untag(x), untag(y)) : B.less(untag(x), untag(y));
    };
    o.succ = [A, B, tag, untag](const Code& x) -> std::optional<Code> {
        if (x[0] == 0) {
            if (auto s = A.succ(untag(x))) return tag(0, *s);
            if (B.min) return tag(1, *B.min);  // x was max(A)
            return std::nullopt;
        }
        if (auto s = B.succ(untag(x))) return tag(1, *s);
        return std::nullopt;
    };
    o.window = [A, B, tag](long long w) {
        std::vector<Code> out;
        for (const Code& c : A.window(w)) out.push_back(tag(0, c));
        for (const Code& c : B.window(w)) out.push_back(tag(1, c));
        return out;
    };
    if (A.min) o.min = tag(0, *A.min);
    else if (B.min) o.min = tag(1, *B.min);
    if (B.min) o.max = B.max ? std::optional<Code>(tag(1, *B.max)) : std::nullopt;
    else o.max = A.max ? std::optional<Code>(tag(0, *A.max)) : std::nullopt;
    return o;
}

// B-many copies of A: pairs (x, y) compared by the y coordinate first.
// Codes store [len(yc), yc..., xc...].
inline ExplicitOrder explicit_product(ExplicitOrder A, ExplicitOrder B) {
    auto pack = [](const Code& x, const Code& y) {
        Code out{static_cast<long long>(y.size())};
        out.insert(out.end(), y.begin(), y.end());
        out.insert(out.end(), x.begin(), x.end());
        return out;
    };
    auto ypart = [](const Code& c) { return Code(c.begin() + 1, c.begin() + 1 + c[0]); };
    auto xpart = [](const Code& c) { return Code(c.begin() + 1 + c[0], c.end()); };
    ExplicitOrder o;
    if (!A.min || !B.min) {  // empty product
        o.less = [](const Code&, const Code&) { return false; };
        o.succ = [](const Code&) -> std::optional<Code> { return std::nullopt; };
        o.window = [](long long) { return std::vector<Code>{}; };
        return o;
    }
    o.less = [A, B, xpart, ypart](const Code& u, const Code& v) {
        Code yu = ypart(u), yv = ypart(v);
        if (B.less(yu, yv)) return true;
        if (B.less(yv, yu)) return false;
        return A.less(xpart(u), xpart(v));
    };
    o.succ = [A, B, pack, xpart, ypart](const Code& u) -> std::optional<Code> {
        if (auto sx = A.succ(xpart(u))) return pack(*sx, ypart(u));
        // x is max(A): step to the next copy.
        if (auto sy = B.succ(ypart(u))) return pack(*A.min, *sy);
        return std::nullopt;
    };
    o.window = [A, B, pack](long long w) {
        std::vector<Code> out;
        for (const Code& y : B.window(w))
            for (const Code& x : A.window(w)) out.push_back(pack(x, y));
        return out;
    };
    o.min = pack(*A.min, *B.min);
    if (A.max && B.max) o.max = pack(*A.max, *B.max);
    return o;
}

// Read w * c1 + c0 off a sorted window. Requires the order type to be below
// w^2 and W to exceed every finite tail in play.
inline OrderTriple explicit_window_triple(const ExplicitOrder& o, long long w) {
    std::vector<Code> elems = o.window(w);
    std::sort(elems.begin(), elems.end(), o.less);
    OrderTriple t;
    std::size_t run = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        ++run;
        bool last = i + 1 == elems.size();
        bool breaks = last;
        if (!last) {
            auto s = o.succ(elems[i]);
            breaks = !s || !(*s == elems[i + 1]);
        }
        if (!breaks) continue;
        if (static_cast<long long>(run) >= w) {
            t.c1 += 1;  // a truncated omega block (plus any glued finite prefix)
        } else if (last) {
            t.c0 = static_cast<long long>(run);  // the finite tail
        } else {
            throw std::runtime_error("window too small for this order");
        }
        run = 0;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Integer lattice utilities (row Hermite form by plain gcd row reduction;
// no Smith machinery involved).
// ---------------------------------------------------------------------------

inline Mat<Int> hermite_rows(Mat<Int> a) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        // gcd out the column below `row`
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            while (a(i, col) != 0) {
                if (a(row, col) == 0) {
                    a.swap_rows(row, i);
                    continue;
                }
                Int q = a(i, col) / a(row, col);
                a.add_row(i, row, -q);
                if (a(i, col) != 0) a.swap_rows(row, i);
            }
        }
        if (a(row, col) == 0) continue;
        if (a(row, col) < 0) a.negate_row(row);
        for (std::size_t i = 0; i < row; ++i) {
            Int q = a(i, col) / a(row, col);
            if (a(i, col) - q * a(row, col) < 0) q -= 1;  // floor for canonical range
            a.add_row(i, row, -q);
        }
        ++row;
    }
    Mat<Int> out(row, a.cols());
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

inline bool same_row_lattice(const Mat<Int>& a, const Mat<Int>& b) {
    return hermite_rows(a) == hermite_rows(b);
}

// Canonical representative of x modulo the row lattice of a full-rank
// Hermite form (reduce top-down at each pivot).
inline std::vector<Int> reduce_mod_lattice(const Mat<Int>& h, std::vector<Int> x) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
        if (h(r, col) == 0) continue;
        Int q = x[col] / h(r, col);
        if (x[col] - q * h(r, col) < 0) q -= 1;
        for (std::size_t j = 0; j < h.cols(); ++j) x[j] -= q * h(r, j);
        ++r;
    }
    return x;
}

// Brute-force coset enumeration of Z^n modulo the row lattice of `rel` by
// breadth-first closure under the unit steps +-e_i. Requires a finite
// quotient; stops with an error past `bound` cosets.
inline std::vector<std::vector<Int>> enumerate_cosets(const Mat<Int>& rel, std::size_t bound) {
    Mat<Int> h = hermite_rows(rel);
    if (h.rows() != h.cols()) throw std::runtime_error("quotient is infinite");
    const std::size_t n = h.cols();
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> frontier{reduce_mod_lattice(h, std::vector<Int>(n, 0))};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<Int>> next;
        for (const auto& x : frontier) {
            for (std::size_t i = 0; i < n; ++i) {
                for (int sgn : {1, -1}) {
                    std::vector<Int> y = x;
                    y[i] += sgn;
                    y = reduce_mod_lattice(h, std::move(y));
                    if (seen.insert(y).second) {
                        if (seen.size() > bound) throw std::runtime_error("too many cosets");
                        next.push_back(std::move(y));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

// Order of a coset element by repeated addition.
inline Int coset_element_order(const Mat<Int>& h, const std::vector<Int>& x) {
    std::vector<Int> zero(x.size(), 0);
    std::vector<Int> acc = zero;
    for (Int k = 1;; ++k) {
        for (std::size_t i = 0; i < x.size(); ++i) acc[i] += x[i];
        acc = reduce_mod_lattice(h, std::move(acc));
        if (acc == zero) return k;
        if (k > 1000000) throw std::runtime_error("element order too large");
    }
}

// gcd of all i x i minors (0 when every minor vanishes).
inline Int determinantal_divisor(const Mat<Int>& a, std::size_t i);

namespace detail {

inline void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                         std::size_t start, const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == k) {
        f(cur);
        return;
    }
    for (std::size_t v = start; v + (k - cur.size()) <= n; ++v) {
        cur.push_back(v);
        combinations(n, k, cur, v + 1, f);
        cur.pop_back();
    }
}

// Cofactor-expansion determinant; fine for the tiny minors used here.
inline Int small_det(const Mat<Int>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Mat<Int> sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        Int term = m(0, j) * small_det(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace detail

inline Int determinantal_divisor(const Mat<Int>& a, std::size_t i) {
    Int g = 0;
    std::vector<std::size_t> rows, cols;
    detail::combinations(a.rows(), i, rows, 0, [&](const std::vector<std::size_t>& rsel) {
        detail::combinations(a.cols(), i, cols, 0, [&](const std::vector<std::size_t>& csel) {
            Mat<Int> minor(i, i);
            for (std::size_t r = 0; r < i; ++r)
                for (std::size_t c = 0; c < i; ++c) minor(r, c) = a(rsel[r], csel[c]);
            g = aleph::gcd(g, detail::small_det(minor));
        });
    });
    return aleph::abs(g);
}

}  // namespace oracle
