#include "aleph/abgroup.hpp"

#include <algorithm>
#include <map>

#include "aleph/error.hpp"

namespace aleph::abgroup {

namespace {

// Position of the pivot candidate: smallest nonzero |entry| of D[s.., s..],
// ties by lowest row then lowest column. Returns false when the submatrix
// is zero.
bool find_pivot(const Mat<Int>& D, std::size_t s, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = s; i < D.rows(); ++i)
        for (std::size_t j = s; j < D.cols(); ++j) {
            if (D(i, j) == 0) continue;
            Int a = abs(D(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const PresentationMatrix& A) {
    const std::size_t t = A.rows(), n = A.cols();
    SmithForm s;
    s.U = Mat<Int>::identity(t);
    s.V = Mat<Int>::identity(n);
    s.D = A;
    Mat<Int>& D = s.D;

    const std::size_t steps = std::min(t, n);
    for (std::size_t k = 0; k < steps; ++k) {
        // Each round re-selects the smallest pivot and reduces against it;
        // leftover remainders are strictly smaller and become the next
        // round's pivot, so the pivot value strictly shrinks until the
        // column and row clear exactly.
        for (bool settled = false; !settled;) {
            std::size_t pr = k, pc = k;
            if (!find_pivot(D, k, pr, pc)) {
                settled = true;
                break;
            }
            D.swap_rows(k, pr);
            s.U.swap_rows(k, pr);
            D.swap_cols(k, pc);
            s.V.swap_cols(k, pc);

            bool remainder = false;
            for (std::size_t i = k + 1; i < t; ++i) {
                if (D(i, k) == 0) continue;
                Int q = D(i, k) / D(k, k);
                if (q != 0) {
                    D.add_row(i, k, -q);
                    s.U.add_row(i, k, -q);
                }
                remainder |= D(i, k) != 0;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (D(k, j) == 0) continue;
                Int q = D(k, j) / D(k, k);
                if (q != 0) {
                    D.add_col(j, k, -q);
                    s.V.add_col(j, k, -q);
                }
                remainder |= D(k, j) != 0;
            }
            if (remainder) continue;

            // Pivot must divide the rest of the submatrix; pulling an
            // offending row up exposes its entry to the row reduction.
            settled = true;
            for (std::size_t i = k + 1; i < t && settled; ++i)
                for (std::size_t j = k + 1; j < n && settled; ++j)
                    if (D(i, j) % D(k, k) != 0) {
                        D.add_row(k, i, 1);
                        s.U.add_row(k, i, 1);
                        settled = false;
                    }
        }

        if (D(k, k) < 0) {
            D.negate_row(k);
            s.U.negate_row(k);
        }
    }

    s.diag.resize(steps);
    for (std::size_t k = 0; k < steps; ++k) s.diag[k] = D(k, k);
    s.rank = 0;
    while (s.rank < steps && s.diag[s.rank] != 0) ++s.rank;
    return s;
}

AbGroupClass classify(const PresentationMatrix& A) {
    SmithForm s = smith_normal_form(A);
    AbGroupClass c;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.diag[i] > 1) c.torsion.push_back(s.diag[i]);
    c.free_rank = A.cols() - s.rank;
    return c;
}

bool are_isomorphic(const PresentationMatrix& A, const PresentationMatrix& B) {
    return classify(A) == classify(B);
}

namespace {

const Int kFactorBound = Int(1) << 40;

// Trial-division factorization; valid for m <= 2^40.
std::map<Int, unsigned> factorize(Int m) {
    std::map<Int, unsigned> out;
    for (Int p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            ++out[p];
            m /= p;
        }
    if (m > 1) ++out[m];
    return out;
}

}  // namespace

std::vector<Int> elementary_divisors(const AbGroupClass& c) {
    std::vector<Int> out;
    for (const Int& m : c.torsion) {
        if (m <= 1) throw Error("Malformed", "torsion entries must exceed 1");
        if (m > kFactorBound)
            throw Error("FactorTooLarge", m.str() + " exceeds the trial-division bound 2^40");
        for (const auto& [p, e] : factorize(m)) out.push_back(pow_int(p, e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> invariant_factors_from_elementary(std::vector<Int> prime_powers) {
    // Bucket the powers per prime, largest first; the k-th invariant factor
    // (from the top) is the product of every prime's k-th largest power.
    std::map<Int, std::vector<Int>> per_prime;
    for (const Int& q : prime_powers) {
        auto f = factorize(q);
        if (f.size() != 1) throw Error("Malformed", q.str() + " is not a prime power");
        per_prime[f.begin()->first].push_back(q);
    }
    std::size_t layers = 0;
    for (auto& [p, qs] : per_prime) {
        std::sort(qs.begin(), qs.end(), std::greater<>());
        layers = std::max(layers, qs.size());
    }
    std::vector<Int> factors(layers, Int(1));
    for (auto& [p, qs] : per_prime)
        for (std::size_t i = 0; i < qs.size(); ++i) factors[i] *= qs[i];
    std::reverse(factors.begin(), factors.end());  // ascending divisibility chain
    return factors;
}

AbGroupClass cyclic_classify(const CyclicOrder& order) {
    AbGroupClass c;
    if (order.infinite) {
        c.free_rank = 1;
        return c;
    }
    if (order.modulus < 1) throw Error("Malformed", "finite cyclic order must be >= 1");
    if (order.modulus > 1) c.torsion.push_back(order.modulus);
    return c;
}

ElementOrder element_order(const Int& modulus, const Int& a) {
    if (modulus < 0) throw Error("Malformed", "modulus must be >= 0");
    if (modulus == 0) {
        // The group Z: everything but 0 has infinite order.
        if (a == 0) return {false, 1};
        return {true, 0};
    }
    return {false, modulus / gcd(a, modulus)};
}

namespace {

const Int kQuotientBound = 100000;

}  // namespace

std::vector<std::vector<Int>> quotient_enumerate(const PresentationMatrix& A) {
    AbGroupClass c = classify(A);
    if (c.free_rank > 0)
        throw Error("InfiniteQuotient",
                    "free rank " + std::to_string(c.free_rank) + " makes the quotient infinite");
    Int order = 1;
    for (const Int& m : c.torsion) order *= m;
    if (order > kQuotientBound)
        throw Error("TooLarge", "quotient order " + order.str() + " exceeds the bound " +
                                    kQuotientBound.str());
    std::vector<std::vector<Int>> reps;
    reps.reserve(order.convert_to<std::size_t>());
    std::vector<Int> cur(c.torsion.size(), Int(0));
    for (Int count = 0; count < order; ++count) {
        reps.push_back(cur);
        for (std::size_t i = cur.size(); i-- > 0;) {
            ++cur[i];
            if (cur[i] < c.torsion[i]) break;
            cur[i] = 0;
        }
    }
    return reps;
}

std::vector<Int> quotient_add(const AbGroupClass& c, const std::vector<Int>& a,
                              const std::vector<Int>& b) {
    if (a.size() != c.torsion.size() || b.size() != c.torsion.size())
        throw Error("Malformed", "representative length does not match the torsion list");
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_floor(a[i] + b[i], c.torsion[i]);
    return out;
}

HomStructure hom_kernel_image(const Mat<Int>& M) {
    SmithForm s = smith_normal_form(M);
    const std::size_t n = M.cols(), k = M.rows();

    HomStructure h;
    h.image_rank = s.rank;

    // M * (V e_j) = U^-1 * D e_j = 0 exactly at the zero diagonal positions,
    // so those columns of V form a kernel basis.
    h.kernel_basis = Mat<Int>(n - s.rank, n);
    for (std::size_t j = s.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) h.kernel_basis(j - s.rank, i) = s.V(i, j);

    // Z^k / im M has invariant factors d_i and free rank k - r.
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.diag[i] > 1) h.cokernel.torsion.push_back(s.diag[i]);
    h.cokernel.free_rank = k - s.rank;

    // First isomorphism theorem, executably: Z^n / ker M must classify as a
    // free group whose rank is the image rank.
    AbGroupClass domain_mod_kernel = classify(h.kernel_basis);
    h.first_iso_ok =
        domain_mod_kernel.torsion.empty() && domain_mod_kernel.free_rank == h.image_rank;
    return h;
}

}  // namespace aleph::abgroup
