#pragma once

#include <string>
#include <variant>
#include <vector>

#include "aleph/matrix.hpp"
#include "aleph/numeric.hpp"

namespace aleph::abgroup {

// Integer matrix presenting a finitely generated abelian group: columns are
// generators of Z^n, rows are relations; the group is Z^n modulo the row
// lattice.
using PresentationMatrix = Mat<Int>;

// U * A * V = D with unimodular U, V; diagonal d_1 | d_2 | ... | d_r followed
// by zeros, all nonnegative.
struct SmithForm {
    Mat<Int> U, D, V;
    std::vector<Int> diag;  // min(rows, cols) entries, zeros included
    std::size_t rank = 0;   // number of nonzero diagonal entries
};

// Deterministic Smith normal form. Pivot rule: the nonzero entry of smallest
// absolute value in the remaining submatrix, ties broken by lowest row then
// lowest column.
SmithForm smith_normal_form(const PresentationMatrix& A);

// Invariant-factor classification: torsion m_1 | m_2 | ... | m_t (each > 1)
// plus the free rank.
struct AbGroupClass {
    std::vector<Int> torsion;
    std::size_t free_rank = 0;
    bool operator==(const AbGroupClass&) const = default;
};

AbGroupClass classify(const PresentationMatrix& A);

bool are_isomorphic(const PresentationMatrix& A, const PresentationMatrix& B);

// Prime-power refinement of the torsion list (sorted multiset). Throws
// FactorTooLarge past the trial-division bound 2^40.
std::vector<Int> elementary_divisors(const AbGroupClass& c);

// Inverse direction: prime powers back to the divisibility-chained invariant
// factors. Round-trips with elementary_divisors.
std::vector<Int> invariant_factors_from_elementary(std::vector<Int> prime_powers);

struct CyclicOrder {
    bool infinite = false;
    Int modulus = 0;  // m >= 1 when finite
};

// Z for the infinite case, Z/m for finite m (trivial when m = 1).
AbGroupClass cyclic_classify(const CyclicOrder& order);

struct ElementOrder {
    bool infinite = false;
    Int order = 0;
};

// Order of a in Z/m (m >= 1), or in Z when m = 0.
ElementOrder element_order(const Int& modulus, const Int& a);

// Canonical coset representatives of a finite quotient: mixed-radix tuples
// over the invariant factors, in lexicographic order. Throws InfiniteQuotient
// when the free rank is positive, TooLarge past 10^5 cosets.
std::vector<std::vector<Int>> quotient_enumerate(const PresentationMatrix& A);

// Reduction of a tuple into the canonical transversal; rep(a) + rep(b)
// reduces to rep(a + b) componentwise.
std::vector<Int> quotient_add(const AbGroupClass& c, const std::vector<Int>& a,
                              const std::vector<Int>& b);

// Kernel and cokernel data of the map Z^n -> Z^k given by a k x n matrix,
// with the executable first-isomorphism check: Z^n modulo the kernel lattice
// classifies as a free group of the image rank.
struct HomStructure {
    Mat<Int> kernel_basis;     // rows form a basis of ker M in Z^n
    AbGroupClass cokernel;     // Z^k / im M
    std::size_t image_rank = 0;
    bool first_iso_ok = false;
};

HomStructure hom_kernel_image(const Mat<Int>& M);

}  // namespace aleph::abgroup
