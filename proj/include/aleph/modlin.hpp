#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "aleph/abgroup.hpp"
#include "aleph/matrix.hpp"
#include "aleph/numeric.hpp"
#include "aleph/ringpoly.hpp"

namespace aleph::modlin {

using ringpoly::Ring;

// Ordered list of exact coordinate vectors over a field (Q or GF(p)).
struct VectorList {
    Ring field;
    std::size_t dim = 0;
    std::vector<std::vector<Rat>> vectors;
};

// Checks the field/dimension invariants and canonicalizes entries.
VectorList make_vector_list(Ring field, std::size_t dim,
                            std::vector<std::vector<Rat>> vectors);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const Ring& field, Mat<Rat>& m);

std::size_t rank(const VectorList& v);
bool is_independent(const VectorList& v);
bool span_member(const VectorList& v, const std::vector<Rat>& w);

// The in-order sieve: drop every vector lying in the span of the retained
// predecessors. Output spans the same subspace and is independent.
VectorList sieve_basis(const VectorList& v);

// Complete an independent list to a basis of the full space by appending the
// standard unit vectors e_1..e_n in index order, keeping each one that stays
// independent. Throws NotIndependent if the input is dependent.
VectorList extend_to_basis(const VectorList& v);

// Linear map from the dim-n space to the dim-k space as a k x n matrix.
struct LinearMap {
    Ring field;
    Mat<Rat> matrix;
};

struct RankNullity {
    VectorList kernel_basis;  // subspace of the domain
    VectorList image_basis;   // subspace of the codomain
};

// Exact kernel and image bases; sizes always add up to the domain dimension.
RankNullity rank_nullity(const LinearMap& T);

// Basis x_1..x_n of Z^n and multipliers d_1 | ... | d_r such that
// {d_i x_i} generates the row lattice of `gens`.
struct StackedBasis {
    Mat<Int> basis;               // n x n, rows are the x_i
    std::vector<Int> multipliers; // r entries, divisibility chain
};

StackedBasis stacked_basis(const Mat<Int>& gens);

// Over Z projective = free = torsion-free classification.
bool is_projective_zmodule(const abgroup::PresentationMatrix& A);

// Integer solution X of A * X = B if one exists (free coordinates zero).
std::optional<Mat<Int>> solve_linear_z(const Mat<Int>& A, const Mat<Int>& B);

// Is x in the lattice spanned by the rows of L?
bool row_lattice_member(const Mat<Int>& L, const std::vector<Int>& x);

// Short exact sequence 0 -> Z^a1 -f-> Z^b -g-> A2 -> 0 where A2 is presented
// as Z^m modulo the row lattice of a2_rel (a 0 x m relation matrix makes A2
// free). Exactness is verified on construction inside split_section.
struct SesZ {
    Mat<Int> f;       // b x a1
    Mat<Int> g;       // m x b
    Mat<Int> a2_rel;  // t x m
};

struct SplitZ {
    bool has_section = false;
    Mat<Int> section;        // b x m with g*section = id modulo the relations
    Mat<Int> retraction;     // a1 x b with retraction*f = id
    Mat<Int> decomposition;  // [f | section]: the map A1 + A2 -> B
};

// Decides splitness by integer linear solvability (through Smith form):
// a section H must satisfy H * a2_rel^T = 0 and g * H = I modulo the
// relation lattice. Throws NotExact when the data is not a short exact
// sequence; returns has_section = false when the sequence does not split.
SplitZ split_section(const SesZ& s);

// Field version: 0 -> F^a1 -f-> F^b -g-> F^a2 -> 0. A section always exists;
// it is found by solving g * H = I columnwise.
struct SesField {
    Ring field;
    Mat<Rat> f;  // b x a1
    Mat<Rat> g;  // a2 x b
};

struct SplitField {
    Mat<Rat> section;
    Mat<Rat> retraction;
    Mat<Rat> decomposition;  // [f | section], always invertible
};

SplitField split_section(const SesField& s);

}  // namespace aleph::modlin
