#include "aleph/modlin.hpp"

#include <algorithm>

#include "aleph/error.hpp"

namespace aleph::modlin {

VectorList make_vector_list(Ring field, std::size_t dim,
                            std::vector<std::vector<Rat>> vectors) {
    if (!field.is_field())
        throw Error("Malformed", "vector lists need a field, got " + field.str());
    for (auto& v : vectors) {
        if (v.size() != dim)
            throw Error("DimensionMismatch", "vector of length " + std::to_string(v.size()) +
                                                 " in dimension " + std::to_string(dim));
        for (Rat& c : v) c = field.canon(c);
    }
    return {std::move(field), dim, std::move(vectors)};
}

std::vector<std::size_t> rref(const Ring& field, Mat<Rat>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(row, p);
        Rat inv = *field.inv(m(row, col));
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = field.mul(m(row, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat factor = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = field.sub(m(i, j), field.mul(factor, m(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

namespace {

Mat<Rat> rows_to_matrix(const VectorList& v) {
    Mat<Rat> m(v.vectors.size(), v.dim);
    for (std::size_t i = 0; i < v.vectors.size(); ++i)
        for (std::size_t j = 0; j < v.dim; ++j) m(i, j) = v.vectors[i][j];
    return m;
}

std::size_t rank_of(const Ring& field, Mat<Rat> m) { return rref(field, m).size(); }

}  // namespace

std::size_t rank(const VectorList& v) { return rank_of(v.field, rows_to_matrix(v)); }

bool is_independent(const VectorList& v) { return rank(v) == v.vectors.size(); }

bool span_member(const VectorList& v, const std::vector<Rat>& w) {
    if (w.size() != v.dim)
        throw Error("DimensionMismatch", "target vector has the wrong length");
    std::size_t base = rank(v);
    VectorList ext = v;
    ext.vectors.push_back(w);
    ext = make_vector_list(ext.field, ext.dim, std::move(ext.vectors));
    return rank(ext) == base;
}

VectorList sieve_basis(const VectorList& v) {
    VectorList kept = make_vector_list(v.field, v.dim, {});
    std::size_t r = 0;
    for (const auto& vec : v.vectors) {
        kept.vectors.push_back(vec);
        std::size_t r2 = rank(kept);
        if (r2 == r)
            kept.vectors.pop_back();  // inside the span of the predecessors
        else
            r = r2;
    }
    return kept;
}

VectorList extend_to_basis(const VectorList& v) {
    if (!is_independent(v))
        throw Error("NotIndependent", "input vectors are linearly dependent");
    VectorList out = v;
    std::size_t r = out.vectors.size();
    for (std::size_t i = 0; i < v.dim && r < v.dim; ++i) {
        std::vector<Rat> unit(v.dim, Rat(0));
        unit[i] = 1;
        out.vectors.push_back(std::move(unit));
        std::size_t r2 = rank(out);
        if (r2 == r)
            out.vectors.pop_back();
        else
            r = r2;
    }
    return out;
}

RankNullity rank_nullity(const LinearMap& T) {
    if (!T.field.is_field())
        throw Error("Malformed", "linear maps need a field, got " + T.field.str());
    const std::size_t k = T.matrix.rows(), n = T.matrix.cols();
    Mat<Rat> R = T.matrix;
    std::vector<std::size_t> pivots = rref(T.field, R);

    RankNullity out{make_vector_list(T.field, n, {}), make_vector_list(T.field, k, {})};

    // Image basis: the original columns at the pivot positions.
    for (std::size_t p : pivots) out.image_basis.vectors.push_back(T.matrix.col(p));

    // Kernel basis: one vector per free column.
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rat> x(n, Rat(0));
        x[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = T.field.neg(R(i, j));
        out.kernel_basis.vectors.push_back(std::move(x));
    }
    return out;
}

StackedBasis stacked_basis(const Mat<Int>& gens) {
    abgroup::SmithForm s = abgroup::smith_normal_form(gens);
    StackedBasis out;
    // U*A = D*V^-1, so row i of V^-1 scaled by d_i spans the same lattice as
    // the rows of A.
    out.basis = unimodular_inverse(s.V);
    out.multipliers.assign(s.diag.begin(), s.diag.begin() + s.rank);
    return out;
}

bool is_projective_zmodule(const abgroup::PresentationMatrix& A) {
    return abgroup::classify(A).torsion.empty();
}

std::optional<Mat<Int>> solve_linear_z(const Mat<Int>& A, const Mat<Int>& B) {
    if (A.rows() != B.rows()) throw Error("BadShape", "solve shape mismatch");
    abgroup::SmithForm s = abgroup::smith_normal_form(A);
    Mat<Int> rhs = s.U * B;
    Mat<Int> y(A.cols(), B.cols());
    for (std::size_t c = 0; c < B.cols(); ++c) {
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i < s.rank) {
                if (rhs(i, c) % s.diag[i] != 0) return std::nullopt;
                if (i < A.cols()) y(i, c) = rhs(i, c) / s.diag[i];
            } else if (rhs(i, c) != 0) {
                return std::nullopt;
            }
        }
    }
    return s.V * y;
}

bool row_lattice_member(const Mat<Int>& L, const std::vector<Int>& x) {
    if (L.cols() != x.size()) throw Error("BadShape", "lattice membership shape mismatch");
    Mat<Int> rhs(x.size(), 1);
    for (std::size_t i = 0; i < x.size(); ++i) rhs(i, 0) = x[i];
    return solve_linear_z(transpose(L), rhs).has_value();
}

namespace {

// Kernel lattice of the map x -> g*x into Z^m / rowlattice(rel), as rows.
Mat<Int> kernel_mod_relations(const Mat<Int>& g, const Mat<Int>& rel) {
    const std::size_t b = g.cols(), t = rel.rows(), m = g.rows();
    // ker [g | -rel^T] projected to the first b coordinates.
    Mat<Int> aug(m, b + t);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < b; ++j) aug(i, j) = g(i, j);
        for (std::size_t j = 0; j < t; ++j) aug(i, b + j) = -rel(j, i);
    }
    abgroup::HomStructure h = abgroup::hom_kernel_image(aug);
    Mat<Int> out(h.kernel_basis.rows(), b);
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < b; ++j) out(i, j) = h.kernel_basis(i, j);
    return out;
}

void require_exact_z(const SesZ& s) {
    const std::size_t b = s.f.rows(), a1 = s.f.cols(), m = s.g.rows(), t = s.a2_rel.rows();
    if (s.g.cols() != b || (t > 0 && s.a2_rel.cols() != m))
        throw Error("BadShape", "sequence matrices do not chain");

    if (abgroup::smith_normal_form(s.f).rank != a1)
        throw Error("NotExact", "f is not injective");

    // g*f must vanish in Z^m modulo the relation lattice.
    Mat<Int> gf = s.g * s.f;
    for (std::size_t c = 0; c < a1; ++c)
        if (!row_lattice_member(s.a2_rel, gf.col(c)))
            throw Error("NotExact", "g*f does not vanish in the quotient");

    // g surjective onto Z^m / rel: [g | rel^T] has full rank m with all
    // invariant factors 1.
    Mat<Int> aug(m, b + t);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < b; ++j) aug(i, j) = s.g(i, j);
        for (std::size_t j = 0; j < t; ++j) aug(i, b + j) = s.a2_rel(j, i);
    }
    abgroup::SmithForm sf = abgroup::smith_normal_form(aug);
    if (sf.rank != m || (m > 0 && sf.diag[m - 1] != 1))
        throw Error("NotExact", "g is not surjective onto the quotient");

    // Exactness at the middle: ker(g mod rel) is contained in im f (the other
    // inclusion already follows from g*f = 0).
    Mat<Int> ker = kernel_mod_relations(s.g, s.a2_rel);
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        Mat<Int> rhs(b, 1);
        for (std::size_t j = 0; j < b; ++j) rhs(j, 0) = ker(i, j);
        if (!solve_linear_z(s.f, rhs))
            throw Error("NotExact", "kernel of g is larger than the image of f");
    }
}

}  // namespace

SplitZ split_section(const SesZ& s0) {
    SesZ s = s0;
    if (s.a2_rel.rows() == 0) s.a2_rel = Mat<Int>(0, s.g.rows());  // free A2
    require_exact_z(s);
    const std::size_t b = s.f.rows(), a1 = s.f.cols(), m = s.g.rows(), t = s.a2_rel.rows();

    // Unknowns: H (b x m) then C (t x m), row-major. Equations:
    //   H * rel^T = 0          (b*t rows)
    //   g * H - rel^T * C = I  (m*m rows)
    const std::size_t nH = b * m, nC = t * m;
    Mat<Int> sys(b * t + m * m, nH + nC);
    Mat<Int> rhs(sys.rows(), 1);
    std::size_t eq = 0;
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t sr = 0; sr < t; ++sr, ++eq)
            for (std::size_t j = 0; j < m; ++j) sys(eq, i * m + j) = s.a2_rel(sr, j);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j < m; ++j, ++eq) {
            for (std::size_t i = 0; i < b; ++i) sys(eq, i * m + j) = s.g(r, i);
            for (std::size_t sr = 0; sr < t; ++sr) sys(eq, nH + sr * m + j) = -s.a2_rel(sr, r);
            rhs(eq, 0) = r == j ? 1 : 0;
        }

    SplitZ out;
    auto sol = solve_linear_z(sys, rhs);
    if (!sol) return out;  // no section: the sequence does not split

    out.has_section = true;
    out.section = Mat<Int>(b, m);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < m; ++j) out.section(i, j) = (*sol)(i * m + j, 0);

    // Retraction k with k*f = id; solvable because im f is a direct summand.
    auto kt = solve_linear_z(transpose(s.f), Mat<Int>::identity(a1));
    if (!kt) throw Error("NotExact", "split sequence without a retraction");
    out.retraction = transpose(*kt);

    out.decomposition = Mat<Int>(b, a1 + m);
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < a1; ++j) out.decomposition(i, j) = s.f(i, j);
        for (std::size_t j = 0; j < m; ++j) out.decomposition(i, a1 + j) = out.section(i, j);
    }
    return out;
}

SplitField split_section(const SesField& s) {
    if (!s.field.is_field())
        throw Error("Malformed", "field sequence needs a field, got " + s.field.str());
    const std::size_t b = s.f.rows(), a1 = s.f.cols(), a2 = s.g.rows();
    if (s.g.cols() != b) throw Error("BadShape", "sequence matrices do not chain");

    Mat<Rat> fr = s.f;
    Mat<Rat> gr = s.g;
    if (rref(s.field, fr).size() != a1) throw Error("NotExact", "f is not injective");
    if (rref(s.field, gr).size() != a2) throw Error("NotExact", "g is not surjective");
    if (b != a1 + a2) throw Error("NotExact", "dimension mismatch in the middle");
    Mat<Rat> gf = s.g * s.f;
    for (std::size_t i = 0; i < a2; ++i)
        for (std::size_t j = 0; j < a1; ++j)
            if (!(s.field.canon(gf(i, j)) == 0)) throw Error("NotExact", "g*f is nonzero");

    // Solve g*H = I and f^T*K^T... both by elimination on augmented systems.
    auto solve = [&](const Mat<Rat>& A, const Mat<Rat>& B) {
        Mat<Rat> aug(A.rows(), A.cols() + B.cols());
        for (std::size_t i = 0; i < A.rows(); ++i) {
            for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
            for (std::size_t j = 0; j < B.cols(); ++j) aug(i, A.cols() + j) = B(i, j);
        }
        std::vector<std::size_t> pivots = rref(s.field, aug);
        Mat<Rat> x(A.cols(), B.cols());
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (pivots[i] >= A.cols()) throw Error("NotExact", "inconsistent linear system");
            for (std::size_t j = 0; j < B.cols(); ++j) x(pivots[i], j) = aug(i, A.cols() + j);
        }
        return x;
    };

    SplitField out;
    out.section = solve(s.g, Mat<Rat>::identity(a2));
    out.retraction = transpose(solve(transpose(s.f), Mat<Rat>::identity(a1)));
    out.decomposition = Mat<Rat>(b, b);
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < a1; ++j) out.decomposition(i, j) = s.f(i, j);
        for (std::size_t j = 0; j < a2; ++j) out.decomposition(i, a1 + j) = out.section(i, j);
    }
    return out;
}

}  // namespace aleph::modlin
