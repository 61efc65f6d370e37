#include "weightfilt/subspace.hpp"

#include <string>

namespace wfl {

RationalSubspace RationalSubspace::from_span(const RationalMatrix& span) {
    RationalSubspace s;
    s.ambient_ = span.rows();
    RationalMatrix rt = span.transpose();
    std::vector<std::size_t> pivots = rt.rref_in_place();
    RationalMatrix basis(span.rows(), pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t i = 0; i < span.rows(); ++i) basis.at(i, r) = rt.at(r, i);
    s.basis_ = std::move(basis);
    return s;
}

RationalSubspace RationalSubspace::zero(std::size_t ambient_dim) {
    RationalSubspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = RationalMatrix(ambient_dim, 0);
    return s;
}

RationalSubspace RationalSubspace::full(std::size_t ambient_dim) {
    RationalSubspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = RationalMatrix::identity(ambient_dim);
    return s;
}

bool RationalSubspace::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector vs ambient space");
    std::vector<Rational> x;
    return solve_linear(basis_, v, x);
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces in different spaces");
    if (other.dim() > dim()) return false;
    for (std::size_t j = 0; j < other.dim(); ++j) {
        std::vector<Rational> v(ambient_);
        for (std::size_t i = 0; i < ambient_; ++i) v[i] = other.basis_.at(i, j);
        if (!contains(v)) return false;
    }
    return true;
}

RationalSubspace RationalSubspace::apply(const RationalMatrix& M) const {
    if (M.cols() != ambient_) throw DimensionMismatch("map domain vs ambient space");
    return from_span(M * basis_);
}

RationalSubspace RationalSubspace::sum(const RationalSubspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces in different spaces");
    return from_span(basis_.hstack(other.basis_));
}

RationalSubspace RationalSubspace::intersect(const RationalSubspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces in different spaces");
    // Columns of [A | B] in the kernel pair coefficients x, y with Ax = -By;
    // the A-part of each kernel vector spans the intersection.
    RationalMatrix stacked = basis_.hstack(other.basis_);
    RationalSubspace ker = kernel(stacked);
    RationalMatrix coeffs(dim(), ker.dim());
    for (std::size_t j = 0; j < ker.dim(); ++j)
        for (std::size_t i = 0; i < dim(); ++i) coeffs.at(i, j) = ker.basis().at(i, j);
    return from_span(basis_ * coeffs);
}

RationalSubspace kernel(const RationalMatrix& M) {
    RationalMatrix r = M;
    std::vector<std::size_t> pivots = r.rref_in_place();
    std::vector<bool> is_pivot(M.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    RationalMatrix span(M.cols(), M.cols() - pivots.size());
    std::size_t out = 0;
    for (std::size_t free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        span.at(free, out) = 1;
        for (std::size_t r_i = 0; r_i < pivots.size(); ++r_i)
            span.at(pivots[r_i], out) = -r.at(r_i, free);
        ++out;
    }
    return RationalSubspace::from_span(span);
}

RationalSubspace image(const RationalMatrix& M) {
    return RationalSubspace::from_span(M);
}

RationalSubspace ortho_complement(const RationalSubspace& S, const RationalMatrix& G,
                                  bool require_nondegenerate) {
    if (!G.is_square() || G.rows() != S.ambient_dim())
        throw DimensionMismatch("pairing matrix vs ambient space");
    if (require_nondegenerate && G.det() == 0)
        throw DegeneratePairing("pairing matrix is singular");
    // v^T G s = 0 for every basis column s  <=>  (G B)^T v = 0.
    return kernel((G * S.basis()).transpose());
}

bool subspace_equal(const RationalSubspace& A, const RationalSubspace& B) {
    if (A.ambient_dim() != B.ambient_dim())
        throw DimensionMismatch("subspace_equal ambient dims " +
                                std::to_string(A.ambient_dim()) + " vs " +
                                std::to_string(B.ambient_dim()));
    return A == B;
}

RationalMatrix complement_in(const RationalSubspace& inner, const RationalSubspace& outer) {
    if (inner.ambient_dim() != outer.ambient_dim())
        throw DimensionMismatch("complement_in ambient dims");
    if (!outer.contains(inner)) throw PreconditionViolated("complement_in: inner not in outer");
    RationalMatrix work = inner.basis();
    std::size_t current_rank = inner.dim();
    RationalMatrix chosen(inner.ambient_dim(), 0);
    for (std::size_t j = 0; j < outer.dim(); ++j) {
        RationalMatrix cand = work.hstack(outer.basis().column(j));
        if (cand.rank() > current_rank) {
            work = std::move(cand);
            ++current_rank;
            chosen = chosen.hstack(outer.basis().column(j));
        }
        if (current_rank == outer.dim()) break;
    }
    return chosen;
}

}  // namespace wfl
