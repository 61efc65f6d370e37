#pragma once

#include "weightfilt/matrix.hpp"

namespace wfl {

// A linear subspace of Q^n, stored as the matrix whose columns are its basis.
// The basis is canonical: it is the reduced column echelon form of any
// spanning set (equivalently, the transposed RREF of the transposed span), so
// two equal subspaces always hold identical matrices and equality is
// representation equality.
class RationalSubspace {
  public:
    RationalSubspace() : ambient_(0), basis_(0, 0) {}

    // Span of the columns of `span`, canonicalized.
    static RationalSubspace from_span(const RationalMatrix& span);
    static RationalSubspace zero(std::size_t ambient_dim);
    static RationalSubspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const RationalMatrix& basis() const { return basis_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const RationalSubspace& other) const;

    // Image under a linear map: span of M * basis. M must have cols == ambient.
    RationalSubspace apply(const RationalMatrix& M) const;
    RationalSubspace sum(const RationalSubspace& other) const;
    RationalSubspace intersect(const RationalSubspace& other) const;

    bool operator==(const RationalSubspace& rhs) const = default;

  private:
    std::size_t ambient_;
    RationalMatrix basis_;  // ambient_ x dim, reduced column echelon
};

RationalSubspace kernel(const RationalMatrix& M);
RationalSubspace image(const RationalMatrix& M);

// { v : v^T G s = 0 for all s in S }. G must be square with side equal to the
// ambient dimension; when require_nondegenerate is set, a singular G raises
// DegeneratePairing. G is not required to be symmetric here, which lets the
// same routine serve the intersection pairings between complementary degrees.
RationalSubspace ortho_complement(const RationalSubspace& S, const RationalMatrix& G,
                                  bool require_nondegenerate = true);

bool subspace_equal(const RationalSubspace& A, const RationalSubspace& B);

// A deterministic basis of a complement of `inner` inside `outer`
// (inner must be contained in outer): scan the canonical basis columns of
// `outer` in order and keep the ones independent of what came before. For
// outer = full space this walks the standard basis vectors.
RationalMatrix complement_in(const RationalSubspace& inner, const RationalSubspace& outer);

}  // namespace wfl
