#pragma once

#include "weightfilt/filtration.hpp"

namespace wfl {

// A nilpotent endomorphism of Q^n together with the integer its weight
// filtration is centered at. Nilpotency (N^m = 0 for some m <= n) is checked
// at construction.
class NilpotentEndo {
  public:
    NilpotentEndo(RationalMatrix matrix, int center);

    const RationalMatrix& matrix() const { return matrix_; }
    int center() const { return center_; }
    std::size_t dim() const { return matrix_.rows(); }

    // Smallest e >= 0 with N^e = 0 (0 only on the zero-dimensional space).
    unsigned nilpotency_exponent() const { return exponent_; }

    // exp(N) as a finite sum; the unipotent operator N is the log of.
    RationalMatrix monodromy() const;

    NilpotentEndo recentered(int center) const { return NilpotentEndo(matrix_, center); }

  private:
    RationalMatrix matrix_;
    int center_;
    unsigned exponent_;
};

// The monodromy weight filtration of N centered at k: the unique increasing
// filtration M with N(M_j) contained in M_{j-2} and N^l inducing isomorphisms
// Gr_{k+l} -> Gr_{k-l} for every l. Computed by the standard recursion: with
// l minimal such that N^{l+1} = 0, set M_{k+l} = V, M_{k+l-1} = ker N^l,
// M_{k-l} = im N^l, M_{k-l-1} = 0, and recurse on the operator induced on
// ker N^l / im N^l, still centered at k.
Filtration weight_filtration(const NilpotentEndo& N);

// True iff both defining axioms hold for (N, M). Certifies the output of
// weight_filtration and falsifies perturbed filtrations.
bool check_mwf_axioms(const NilpotentEndo& N, const Filtration& M);

}  // namespace wfl
