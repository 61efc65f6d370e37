#pragma once

#include <map>

#include "weightfilt/filtration.hpp"

namespace wfl {

// Cohomology of a fibered surface with the per-degree restriction maps to a
// smooth fiber, which is a 2-torus (fiber Betti numbers 1, 2, 1).
class FiberedSurfaceData {
  public:
    FiberedSurfaceData(std::vector<std::size_t> betti_dims,
                       std::map<int, RationalMatrix> restrictions);

    std::size_t betti(int degree) const;
    const std::map<int, RationalMatrix>& restrictions() const { return restrictions_; }

    static std::size_t torus_betti(int degree);  // 1, 2, 1

  private:
    std::vector<std::size_t> betti_;
    std::map<int, RationalMatrix> restrictions_;
};

// Perverse Leray filtration of the surface, degree by degree: the two-step
// chain P_{k-2} = 0, P_{k-1} = ker(restriction to a fiber), P_k = all of
// H^k. Restrictions must be present for k = 0, 1, 2.
std::map<int, Filtration> perverse_filtration_surface(const FiberedSurfaceData& data);

// True iff P_m = W_{2m} = W_{2m+1} for every m and every degree, as exact
// subspace identities. Both filtrations must be expressed in the same basis
// of each cohomology group; this module never chooses that basis.
bool pw_compare(const std::map<int, Filtration>& P, const std::map<int, Filtration>& W);

}  // namespace wfl
