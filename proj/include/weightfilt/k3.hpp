#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weightfilt/mwf.hpp"

namespace wfl {

// Integer coordinate vector in a fixed lattice basis.
struct LatticeVector {
    std::vector<std::int64_t> coords;

    std::size_t size() const { return coords.size(); }
    bool is_zero() const;
    bool is_primitive() const;  // nonzero and gcd of coordinates 1
    std::vector<Rational> to_rational() const;
};

// A lattice given by an integer Gram matrix with labeled basis vectors.
class BilinearLattice {
  public:
    BilinearLattice(RationalMatrix gram, std::vector<std::string> basis_labels);

    std::size_t rank() const { return gram_.rows(); }
    const RationalMatrix& gram() const { return gram_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    Rational inner(const LatticeVector& v, const LatticeVector& w) const;

    bool is_even() const;            // all diagonal entries even
    Rational determinant() const;
    bool is_unimodular() const;      // |det| = 1
    RationalMatrix::Signature signature() const;

    // Index of a named basis vector, or -1.
    int label_index(const std::string& name) const;

  private:
    RationalMatrix gram_;
    std::vector<std::string> labels_;
};

// The hyperbolic plane U with basis e, f and Gram [[0,1],[1,0]].
BilinearLattice hyperbolic_plane();

// E8 negated: minus the Cartan matrix of the E8 root system, basis ordered as
// the chain 1-2-3-4-5-6-7 with node 8 attached to node 5. Even, unimodular,
// negative definite.
BilinearLattice e8_minus();

// E8(-1)^2 + U^3, rank 22, signature (3,19), determinant -1. Basis labels
// g1..g8, h1..h8, e1,f1, e2,f2, e3,f3 in that order.
BilinearLattice k3_lattice();

// Matrix of x -> <x,beta> rho - <x,rho> beta. Requires <beta,beta> = 0,
// <rho,beta> = 0 and <rho,rho> > 0; the result cubes to zero.
RationalMatrix n_beta_rho(const BilinearLattice& L, const LatticeVector& beta,
                          const LatticeVector& rho);

// M'_0 = M'_1 = im(N^2), M'_2 = M'_3 = ker(N^2), M'_4 = everything; the
// monodromy weight filtration of N_{beta,rho} centered at 2.
Filtration mprime_filtration(const BilinearLattice& L, const LatticeVector& beta,
                             const LatticeVector& rho);

// First primitive isotropic vector orthogonal to alpha in the coordinate box
// |c_i| <= bound. Candidates are enumerated deterministically: coordinates
// compared from the last basis vector down to the first, each coordinate
// running through 0, 1, -1, 2, -2, ... The first hit is returned; no hit in
// the box yields nullopt.
std::optional<LatticeVector> find_isotropic_orthogonal(const BilinearLattice& L,
                                                       const LatticeVector& alpha,
                                                       std::int64_t bound);

// Perverse filtration of an elliptic K3 with fiber class beta: P_0 = span of
// beta, P_1 = beta-perp, P_2 = everything. True iff P_i = M'_{2i} throughout.
bool k3_pw_check(const BilinearLattice& L, const LatticeVector& beta, const LatticeVector& rho);

}  // namespace wfl
