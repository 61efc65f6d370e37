#pragma once

#include "weightfilt/mwf.hpp"
#include "weightfilt/snc.hpp"

namespace wfl {

// Semistable degeneration data: the nerve of the central fiber A_1..A_n, the
// relative dimension d, per-degree logs of monodromy (N_k centered at k,
// with N_k^{k+1} = 0), the intersection pairings between complementary
// degrees, and optional restriction matrices H^k(X_1) -> H^k(T_J) to a
// chosen profound torus.
class Degeneration {
  public:
    Degeneration(Nerve nerve, int d, std::map<int, NilpotentEndo> monodromy_logs,
                 std::map<int, RationalMatrix> pairings,
                 std::map<int, RationalMatrix> restrictions);

    const Nerve& nerve() const { return nerve_; }
    int d() const { return d_; }

    bool has_log(int degree) const { return logs_.count(degree) > 0; }
    const NilpotentEndo& log(int degree) const;
    std::size_t betti(int degree) const { return log(degree).dim(); }

    // The matrix of the pairing H^k x H^{2d-k} -> Q; stored for k or
    // recovered as the transpose of the one stored for 2d-k.
    RationalMatrix pairing_for(int degree) const;
    bool has_pairing(int degree) const;

    bool has_restriction(int degree) const { return restrictions_.count(degree) > 0; }
    const RationalMatrix& restriction(int degree) const;

  private:
    Nerve nerve_;
    int d_;
    std::map<int, NilpotentEndo> logs_;
    std::map<int, RationalMatrix> pairings_;
    std::map<int, RationalMatrix> restrictions_;
};

// Dimension of the Clemens torus over a point of the open stratum of A_I:
// |I| - 1.
int clemens_torus_dim(const Degeneration& deg, const Face& I);

// The orthogonal-complement duality: M_{2k-1} H^k equals the orthogonal
// complement of M_{2d-2k} H^{2d-k} under the intersection pairing.
bool duality_check(const Degeneration& deg, int k);

// M_{2k-1} H^k(X_1) = kernel of the restriction to the profound torus.
bool verify_maincy(const Degeneration& deg, int k);

// Homology side: with S_k the pairing-transpose of N_{2d-k}, the image of
// S_k^k must equal the span of the supplied torus classes (columns in the
// basis of H_k fixed by the pairing identification).
bool torus_span_check(const Degeneration& deg, int k, const RationalMatrix& torus_classes);

}  // namespace wfl
