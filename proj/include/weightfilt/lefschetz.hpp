#pragma once

#include <cstdint>
#include <vector>

#include "weightfilt/rational.hpp"

namespace wfl {

// Element of SL2(Z). Entries are arbitrary precision: products of twist
// words grow fast.
struct SL2Matrix {
    Integer a{1}, b{0}, c{0}, d{1};  // [[a,b],[c,d]]

    SL2Matrix() = default;
    SL2Matrix(Integer a_, Integer b_, Integer c_, Integer d_);

    static SL2Matrix identity() { return SL2Matrix(); }

    Integer det() const { return a * d - b * c; }
    Integer trace() const { return a + d; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    SL2Matrix operator*(const SL2Matrix& rhs) const;
    SL2Matrix inverse() const { return SL2Matrix(d, -b, -c, a); }
    bool operator==(const SL2Matrix& rhs) const = default;
};

// The positive Dehn twist about the primitive cycle s*alpha + t*beta:
// [[1-st, s^2], [-t^2, 1+st]]. Requires gcd(s,t) = 1. These are exactly the
// SL2(Z) conjugates of R_{1,0} = [[1,1],[0,1]].
SL2Matrix twist_matrix(std::int64_t s, std::int64_t t);

// Vanishing-cycle data extracted from a parabolic matrix T = I + c * P with
// P the rank-one nilpotent attached to the primitive cycle (s,t). The sign
// of (s,t) is normalized to t > 0, or t = 0 and s > 0; T is a conjugate of
// R_{1,0} exactly when multiplicity = 1.
struct VanishingCycle {
    Integer s, t;
    Integer multiplicity;
};
VanishingCycle vanishing_cycle(const SL2Matrix& T);

// An ordered word of positive Dehn twists. Every letter must be a conjugate
// of R_{1,0}: trace 2, not the identity, multiplicity 1.
class TwistWord {
  public:
    TwistWord() = default;
    explicit TwistWord(std::vector<SL2Matrix> letters);

    const std::vector<SL2Matrix>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

  private:
    std::vector<SL2Matrix> letters_;
};

// T_1 T_2 ... T_m in the written order; identity for the empty word.
SL2Matrix total_monodromy(const TwistWord& w);

enum class HurwitzDirection { Left, Right };

// Elementary braid move at position i (1-based, 1 <= i < length):
// right sends (T_i, T_{i+1}) to (T_i T_{i+1} T_i^{-1}, T_i); left is its
// inverse. The total monodromy is unchanged.
TwistWord hurwitz_move(const TwistWord& w, std::size_t i, HurwitzDirection dir);

// A word of 11 positive twists multiplying to T^{-1}, built by conjugating
// the template word (R_{0,1}, R_{3,1}, R_{6,1}, R_{1,0}^8) -- whose product
// is R_{1,0}^{-1} -- by a conjugator L with T = L R_{1,0} L^{-1}. The
// identity T = L R_{1,0} L^{-1} and the product are re-verified on every
// call.
TwistWord factor_inverse_twist(const SL2Matrix& T);

// Extends a nonempty positive word (T_1 .. T_k) by the inverse
// factorizations of T_k, ..., T_1 in that order, so the product telescopes
// to the identity. The result has length 12k.
TwistWord complete_to_sphere(const TwistWord& w);

}  // namespace wfl
