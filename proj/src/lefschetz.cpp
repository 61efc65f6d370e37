#include "weightfilt/lefschetz.hpp"

#include <numeric>
#include <string>

namespace wfl {

namespace {

std::string show(const SL2Matrix& m) {
    return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
}

Integer isqrt_exact(const Integer& x) {
    Integer r = boost::multiprecision::sqrt(x);
    if (r * r != x) throw NotAPositiveTwist("matrix entries are not a twist pattern");
    return r;
}

}  // namespace

SL2Matrix::SL2Matrix(Integer a_, Integer b_, Integer c_, Integer d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (det() != 1) throw PreconditionViolated("matrix " + show(*this) + " has determinant != 1");
}

SL2Matrix SL2Matrix::operator*(const SL2Matrix& rhs) const {
    SL2Matrix p;
    p.a = a * rhs.a + b * rhs.c;
    p.b = a * rhs.b + b * rhs.d;
    p.c = c * rhs.a + d * rhs.c;
    p.d = c * rhs.b + d * rhs.d;
    return p;
}

SL2Matrix twist_matrix(std::int64_t s, std::int64_t t) {
    if (std::gcd(s, t) != 1)
        throw NotPrimitive("(" + std::to_string(s) + "," + std::to_string(t) + ")");
    Integer S(s), T(t);
    return SL2Matrix(1 - S * T, S * S, -T * T, 1 + S * T);
}

VanishingCycle vanishing_cycle(const SL2Matrix& T) {
    if (T.trace() != 2) throw NotAPositiveTwist("trace of " + show(T) + " is not 2");
    if (T.is_identity()) throw NotAPositiveTwist("identity matrix");
    // T - I = c * [[-st, s^2], [-t^2, st]] with gcd(s,t) = 1, so |c| is the
    // gcd of the entries.
    Integer m11 = T.a - 1, m12 = T.b, m21 = T.c;
    Integer cabs = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(m11), abs(m12)), abs(m21));
    Integer c;
    if (m12 != 0)
        c = m12 > 0 ? cabs : -cabs;
    else
        c = m21 < 0 ? cabs : -cabs;
    Integer s = isqrt_exact(m12 / c);
    Integer t = isqrt_exact(-m21 / c);
    // Fix relative signs from st = -m11 / c, then normalize.
    if (s != 0 && t != 0 && -m11 / c < 0) s = -s;
    if (t < 0 || (t == 0 && s < 0)) {
        s = -s;
        t = -t;
    }
    // Self-check: the extracted data must reproduce T exactly.
    SL2Matrix rebuilt(1 - c * s * t, c * s * s, -c * t * t, 1 + c * s * t);
    if (!(rebuilt == T)) throw NotAPositiveTwist("matrix " + show(T) + " is not parabolic");
    return VanishingCycle{std::move(s), std::move(t), std::move(c)};
}

namespace {

void require_positive_twist(const SL2Matrix& T) {
    VanishingCycle vc = vanishing_cycle(T);
    if (vc.multiplicity != 1)
        throw NotAPositiveTwist("matrix " + show(T) + " is a twist power, not a twist");
}

}  // namespace

TwistWord::TwistWord(std::vector<SL2Matrix> letters) : letters_(std::move(letters)) {
    for (const auto& m : letters_) require_positive_twist(m);
}

SL2Matrix total_monodromy(const TwistWord& w) {
    SL2Matrix acc;
    for (const auto& m : w.letters()) acc = acc * m;
    return acc;
}

TwistWord hurwitz_move(const TwistWord& w, std::size_t i, HurwitzDirection dir) {
    if (i < 1 || i >= w.size())
        throw PositionOutOfRange("position " + std::to_string(i) + " in a word of length " +
                                 std::to_string(w.size()));
    std::vector<SL2Matrix> letters = w.letters();
    SL2Matrix& x = letters[i - 1];
    SL2Matrix& y = letters[i];
    if (dir == HurwitzDirection::Right) {
        SL2Matrix nx = x * y * x.inverse();
        y = x;
        x = nx;
    } else {
        SL2Matrix ny = y.inverse() * x * y;
        x = y;
        y = ny;
    }
    return TwistWord(std::move(letters));
}

namespace {

// Conjugator L = [[s,u],[t,v]] in SL2(Z) with T = L R_{1,0} L^{-1}; (u,v)
// chosen deterministically with minimal |u|, then |v|.
SL2Matrix conjugator_for(const Integer& s, const Integer& t) {
    Integer g, x, y;
    // extended gcd: s*x + t*y = g = 1
    {
        Integer old_r = s, r = t, old_x = 1, xx = 0, old_y = 0, yy = 1;
        while (r != 0) {
            Integer q = old_r / r;
            Integer tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_x - q * xx;
            old_x = xx;
            xx = tmp;
            tmp = old_y - q * yy;
            old_y = yy;
            yy = tmp;
        }
        g = old_r;
        x = old_x;
        y = old_y;
    }
    if (g == -1) {
        g = -g;
        x = -x;
        y = -y;
    }
    if (g != 1) throw NotPrimitive("vanishing cycle is not primitive");
    Integer v = x, u = -y;  // s*v - t*u = 1
    // General solution (u + k s, v + k t); scan around the minimizer of |u|
    // (of |v| when s = 0).
    Integer k0;
    if (s != 0)
        k0 = -u / s;
    else
        k0 = -v / t;
    Integer best_u = u + k0 * s, best_v = v + k0 * t;
    for (Integer k = k0 - 2; k <= k0 + 2; ++k) {
        Integer cu = u + k * s, cv = v + k * t;
        bool better = abs(cu) < abs(best_u) ||
                      (abs(cu) == abs(best_u) &&
                       (abs(cv) < abs(best_v) || (abs(cv) == abs(best_v) && cu < best_u)));
        if (better) {
            best_u = cu;
            best_v = cv;
        }
    }
    return SL2Matrix(s, best_u, t, best_v);
}

const std::vector<SL2Matrix>& inverse_template() {
    // R_{0,1} R_{3,1} R_{6,1} R_{1,0}^8 = R_{1,0}^{-1}
    static const std::vector<SL2Matrix> letters = [] {
        std::vector<SL2Matrix> w{twist_matrix(0, 1), twist_matrix(3, 1), twist_matrix(6, 1)};
        for (int i = 0; i < 8; ++i) w.push_back(twist_matrix(1, 0));
        return w;
    }();
    return letters;
}

}  // namespace

TwistWord factor_inverse_twist(const SL2Matrix& T) {
    VanishingCycle vc = vanishing_cycle(T);
    if (vc.multiplicity != 1)
        throw NotAPositiveTwist("matrix " + show(T) + " is a twist power, not a twist");
    SL2Matrix L = conjugator_for(vc.s, vc.t);
    SL2Matrix Linv = L.inverse();
    if (!(L * twist_matrix(1, 0) * Linv == T))
        throw Error("internal: conjugator does not reproduce the twist");
    std::vector<SL2Matrix> letters;
    letters.reserve(inverse_template().size());
    for (const auto& m : inverse_template()) letters.push_back(L * m * Linv);
    TwistWord word(std::move(letters));
    if (!(total_monodromy(word) == T.inverse()))
        throw Error("internal: inverse factorization product check failed");
    return word;
}

TwistWord complete_to_sphere(const TwistWord& w) {
    if (w.empty()) throw EmptyWord("cannot complete the empty word");
    std::vector<SL2Matrix> letters = w.letters();
    for (std::size_t i = w.size(); i-- > 0;) {
        const TwistWord inv = factor_inverse_twist(w.letters()[i]);
        letters.insert(letters.end(), inv.letters().begin(), inv.letters().end());
    }
    TwistWord done(std::move(letters));
    if (!total_monodromy(done).is_identity())
        throw Error("internal: completed word is not a sphere monodromy");
    if (done.size() % 12 != 0) throw Error("internal: completed word length is not a multiple of 12");
    return done;
}

}  // namespace wfl
