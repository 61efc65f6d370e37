#include "weightfilt/mwf.hpp"

#include <string>

namespace wfl {

NilpotentEndo::NilpotentEndo(RationalMatrix matrix, int center)
    : matrix_(std::move(matrix)), center_(center) {
    if (!matrix_.is_square()) throw DimensionMismatch("nilpotent operator must be square");
    std::size_t n = matrix_.rows();
    RationalMatrix p = RationalMatrix::identity(n);
    exponent_ = 0;
    while (!p.is_zero()) {
        if (exponent_ > n) throw NotNilpotent("matrix power " + std::to_string(n) + " is nonzero");
        p = p * matrix_;
        ++exponent_;
    }
}

RationalMatrix NilpotentEndo::monodromy() const {
    std::size_t n = matrix_.rows();
    RationalMatrix sum = RationalMatrix::identity(n);
    RationalMatrix term = RationalMatrix::identity(n);
    Rational factorial(1);
    for (unsigned i = 1; i < exponent_; ++i) {
        term = term * matrix_;
        factorial *= i;
        sum = sum + term.scaled(Rational(1) / factorial);
    }
    return sum;
}

namespace {

// Coordinates of v in the columns of B; the system is known consistent when
// v lies in the span.
bool coords_in(const RationalMatrix& B, const std::vector<Rational>& v,
               std::vector<Rational>& x) {
    return solve_linear(B, v, x);
}

std::vector<Rational> column_vec(const RationalMatrix& M, std::size_t j) {
    std::vector<Rational> v(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) v[i] = M.at(i, j);
    return v;
}

// Weight filtration centered at 0, as a map of explicit steps.
std::map<int, RationalSubspace> mwf_centered(const RationalMatrix& N) {
    std::size_t n = N.rows();
    std::map<int, RationalSubspace> steps;
    if (n == 0) {
        steps.emplace(0, RationalSubspace::full(0));
        return steps;
    }
    unsigned exponent = NilpotentEndo(N, 0).nilpotency_exponent();
    if (exponent <= 1) {  // N = 0
        steps.emplace(-1, RationalSubspace::zero(n));
        steps.emplace(0, RationalSubspace::full(n));
        return steps;
    }
    int l = static_cast<int>(exponent) - 1;
    RationalMatrix Nl = N.pow(exponent - 1);
    RationalSubspace K = kernel(Nl);
    RationalSubspace I = image(Nl);

    // Quotient K/I in coordinates of a deterministic complement C of I in K.
    RationalMatrix C = complement_in(I, K);
    std::size_t m = C.cols();
    RationalMatrix basis_KI = I.basis().hstack(C);
    RationalMatrix induced(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rational> y = N.apply(column_vec(C, j));
        std::vector<Rational> x;
        if (!coords_in(basis_KI, y, x))
            throw Error("internal: N does not preserve ker N^l");  // unreachable
        for (std::size_t i = 0; i < m; ++i) induced.at(i, j) = x[I.dim() + i];
    }
    std::map<int, RationalSubspace> sub = mwf_centered(induced);

    steps.emplace(-l - 1, RationalSubspace::zero(n));
    steps.emplace(-l, I);
    RationalSubspace zero_q = RationalSubspace::zero(m);
    for (int j = -l + 1; j <= l - 2; ++j) {
        // saturate the sub-filtration outside its stored range
        auto it = sub.upper_bound(j);
        const RationalSubspace& bar = (it == sub.begin()) ? zero_q : std::prev(it)->second;
        steps.emplace(j, I.sum(RationalSubspace::from_span(C * bar.basis())));
    }
    steps.emplace(l - 1, K);
    steps.emplace(l, RationalSubspace::full(n));
    return steps;
}

}  // namespace

Filtration weight_filtration(const NilpotentEndo& N) {
    std::map<int, RationalSubspace> centered = mwf_centered(N.matrix());
    std::map<int, RationalSubspace> steps;
    for (auto& [j, s] : centered) steps.emplace(j + N.center(), std::move(s));
    return Filtration(N.dim(), std::move(steps));
}

bool check_mwf_axioms(const NilpotentEndo& N, const Filtration& M) {
    if (M.ambient_dim() != N.dim())
        throw DimensionMismatch("filtration ambient " + std::to_string(M.ambient_dim()) +
                                " vs operator size " + std::to_string(N.dim()));
    if (!M.is_nested()) return false;

    int lo = M.lowest_jump(), hi = M.highest_jump();
    int k = N.center();

    // Axiom 1: N(M_j) in M_{j-2}. Outside [lo, hi+2] the containments are
    // trivial by saturation.
    for (int j = lo; j <= hi + 2; ++j)
        if (!M.step(j - 2).contains(M.step(j).apply(N.matrix()))) return false;

    // Axiom 2: N^l : Gr_{k+l} -> Gr_{k-l} is an isomorphism for all l >= 1.
    int span = std::max(hi - k, k - lo) + 1;
    for (int l = 1; l <= span; ++l) {
        RationalMatrix src = complement_in(M.step(k + l - 1), M.step(k + l));
        RationalMatrix tgt = complement_in(M.step(k - l - 1), M.step(k - l));
        if (src.cols() != tgt.cols()) return false;
        if (src.cols() == 0) continue;
        RationalMatrix Nl = N.matrix().pow(static_cast<unsigned>(l));
        RationalMatrix bottom_and_tgt = M.step(k - l - 1).basis().hstack(tgt);
        RationalMatrix graded(tgt.cols(), src.cols());
        for (std::size_t j = 0; j < src.cols(); ++j) {
            std::vector<Rational> y = Nl.apply(column_vec(src, j));
            std::vector<Rational> x;
            if (!coords_in(bottom_and_tgt, y, x)) return false;  // lands outside M_{k-l}
            for (std::size_t i = 0; i < tgt.cols(); ++i)
                graded.at(i, j) = x[M.step(k - l - 1).dim() + i];
        }
        if (graded.rank() != graded.cols()) return false;
    }
    return true;
}

}  // namespace wfl
