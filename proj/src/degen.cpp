#include "weightfilt/degen.hpp"

#include <string>

namespace wfl {

Degeneration::Degeneration(Nerve nerve, int d, std::map<int, NilpotentEndo> monodromy_logs,
                           std::map<int, RationalMatrix> pairings,
                           std::map<int, RationalMatrix> restrictions)
    : nerve_(std::move(nerve)),
      d_(d),
      logs_(std::move(monodromy_logs)),
      pairings_(std::move(pairings)),
      restrictions_(std::move(restrictions)) {
    if (d_ < 0) throw PreconditionViolated("relative dimension must be >= 0");
    for (const auto& [k, N] : logs_) {
        if (k < 0 || k > 2 * d_)
            throw PreconditionViolated("monodromy log degree " + std::to_string(k) +
                                       " outside 0..2d");
        if (N.center() != k)
            throw PreconditionViolated("monodromy log in degree " + std::to_string(k) +
                                       " centered at " + std::to_string(N.center()));
        if (N.nilpotency_exponent() > static_cast<unsigned>(k) + 1)
            throw NotNilpotent("N^{k+1} != 0 in degree " + std::to_string(k));
    }
    for (const auto& [k, P] : pairings_) {
        if (!logs_.count(k) || !logs_.count(2 * d_ - k))
            throw MissingData("pairing in degree " + std::to_string(k) +
                              " without monodromy logs in both paired degrees");
        if (P.rows() != betti(k) || P.cols() != betti(2 * d_ - k))
            throw ShapeMismatch("pairing in degree " + std::to_string(k));
    }
    for (const auto& [k, R] : restrictions_) {
        if (!logs_.count(k)) throw MissingData("restriction without monodromy log in degree " +
                                               std::to_string(k));
        if (R.cols() != betti(k))
            throw ShapeMismatch("restriction in degree " + std::to_string(k));
    }
}

const NilpotentEndo& Degeneration::log(int degree) const {
    auto it = logs_.find(degree);
    if (it == logs_.end()) throw MissingData("monodromy log in degree " + std::to_string(degree));
    return it->second;
}

bool Degeneration::has_pairing(int degree) const {
    return pairings_.count(degree) > 0 || pairings_.count(2 * d_ - degree) > 0;
}

RationalMatrix Degeneration::pairing_for(int degree) const {
    auto it = pairings_.find(degree);
    if (it != pairings_.end()) return it->second;
    it = pairings_.find(2 * d_ - degree);
    if (it != pairings_.end()) return it->second.transpose();
    throw MissingData("pairing between degrees " + std::to_string(degree) + " and " +
                      std::to_string(2 * d_ - degree));
}

const RationalMatrix& Degeneration::restriction(int degree) const {
    auto it = restrictions_.find(degree);
    if (it == restrictions_.end())
        throw MissingRestriction("degree " + std::to_string(degree));
    return it->second;
}

int clemens_torus_dim(const Degeneration& deg, const Face& I) {
    if (!deg.nerve().has_face(I)) throw NotAFace("{" + face_key(I) + "}");
    return static_cast<int>(I.size()) - 1;
}

bool duality_check(const Degeneration& deg, int k) {
    int dual = 2 * deg.d() - k;
    const NilpotentEndo& Nk = deg.log(k);
    const NilpotentEndo& Ndual = deg.log(dual);
    RationalMatrix P = deg.pairing_for(k);
    if (P.det() == 0) throw DegeneratePairing("intersection pairing in degree " +
                                              std::to_string(k));
    Filtration Mk = weight_filtration(Nk);
    Filtration Mdual = weight_filtration(Ndual);
    // eta in H^k with <eta, zeta> = 0 for all zeta in M_{2d-2k} H^{2d-k};
    // the pairing couples two different spaces, so spell the complement out.
    const RationalSubspace& S = Mdual.step(2 * deg.d() - 2 * k);
    RationalSubspace complement = kernel((P * S.basis()).transpose());
    return subspace_equal(Mk.step(2 * k - 1), complement);
}

bool verify_maincy(const Degeneration& deg, int k) {
    const RationalMatrix& R = deg.restriction(k);
    Filtration M = weight_filtration(deg.log(k));
    return subspace_equal(M.step(2 * k - 1), kernel(R));
}

bool torus_span_check(const Degeneration& deg, int k, const RationalMatrix& torus_classes) {
    int dual = 2 * deg.d() - k;
    const NilpotentEndo& Ndual = deg.log(dual);
    RationalMatrix P = deg.pairing_for(k);
    if (!P.is_square()) throw ShapeMismatch("pairing must be square for the homology transpose");
    if (P.det() == 0) throw DegeneratePairing("intersection pairing in degree " +
                                              std::to_string(k));
    if (torus_classes.rows() != P.rows() && torus_classes.cols() > 0)
        throw DimensionMismatch("torus class columns vs H_k");
    // S_k = P^{-1} N_{2d-k}^T P: the adjoint of the dual-degree monodromy
    // log under the pairing identification of H_k with H^k coordinates.
    RationalMatrix Nt = Ndual.matrix().transpose();
    // Solve P X = Nt P column by column to avoid forming P^{-1}.
    RationalMatrix rhs = Nt * P;
    std::size_t n = P.rows();
    RationalMatrix S(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> b(n), x;
        for (std::size_t i = 0; i < n; ++i) b[i] = rhs.at(i, j);
        if (!solve_linear(P, b, x)) throw DegeneratePairing("pairing not invertible");
        for (std::size_t i = 0; i < n; ++i) S.at(i, j) = x[i];
    }
    RationalSubspace lhs = image(S.pow(static_cast<unsigned>(k)));
    RationalMatrix classes = torus_classes;
    if (classes.cols() == 0) classes = RationalMatrix(n, 0);
    return subspace_equal(lhs, image(classes));
}

}  // namespace wfl
