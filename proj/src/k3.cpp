#include "weightfilt/k3.hpp"

#include <numeric>

namespace wfl {

bool LatticeVector::is_zero() const {
    for (auto c : coords)
        if (c != 0) return false;
    return true;
}

bool LatticeVector::is_primitive() const {
    std::int64_t g = 0;
    for (auto c : coords) g = std::gcd(g, c);
    return g == 1;
}

std::vector<Rational> LatticeVector::to_rational() const {
    std::vector<Rational> v(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) v[i] = coords[i];
    return v;
}

BilinearLattice::BilinearLattice(RationalMatrix gram, std::vector<std::string> basis_labels)
    : gram_(std::move(gram)), labels_(std::move(basis_labels)) {
    if (!gram_.is_symmetric()) throw ShapeMismatch("Gram matrix must be symmetric");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = 0; j < gram_.cols(); ++j)
            if (denominator(gram_.at(i, j)) != 1)
                throw ShapeMismatch("Gram matrix must have integer entries");
    if (labels_.size() != gram_.rows()) throw ShapeMismatch("basis label count vs rank");
}

Rational BilinearLattice::inner(const LatticeVector& v, const LatticeVector& w) const {
    if (v.size() != rank() || w.size() != rank())
        throw DimensionMismatch("lattice vector length vs rank");
    Rational acc(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (v.coords[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j)
            if (w.coords[j] != 0) acc += Rational(v.coords[i]) * gram_.at(i, j) * w.coords[j];
    }
    return acc;
}

bool BilinearLattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (numerator(gram_.at(i, i)) % 2 != 0) return false;
    return true;
}

Rational BilinearLattice::determinant() const { return gram_.det(); }

bool BilinearLattice::is_unimodular() const {
    Rational d = determinant();
    return d == 1 || d == -1;
}

RationalMatrix::Signature BilinearLattice::signature() const { return gram_.signature(); }

int BilinearLattice::label_index(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return static_cast<int>(i);
    return -1;
}

BilinearLattice hyperbolic_plane() {
    RationalMatrix g(2, 2);
    g.at(0, 1) = 1;
    g.at(1, 0) = 1;
    return BilinearLattice(std::move(g), {"e", "f"});
}

BilinearLattice e8_minus() {
    // Chain 1-2-3-4-5-6-7, node 8 attached to node 5 (arms 4, 2, 1).
    static const int edges[8][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}, {0, 0}};
    RationalMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g.at(i, i) = -2;
    for (int e = 0; e < 7; ++e) {
        int a = edges[e][0] - 1, b = edges[e][1] - 1;
        g.at(a, b) = 1;
        g.at(b, a) = 1;
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= 8; ++i) labels.push_back("r" + std::to_string(i));
    return BilinearLattice(std::move(g), std::move(labels));
}

BilinearLattice k3_lattice() {
    RationalMatrix g(22, 22);
    BilinearLattice e8 = e8_minus();
    for (int block = 0; block < 2; ++block)
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                g.at(block * 8 + i, block * 8 + j) = e8.gram().at(i, j);
    for (int block = 0; block < 3; ++block) {
        std::size_t o = 16 + 2 * block;
        g.at(o, o + 1) = 1;
        g.at(o + 1, o) = 1;
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= 8; ++i) labels.push_back("g" + std::to_string(i));
    for (int i = 1; i <= 8; ++i) labels.push_back("h" + std::to_string(i));
    for (int i = 1; i <= 3; ++i) {
        labels.push_back("e" + std::to_string(i));
        labels.push_back("f" + std::to_string(i));
    }
    return BilinearLattice(std::move(g), std::move(labels));
}

namespace {

void validate_beta_rho(const BilinearLattice& L, const LatticeVector& beta,
                       const LatticeVector& rho) {
    if (beta.size() != L.rank() || rho.size() != L.rank())
        throw DimensionMismatch("beta/rho length vs lattice rank");
    if (L.inner(beta, beta) != 0) throw PreconditionViolated("<beta,beta> != 0");
    if (L.inner(rho, beta) != 0) throw PreconditionViolated("<rho,beta> != 0");
    if (L.inner(rho, rho) <= 0) throw PreconditionViolated("<rho,rho> <= 0");
}

}  // namespace

RationalMatrix n_beta_rho(const BilinearLattice& L, const LatticeVector& beta,
                          const LatticeVector& rho) {
    validate_beta_rho(L, beta, rho);
    std::size_t n = L.rank();
    // Column j is <b_j,beta> rho - <b_j,rho> beta; the pairing covectors are
    // G beta and G rho.
    std::vector<Rational> gb(n, Rational(0)), gr(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (beta.coords[j] != 0) gb[i] += L.gram().at(i, j) * beta.coords[j];
            if (rho.coords[j] != 0) gr[i] += L.gram().at(i, j) * rho.coords[j];
        }
    RationalMatrix N(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            N.at(i, j) = gb[j] * rho.coords[i] - gr[j] * beta.coords[i];
    return N;
}

Filtration mprime_filtration(const BilinearLattice& L, const LatticeVector& beta,
                             const LatticeVector& rho) {
    RationalMatrix N = n_beta_rho(L, beta, rho);
    RationalMatrix N2 = N * N;
    std::map<int, RationalSubspace> steps;
    steps.emplace(0, image(N2));
    steps.emplace(1, image(N2));
    steps.emplace(2, kernel(N2));
    steps.emplace(3, kernel(N2));
    steps.emplace(4, RationalSubspace::full(L.rank()));
    return Filtration(L.rank(), std::move(steps));
}

namespace {

// Coordinate values in enumeration order: 0, 1, -1, 2, -2, ...
bool next_coord_value(std::int64_t& c, std::int64_t bound) {
    if (c == 0) {
        c = 1;
        return bound >= 1;
    }
    if (c > 0) {
        c = -c;
        return true;
    }
    c = -c + 1;
    return c <= bound;
}

}  // namespace

std::optional<LatticeVector> find_isotropic_orthogonal(const BilinearLattice& L,
                                                       const LatticeVector& alpha,
                                                       std::int64_t bound) {
    if (alpha.size() != L.rank()) throw DimensionMismatch("alpha length vs lattice rank");
    if (L.inner(alpha, alpha) <= 0) throw PreconditionViolated("<alpha,alpha> <= 0");
    if (bound < 0) return std::nullopt;
    std::size_t n = L.rank();
    LatticeVector beta;
    beta.coords.assign(n, 0);
    // Odometer over the box: coordinate 0 spins fastest, so candidates are
    // ordered by comparing from the last coordinate down.
    while (true) {
        std::size_t pos = 0;
        while (pos < n && !next_coord_value(beta.coords[pos], bound)) {
            beta.coords[pos] = 0;
            ++pos;
        }
        if (pos == n) return std::nullopt;
        if (!beta.is_primitive()) continue;
        if (L.inner(beta, beta) != 0) continue;
        if (L.inner(beta, alpha) != 0) continue;
        return beta;
    }
}

bool k3_pw_check(const BilinearLattice& L, const LatticeVector& beta, const LatticeVector& rho) {
    Filtration mprime = mprime_filtration(L, beta, rho);
    RationalMatrix beta_col(L.rank(), 1);
    for (std::size_t i = 0; i < L.rank(); ++i) beta_col.at(i, 0) = beta.coords[i];
    RationalSubspace p0 = image(beta_col);
    RationalSubspace p1 = ortho_complement(p0, L.gram());
    RationalSubspace p2 = RationalSubspace::full(L.rank());
    return subspace_equal(p0, mprime.step(0)) && subspace_equal(p1, mprime.step(2)) &&
           subspace_equal(p2, mprime.step(4));
}

}  // namespace wfl
