#include <doctest.h>

#include "test_util.hpp"
#include <nlohmann/json.hpp>

#include "weightfilt/json_io.hpp"
#include "weightfilt/k3.hpp"
#include "weightfilt/pw.hpp"

using namespace wfl;
using wfl::testing::mat_from_ints;

namespace {

PwFixture load_pw(const std::string& name) {
    return pw_fixture_from_json(load_json_file(std::string(WFL_FIXTURES_DIR) + "/" + name));
}

}  // namespace

TEST_CASE("perverse filtration of the torus-over-torus surface") {
    // restrictions to the fiber are isomorphisms in every degree, so every
    // kernel is zero
    PwFixture fx = load_pw("cstar2.json");
    std::map<int, Filtration> P = perverse_filtration_surface(fx.surface);
    for (int k = 0; k <= 2; ++k) {
        CHECK(P.at(k).step(k - 1).is_zero());
        CHECK(P.at(k).step(k).is_full());
        CHECK(P.at(k).step(k - 2).is_zero());
    }
}

TEST_CASE("zero restriction puts everything in the low perverse step") {
    std::map<int, RationalMatrix> restr;
    restr.emplace(0, RationalMatrix::identity(1));
    restr.emplace(1, RationalMatrix(2, 0));
    restr.emplace(2, RationalMatrix::zero(1, 1));
    FiberedSurfaceData data({1, 0, 1}, std::move(restr));
    std::map<int, Filtration> P = perverse_filtration_surface(data);
    CHECK(P.at(2).step(1).is_full());
}

TEST_CASE("K3 restriction data reproduces beta-perp") {
    BilinearLattice L = k3_lattice();
    RationalMatrix pair_with_beta(1, 22);
    pair_with_beta.at(0, 17) = 1;  // <x, e1> reads the f1 coordinate
    std::map<int, RationalMatrix> restr;
    restr.emplace(0, RationalMatrix::identity(1));
    restr.emplace(1, RationalMatrix(2, 0));
    restr.emplace(2, pair_with_beta);
    FiberedSurfaceData data({1, 0, 22}, std::move(restr));
    std::map<int, Filtration> P = perverse_filtration_surface(data);

    RationalMatrix beta(22, 1);
    beta.at(16, 0) = 1;
    CHECK(P.at(2).step(1) == ortho_complement(image(beta), L.gram()));
}

TEST_CASE("fibered surface data is shape checked") {
    std::map<int, RationalMatrix> restr;
    restr.emplace(0, RationalMatrix::identity(1));
    restr.emplace(1, RationalMatrix::identity(2));
    CHECK_THROWS_AS(FiberedSurfaceData({1, 2, 1}, std::move(restr)), ShapeMismatch);

    std::map<int, RationalMatrix> ragged;
    ragged.emplace(0, RationalMatrix::identity(1));
    ragged.emplace(1, RationalMatrix::identity(2));
    ragged.emplace(2, RationalMatrix(2, 1));  // H^2 of the torus is a line
    CHECK_THROWS_AS(FiberedSurfaceData({1, 2, 1}, std::move(ragged)), ShapeMismatch);
}

TEST_CASE("pw_compare on the torus fixture") {
    PwFixture fx = load_pw("cstar2.json");
    std::map<int, Filtration> P = perverse_filtration_surface(fx.surface);
    CHECK(pw_compare(P, fx.weight));

    // the graded consequences: dim Gr^P_m = dim Gr^W_{2m}, odd W grades zero
    for (const auto& [degree, w] : fx.weight) {
        const Filtration& p = P.at(degree);
        for (int m = -1; m <= degree + 1; ++m) {
            CHECK(p.graded_dim(m) == w.step(2 * m).dim() - w.step(2 * m - 2).dim());
            CHECK(w.graded_dim(2 * m + 1) == 0);
        }
    }
}

TEST_CASE("pw_compare detects a swapped step") {
    PwFixture fx = load_pw("cstar2.json");
    std::map<int, Filtration> P = perverse_filtration_surface(fx.surface);
    std::map<int, Filtration> W = fx.weight;
    // shift the H^1 weight jump one index early: W_1 becomes full
    std::map<int, RationalSubspace> steps;
    steps.emplace(1, RationalSubspace::full(2));
    W.at(1) = Filtration(2, std::move(steps));
    CHECK_FALSE(pw_compare(P, W));

    std::map<int, Filtration> missing;
    missing.emplace(7, P.at(0));
    CHECK_THROWS_AS(pw_compare(missing, W), DimensionMismatch);
}

TEST_CASE("pw_compare against the K3 middle degree") {
    BilinearLattice L = k3_lattice();
    LatticeVector beta, rho;
    beta.coords.assign(22, 0);
    beta.coords[16] = 1;
    rho.coords.assign(22, 0);
    rho.coords[18] = 1;
    rho.coords[19] = 1;

    RationalMatrix beta_col(22, 1);
    beta_col.at(16, 0) = 1;
    std::map<int, RationalSubspace> psteps;
    psteps.emplace(0, image(beta_col));
    psteps.emplace(1, ortho_complement(image(beta_col), L.gram()));
    psteps.emplace(2, RationalSubspace::full(22));
    std::map<int, Filtration> P;
    P.emplace(2, Filtration(22, std::move(psteps)));

    std::map<int, Filtration> W;
    W.emplace(2, mprime_filtration(L, beta, rho));
    CHECK(pw_compare(P, W));
}
