#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "weightfilt/mwf.hpp"

using namespace wfl;
using wfl::testing::conjugate;
using wfl::testing::mat_from_ints;
using wfl::testing::random_nilpotent;
using wfl::testing::random_unimodular;

namespace {

RationalMatrix jordan_block(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
    return m;
}

Filtration transformed(const Filtration& f, const RationalMatrix& p) {
    std::map<int, RationalSubspace> steps;
    for (const auto& [j, s] : f.jumps()) steps.emplace(j, s.apply(p));
    return Filtration(f.ambient_dim(), std::move(steps));
}

// Replace one step of f by the value one jump higher (or slide a single
// jump down), producing a nested filtration different from f.
Filtration perturbed(const Filtration& f) {
    const auto& jumps = f.jumps();
    if (jumps.size() >= 2) {
        auto first = jumps.begin();
        auto second = std::next(first);
        std::map<int, RationalSubspace> steps(jumps);
        steps[first->first] = second->second;
        return Filtration(f.ambient_dim(), std::move(steps));
    }
    int j = jumps.begin()->first;
    std::map<int, RationalSubspace> steps;
    steps.emplace(j - 1, jumps.begin()->second);
    return Filtration(f.ambient_dim(), std::move(steps));
}

}  // namespace

TEST_CASE("NilpotentEndo rejects non-nilpotent input") {
    CHECK_THROWS_AS(NilpotentEndo(RationalMatrix::identity(2), 0), NotNilpotent);
    CHECK_THROWS_AS(NilpotentEndo(mat_from_ints({{0, 1}, {1, 0}}), 0), NotNilpotent);
    CHECK_THROWS_AS(NilpotentEndo(mat_from_ints({{0, 1, 0}}), 0), DimensionMismatch);
    CHECK(NilpotentEndo(jordan_block(3), 0).nilpotency_exponent() == 3);
    CHECK(NilpotentEndo(RationalMatrix::zero(2, 2), 0).nilpotency_exponent() == 1);
}

TEST_CASE("monodromy exp of the log") {
    NilpotentEndo n(jordan_block(3), 0);
    RationalMatrix expected = mat_from_ints({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    expected.at(0, 2) = Rational(1, 2);
    CHECK(n.monodromy() == expected);
}

TEST_CASE("weight filtration of the zero operator") {
    NilpotentEndo n(RationalMatrix::zero(3, 3), 5);
    Filtration m = weight_filtration(n);
    CHECK(m.step(4).is_zero());
    CHECK(m.step(5).is_full());
    CHECK(check_mwf_axioms(n, m));
}

TEST_CASE("weight filtration of a single Jordan block, center 2") {
    NilpotentEndo n(jordan_block(3), 2);
    Filtration m = weight_filtration(n);
    auto dims = m.graded_dims();
    REQUIRE(dims.size() == 3);
    CHECK(dims.at(0) == 1);
    CHECK(dims.at(2) == 1);
    CHECK(dims.at(4) == 1);
    RationalMatrix n2 = n.matrix().pow(2);
    CHECK(m.step(0) == image(n2));
    CHECK(m.step(3) == kernel(n2));
    CHECK(check_mwf_axioms(n, m));
}

TEST_CASE("check_mwf_axioms rejects the flat filtration on a Jordan block") {
    NilpotentEndo n(jordan_block(2), 1);
    std::map<int, RationalSubspace> steps;
    steps.emplace(1, RationalSubspace::full(2));
    Filtration flat(2, std::move(steps));
    CHECK_FALSE(check_mwf_axioms(n, flat));
    CHECK(check_mwf_axioms(n, weight_filtration(n)));
}

TEST_CASE("check_mwf_axioms dimension mismatch") {
    NilpotentEndo n(jordan_block(2), 0);
    std::map<int, RationalSubspace> steps;
    steps.emplace(0, RationalSubspace::full(3));
    Filtration f(3, std::move(steps));
    CHECK_THROWS_AS(check_mwf_axioms(n, f), DimensionMismatch);
}

TEST_CASE("direct sums of Jordan blocks get the textbook weights") {
    // J4 + J2 centered at 0: weights -3,-1,1,3 and -1,1
    RationalMatrix m(6, 6);
    for (std::size_t i = 0; i + 1 < 4; ++i) m.at(i, i + 1) = 1;
    m.at(4, 5) = 1;
    NilpotentEndo n(m, 0);
    Filtration f = weight_filtration(n);
    auto dims = f.graded_dims();
    CHECK(dims.at(-3) == 1);
    CHECK(dims.at(-1) == 2);
    CHECK(dims.at(1) == 2);
    CHECK(dims.at(3) == 1);
    CHECK(check_mwf_axioms(n, f));
}

TEST_CASE("monfilt endpoints on random nilpotents") {
    std::mt19937 rng(513u);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t size = 1 + rng() % 8;
        NilpotentEndo n(random_nilpotent(rng, size), static_cast<int>(rng() % 7) - 3);
        Filtration m = weight_filtration(n);
        int k = n.center();
        unsigned e = n.nilpotency_exponent();
        int l = static_cast<int>(e) - 1;
        CHECK(m.step(k - l) == image(n.matrix().pow(l)));
        CHECK(m.step(k + l - 1) == kernel(n.matrix().pow(l)));
        // the same identities one power up are the saturation bounds
        CHECK(m.step(k - l - 1).is_zero());
        CHECK(m.step(k + l).is_full());
    }
}

TEST_CASE("axioms hold and perturbations fail on random nilpotents") {
    std::mt19937 rng(871u);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t size = 1 + rng() % 8;
        NilpotentEndo n(random_nilpotent(rng, size), 0);
        Filtration m = weight_filtration(n);
        CHECK(check_mwf_axioms(n, m));
        Filtration wrong = perturbed(m);
        REQUIRE_FALSE(wrong == m);
        CHECK_FALSE(check_mwf_axioms(n, wrong));
    }
}

TEST_CASE("shift equivariance") {
    std::mt19937 rng(4321u);
    for (int trial = 0; trial < 10; ++trial) {
        RationalMatrix mat = random_nilpotent(rng, 1 + rng() % 7);
        int k = static_cast<int>(rng() % 5) - 2;
        Filtration base = weight_filtration(NilpotentEndo(mat, k));
        Filtration shifted = weight_filtration(NilpotentEndo(mat, k + 1));
        CHECK(shifted == base.shifted(1));
    }
}

TEST_CASE("conjugation equivariance") {
    std::mt19937 rng(99871u);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t size = 2 + rng() % 6;
        RationalMatrix mat = random_nilpotent(rng, size);
        RationalMatrix p = random_unimodular(rng, size);
        Filtration base = weight_filtration(NilpotentEndo(mat, 0));
        Filtration moved = weight_filtration(NilpotentEndo(conjugate(mat, p), 0));
        CHECK(moved == transformed(base, p));
    }
}
