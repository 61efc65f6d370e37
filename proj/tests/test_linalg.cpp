#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "weightfilt/filtration.hpp"
#include "weightfilt/subspace.hpp"

using namespace wfl;
using wfl::testing::mat_from_ints;
using wfl::testing::random_matrix;
using wfl::testing::vec_from_ints;

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(Rational(3)) == "3");
    CHECK(rational_to_string(Rational(-4, 6)) == "-2/3");
    CHECK(rational_from_string("7/21") == Rational(1, 3));
    CHECK(rational_from_string("-5") == Rational(-5));
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("2.5"), ParseError);
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
}

TEST_CASE("kernel examples") {
    CHECK(kernel(RationalMatrix::zero(2, 2)) == RationalSubspace::full(2));
    CHECK(kernel(RationalMatrix::identity(2)) == RationalSubspace::zero(2));

    RationalMatrix ones = mat_from_ints({{1, 1}, {1, 1}});
    RationalSubspace k = kernel(ones);
    CHECK(k.dim() == 1);
    CHECK(k.contains(vec_from_ints({1, -1})));
}

TEST_CASE("image examples") {
    CHECK(image(RationalMatrix::identity(3)) == RationalSubspace::full(3));
    CHECK(image(RationalMatrix::zero(3, 2)) == RationalSubspace::zero(3));

    RationalMatrix col = mat_from_ints({{1}, {1}});
    RationalSubspace im = image(col);
    CHECK(im.dim() == 1);
    CHECK(im.contains(vec_from_ints({1, 1})));
}

TEST_CASE("ortho_complement examples") {
    RationalMatrix G = mat_from_ints({{0, 1}, {1, 0}});
    CHECK(ortho_complement(RationalSubspace::full(2), G) == RationalSubspace::zero(2));
    CHECK(ortho_complement(RationalSubspace::zero(2), G) == RationalSubspace::full(2));

    // e = (1,0) is isotropic in U, so e is orthogonal to itself
    RationalSubspace e = image(mat_from_ints({{1}, {0}}));
    CHECK(ortho_complement(e, G) == e);

    CHECK_THROWS_AS(ortho_complement(e, mat_from_ints({{1, 1}, {1, 1}})), DegeneratePairing);
    CHECK_THROWS_AS(ortho_complement(e, RationalMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("subspace_equal examples") {
    RationalSubspace a = image(mat_from_ints({{1}, {0}}));
    RationalSubspace b = image(mat_from_ints({{2}, {0}}));
    RationalSubspace c = image(mat_from_ints({{0}, {1}}));
    CHECK(subspace_equal(a, b));
    CHECK_FALSE(subspace_equal(a, c));
    CHECK(subspace_equal(kernel(mat_from_ints({{1, 1}, {1, 1}})),
                         image(mat_from_ints({{2}, {-2}}))));
    CHECK_THROWS_AS(subspace_equal(a, RationalSubspace::zero(3)), DimensionMismatch);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 rng(2024u);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        RationalMatrix m = random_matrix(rng, rows, cols);
        CHECK(kernel(m).dim() + image(m).dim() == cols);
    }
}

TEST_CASE("canonicalization is idempotent and scaling-invariant") {
    std::mt19937 rng(99u);
    for (int trial = 0; trial < 40; ++trial) {
        RationalMatrix m = random_matrix(rng, 5, 3);
        RationalSubspace s = RationalSubspace::from_span(m);
        CHECK(RationalSubspace::from_span(s.basis()) == s);
        CHECK(RationalSubspace::from_span(m.scaled(Rational(3, 7))) == s);
        // appending dependent columns changes nothing
        CHECK(RationalSubspace::from_span(m.hstack(m)) == s);
    }
}

TEST_CASE("ortho_complement is an involution for nondegenerate G") {
    std::mt19937 rng(7u);
    RationalMatrix G = mat_from_ints({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, -3}});
    REQUIRE(G.det() != 0);
    for (int trial = 0; trial < 30; ++trial) {
        RationalSubspace s = RationalSubspace::from_span(random_matrix(rng, 4, 1 + rng() % 3));
        RationalSubspace perp = ortho_complement(s, G);
        CHECK(s.dim() + perp.dim() == 4);
        CHECK(ortho_complement(perp, G) == s);
    }
}

TEST_CASE("subspace sum and intersection") {
    RationalSubspace a = image(mat_from_ints({{1, 0}, {0, 1}, {0, 0}}));
    RationalSubspace b = image(mat_from_ints({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(a.sum(b) == RationalSubspace::full(3));
    RationalSubspace meet = a.intersect(b);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(vec_from_ints({0, 1, 0})));
}

TEST_CASE("complement_in is deterministic and complements") {
    RationalSubspace inner = image(mat_from_ints({{1}, {1}, {0}}));
    RationalSubspace outer = RationalSubspace::full(3);
    RationalMatrix c = complement_in(inner, outer);
    CHECK(c.cols() == 2);
    CHECK(inner.sum(RationalSubspace::from_span(c)) == outer);
    // first echelon-independent standard basis vectors: e1 then e3
    CHECK(c.at(0, 0) == 1);
    CHECK(c.at(2, 1) == 1);
    CHECK_THROWS_AS(complement_in(outer, inner), PreconditionViolated);
}

TEST_CASE("filtration nesting and saturation") {
    std::map<int, RationalSubspace> steps;
    steps.emplace(0, image(mat_from_ints({{1}, {0}})));
    steps.emplace(2, RationalSubspace::full(2));
    Filtration f(2, steps);
    CHECK(f.step(-5).is_zero());
    CHECK(f.step(0).dim() == 1);
    CHECK(f.step(1).dim() == 1);
    CHECK(f.step(7).is_full());
    CHECK(f.is_nested());
    CHECK(f.graded_dim(0) == 1);
    CHECK(f.graded_dim(1) == 0);
    CHECK(f.graded_dim(2) == 1);

    // shifted semantics
    Filtration g = f.shifted(3);
    CHECK(g.step(3).dim() == 1);
    CHECK(g.step(2).is_zero());

    // not nested -> rejected
    std::map<int, RationalSubspace> bad;
    bad.emplace(0, image(mat_from_ints({{1}, {0}})));
    bad.emplace(1, image(mat_from_ints({{0}, {1}})));
    bad.emplace(2, RationalSubspace::full(2));
    CHECK_THROWS_AS(Filtration(2, bad), InvalidFiltration);

    // top must reach the full space
    std::map<int, RationalSubspace> low;
    low.emplace(0, image(mat_from_ints({{1}, {0}})));
    CHECK_THROWS_AS(Filtration(2, low), InvalidFiltration);
}

TEST_CASE("filtration equality is semantic") {
    std::map<int, RationalSubspace> a, b;
    a.emplace(0, image(mat_from_ints({{1}, {0}})));
    a.emplace(1, image(mat_from_ints({{1}, {0}})));
    a.emplace(2, RationalSubspace::full(2));
    b.emplace(0, image(mat_from_ints({{3}, {0}})));
    b.emplace(2, RationalSubspace::full(2));
    CHECK(Filtration(2, a) == Filtration(2, b));
    b.clear();
    b.emplace(1, image(mat_from_ints({{1}, {0}})));
    b.emplace(2, RationalSubspace::full(2));
    CHECK_FALSE(Filtration(2, a) == Filtration(2, b));
}

TEST_CASE("signature of small forms") {
    RationalMatrix U = mat_from_ints({{0, 1}, {1, 0}});
    auto sig = U.signature();
    CHECK(sig.positive == 1);
    CHECK(sig.negative == 1);
    CHECK(sig.zero == 0);

    RationalMatrix D = mat_from_ints({{2, 0, 0}, {0, -3, 0}, {0, 0, 0}});
    sig = D.signature();
    CHECK(sig.positive == 1);
    CHECK(sig.negative == 1);
    CHECK(sig.zero == 1);
}

TEST_CASE("solve_linear finds particular solutions") {
    RationalMatrix A = mat_from_ints({{1, 2}, {2, 4}});
    std::vector<Rational> x;
    CHECK(solve_linear(A, vec_from_ints({3, 6}), x));
    CHECK(A.apply(x) == vec_from_ints({3, 6}));
    CHECK_FALSE(solve_linear(A, vec_from_ints({3, 7}), x));
}
