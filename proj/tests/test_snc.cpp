#include <doctest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "weightfilt/json_io.hpp"
#include "weightfilt/snc.hpp"

using namespace wfl;

namespace {

SncFixture load_fixture(const std::string& name) {
    return snc_fixture_from_json(load_json_file(std::string(WFL_FIXTURES_DIR) + "/" + name));
}

// Kuenneth oracle: H^*((C^*)^delta) has dimension C(delta, k) in degree k,
// all of it in weight 2k.
WeightTable torus_power_table(int delta) {
    WeightTable t;
    for (int k = 0; k <= delta; ++k) t.set(k, 2 * k, binomial(delta, k));
    return t;
}

bool tables_equal(const WeightTable& a, const WeightTable& b) {
    return a.entries() == b.entries();
}

// Nerve of a single smooth divisor.
SncPair single_divisor() {
    return SncPair(Nerve(1, {{1}}, {{{1}, {"0"}}}), false, {});
}

// C(rows(M), k) x C(cols(M), k) matrix of k-fold wedge minors.
RationalMatrix wedge_power(const RationalMatrix& m, int k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    auto subsets = [](std::size_t n, int k2) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (static_cast<int>(cur.size()) == k2) {
                out.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < n; ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };
    row_sets = subsets(m.rows(), k);
    col_sets = subsets(m.cols(), k);
    RationalMatrix w(row_sets.size(), col_sets.size());
    for (std::size_t i = 0; i < row_sets.size(); ++i)
        for (std::size_t j = 0; j < col_sets.size(); ++j) {
            RationalMatrix minor(k, k);
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    minor.at(a, b) = m.at(row_sets[i][a], col_sets[j][b]);
            w.at(i, j) = minor.det();
        }
    return w;
}

}  // namespace

TEST_CASE("face keys") {
    CHECK(face_key({1, 3}) == "1,3");
    CHECK(face_key({}) == "");
    CHECK(face_from_key("2,5") == Face{2, 5});
    CHECK(face_from_key("") == Face{});
    CHECK_THROWS_AS(face_from_key("3,1"), ParseError);
    CHECK_THROWS_AS(face_from_key("a,b"), ParseError);
}

TEST_CASE("nerve validation") {
    CHECK_THROWS_AS(Nerve(0, {}, {}), EmptyNerve);
    // missing singleton {2}
    CHECK_THROWS_AS(Nerve(2, {{1}}, {{{1}, {"0"}}}), InvalidNerve);
    // not closed: {1,2} without {2}... singletons also enforced
    CHECK_THROWS_AS(Nerve(2, {{1}, {1, 2}}, {{{1}, {"0"}}, {{1, 2}, {"0"}}}), InvalidNerve);
    // component list missing
    CHECK_THROWS_AS(Nerve(1, {{1}}, {}), InvalidNerve);
    // out of range index
    CHECK_THROWS_AS(Nerve(1, {{1}, {2}}, {{{1}, {"0"}}, {{2}, {"0"}}}), InvalidNerve);

    Nerve ok(2, {{1}, {2}, {1, 2}}, {{{1}, {"0"}}, {{2}, {"0"}}, {{1, 2}, {"a", "b"}}});
    CHECK(ok.max_face_size() == 2);
    CHECK(ok.check_closure());
    CHECK(ok.components_of({1, 2}).size() == 2);
    CHECK_THROWS_AS(ok.components_of({3}), NotAFace);
}

TEST_CASE("stratify the triangle") {
    SncFixture fx = load_fixture("triangle.json");
    StrataInfo info = stratify(fx.pair);
    CHECK(info.delta == 2);
    REQUIRE(info.minimal.size() == 3);
    for (const auto& comp : info.minimal) CHECK(comp.face.size() == 2);
    REQUIRE(info.profound.size() == 3);
    for (const auto& torus : info.profound) CHECK(torus.dim == 2);
    // profound torus count always equals minimal component count
    CHECK(info.profound.size() == info.minimal.size());
}

TEST_CASE("stratify a single smooth divisor") {
    StrataInfo info = stratify(single_divisor());
    CHECK(info.delta == 1);
    REQUIRE(info.minimal.size() == 1);
    CHECK(info.minimal[0].face == Face{1});
}

TEST_CASE("stratify the tetrahedron") {
    SncFixture fx = load_fixture("tetrahedron.json");
    StrataInfo info = stratify(fx.pair);
    CHECK(info.delta == 3);
    REQUIRE(info.minimal.size() == 4);
    for (const auto& comp : info.minimal) CHECK(comp.face.size() == 3);
}

TEST_CASE("star condition on the triangle") {
    SncFixture fx = load_fixture("triangle.json");
    StarReport report = check_star_condition(fx.pair);
    CHECK(report.ok);
    CHECK(report.reason.empty());
}

TEST_CASE("star condition fails on unequal minimal sizes") {
    // two divisors meeting nobody: minimal strata {1} and {2} have size 1;
    // add a third meeting the first: minimal strata {1,3} and {2} differ
    Nerve nerve(3, {{1}, {2}, {3}, {1, 3}},
                {{{1}, {"0"}}, {{2}, {"0"}}, {{3}, {"0"}}, {{1, 3}, {"0"}}});
    SncPair pair(std::move(nerve), false, {});
    StarReport report = check_star_condition(pair);
    CHECK_FALSE(report.ok);
    CHECK(report.reason.find("unequal") != std::string::npos);
}

TEST_CASE("star condition fails without connecting curves") {
    Nerve nerve(2, {{1}, {2}}, {{{1}, {"0"}}, {{2}, {"0"}}});
    SncPair pair(std::move(nerve), false, {});
    StarReport report = check_star_condition(pair);
    CHECK_FALSE(report.ok);
    CHECK(report.reason.find("not connected") != std::string::npos);
}

TEST_CASE("curve records are validated") {
    Nerve nerve(2, {{1}, {2}}, {{{1}, {"0"}}, {{2}, {"0"}}});
    CurveRecord bad{1, {{1}, "0"}, {{2}, "0"}};  // level 1 needs size-2 faces
    CHECK_THROWS_AS(SncPair(nerve, false, {bad}), InvalidNerve);
    CurveRecord unknown{0, {{1}, "7"}, {{2}, "0"}};
    CHECK_THROWS_AS(SncPair(nerve, false, {unknown}), InvalidNerve);
}

TEST_CASE("weight spectral sequence of (P^1, two points)") {
    SncFixture fx = load_fixture("p1_pair.json");
    WeightTable table = weight_ss(fx.pair, fx.cohomology);
    CHECK(tables_equal(table, torus_power_table(1)));
    CHECK(table.dim(0, 0) == 1);
    CHECK(table.dim(1, 2) == 1);
    CHECK(table.betti(0) == 1);
    CHECK(table.betti(1) == 1);
    CHECK(table.betti(2) == 0);
}

TEST_CASE("weight spectral sequence of (P^2, triangle)") {
    SncFixture fx = load_fixture("triangle.json");
    WeightTable table = weight_ss(fx.pair, fx.cohomology);
    CHECK(tables_equal(table, torus_power_table(2)));
    CHECK(table.dim(1, 2) == 2);
    CHECK(table.dim(2, 4) == 1);
    CHECK(check_bound(table, 2));
}

TEST_CASE("weight spectral sequence of (P^3, tetrahedron)") {
    SncFixture fx = load_fixture("tetrahedron.json");
    WeightTable table = weight_ss(fx.pair, fx.cohomology);
    CHECK(tables_equal(table, torus_power_table(3)));
    for (int k = 0; k <= 3; ++k) CHECK(table.dim(k, 2 * k) == binomial(3, k));
    CHECK(check_bound(table, 3));
}

TEST_CASE("d1 squared nonzero is rejected with its spot") {
    SncFixture fx = load_fixture("triangle.json");
    // flip one sign in a node-to-line Gysin block; the square to H^4(X)
    // then picks up 2 instead of 0
    StratumCohomology broken = fx.cohomology;
    auto levels = broken.levels();
    StratumComponent node{{1, 2}, "0"};
    auto data = levels.at(2).at(node);
    data.gysin[StratumComponent{{1}, "0"}][0].at(0, 0) = -1;
    broken.set_component(2, node, data);
    try {
        weight_ss(fx.pair, broken);
        FAIL("expected D1SquareNonzero");
    } catch (const D1SquareNonzero& e) {
        CHECK(e.p == -2);
        CHECK(e.q == 4);
    }
}

TEST_CASE("gysin shape mismatches are rejected") {
    SncFixture fx = load_fixture("p1_pair.json");
    StratumCohomology broken = fx.cohomology;
    StratumComponent pt{{1}, "0"};
    auto data = broken.levels().at(1).at(pt);
    data.gysin[StratumComponent{{}, "0"}][0] = RationalMatrix(2, 2);
    broken.set_component(1, pt, data);
    CHECK_THROWS_AS(weight_ss(fx.pair, broken), ShapeMismatch);
}

TEST_CASE("check_bound flags an oversized top-weight piece") {
    WeightTable fat;
    fat.set(0, 0, 1);
    fat.set(1, 2, 3);  // C(2,1) = 2 < 3
    CHECK_FALSE(check_bound(fat, 2));
    CHECK(check_bound(fat, 3));
}

TEST_CASE("top weight generators of the triangle") {
    SncFixture fx = load_fixture("triangle.json");

    TopWeightBasis top = top_weight_generators(fx.pair, fx.cohomology, 2);
    REQUIRE(top.basis.size() == 3);
    CHECK(top.kernel.dim() == 1);
    // kernel = span{(1,-1,1)} for the alternating-sign convention
    CHECK(top.kernel.contains({Rational(1), Rational(-1), Rational(1)}));

    TopWeightBasis mid = top_weight_generators(fx.pair, fx.cohomology, 1);
    REQUIRE(mid.basis.size() == 3);
    CHECK(mid.kernel.dim() == 2);

    TopWeightBasis deep = top_weight_generators(single_divisor(), StratumCohomology(), 2);
    CHECK(deep.basis.empty());
    CHECK(deep.kernel.ambient_dim() == 0);
}

TEST_CASE("euler characteristics match across the sequence") {
    for (const char* name : {"p1_pair.json", "triangle.json", "tetrahedron.json"}) {
        SncFixture fx = load_fixture(name);
        WeightTable table = weight_ss(fx.pair, fx.cohomology);
        long e1 = 0;
        for (const auto& [level, comps] : fx.cohomology.levels())
            for (const auto& [comp, data] : comps)
                for (std::size_t deg = 0; deg < data.betti.size(); ++deg) {
                    long sign = (static_cast<long>(deg) + level) % 2 == 0 ? 1 : -1;
                    e1 += sign * static_cast<long>(data.betti[deg]);
                }
        long e2 = 0;
        for (const auto& [key, dim] : table.entries())
            e2 += (key.first % 2 == 0 ? 1 : -1) * static_cast<long>(dim);
        CHECK(e1 == e2);
    }
}

TEST_CASE("sub-torus classes span the exterior algebra") {
    // H_1 of a |J|-torus is Q^{|J|}; the class of the sub-torus T_I in H_k
    // is the wedge of the included H_1 basis vectors. For every J of size
    // up to 4 and every k, those classes must fill Lambda^k Q^{|J|}.
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t k = 1; k <= m; ++k) {
            // inclusion matrix of all k-subsets at once is the identity on
            // Q^m, so wedge it and read off the columns per subset
            RationalMatrix incl = RationalMatrix::identity(m);
            RationalMatrix classes = wedge_power(incl, static_cast<int>(k));
            CHECK(classes.rank() == binomial(static_cast<int>(m), static_cast<int>(k)));
            CHECK(image(classes) ==
                  RationalSubspace::full(binomial(static_cast<int>(m), static_cast<int>(k))));
        }
    }
    // a change of basis upstairs does not change the span
    RationalMatrix skew(4, 4);
    int vals[4][4] = {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) skew.at(i, j) = vals[i][j];
    REQUIRE(skew.det() == 1);
    CHECK(wedge_power(skew, 2).rank() == 6);
}

TEST_CASE("binomials") {
    CHECK(binomial(3, 0) == 1);
    CHECK(binomial(3, 2) == 3);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(22, 11) == 705432);
}
