#pragma once

#include <nlohmann/json_fwd.hpp>

#include "weightfilt/degen.hpp"
#include "weightfilt/k3.hpp"
#include "weightfilt/lefschetz.hpp"
#include "weightfilt/pw.hpp"
#include "weightfilt/snc.hpp"

// JSON formats. Rationals are strings "a/b" (or "a" when the denominator is
// 1); integer JSON numbers are accepted on input. Matrices are arrays of row
// arrays; a subspace is the matrix whose columns are its basis. All readers
// throw ParseError with a location string on malformed input.

namespace wfl {

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j, const std::string& where);

Json subspace_to_json(const RationalSubspace& s);

Json filtration_to_json(const Filtration& f);

// Fixture with keys n, faces, components, log_cy, curves, cohomology.
// Component labels default to a single component "0" when a face is absent
// from "components". Cohomology component keys are "<face-key>:<label>"
// ("" face key for the ambient space at level 0).
struct SncFixture {
    SncPair pair;
    StratumCohomology cohomology;
};
SncFixture snc_fixture_from_json(const Json& j);

// Fixture with the nerve keys plus d, monodromy_logs, pairing (one matrix
// for the middle degree or a map degree -> matrix), restrictions.
Degeneration degen_fixture_from_json(const Json& j);

// Fixture with keys betti, restrictions, weight.
struct PwFixture {
    FiberedSurfaceData surface;
    std::map<int, Filtration> weight;
};
PwFixture pw_fixture_from_json(const Json& j);

// Twist words: arrays of 2x2 integer matrices or of {"s":..,"t":..} pairs.
TwistWord twist_word_from_json(const Json& j);
Json twist_word_to_json(const TwistWord& w);
Json sl2_to_json(const SL2Matrix& m);

Json load_json_file(const std::string& path);

}  // namespace wfl
