#pragma once

#include <stdexcept>
#include <string>

namespace wfl {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error("shape mismatch: " + msg) {}
};

struct DegeneratePairing : Error {
    explicit DegeneratePairing(const std::string& msg) : Error("degenerate pairing: " + msg) {}
};

struct NotNilpotent : Error {
    explicit NotNilpotent(const std::string& msg) : Error("not nilpotent: " + msg) {}
};

struct InvalidFiltration : Error {
    explicit InvalidFiltration(const std::string& msg) : Error("invalid filtration: " + msg) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error("precondition violated: " + msg) {}
};

struct EmptyNerve : Error {
    explicit EmptyNerve(const std::string& msg) : Error("empty nerve: " + msg) {}
};

struct InvalidNerve : Error {
    explicit InvalidNerve(const std::string& msg) : Error("invalid nerve: " + msg) {}
};

struct NotAFace : Error {
    explicit NotAFace(const std::string& msg) : Error("not a face: " + msg) {}
};

// Raised by the weight spectral sequence when the assembled d1 fails d1*d1 = 0.
// Carries the E1 spot (p, q) of the offending source term.
struct D1SquareNonzero : Error {
    int p, q;
    D1SquareNonzero(int p_, int q_)
        : Error("d1*d1 != 0 at E1^{" + std::to_string(p_) + "," + std::to_string(q_) + "}"),
          p(p_), q(q_) {}
};

struct MissingData : Error {
    explicit MissingData(const std::string& msg) : Error("missing data: " + msg) {}
};

struct MissingRestriction : Error {
    explicit MissingRestriction(const std::string& msg) : Error("missing restriction: " + msg) {}
};

struct NotPrimitive : Error {
    explicit NotPrimitive(const std::string& msg) : Error("not primitive: " + msg) {}
};

struct NotAPositiveTwist : Error {
    explicit NotAPositiveTwist(const std::string& msg) : Error("not a positive twist: " + msg) {}
};

struct PositionOutOfRange : Error {
    explicit PositionOutOfRange(const std::string& msg) : Error("position out of range: " + msg) {}
};

struct EmptyWord : Error {
    explicit EmptyWord(const std::string& msg) : Error("empty word: " + msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

}  // namespace wfl
