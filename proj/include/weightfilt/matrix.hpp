#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "weightfilt/rational.hpp"

namespace wfl {

// Dense matrix over Q, row-major. Everything is exact; sizes are desk scale
// (a few hundred at most), so no sparsity or pivoting heuristics.
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix operator-() const;
    RationalMatrix scaled(const Rational& c) const;
    bool operator==(const RationalMatrix& rhs) const = default;

    // M^e for square M, e >= 0.
    RationalMatrix pow(unsigned e) const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    RationalMatrix column(std::size_t j) const;
    // [this | rhs], row counts must agree.
    RationalMatrix hstack(const RationalMatrix& rhs) const;

    // In-place reduced row echelon form; returns the pivot column indices.
    std::vector<std::size_t> rref_in_place();

    std::size_t rank() const;
    // Determinant of a square matrix, by fraction-exact elimination.
    Rational det() const;

    // Signature (p, n, z) of a symmetric matrix: the counts of positive,
    // negative and zero diagonal entries after an exact congruence
    // diagonalization (Sylvester).
    struct Signature {
        std::size_t positive = 0, negative = 0, zero = 0;
    };
    Signature signature() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// One solution x of A x = b, if the system is consistent.
bool solve_linear(const RationalMatrix& A, const std::vector<Rational>& b,
                  std::vector<Rational>& solution);

}  // namespace wfl
