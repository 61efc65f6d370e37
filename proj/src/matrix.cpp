#include "weightfilt/matrix.hpp"

#include <string>

namespace wfl {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeMismatch("ragged initializer rows");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::zero(std::size_t rows, std::size_t cols) {
    return RationalMatrix(rows, cols);
}

bool RationalMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("product of " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " and " + std::to_string(rhs.rows_) +
                                "x" + std::to_string(rhs.cols_));
    RationalMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] + rhs.entries_[i];
    return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] - rhs.entries_[i];
    return s;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = -entries_[i];
    return s;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = c * entries_[i];
    return s;
}

RationalMatrix RationalMatrix::pow(unsigned e) const {
    if (!is_square()) throw DimensionMismatch("power of a non-square matrix");
    RationalMatrix acc = identity(rows_);
    for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector product");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

RationalMatrix RationalMatrix::column(std::size_t j) const {
    RationalMatrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw DimensionMismatch("hstack row counts");
    RationalMatrix h(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) h.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) h.at(i, cols_ + j) = rhs.at(i, j);
    }
    return h;
}

std::vector<std::size_t> RationalMatrix::rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t i = pivot_row; i < rows_; ++i)
            if (at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel == rows_) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(pivot_row, j));
        Rational inv = Rational(1) / at(pivot_row, col);
        for (std::size_t j = col; j < cols_; ++j) at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row || at(i, col) == 0) continue;
            Rational f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return pivots;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix tmp = *this;
    return tmp.rref_in_place().size();
}

Rational RationalMatrix::det() const {
    if (!is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    RationalMatrix m = *this;
    Rational d(1);
    for (std::size_t col = 0; col < m.cols_; ++col) {
        std::size_t sel = m.rows_;
        for (std::size_t i = col; i < m.rows_; ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel == m.rows_) return Rational(0);
        if (sel != col) {
            for (std::size_t j = 0; j < m.cols_; ++j) std::swap(m.at(sel, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (std::size_t i = col + 1; i < m.rows_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rational f = m.at(i, col) * inv;
            for (std::size_t j = col; j < m.cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

RationalMatrix::Signature RationalMatrix::signature() const {
    if (!is_symmetric()) throw ShapeMismatch("signature needs a symmetric matrix");
    RationalMatrix m = *this;
    std::size_t n = m.rows_;
    Signature sig;
    // Exact congruence diagonalization: pivot on a nonzero diagonal entry,
    // creating one with a row+column move when the diagonal is all zero.
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && m.at(i, i) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            std::size_t a = n, b = n;
            for (std::size_t i = 0; i < n && a == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[i] && !done[j] && m.at(i, j) != 0) {
                        a = i;
                        b = j;
                        break;
                    }
            if (a == n) break;  // remaining block is zero
            // (e_a + e_b) has square 2*m(a,b) != 0
            for (std::size_t j = 0; j < n; ++j) m.at(a, j) += m.at(b, j);
            for (std::size_t i = 0; i < n; ++i) m.at(i, a) += m.at(i, b);
            p = a;
        }
        Rational piv = m.at(p, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p || done[i] || m.at(i, p) == 0) continue;
            Rational f = m.at(i, p) / piv;
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= f * m.at(p, j);
            for (std::size_t j = 0; j < n; ++j) m.at(j, i) -= f * m.at(j, p);
        }
        done[p] = true;
        if (piv > 0)
            ++sig.positive;
        else
            ++sig.negative;
    }
    sig.zero = n - sig.positive - sig.negative;
    return sig;
}

bool solve_linear(const RationalMatrix& A, const std::vector<Rational>& b,
                  std::vector<Rational>& solution) {
    if (b.size() != A.rows()) throw DimensionMismatch("solve_linear right-hand side");
    RationalMatrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref_in_place();
    if (!pivots.empty() && pivots.back() == A.cols()) return false;  // inconsistent
    solution.assign(A.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) solution[pivots[r]] = aug.at(r, A.cols());
    return true;
}

}  // namespace wfl
