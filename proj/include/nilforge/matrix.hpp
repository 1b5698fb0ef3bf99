/// @file matrix.hpp
/// @brief Exact rational scalars, vectors and dense row-major matrices.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace nilforge {

/// Arbitrary precision rational, always kept in canonical form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Formats as "a/b", or "a" when the denominator is 1.
std::string format_rational(const Rational& x);

/// Parses "a", "-a", "a/b"; throws Error(Parse) on malformed text or a zero
/// denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

RationalVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RationalVector& v);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& c, const RationalVector& a);

class RationalMatrix {
public:
  RationalMatrix() = default;
  /// Zero matrix of the given shape.
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Small integer literal, mostly for fixed data and tests.
  static RationalMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const RationalVector& d);
  /// Column matrix holding v.
  static RationalMatrix column(const RationalVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Rational>& entries() const { return entries_; }
  RationalVector row(std::size_t i) const;
  RationalVector col(std::size_t j) const;

  RationalMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& c);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& c, RationalMatrix a);
RationalVector operator*(const RationalMatrix& a, const RationalVector& v);

/// XY - YX.
RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);
/// Row-major flattening.
RationalVector vectorize(const RationalMatrix& m);
RationalMatrix unvectorize(const RationalVector& v, std::size_t rows, std::size_t cols);
/// E_ij: single 1 at (i, j).
RationalMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);

}  // namespace nilforge
