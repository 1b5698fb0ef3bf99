/// @file exactlin.hpp
/// @brief Exact rational linear algebra: elimination, kernels, inertia, the
/// trace form on matrix subspaces, and rational root detection.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilforge/matrix.hpp"

namespace nilforge {

struct Echelon {
  RationalMatrix reduced;            ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

Echelon rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
/// Basis of the right null space {x : Mx = 0}.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
/// Some solution of Ax = b, or nullopt if the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

/// Matrix whose rows are the given vectors.
RationalMatrix stack_rows(const std::vector<RationalVector>& rows, std::size_t width);
/// Basis (rref rows) of the span of the given vectors.
std::vector<RationalVector> row_space_basis(const std::vector<RationalVector>& rows,
                                            std::size_t width);

struct Inertia {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t nullity = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia by symmetric congruence diagonalization. Zero diagonal
/// pivots are handled with 2x2 hyperbolic blocks.
Inertia signature(const RationalMatrix& m);

/// diag(I_p, -I_q).
RationalMatrix eta(std::size_t p, std::size_t q);

/// Symmetric bilinear form with cached inertia.
class SignatureForm {
public:
  explicit SignatureForm(RationalMatrix matrix);
  static SignatureForm standard(std::size_t p, std::size_t q);

  const RationalMatrix& matrix() const { return matrix_; }
  const Inertia& inertia() const { return inertia_; }
  std::size_t size() const { return matrix_.rows(); }
  bool is_nondegenerate() const { return inertia_.nullity == 0; }
  Rational operator()(const RationalVector& u, const RationalVector& v) const;

  friend bool operator==(const SignatureForm& a, const SignatureForm& b) {
    return a.matrix_ == b.matrix_;
  }

private:
  RationalMatrix matrix_;
  Inertia inertia_;
};

/// Incrementally maintained echelon basis of a subspace of Q^width.
class SpanReducer {
public:
  explicit SpanReducer(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t dim() const { return rows_.size(); }
  bool contains(const RationalVector& v) const;
  /// Adds v; returns false (and leaves the span unchanged) if v was already in it.
  bool insert(const RationalVector& v);

private:
  RationalVector reduce(RationalVector v) const;

  std::size_t width_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coordinates with respect to a fixed independent list of vectors.
class CoordinateSolver {
public:
  CoordinateSolver(std::vector<RationalVector> basis, std::size_t width);

  std::size_t dim() const { return basis_.size(); }
  /// Coordinates of x, or nullopt if x is outside the span.
  std::optional<RationalVector> coordinates(const RationalVector& x) const;

private:
  std::vector<RationalVector> basis_;
  std::size_t width_;
  std::vector<std::size_t> pivot_cols_;
  RationalMatrix pivot_inverse_;
};

/// Ordered independent list of ambient_dim x ambient_dim matrices.
class MatrixSubspace {
public:
  MatrixSubspace() = default;
  /// Throws Error(NotIndependent) on a dependent list and Error(DimMismatch)
  /// on a wrongly shaped matrix.
  MatrixSubspace(std::size_t ambient_dim, std::vector<RationalMatrix> basis);

  /// Basis of the span of a possibly dependent generating list, keeping the
  /// first independent members in order.
  static MatrixSubspace span_of(std::size_t ambient_dim,
                                const std::vector<RationalMatrix>& generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RationalMatrix>& basis() const { return basis_; }
  const RationalMatrix& operator[](std::size_t i) const { return basis_[i]; }

  bool contains(const RationalMatrix& x) const;
  std::optional<RationalVector> coordinates(const RationalMatrix& x) const;
  RationalMatrix combination(const RationalVector& coeffs) const;

private:
  std::size_t ambient_dim_ = 0;
  std::vector<RationalMatrix> basis_;
};

/// -tr(XY).
Rational trace_form(const RationalMatrix& x, const RationalMatrix& y);
/// Gram matrix G_ab = -tr(S_a S_b).
RationalMatrix trace_gram(const MatrixSubspace& s);
/// G_ab = -tr(A_a B_b) for two lists.
RationalMatrix trace_pairing(const std::vector<RationalMatrix>& a,
                             const std::vector<RationalMatrix>& b);

bool subspace_contains(const MatrixSubspace& big, const MatrixSubspace& small);
/// Equality by double inclusion.
bool same_subspace(const MatrixSubspace& a, const MatrixSubspace& b);
/// Dimension of a + b.
std::size_t sum_dim(const MatrixSubspace& a, const MatrixSubspace& b);

/// eta X^T eta == -X.
bool in_so(const RationalMatrix& x, const RationalMatrix& eta_matrix);

/// Polynomial with coefficients from the constant term upwards.
struct Polynomial {
  std::vector<Rational> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Rational operator()(const Rational& x) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Monic det(xI - M), by Faddeev-LeVerrier.
Polynomial characteristic_polynomial(const RationalMatrix& m);

struct RationalRoot {
  Rational value;
  std::size_t multiplicity;
};

/// Rational roots with multiplicity, ascending. Roots are found by the rational
/// root test on the integer-cleared polynomial and deflated exactly.
std::vector<RationalRoot> rational_roots(const Polynomial& p);

/// sqrt(x) when x is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

}  // namespace nilforge
