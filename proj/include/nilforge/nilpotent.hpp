/// @file nilpotent.hpp
/// @brief 2-step nilpotent Lie algebras given by structure matrices C^k, the
/// duality with J-maps, abelian factors and pseudo H-type checks.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilforge/clifford.hpp"
#include "nilforge/exactlin.hpp"
#include "nilforge/matrix.hpp"

namespace nilforge {

enum class AlgebraTag { Adapted, Raw };

/// g = V + Z with [v_i, v_j] = sum_k C^k_ij z_k and Z central. Elements are
/// coordinate vectors of length m + n (V part first).
class NilpotentAlgebra2 {
public:
  NilpotentAlgebra2() = default;
  /// Validates shapes and antisymmetry (Error NotAntisymmetric). The tag is
  /// Adapted iff the C^k are linearly independent.
  NilpotentAlgebra2(std::size_t m, std::vector<RationalMatrix> c,
                    std::optional<SignatureForm> form_v = std::nullopt,
                    std::optional<SignatureForm> form_z = std::nullopt, bool symbolic = false);

  std::size_t m() const { return m_; }
  std::size_t n() const { return c_.size(); }
  std::size_t dim() const { return m_ + c_.size(); }
  const std::vector<RationalMatrix>& C() const { return c_; }
  const RationalMatrix& C(std::size_t k) const { return c_.at(k); }
  const std::optional<SignatureForm>& form_V() const { return form_v_; }
  const std::optional<SignatureForm>& form_Z() const { return form_z_; }
  AlgebraTag tag() const { return tag_; }
  /// Constants only known up to an unknown real scale (imported flag).
  bool symbolic() const { return symbolic_; }

  /// Center coefficients of [v_i, v_j].
  RationalVector bracket_coeffs(std::size_t i, std::size_t j) const;

  friend bool operator==(const NilpotentAlgebra2& a, const NilpotentAlgebra2& b) {
    return a.m_ == b.m_ && a.c_ == b.c_ && a.form_v_ == b.form_v_ && a.form_z_ == b.form_z_ &&
           a.symbolic_ == b.symbolic_;
  }

private:
  std::size_t m_ = 0;
  std::vector<RationalMatrix> c_;
  std::optional<SignatureForm> form_v_;
  std::optional<SignatureForm> form_z_;
  AlgebraTag tag_ = AlgebraTag::Adapted;
  bool symbolic_ = false;
};

/// An algebra whose two forms are present and non-degenerate.
class MetricAlgebra {
public:
  /// Throws Error(DegenerateForm) if a form is missing or degenerate.
  explicit MetricAlgebra(NilpotentAlgebra2 algebra);

  const NilpotentAlgebra2& algebra() const { return algebra_; }
  const SignatureForm& form_V() const { return *algebra_.form_V(); }
  const SignatureForm& form_Z() const { return *algebra_.form_Z(); }
  std::size_t m() const { return algebra_.m(); }
  std::size_t n() const { return algebra_.n(); }

private:
  NilpotentAlgebra2 algebra_;
};

RationalVector bracket(const NilpotentAlgebra2& a, const RationalVector& x, const RationalVector& y);

/// J_z with <J_z v, w>_V = <z, [v, w]>_Z.
RationalMatrix j_map(const MetricAlgebra& a, const RationalVector& z);
/// J_{z_1}, ..., J_{z_n} for the center basis.
std::vector<RationalMatrix> j_basis(const MetricAlgebra& a);

/// Inverse of j_map: the algebra with C^k = sum_l (G_Z^{-1})_{kl} J_l^T G_V.
/// Throws Error(NotSkew) if some J_k is not skew for form_V and
/// Error(DegenerateForm) for a degenerate form.
MetricAlgebra algebra_from_J(const std::vector<RationalMatrix>& j, const SignatureForm& form_v,
                             const SignatureForm& form_z);

/// Basis of span{[v_i, v_j]} in center coordinates.
std::vector<RationalVector> derived_ideal(const NilpotentAlgebra2& a);

struct AbelianSplit {
  NilpotentAlgebra2 g_star;                  ///< center replaced by [g, g]
  std::size_t a_dim = 0;                     ///< dim of [g, g]^perp in Z
  std::size_t kernel_dim = 0;                ///< dim ker(z -> J_z), equal to a_dim
  std::vector<RationalVector> derived_basis;
  std::vector<RationalVector> factor_basis;  ///< basis of [g, g]^perp
};

/// Throws Error(DegenerateRestriction) if form_Z degenerates on [g, g].
AbelianSplit abelian_factor(const MetricAlgebra& a);

struct PseudoHReport {
  bool skew = false;
  bool orthogonality = false;
  bool square_law = false;
  bool verdict = false;  ///< orthogonality on the polarized samples
  std::vector<LawSample> samples;
};

/// Laws checked on z_k and z_k +- z_l; by polarization these decide the
/// statements for all z.
PseudoHReport is_pseudo_H_type(const MetricAlgebra& a);

/// Rebuilds the bracket from J with both forms multiplied by c and compares
/// structure tensors.
bool rescale_and_compare(const MetricAlgebra& a, const Rational& c);

/// True iff T (dst.dim x src.dim) satisfies T[x, y] = [Tx, Ty] on all basis pairs.
bool is_homomorphism(const NilpotentAlgebra2& src, const NilpotentAlgebra2& dst,
                     const RationalMatrix& t);

/// Completes a V-part map A (dst.m x src.m) to an isomorphism diag(A, L) by
/// solving L [v_i, v_j] = [A v_i, A v_j] for the center map. Returns the
/// certified invertible map or nullopt.
std::optional<RationalMatrix> extend_to_isomorphism(const NilpotentAlgebra2& src,
                                                    const NilpotentAlgebra2& dst,
                                                    const RationalMatrix& a);

enum class ScalingKind { Isometry, AntiIsometry, IrrationalScaling, NotDiagonalizable, NotCertified };

std::string scaling_kind_name(ScalingKind k);

struct ScalingOutcome {
  ScalingKind kind = ScalingKind::NotCertified;
  RationalMatrix s;              ///< <v, w>_2 = <S v, w>_1
  Polynomial char_poly;          ///< of S
  std::vector<RationalRoot> eigenvalues;
  std::optional<RationalMatrix> phi;  ///< (m+n) square, maps algebra 2 to algebra 1
};

/// Both algebras must share m, n, form_Z and the J-map, have form_V of equal
/// index, and agree on causal type (up to one global sign flip) on the
/// witnesses and on the eigenvectors of S. Throws Error(Precondition)
/// otherwise, including when S fails the symmetry or commutation checks.
ScalingOutcome scaling_isomorphism(const MetricAlgebra& a1, const MetricAlgebra& a2,
                                   const std::vector<RationalVector>& witnesses = {});

}  // namespace nilforge
