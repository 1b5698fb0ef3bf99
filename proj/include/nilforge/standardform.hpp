/// @file standardform.hpp
/// @brief Structure spaces, eta-twists into so(p,q), standard pseudo-metric
/// algebras, free 2-step algebras and the GL(m) action on so(p,q).
#pragma once

#include <cstddef>
#include <vector>

#include "nilforge/exactlin.hpp"
#include "nilforge/nilpotent.hpp"

namespace nilforge {

enum class TwistSide { Right, Left };

/// R^{p,q} + W with W in so(p,q) and <[v, w], z> = <z v, w>_{p,q}.
struct StandardPseudoMetricAlgebra {
  std::size_t p = 0;
  std::size_t q = 0;
  MatrixSubspace W;
  RationalMatrix gram_W;
  NilpotentAlgebra2 algebra;  ///< center coordinates are W-basis coordinates
};

/// span{C^1, ..., C^n}. Throws Error(NotAdapted) for raw algebras.
MatrixSubspace structure_space(const NilpotentAlgebra2& a);

/// {C^k eta} (Right) or {eta C^k} (Left). Throws Error(Dim) if p + q differs
/// from the ambient size.
MatrixSubspace eta_twist(const MatrixSubspace& c, std::size_t p, std::size_t q, TwistSide side);

struct RealizationCandidate {
  std::size_t p = 0;
  std::size_t q = 0;
  RationalMatrix gram;
  Inertia gram_signature;
  bool nondegenerate = false;
};

/// Every (p, q) with p + q = m in ascending p, twisted on the given side.
std::vector<RealizationCandidate> scan_realizations(const NilpotentAlgebra2& a,
                                                    TwistSide side = TwistSide::Right);
/// The non-degenerate entries of scan_realizations; may be empty.
std::vector<RealizationCandidate> find_realizations(const NilpotentAlgebra2& a);

/// Throws Error(NotInSo) if a basis element is outside so(p,q),
/// Error(DegenerateW) if the trace form degenerates on W.
StandardPseudoMetricAlgebra standard_algebra(std::size_t p, std::size_t q, const MatrixSubspace& w);

struct ReductionResult {
  RationalMatrix t;  ///< g -> target, coordinates (m + n) square
  StandardPseudoMetricAlgebra target;
  std::vector<RationalMatrix> dual_basis;  ///< rho_k with <rho_k, D^l> = delta_kl
};

/// Isomorphism g -> R^{p,q} + D with D^k = eta C^k, T(v_i) = e_i,
/// T(z_k) = -rho_k, certified on all basis pairs.
/// Throws Error(DegenerateW) or Error(Homomorphism).
ReductionResult reduction_isomorphism(const NilpotentAlgebra2& a, std::size_t p, std::size_t q);

/// psi_ij = (E_ij - E_ji) eta for i < j, lexicographic.
std::vector<RationalMatrix> free_center_basis(std::size_t p, std::size_t q);
/// phi_ij = -1/2 (E_ij - E_ji) eta = [e_i, e_j] in the free algebra.
std::vector<RationalMatrix> free_bracket_basis(std::size_t p, std::size_t q);

/// F_2(p,q) = R^{p,q} + so(p,q) with center basis psi_ij, so that
/// [e_i, e_j] = -1/2 psi_ij. Throws Error(Dim) for p + q < 2.
StandardPseudoMetricAlgebra free_algebra(std::size_t p, std::size_t q);

struct FreeIsomorphism {
  RationalMatrix map;  ///< F_2(p+q, 0) -> F_2(p, q) in center-basis coordinates
  bool certified = false;
  RationalMatrix phi_gram;  ///< trace Gram of the phi_ij
};

FreeIsomorphism free_isomorphism(std::size_t p, std::size_t q);

/// eta A^T eta.
RationalMatrix eta_adjoint(const RationalMatrix& a, std::size_t p, std::size_t q);
/// A Z A^eta. Throws Error(SingularA).
RationalMatrix gl_act(const RationalMatrix& a, const RationalMatrix& z, std::size_t p, std::size_t q);
/// {A Z A^eta : Z in basis}. Throws Error(SingularA) or Error(NotInSo).
MatrixSubspace gl_action(const RationalMatrix& a, const MatrixSubspace& s, std::size_t p, std::size_t q);

/// The map e_i -> A e_i + S(e_i), Z -> A Z A^eta of F_2(p,q) as a matrix in
/// free_algebra coordinates; S_hom holds S(e_1), ..., S(e_m) in so(p,q).
/// Throws Error(SingularA), or Error(Homomorphism) if the map is not a
/// certified automorphism.
RationalMatrix free_automorphism(std::size_t p, std::size_t q, const RationalMatrix& a,
                                 const std::vector<RationalMatrix>& s_hom);
RationalVector apply_free_automorphism(std::size_t p, std::size_t q, const RationalMatrix& a,
                                       const std::vector<RationalMatrix>& s_hom,
                                       const RationalVector& x);

struct QuotientResult {
  NilpotentAlgebra2 algebra;
  MatrixSubspace complement;      ///< complement of K inside the center
  bool metric_complement = true;  ///< false when K is degenerate
};

/// F/K with brackets projected along K onto a complement: the trace-orthogonal
/// one when K is non-degenerate, otherwise a row-reduction complement.
/// Throws Error(Precondition) if K is not inside the center of F.
QuotientResult quotient_by_center_subspace(const StandardPseudoMetricAlgebra& f, const MatrixSubspace& k);

/// A W1 A^eta == W2 as subspaces.
bool orbit_witness(const RationalMatrix& a, const MatrixSubspace& w1, const MatrixSubspace& w2,
                   std::size_t p, std::size_t q);

}  // namespace nilforge
