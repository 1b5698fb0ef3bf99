/// @file triple.hpp
/// @brief Lie triple systems of matrices, the algebra L = W + [W, W] they
/// generate, Killing forms, and ideal splittings.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nilforge/clifford.hpp"
#include "nilforge/exactlin.hpp"

namespace nilforge {

/// span{[a, b] : a in A, b in B}.
MatrixSubspace bracket_span(const MatrixSubspace& a, const MatrixSubspace& b);

/// [w_a, [w_b, w_c]] in W for all basis triples.
bool is_lie_triple(const MatrixSubspace& w);

/// {a in W : [a, b] = 0 for every b in W}.
MatrixSubspace triple_center(const MatrixSubspace& w);

/// span{J_1, ..., J_{r+s}}.
MatrixSubspace clifford_image(const CliffordModule& m);

/// ad_x for each basis element x of L, in L coordinates.
/// Throws Error(NotClosed) if L is not closed under the bracket.
std::vector<RationalMatrix> adjoint_matrices(const MatrixSubspace& l);

/// B_ab = tr(ad_a ad_b). Throws Error(NotClosed).
RationalMatrix killing_form(const MatrixSubspace& l);
bool is_semisimple(const MatrixSubspace& l);

/// Center of L as a Lie algebra.
MatrixSubspace lie_center(const MatrixSubspace& l);

struct SpecialSplit {
  MatrixSubspace h_plus;
  MatrixSubspace h_minus;
  bool dims_ok = false;      ///< both 3-dimensional
  bool spans_L = false;      ///< h_plus + h_minus = L, direct
  bool commuting = false;    ///< [h_plus, h_minus] = 0
  bool ideals = false;       ///< [h_pm, L] in h_pm
  bool certified() const { return dims_ok && spans_L && commuting && ideals; }
};

/// h_pm = span{J1 +- J2 J3, [J1 +- J2 J3, J2], [J1 +- J2 J3, J3]}.
/// Throws Error(Signature) unless (r, s) is (3, 0) or (1, 2) and matches the module.
SpecialSplit special_ideal_split(std::size_t r, std::size_t s, const CliffordModule& m);

struct TripleSystemReport {
  bool is_triple = false;
  std::size_t center_dim = 0;
  MatrixSubspace derived;  ///< [W, W]
  MatrixSubspace L_basis;  ///< W basis followed by new [W, W] elements
  std::size_t L_dim = 0;
  RationalMatrix killing;
  Inertia killing_signature;
  bool cartan_certified = false;
  /// Set for Clifford-derived W: n + n(n-1)/2 and whether {J_i, J_j J_k} has that rank.
  std::optional<std::size_t> expected_L_dim;
  bool clifford_basis_full_rank = false;
  std::optional<SpecialSplit> special_split;
};

TripleSystemReport generated_algebra(const MatrixSubspace& w);
/// W = J(R^{r,s}), with the Clifford dimension check and, for (3,0) and
/// (1,2), the ideal split.
TripleSystemReport generated_algebra(const CliffordModule& m);

struct DecompositionReport {
  std::size_t center_W_dim = 0;
  std::size_t center_L_dim = 0;
  bool centers_equal = false;  ///< Z(W) = Z(L) as subspaces
  std::size_t derived_L_dim = 0;
  bool direct_sum = false;     ///< L = Z(L) + [L, L] with trivial intersection
  bool perfect = false;        ///< L = [L, L]
  bool trivial_center_implies_perfect = false;
};

/// Precondition is_lie_triple(W); throws Error(Precondition) otherwise.
DecompositionReport decomposition_checks(const MatrixSubspace& w);

struct ThetaReport {
  bool theta_maps_d1_to_d2 = false;
  bool sum_transpose_closed = false;  ///< (D1 + D2)^T = -(D1 + D2)
  bool sum_theta_closed = false;
  bool isometric = false;             ///< Gram(theta D1) = Gram(D1)
  bool all() const { return theta_maps_d1_to_d2 && sum_transpose_closed && sum_theta_closed && isometric; }
};

/// theta(X) = eta X eta.
ThetaReport theta_closure(const MatrixSubspace& d1, const MatrixSubspace& d2, std::size_t p, std::size_t q);

/// Smallest ideal of L containing x.
MatrixSubspace ideal_generated(const MatrixSubspace& l, const RationalMatrix& x);

struct IdealProbe {
  std::size_t trials = 0;
  bool proper_ideal_found = false;
  std::optional<RationalMatrix> witness;
};

/// Eigenspaces of the centroid (operators commuting with every ad_x), then
/// ideals generated by basis elements and by seeded random elements of L.
/// Finding none proper is evidence of simplicity, not a proof.
IdealProbe ideal_probe(const MatrixSubspace& l, std::uint64_t seed, std::size_t random_trials = 8);

}  // namespace nilforge
