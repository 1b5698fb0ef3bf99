/// @file lattice.hpp
/// @brief Rational structure constants, integer rescaling and lattice verdicts.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "nilforge/clifford.hpp"
#include "nilforge/nilpotent.hpp"
#include "nilforge/standardform.hpp"

namespace nilforge {

enum class LatticeStatus { AdmitsLattice, Unknown };

std::string lattice_status_name(LatticeStatus s);

struct LatticeVerdict {
  LatticeStatus status = LatticeStatus::Unknown;
  /// Columns are the new basis vectors in old coordinates:
  /// v_i unchanged, z_k scaled by 1/d.
  std::optional<RationalMatrix> witness_basis;
  mpz_class rescale_factor = 1;
  bool rescaled_constants_integer = false;
  /// The alternative irrational basis {sqrt(d) v_i, z_k} is only recorded.
  std::string scaling_role = "sqrt-scale";
};

/// False only for imports flagged symbolic.
bool is_rational_basis(const NilpotentAlgebra2& a);

struct IntegerRescale {
  mpz_class d = 1;
  NilpotentAlgebra2 rescaled;  ///< constants d C^k
};

/// d = lcm of all denominators of the C^k.
IntegerRescale integer_rescale(const NilpotentAlgebra2& a);

/// Full structure constants in a new basis (columns of b): entry [c](a, b)
/// is the coefficient of b_c in [b_a, b_b]. Throws Error(SingularA) if b is singular.
std::vector<RationalMatrix> structure_constants_in_basis(const NilpotentAlgebra2& a, const RationalMatrix& b);

LatticeVerdict lattice_verdict(const NilpotentAlgebra2& a);

struct PseudoHLatticeWitness {
  CliffordModule module;
  NilpotentAlgebra2 algebra;  ///< n_{r,s} with forms (module form, eta_{r,s})
  StandardPseudoMetricAlgebra standard;  ///< R^{p,q} + J(R^{r,s})
  RationalMatrix isomorphism;  ///< n_{r,s} -> standard
  bool isomorphism_certified = false;
  /// -tr(J_i^2) for each generator, and the module dimension N = 2l.
  std::vector<Rational> trace_values;
  bool trace_identity_holds = false;  ///< -tr(J_i^2) = N nu_i
  bool gram_is_scaled_form = false;   ///< <J_i, J_j> = N <z_i, z_j>
  LatticeVerdict verdict;
};

/// Throws Error(UnsupportedSignature) beyond the Clifford cap.
PseudoHLatticeWitness pseudo_H_lattice_witness(std::size_t r, std::size_t s);

}  // namespace nilforge
