/// @file clifford.hpp
/// @brief Integer generators of admissible Clifford modules and their verifier.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilforge/exactlin.hpp"
#include "nilforge/matrix.hpp"

namespace nilforge {

struct CliffordSignature {
  std::size_t r = 0;
  std::size_t s = 0;

  std::size_t n() const { return r + s; }
  /// +1 for the first r generators, -1 for the remaining s (0-based index).
  int nu(std::size_t i) const { return i < r ? 1 : -1; }
  /// <z, z> for the standard form of index (r, s).
  Rational norm(const RationalVector& z) const;
  friend bool operator==(const CliffordSignature&, const CliffordSignature&) = default;
};

/// Largest r + s accepted by build_module.
inline constexpr std::size_t kCliffordCap = 8;

struct CliffordModule {
  CliffordSignature signature;
  std::size_t module_dim = 0;
  SignatureForm module_form = SignatureForm(RationalMatrix());
  std::vector<RationalMatrix> generators;
  /// How the generators were obtained, e.g. the tensor words used.
  std::string construction;
};

/// 2^(r+s).
std::size_t clifford_dim(const CliffordSignature& sig);

/// Deterministic construction: generators are tensor products of the 2x2
/// matrices I, X = [[0,1],[1,0]], E = [[0,-1],[1,0]], Z = diag(1,-1), with a
/// module form that is a tensor product of I and Z factors. The number of
/// factors grows until a word assignment satisfying the square law,
/// anticommutation, skew-symmetry and a faithful Lie basis is found. The
/// basis is then reordered so the form reads diag(+1..., -1...).
/// Throws Error(UnsupportedSignature) when r + s is 0 or exceeds kCliffordCap.
CliffordModule build_module(const CliffordSignature& sig);

/// Skew-symmetry, orthogonality and square law of a single J_z against a
/// form G, with zz = <z, z>.
struct LawStatus {
  bool skew = false;        ///< J^T G = -G J
  bool orthogonal = false;  ///< J^T G J = zz G
  bool square = false;      ///< J^2 = -zz I

  int passing() const { return int(skew) + int(orthogonal) + int(square); }
};

LawStatus evaluate_laws(const RationalMatrix& j, const RationalMatrix& g, const Rational& zz);

struct LawSample {
  std::string label;  ///< e.g. "z1", "z1+z2", "z1-z2"
  Rational norm;
  LawStatus status;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ModuleReport {
  std::vector<CheckResult> checks;
  std::vector<LawSample> law_samples;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Evaluates every module law. Failures are report entries, never errors.
ModuleReport verify_module(const CliffordModule& m);

/// Law samples over {z_i} and {z_i + z_j, z_i - z_j : i < j}.
std::vector<LawSample> sample_laws(const std::vector<RationalMatrix>& generators,
                                   const RationalMatrix& form,
                                   const CliffordSignature& sig);

/// Sum z_i J_i. Throws Error(DimMismatch) if |z| != r + s.
RationalMatrix extend_J(const CliffordModule& m, const RationalVector& z);

}  // namespace nilforge
