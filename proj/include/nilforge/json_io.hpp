/// @file json_io.hpp
/// @brief Canonical JSON encoding of rationals, matrices, subspaces, algebras,
/// modules and reports.
#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "nilforge/clifford.hpp"
#include "nilforge/lattice.hpp"
#include "nilforge/nilpotent.hpp"
#include "nilforge/standardform.hpp"
#include "nilforge/triple.hpp"

namespace nilforge {

using json = nlohmann::json;

json rational_to_json(const Rational& x);
Rational rational_from_json(const json& j);
json vector_to_json(const RationalVector& v);
RationalVector vector_from_json(const json& j);
json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);
json matrices_to_json(const std::vector<RationalMatrix>& ms);
std::vector<RationalMatrix> matrices_from_json(const json& j);
json subspace_to_json(const MatrixSubspace& s);
MatrixSubspace subspace_from_json(const json& j);
json inertia_to_json(const Inertia& in);

json algebra_to_json(const NilpotentAlgebra2& a);
/// Validates shapes, antisymmetry and that a declared tag matches the data.
NilpotentAlgebra2 algebra_from_json(const json& j);

json module_to_json(const CliffordModule& m);
CliffordModule module_from_json(const json& j);
json module_report_to_json(const ModuleReport& r);
json pseudo_h_report_to_json(const PseudoHReport& r);
json realization_to_json(const RealizationCandidate& c);
json triple_report_to_json(const TripleSystemReport& r);
json special_split_to_json(const SpecialSplit& s);
json decomposition_to_json(const DecompositionReport& r);
json lattice_verdict_to_json(const LatticeVerdict& v);

/// Two-space indented dump with sorted keys and a trailing newline.
std::string canonical_dump(const json& j);
/// Parses text; syntax errors become Error(Parse) with line and column.
json parse_json_text(const std::string& text);
json read_json_file(const std::filesystem::path& path);

NilpotentAlgebra2 load_algebra(const std::filesystem::path& path);
void save_algebra(const NilpotentAlgebra2& a, const std::filesystem::path& path);

}  // namespace nilforge
