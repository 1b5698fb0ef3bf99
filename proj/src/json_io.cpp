#include "nilforge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "nilforge/error.hpp"

namespace nilforge {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    bad(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

json checks_to_json(const std::vector<CheckResult>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json e = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    out.push_back(std::move(e));
  }
  return out;
}

json law_samples_to_json(const std::vector<LawSample>& samples) {
  json out = json::array();
  for (const auto& s : samples) {
    out.push_back({{"z", s.label},
                   {"norm", rational_to_json(s.norm)},
                   {"skew", s.status.skew},
                   {"orthogonal", s.status.orthogonal},
                   {"square", s.status.square}});
  }
  return out;
}

}  // namespace

json rational_to_json(const Rational& x) { return format_rational(x); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rational entries must be strings such as \"3\" or \"-1/2\"");
}

json vector_to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

RationalVector vector_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

RationalMatrix matrix_from_json(const json& j) {
  std::size_t r = size_field(j, "rows"), c = size_field(j, "cols");
  const json& e = field(j, "entries");
  if (!e.is_array() || e.size() != r) bad("matrix 'entries' must hold 'rows' rows");
  std::vector<Rational> flat;
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != c) bad("matrix row length differs from 'cols'");
    for (const auto& x : row) flat.push_back(rational_from_json(x));
  }
  return RationalMatrix(r, c, std::move(flat));
}

json matrices_to_json(const std::vector<RationalMatrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(matrix_to_json(m));
  return out;
}

std::vector<RationalMatrix> matrices_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of matrices");
  std::vector<RationalMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

json subspace_to_json(const MatrixSubspace& s) {
  return {{"ambient", s.ambient_dim()}, {"basis", matrices_to_json(s.basis())}};
}

MatrixSubspace subspace_from_json(const json& j) {
  return MatrixSubspace(size_field(j, "ambient"), matrices_from_json(field(j, "basis")));
}

json inertia_to_json(const Inertia& in) {
  return {{"p", in.p}, {"q", in.q}, {"nullity", in.nullity}};
}

json algebra_to_json(const NilpotentAlgebra2& a) {
  json c = json::array();
  for (const auto& ck : a.C()) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.m(); ++i) rows.push_back(vector_to_json(ck.row(i)));
    c.push_back(std::move(rows));
  }
  json out = {{"m", a.m()},
              {"n", a.n()},
              {"C", c},
              {"tag", a.tag() == AlgebraTag::Adapted ? "adapted" : "raw"}};
  if (a.form_V()) out["form_V"] = matrix_to_json(a.form_V()->matrix());
  if (a.form_Z()) out["form_Z"] = matrix_to_json(a.form_Z()->matrix());
  if (a.symbolic()) out["symbolic"] = true;
  return out;
}

NilpotentAlgebra2 algebra_from_json(const json& j) {
  std::size_t m = size_field(j, "m"), n = size_field(j, "n");
  const json& c = field(j, "C");
  if (!c.is_array() || c.size() != n) bad("'C' must hold n matrices");
  std::vector<RationalMatrix> cs;
  for (const auto& ck : c) {
    if (!ck.is_array() || ck.size() != m) bad("each C^k must have m rows");
    std::vector<Rational> flat;
    for (const auto& row : ck) {
      if (!row.is_array() || row.size() != m) bad("each C^k row must have m entries");
      for (const auto& x : row) flat.push_back(rational_from_json(x));
    }
    cs.emplace_back(m, m, std::move(flat));
  }
  std::optional<SignatureForm> fv, fz;
  if (j.contains("form_V") && !j.at("form_V").is_null()) {
    RationalMatrix g = matrix_from_json(j.at("form_V"));
    if (!g.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "form_V is not symmetric");
    fv.emplace(std::move(g));
  }
  if (j.contains("form_Z") && !j.at("form_Z").is_null()) {
    RationalMatrix g = matrix_from_json(j.at("form_Z"));
    if (!g.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "form_Z is not symmetric");
    fz.emplace(std::move(g));
  }
  bool symbolic = false;
  if (j.contains("symbolic")) {
    if (!j.at("symbolic").is_boolean()) bad("'symbolic' must be a boolean");
    symbolic = j.at("symbolic").get<bool>();
  }
  NilpotentAlgebra2 a(m, std::move(cs), std::move(fv), std::move(fz), symbolic);
  if (j.contains("tag")) {
    const json& t = j.at("tag");
    if (!t.is_string() || (t != "adapted" && t != "raw")) bad("'tag' must be \"adapted\" or \"raw\"");
    bool adapted = t == "adapted";
    if (adapted != (a.tag() == AlgebraTag::Adapted)) {
      throw Error(ErrorCode::NotAdapted, adapted ? "declared adapted but the C^k are dependent"
                                                 : "declared raw but the C^k are independent");
    }
  }
  return a;
}

json module_to_json(const CliffordModule& m) {
  json eta_diag = json::array();
  for (std::size_t i = 0; i < m.module_dim; ++i) eta_diag.push_back(sgn(m.module_form.matrix()(i, i)));
  return {{"r", m.signature.r},
          {"s", m.signature.s},
          {"N", m.module_dim},
          {"eta", eta_diag},
          {"generators", matrices_to_json(m.generators)},
          {"construction", m.construction}};
}

CliffordModule module_from_json(const json& j) {
  CliffordModule m;
  m.signature = {size_field(j, "r"), size_field(j, "s")};
  m.module_dim = size_field(j, "N");
  const json& e = field(j, "eta");
  if (!e.is_array() || e.size() != m.module_dim) bad("'eta' must list N diagonal entries");
  RationalVector d;
  for (const auto& x : e) {
    if (!x.is_number_integer() || (x.get<int>() != 1 && x.get<int>() != -1)) bad("'eta' entries must be 1 or -1");
    d.emplace_back(x.get<int>());
  }
  m.module_form = SignatureForm(RationalMatrix::diagonal(d));
  m.generators = matrices_from_json(field(j, "generators"));
  if (j.contains("construction") && j.at("construction").is_string()) m.construction = j.at("construction");
  return m;
}

json module_report_to_json(const ModuleReport& r) {
  return {{"passed", r.all_passed()}, {"checks", checks_to_json(r.checks)}, {"laws", law_samples_to_json(r.law_samples)}};
}

json pseudo_h_report_to_json(const PseudoHReport& r) {
  return {{"verdict", r.verdict},
          {"skew", r.skew},
          {"orthogonality", r.orthogonality},
          {"square_law", r.square_law},
          {"laws", law_samples_to_json(r.samples)}};
}

json realization_to_json(const RealizationCandidate& c) {
  return {{"p", c.p},
          {"q", c.q},
          {"gram", matrix_to_json(c.gram)},
          {"signature", inertia_to_json(c.gram_signature)},
          {"nondegenerate", c.nondegenerate}};
}

json special_split_to_json(const SpecialSplit& s) {
  return {{"h_plus", subspace_to_json(s.h_plus)},
          {"h_minus", subspace_to_json(s.h_minus)},
          {"dims_ok", s.dims_ok},
          {"spans_L", s.spans_L},
          {"commuting", s.commuting},
          {"ideals", s.ideals},
          {"certified", s.certified()}};
}

json triple_report_to_json(const TripleSystemReport& r) {
  json out = {{"is_triple", r.is_triple}};
  if (!r.is_triple) return out;
  out["center_dim"] = r.center_dim;
  out["derived_dim"] = r.derived.dim();
  out["L_dim"] = r.L_dim;
  out["L_basis"] = subspace_to_json(r.L_basis);
  out["killing"] = matrix_to_json(r.killing);
  out["killing_signature"] = inertia_to_json(r.killing_signature);
  out["semisimple"] = r.killing_signature.nullity == 0;
  out["cartan_certified"] = r.cartan_certified;
  if (r.expected_L_dim) {
    out["expected_L_dim"] = *r.expected_L_dim;
    out["clifford_basis_full_rank"] = r.clifford_basis_full_rank;
  }
  if (r.special_split) out["special_split"] = special_split_to_json(*r.special_split);
  return out;
}

json decomposition_to_json(const DecompositionReport& r) {
  return {{"center_W_dim", r.center_W_dim},
          {"center_L_dim", r.center_L_dim},
          {"centers_equal", r.centers_equal},
          {"derived_L_dim", r.derived_L_dim},
          {"direct_sum", r.direct_sum},
          {"perfect", r.perfect},
          {"trivial_center_implies_perfect", r.trivial_center_implies_perfect}};
}

json lattice_verdict_to_json(const LatticeVerdict& v) {
  json out = {{"status", lattice_status_name(v.status)},
              {"rescale_factor", v.rescale_factor.get_str()},
              {"rescaled_constants_integer", v.rescaled_constants_integer},
              {"scaling_role", v.scaling_role}};
  if (v.witness_basis) out["witness_basis"] = matrix_to_json(*v.witness_basis);
  return out;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                      ": malformed JSON");
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

NilpotentAlgebra2 load_algebra(const std::filesystem::path& path) {
  return algebra_from_json(read_json_file(path));
}

void save_algebra(const NilpotentAlgebra2& a, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path.string());
  out << canonical_dump(algebra_to_json(a));
}

}  // namespace nilforge
