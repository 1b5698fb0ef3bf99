// nilforge command line: exact computations on 2-step nilpotent Lie algebras.
// Exit codes: 0 success, 1 a check ran and failed, 2 usage or input error.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nilforge/catalog.hpp"
#include "nilforge/error.hpp"
#include "nilforge/json_io.hpp"
#include "nilforge/lattice.hpp"
#include "nilforge/standardform.hpp"
#include "nilforge/triple.hpp"

using namespace nilforge;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string output_path;

std::uint64_t env_seed() {
  const char* s = std::getenv("NILFORGE_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 0;
}

void emit(const json& j) {
  std::string text = canonical_dump(j);
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write '" + output_path + "'");
  out << text;
}

json module_block(const CliffordModule& m) {
  return {{"module", module_to_json(m)}, {"report", module_report_to_json(verify_module(m))}};
}

int cmd_clifford(std::size_t r, std::size_t s) {
  auto m = build_module({r, s});
  auto report = verify_module(m);
  emit({{"module", module_to_json(m)}, {"report", module_report_to_json(report)}});
  return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_build(std::size_t r, std::size_t s) {
  auto m = build_module({r, s});
  auto a = algebra_from_J(m.generators, m.module_form, SignatureForm::standard(r, s));
  auto ph = is_pseudo_H_type(a);
  json out = module_block(m);
  out["algebra"] = algebra_to_json(a.algebra());
  out["pseudo_h"] = pseudo_h_report_to_json(ph);
  emit(out);
  return ph.verdict ? kOk : kCheckFailed;
}

json reduce_report(const NilpotentAlgebra2& a, std::optional<std::pair<std::size_t, std::size_t>> only) {
  json candidates = json::array(), realizations = json::array();
  for (const auto& c : scan_realizations(a, TwistSide::Right)) {
    if (only && (c.p != only->first || c.q != only->second)) continue;
    candidates.push_back(realization_to_json(c));
    if (!c.nondegenerate) continue;
    auto r = reduction_isomorphism(a, c.p, c.q);
    realizations.push_back({{"p", c.p},
                            {"q", c.q},
                            {"gram", matrix_to_json(c.gram)},
                            {"signature", inertia_to_json(c.gram_signature)},
                            {"T", matrix_to_json(r.t)},
                            {"W", subspace_to_json(r.target.W)},
                            {"target", algebra_to_json(r.target.algebra)},
                            {"certified", is_homomorphism(a, r.target.algebra, r.t)}});
  }
  return {{"candidates", candidates}, {"realizations", realizations}};
}

int cmd_reduce(const std::string& file, const std::vector<std::size_t>& signature_filter) {
  auto a = load_algebra(file);
  std::optional<std::pair<std::size_t, std::size_t>> only;
  if (!signature_filter.empty()) {
    if (signature_filter[0] + signature_filter[1] != a.m())
      throw Error(ErrorCode::Dim, "--signature must satisfy p + q = m");
    only = std::make_pair(signature_filter[0], signature_filter[1]);
  }
  json out = reduce_report(a, only);
  bool ok = true;
  for (const auto& r : out["realizations"]) ok = ok && r["certified"].get<bool>();
  emit(out);
  return ok ? kOk : kCheckFailed;
}

int cmd_free(std::size_t p, std::size_t q) {
  auto f = free_algebra(p, q);
  auto iso = free_isomorphism(p, q);
  emit({{"p", p},
        {"q", q},
        {"algebra", algebra_to_json(f.algebra)},
        {"W", subspace_to_json(f.W)},
        {"gram_W", matrix_to_json(f.gram_W)},
        {"phi_gram", matrix_to_json(iso.phi_gram)},
        {"isomorphism_certified", iso.certified}});
  return iso.certified ? kOk : kCheckFailed;
}

int cmd_triple(const std::string& file, const std::vector<std::size_t>& special) {
  json out;
  bool ok = true;
  TripleSystemReport rep;
  MatrixSubspace w;
  if (!special.empty()) {
    auto m = build_module({special[0], special[1]});
    auto split = special_ideal_split(special[0], special[1], m);
    rep = generated_algebra(m);
    w = clifford_image(m);
    out["module"] = module_to_json(m);
    out["special_split"] = special_split_to_json(split);
    ok = split.certified();
  } else {
    if (file.empty()) throw Error(ErrorCode::Parse, "triple needs a subspace file or --special-split r s");
    w = subspace_from_json(read_json_file(file));
    rep = generated_algebra(w);
  }
  out["report"] = triple_report_to_json(rep);
  if (rep.is_triple) {
    out["decomposition"] = decomposition_to_json(decomposition_checks(w));
    std::uint64_t seed = env_seed();
    auto probe = ideal_probe(rep.L_basis, seed);
    out["ideal_probe"] = {{"seed", seed}, {"trials", probe.trials}, {"proper_ideal_found", probe.proper_ideal_found}};
  }
  ok = ok && rep.is_triple;
  emit(out);
  return ok ? kOk : kCheckFailed;
}

int cmd_lattice(const std::string& file, const std::vector<std::size_t>& pseudo_h) {
  if (!pseudo_h.empty()) {
    auto w = pseudo_H_lattice_witness(pseudo_h[0], pseudo_h[1]);
    json traces = json::array();
    for (const auto& t : w.trace_values) traces.push_back(rational_to_json(t));
    emit({{"module", module_to_json(w.module)},
          {"algebra", algebra_to_json(w.algebra)},
          {"standard", {{"p", w.standard.p}, {"q", w.standard.q}, {"W", subspace_to_json(w.standard.W)},
                        {"gram_W", matrix_to_json(w.standard.gram_W)}}},
          {"isomorphism", matrix_to_json(w.isomorphism)},
          {"isomorphism_certified", w.isomorphism_certified},
          {"trace_values", traces},
          {"trace_identity_holds", w.trace_identity_holds},
          {"gram_is_scaled_form", w.gram_is_scaled_form},
          {"verdict", lattice_verdict_to_json(w.verdict)}});
    return w.verdict.status == LatticeStatus::AdmitsLattice ? kOk : kCheckFailed;
  }
  if (file.empty()) throw Error(ErrorCode::Parse, "lattice needs an algebra file or --pseudo-h r s");
  auto a = load_algebra(file);
  auto rescale = integer_rescale(a);
  emit({{"verdict", lattice_verdict_to_json(lattice_verdict(a))},
        {"rational_basis", is_rational_basis(a)},
        {"rescaled", algebra_to_json(rescale.rescaled)}});
  return kOk;
}

int cmd_orbit_check(const std::string& file) {
  json j = read_json_file(file);
  auto field = [&](const char* key) -> const json& {
    if (!j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
    return j.at(key);
  };
  std::size_t p = field("p").get<std::size_t>(), q = field("q").get<std::size_t>();
  RationalMatrix a = matrix_from_json(field("A"));
  auto w1 = subspace_from_json(field("W1"));
  auto w2 = subspace_from_json(field("W2"));
  bool eq = orbit_witness(a, w1, w2, p, q);
  emit({{"equivalent", eq}});
  return eq ? kOk : kCheckFailed;
}

json example(const std::string& name) {
  auto with_twists = [](const MetricAlgebra& a) {
    json out = {{"algebra", algebra_to_json(a.algebra())},
                {"pseudo_h", pseudo_h_report_to_json(is_pseudo_H_type(a))}};
    json twists = json::array();
    auto c = structure_space(a.algebra());
    for (const auto& cand : scan_realizations(a.algebra())) {
      json t = realization_to_json(cand);
      t["D"] = subspace_to_json(eta_twist(c, cand.p, cand.q, TwistSide::Right));
      twists.push_back(std::move(t));
    }
    out["twists"] = twists;
    return out;
  };
  if (name == "n20") return with_twists(catalog::n20());
  if (name == "n11") return with_twists(catalog::n11());
  if (name == "n02") return with_twists(catalog::n02());
  if (name == "heisenberg") return with_twists(catalog::heisenberg());
  if (name == "degenerate") {
    json out = reduce_report(catalog::n20().algebra(), std::make_pair(std::size_t{3}, std::size_t{1}));
    json other = reduce_report(catalog::n20().algebra(), std::make_pair(std::size_t{1}, std::size_t{3}));
    out["candidates"].push_back(other["candidates"][0]);
    return out;
  }
  if (name == "free") {
    json out = json::array();
    for (std::size_t m = 2; m <= 4; ++m)
      for (std::size_t p = 0; p <= m; ++p) {
        auto f = free_algebra(p, m - p);
        auto iso = free_isomorphism(p, m - p);
        out.push_back({{"p", p},
                       {"q", m - p},
                       {"algebra", algebra_to_json(f.algebra)},
                       {"phi_gram", matrix_to_json(iso.phi_gram)},
                       {"isomorphism_certified", iso.certified}});
      }
    return out;
  }
  if (name == "all") {
    json out;
    for (const char* n : {"n20", "n11", "n02", "heisenberg", "degenerate", "free"}) out[n] = example(n);
    return out;
  }
  throw Error(ErrorCode::Parse, "unknown example '" + name + "'");
}

void report_error(const std::string& code, const std::string& detail) {
  std::cout << canonical_dump({{"error", code}, {"detail", detail}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on 2-step nilpotent Lie algebras"};
  app.require_subcommand(1);
  app.add_option("-o,--output", output_path, "Write JSON to this file instead of stdout");

  std::size_t r = 0, s = 0;
  std::string file, example_name;
  std::vector<std::size_t> pair_opt;

  auto* clifford = app.add_subcommand("clifford", "Build and verify an admissible Clifford module");
  clifford->add_option("r", r)->required();
  clifford->add_option("s", s)->required();

  auto* build = app.add_subcommand("build", "Build the pseudo H-type algebra n_{r,s}");
  build->add_option("r", r)->required();
  build->add_option("s", s)->required();

  auto* reduce = app.add_subcommand("reduce", "Realize an algebra as a standard pseudo-metric algebra");
  reduce->add_option("file", file, "Algebra JSON")->required();
  reduce->add_option("--signature", pair_opt, "Only scan this (p, q)")->expected(2);

  auto* free = app.add_subcommand("free", "Emit the free 2-step algebra F_2(p,q)");
  free->add_option("p", r)->required();
  free->add_option("q", s)->required();

  auto* triple = app.add_subcommand("triple", "Analyse a Lie triple system");
  triple->add_option("file", file, "Subspace JSON");
  triple->add_option("--special-split", pair_opt, "Ideal split for (3,0) or (1,2)")->expected(2);

  auto* lattice = app.add_subcommand("lattice", "Lattice verdict for an algebra");
  lattice->add_option("file", file, "Algebra JSON");
  lattice->add_option("--pseudo-h", pair_opt, "Run the integer-constant pipeline for n_{r,s}")->expected(2);

  auto* orbit = app.add_subcommand("orbit-check", "Verify A W1 A^eta = W2");
  orbit->add_option("file", file, "JSON with p, q, A, W1, W2")->required();

  auto* examples = app.add_subcommand("examples", "Reproduce the 4-dimensional worked examples");
  examples->add_option("name", example_name, "n20, n11, n02, heisenberg, degenerate, free or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("ERR_USAGE", e.what());
    return kUsage;
  }

  try {
    if (*clifford) return cmd_clifford(r, s);
    if (*build) return cmd_build(r, s);
    if (*reduce) return cmd_reduce(file, pair_opt);
    if (*free) return cmd_free(r, s);
    if (*triple) return cmd_triple(file, pair_opt);
    if (*lattice) return cmd_lattice(file, pair_opt);
    if (*orbit) return cmd_orbit_check(file);
    if (*examples) {
      emit(example(example_name));
      return kOk;
    }
  } catch (const Error& e) {
    report_error(std::string(error_code_name(e.code())), e.what());
    return kUsage;
  } catch (const json::exception& e) {
    report_error("ERR_PARSE", e.what());
    return kUsage;
  }
  return kUsage;
}
