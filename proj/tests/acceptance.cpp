// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "goldens.hpp"
#include "nilforge/catalog.hpp"
#include "nilforge/lattice.hpp"
#include "nilforge/standardform.hpp"
#include "nilforge/triple.hpp"
#include "support.hpp"

using namespace nilforge;
using nilforge::testing::Gen;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (failures.size() < 8) failures.push_back(what);
    }
  }
};

std::string pq(std::size_t p, std::size_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

/// Bracket from the structure tensor, written out independently of the library.
RationalVector direct_bracket(const NilpotentAlgebra2& a, const RationalVector& x, const RationalVector& y) {
  RationalVector out(a.dim());
  for (std::size_t k = 0; k < a.n(); ++k)
    for (std::size_t i = 0; i < a.m(); ++i)
      for (std::size_t j = 0; j < a.m(); ++j) out[a.m() + k] += a.C(k)(i, j) * x[i] * y[j];
  return out;
}

bool direct_homomorphism(const NilpotentAlgebra2& src, const NilpotentAlgebra2& dst, const RationalMatrix& t) {
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      RationalVector x = unit_vector(src.dim(), i), y = unit_vector(src.dim(), j);
      if (t * direct_bracket(src, x, y) != direct_bracket(dst, t * x, t * y)) return false;
    }
  return true;
}

Outcome criterion1() {
  Outcome o;
  auto n20 = catalog::n20().algebra();
  auto n11 = catalog::n11().algebra();
  o.expect(n20.C(0) == goldens::c20_1() && n20.C(1) == goldens::c20_2(), "n20 constants");
  o.expect(n11.C(0) == goldens::c11_1() && n11.C(1) == goldens::c11_2(), "n11 constants");
  auto gram = [](const NilpotentAlgebra2& a, std::size_t p, std::size_t q) {
    return trace_gram(eta_twist(structure_space(a), p, q, TwistSide::Right));
  };
  o.expect(gram(n20, 2, 2) == RationalMatrix::from_rows({{-4, 0}, {0, -4}}), "n20 into so(2,2)");
  o.expect(gram(n11, 2, 2) == RationalMatrix::from_rows({{4, 0}, {0, -4}}), "n11 into so(2,2)");
  for (const auto* a : {&n20, &n11})
    for (auto [p, q] : {std::pair<std::size_t, std::size_t>{3, 1}, {1, 3}})
      o.expect(gram(*a, p, q).is_zero(), "zero Gram into so" + pq(p, q));
  auto d22 = eta_twist(structure_space(n20), 2, 2, TwistSide::Right);
  o.expect(d22[0] == goldens::d20_22_1() && d22[1] == goldens::d20_22_2(), "D twist matrices (2,2)");
  auto d31 = eta_twist(structure_space(n20), 3, 1, TwistSide::Right);
  o.expect(d31[0] == goldens::d20_31_1() && d31[1] == goldens::d20_31_2(), "D twist matrices (3,1)");
  o.summary = "published constants and twist Grams reproduced";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t count = 0;
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t p = 0; p <= m; ++p) {
      std::size_t q = m - p;
      auto basis = nilforge::testing::so_basis(p, q);
      Inertia expected{(p * (p - 1) + q * (q - 1)) / 2, p * q, 0};
      Inertia got = basis.empty() ? Inertia{} : signature(trace_gram(MatrixSubspace(m, basis)));
      o.expect(got == expected, "so" + pq(p, q));
      ++count;
    }
  o.expect(signature(trace_gram(MatrixSubspace(4, nilforge::testing::so_basis(2, 2)))) == Inertia{2, 4, 0},
           "so(2,2) index (2,4)");
  o.expect(signature(trace_gram(MatrixSubspace(4, nilforge::testing::so_basis(3, 1)))) == Inertia{3, 3, 0},
           "so(3,1) index (3,3)");
  o.summary = std::to_string(count) + " signatures with p+q <= 5";
  return o;
}

Outcome criterion3(std::uint64_t seed) {
  Outcome o;
  std::vector<std::pair<std::string, NilpotentAlgebra2>> cases{
      {"n20", catalog::n20().algebra()},
      {"n11", catalog::n11().algebra()},
      {"n02", catalog::n02().algebra()},
      {"heisenberg", catalog::heisenberg().algebra()}};
  Gen gen(seed);
  for (int i = 0; i < 20; ++i) cases.push_back({"random#" + std::to_string(i), gen.adapted_algebra(4)});
  std::size_t certified = 0;
  for (const auto& [name, a] : cases) {
    auto list = find_realizations(a);
    o.expect(!list.empty(), name + " has a realization");
    for (const auto& c : list) {
      try {
        auto r = reduction_isomorphism(a, c.p, c.q);
        bool ok = direct_homomorphism(a, r.target.algebra, r.t) && inverse(r.t).has_value();
        o.expect(ok, name + " " + pq(c.p, c.q));
        certified += ok;
      } catch (const std::exception& e) {
        o.expect(false, name + " " + pq(c.p, c.q) + ": " + e.what());
      }
    }
  }
  o.summary = std::to_string(certified) + " reductions certified over " + std::to_string(cases.size()) + " algebras";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      std::size_t s = n - r;
      auto m = build_module({r, s});
      auto report = verify_module(m);
      o.expect(report.all_passed(), "verify_module " + pq(r, s));
      const std::size_t N = m.module_dim;
      RationalMatrix g = m.module_form.matrix();
      for (std::size_t i = 0; i < n; ++i) {
        const auto& j = m.generators[i];
        o.expect(j * j == Rational(-m.signature.nu(i)) * RationalMatrix::identity(N), "square law " + pq(r, s));
        o.expect(j.transpose() * g == Rational(-1) * (g * j), "skew " + pq(r, s));
        o.expect(j.transpose() * g * j == Rational(m.signature.nu(i)) * g, "orthogonality " + pq(r, s));
        for (std::size_t k = i + 1; k < n; ++k)
          o.expect((j * m.generators[k] + m.generators[k] * j).is_zero(), "anticommutation " + pq(r, s));
        for (const auto& x : j.entries()) o.expect(x == 0 || x == 1 || x == -1, "entries " + pq(r, s));
      }
      if (s > 0) o.expect(m.module_form.inertia() == Inertia{N / 2, N / 2, 0}, "neutral form " + pq(r, s));
      ++count;
    }
  o.summary = std::to_string(count) + " modules with 1 <= r+s <= 6";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      std::size_t s = n - r;
      auto m = build_module({r, s});
      auto rep = generated_algebra(m);
      std::string tag = pq(r, s);
      o.expect(rep.is_triple, "triple " + tag);
      o.expect(rep.center_dim == 0, "trivial center " + tag);
      o.expect(rep.L_dim == n + n * (n - 1) / 2, "dim L " + tag);
      o.expect(rep.clifford_basis_full_rank, "Lie basis rank " + tag);
      o.expect(rep.killing_signature.nullity == 0, "Killing non-degenerate " + tag);
      auto dec = decomposition_checks(clifford_image(m));
      o.expect(dec.perfect, "L = [L,L] " + tag);
      if ((r == 3 && s == 0) || (r == 1 && s == 2)) {
        o.expect(rep.special_split && rep.special_split->certified(), "ideal split " + tag);
      }
    }
  o.summary = "W = J(R^{r,s}) for 2 <= r+s <= 6, ideal split for (3,0) and (1,2)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  Outcome pipeline;
  std::size_t plus_sign_holds = 0, total = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      std::size_t s = n - r;
      std::string tag = pq(r, s);
      auto w = pseudo_H_lattice_witness(r, s);
      pipeline.expect(w.verdict.status == LatticeStatus::AdmitsLattice, "admits lattice " + tag);
      pipeline.expect(w.isomorphism_certified && direct_homomorphism(w.algebra, w.standard.algebra, w.isomorphism),
                      "isomorphism " + tag);
      if (w.verdict.witness_basis) {
        auto consts = structure_constants_in_basis(w.algebra, *w.verdict.witness_basis);
        bool integer = true;
        for (const auto& c : consts)
          for (const auto& x : c.entries()) integer = integer && x.get_den() == 1;
        pipeline.expect(integer, "integer constants " + tag);
      } else {
        pipeline.expect(false, "witness basis " + tag);
      }
      const long two_l = static_cast<long>(w.module.module_dim);
      for (std::size_t i = 0; i < n; ++i) {
        const auto& j = w.module.generators[i];
        Rational lhs = -(j * j).trace();
        long nu = w.module.signature.nu(i);
        ++total;
        if (lhs == Rational(two_l * nu)) ++plus_sign_holds;
        o.expect(lhs == Rational(-two_l * nu), "trace identity -tr(J^2) = -2l nu at " + tag + " generator " +
                                                  std::to_string(i + 1) + ": got " + format_rational(lhs));
      }
    }
  o.summary = std::string("lattice verdicts, isomorphisms and integer constants for r+s <= 4 ") +
              (pipeline.passed ? "all pass" : "FAIL") + "; -tr(J_i^2) = +2l nu_i holds on " +
              std::to_string(plus_sign_holds) + "/" + std::to_string(total) + " generators";
  for (const auto& f : pipeline.failures) o.expect(false, f);
  o.passed = o.passed && pipeline.passed;
  return o;
}

Outcome criterion7(std::uint64_t seed) {
  Outcome o;
  Gen gen(seed);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    RationalMatrix m = gen.symmetric(n), p = gen.invertible(n);
    o.expect(signature(p.transpose() * m * p) == signature(m), "Sylvester #" + std::to_string(t));
  }
  for (int t = 0; t < 100; ++t) {
    std::size_t dim = static_cast<std::size_t>(gen.integer(2, 4));
    std::size_t p = static_cast<std::size_t>(gen.integer(0, static_cast<long>(dim))), q = dim - p;
    RationalMatrix a = gen.invertible(dim), b = gen.invertible(dim);
    RationalMatrix z = gen.so_element(p, q), z2 = gen.so_element(p, q);
    o.expect(gl_act(RationalMatrix::identity(dim), z, p, q) == z, "identity action #" + std::to_string(t));
    o.expect(gl_act(a * b, z, p, q) == gl_act(a, gl_act(b, z, p, q), p, q), "composition #" + std::to_string(t));
    o.expect(trace_form(gl_act(a, z, p, q), z2) == trace_form(z, gl_act(eta_adjoint(a, p, q), z2, p, q)),
             "transpose law #" + std::to_string(t));
    o.expect(in_so(gl_act(a, z, p, q), eta(p, q)), "so membership #" + std::to_string(t));
  }
  for (int t = 0; t < 100; ++t) {
    std::size_t m = static_cast<std::size_t>(gen.integer(2, 4));
    std::size_t p = static_cast<std::size_t>(gen.integer(0, static_cast<long>(m)));
    auto f = free_algebra(p, m - p);
    RationalVector w = gen.vector(m), v = gen.vector(m);
    RationalMatrix zmat = gen.so_element(p, m - p);
    RationalVector wx(f.algebra.dim()), vx(f.algebra.dim());
    std::copy(w.begin(), w.end(), wx.begin());
    std::copy(v.begin(), v.end(), vx.begin());
    RationalVector br = direct_bracket(f.algebra, wx, vx);
    Rational lhs = trace_form(f.W.combination(RationalVector(br.begin() + m, br.end())), zmat);
    RationalVector zw = zmat * w;
    Rational rhs = 0;
    for (std::size_t i = 0; i < m; ++i) rhs += (i < p ? 1 : -1) * zw[i] * v[i];
    o.expect(lhs == rhs, "free duality #" + std::to_string(t));
  }
  for (int t = 0; t < 100; ++t) {
    auto a = gen.adapted_algebra(4);
    RationalVector x = gen.vector(a.dim()), y = gen.vector(a.dim()), z = gen.vector(a.dim());
    o.expect(bracket(a, x, y) == scale(Rational(-1), bracket(a, y, x)), "antisymmetry #" + std::to_string(t));
    o.expect(bracket(a, x, y) == direct_bracket(a, x, y), "bracket formula #" + std::to_string(t));
    RationalVector jac = add(add(bracket(a, x, bracket(a, y, z)), bracket(a, y, bracket(a, z, x))),
                             bracket(a, z, bracket(a, x, y)));
    o.expect(is_zero(jac), "Jacobi #" + std::to_string(t));
  }
  std::vector<MetricAlgebra> instances{catalog::n20(), catalog::n11(), catalog::n02(), catalog::heisenberg()};
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      auto mod = build_module({r, n - r});
      instances.push_back(algebra_from_J(mod.generators, mod.module_form, SignatureForm::standard(r, n - r)));
    }
  for (const auto& a : instances) {
    auto js = j_basis(a);
    auto back = algebra_from_J(js, a.form_V(), a.form_Z());
    o.expect(back.algebra().C() == a.algebra().C(), "round trip C");
    o.expect(j_basis(back) == js, "round trip J");
  }
  o.summary = "400 seeded property checks and " + std::to_string(instances.size()) + " duality round trips";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t samples = 0;
  auto scan = [&](const std::vector<LawSample>& list, const std::string& tag) {
    for (const auto& s : list) {
      ++samples;
      o.expect(s.status.passing() != 2, tag + " " + s.label);
    }
  };
  for (std::size_t n = 1; n <= kCliffordCap; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      auto m = build_module({r, n - r});
      scan(sample_laws(m.generators, m.module_form.matrix(), m.signature), "module " + pq(r, n - r));
      scan(verify_module(m).law_samples, "report " + pq(r, n - r));
    }
  for (const auto& a : {catalog::n20(), catalog::n11(), catalog::n02(), catalog::heisenberg()})
    scan(is_pseudo_H_type(a).samples, "catalog");
  o.summary = std::to_string(samples) + " law samples, none with exactly two laws";
  return o;
}

}  // namespace

int main() {
  const std::uint64_t seed = nilforge::testing::base_seed(20240611);
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden reproduction", criterion1},
      {"trace form index formula", criterion2},
      {"reduction isomorphism", [&] { return criterion3(seed); }},
      {"Clifford module certification", criterion4},
      {"Lie triple systems", criterion5},
      {"lattice pipeline", criterion6},
      {"property suites", [&] { return criterion7(seed + 1); }},
      {"two-of-three law", criterion8},
  };
  int failed = 0;
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s -- %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.summary.c_str());
    for (const auto& f : o.failures) std::printf("    failed: %s\n", f.c_str());
    failed += !o.passed;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
