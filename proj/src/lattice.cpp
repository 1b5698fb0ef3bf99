#include "nilforge/lattice.hpp"

#include "nilforge/error.hpp"

namespace nilforge {

namespace {

bool all_integer(const std::vector<RationalMatrix>& ms) {
  for (const auto& m : ms)
    for (const auto& x : m.entries())
      if (x.get_den() != 1) return false;
  return true;
}

}  // namespace

std::string lattice_status_name(LatticeStatus s) {
  return s == LatticeStatus::AdmitsLattice ? "admits-lattice" : "unknown";
}

bool is_rational_basis(const NilpotentAlgebra2& a) { return !a.symbolic(); }

IntegerRescale integer_rescale(const NilpotentAlgebra2& a) {
  IntegerRescale out;
  for (const auto& ck : a.C())
    for (const auto& x : ck.entries()) mpz_lcm(out.d.get_mpz_t(), out.d.get_mpz_t(), x.get_den_mpz_t());
  std::vector<RationalMatrix> scaled;
  for (const auto& ck : a.C()) scaled.push_back(Rational(out.d) * ck);
  out.rescaled = NilpotentAlgebra2(a.m(), std::move(scaled), a.form_V(), a.form_Z(), a.symbolic());
  return out;
}

std::vector<RationalMatrix> structure_constants_in_basis(const NilpotentAlgebra2& a, const RationalMatrix& b) {
  const std::size_t d = a.dim();
  if (b.rows() != d || b.cols() != d) throw Error(ErrorCode::DimMismatch, "basis change must be (m+n) square");
  auto b_inv = inverse(b);
  if (!b_inv) throw Error(ErrorCode::SingularA, "basis change is singular");
  std::vector<RationalMatrix> c(d, RationalMatrix(d, d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      RationalVector coords = *b_inv * bracket(a, b.col(x), b.col(y));
      for (std::size_t t = 0; t < d; ++t) c[t](x, y) = coords[t];
    }
  return c;
}

LatticeVerdict lattice_verdict(const NilpotentAlgebra2& a) {
  LatticeVerdict v;
  if (!is_rational_basis(a)) return v;
  IntegerRescale ir = integer_rescale(a);
  RationalMatrix basis = RationalMatrix::identity(a.dim());
  for (std::size_t k = 0; k < a.n(); ++k) basis(a.m() + k, a.m() + k) = Rational(1) / Rational(ir.d);
  v.rescale_factor = ir.d;
  v.rescaled_constants_integer = all_integer(structure_constants_in_basis(a, basis));
  if (v.rescaled_constants_integer) {
    v.status = LatticeStatus::AdmitsLattice;
    v.witness_basis = std::move(basis);
  }
  return v;
}

PseudoHLatticeWitness pseudo_H_lattice_witness(std::size_t r, std::size_t s) {
  PseudoHLatticeWitness w;
  w.module = build_module({r, s});
  const std::size_t n_mod = w.module.module_dim;
  const std::size_t n = r + s;
  MetricAlgebra alg = algebra_from_J(w.module.generators, w.module.module_form, SignatureForm::standard(r, s));
  w.algebra = alg.algebra();

  const Inertia& in = w.module.module_form.inertia();
  w.standard = standard_algebra(in.p, in.q, MatrixSubspace(n_mod, w.module.generators));

  w.trace_identity_holds = true;
  for (std::size_t i = 0; i < n; ++i) {
    Rational t = trace_form(w.module.generators[i], w.module.generators[i]);
    w.trace_values.push_back(t);
    if (t != Rational(static_cast<long>(n_mod)) * w.module.signature.nu(i)) w.trace_identity_holds = false;
  }
  w.gram_is_scaled_form = w.standard.gram_W == Rational(static_cast<long>(n_mod)) * eta(r, s);

  auto iso = extend_to_isomorphism(w.algebra, w.standard.algebra, RationalMatrix::identity(n_mod));
  w.isomorphism_certified = iso.has_value();
  if (iso) w.isomorphism = *iso;

  w.verdict = lattice_verdict(w.algebra);
  if (!(w.trace_identity_holds && w.gram_is_scaled_form && w.isomorphism_certified)) {
    w.verdict.status = LatticeStatus::Unknown;
  }
  return w;
}

}  // namespace nilforge
