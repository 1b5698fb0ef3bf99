#include "nilforge/standardform.hpp"

#include "nilforge/error.hpp"

namespace nilforge {

MatrixSubspace structure_space(const NilpotentAlgebra2& a) {
  if (a.tag() != AlgebraTag::Adapted) {
    throw Error(ErrorCode::NotAdapted, "structure matrices are linearly dependent");
  }
  return MatrixSubspace(a.m(), a.C());
}

MatrixSubspace eta_twist(const MatrixSubspace& c, std::size_t p, std::size_t q, TwistSide side) {
  if (p + q != c.ambient_dim()) throw Error(ErrorCode::Dim, "eta_twist: p + q differs from m");
  RationalMatrix e = eta(p, q);
  std::vector<RationalMatrix> out;
  for (const auto& ck : c.basis()) out.push_back(side == TwistSide::Right ? ck * e : e * ck);
  return MatrixSubspace(c.ambient_dim(), std::move(out));
}

std::vector<RealizationCandidate> scan_realizations(const NilpotentAlgebra2& a, TwistSide side) {
  MatrixSubspace c = structure_space(a);
  std::vector<RealizationCandidate> out;
  for (std::size_t p = 0; p <= a.m(); ++p) {
    RealizationCandidate cand;
    cand.p = p;
    cand.q = a.m() - p;
    cand.gram = trace_gram(eta_twist(c, cand.p, cand.q, side));
    cand.gram_signature = signature(cand.gram);
    cand.nondegenerate = cand.gram_signature.nullity == 0;
    out.push_back(std::move(cand));
  }
  return out;
}

std::vector<RealizationCandidate> find_realizations(const NilpotentAlgebra2& a) {
  std::vector<RealizationCandidate> out;
  for (auto& c : scan_realizations(a, TwistSide::Right)) {
    if (c.nondegenerate) out.push_back(std::move(c));
  }
  return out;
}

StandardPseudoMetricAlgebra standard_algebra(std::size_t p, std::size_t q, const MatrixSubspace& w) {
  if (w.ambient_dim() != p + q) throw Error(ErrorCode::Dim, "standard_algebra: W ambient differs from p + q");
  RationalMatrix e = eta(p, q);
  for (std::size_t k = 0; k < w.dim(); ++k) {
    if (!in_so(w[k], e)) {
      throw Error(ErrorCode::NotInSo, "W basis element " + std::to_string(k + 1) + " is not in so(p,q)");
    }
  }
  RationalMatrix gram = trace_gram(w);
  if (signature(gram).nullity != 0) throw Error(ErrorCode::DegenerateW, "trace form degenerates on W");
  // <[e_i, e_j], w_l> = (w_l^T eta)_ij; solve against the Gram matrix
  std::vector<RationalMatrix> js(w.basis());
  MetricAlgebra alg = algebra_from_J(js, SignatureForm(e), SignatureForm(gram));
  return {p, q, w, gram, alg.algebra()};
}

ReductionResult reduction_isomorphism(const NilpotentAlgebra2& a, std::size_t p, std::size_t q) {
  MatrixSubspace d = eta_twist(structure_space(a), p, q, TwistSide::Left);
  RationalMatrix gram = trace_gram(d);
  auto gram_inv = inverse(gram);
  if (!gram_inv) throw Error(ErrorCode::DegenerateW, "twisted structure space is degenerate");

  ReductionResult res;
  res.target = standard_algebra(p, q, d);
  const std::size_t m = a.m(), n = a.n();
  for (std::size_t k = 0; k < n; ++k) {
    RationalMatrix rho(m, m);
    for (std::size_t l = 0; l < n; ++l) {
      if ((*gram_inv)(k, l) != 0) rho += (*gram_inv)(k, l) * d[l];
    }
    res.dual_basis.push_back(std::move(rho));
  }
  res.t = RationalMatrix(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i) res.t(i, i) = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) res.t(m + l, m + k) = -(*gram_inv)(k, l);
  if (!is_homomorphism(a, res.target.algebra, res.t)) {
    throw Error(ErrorCode::Homomorphism, "reduction map failed the bracket certificate");
  }
  return res;
}

std::vector<RationalMatrix> free_center_basis(std::size_t p, std::size_t q) {
  std::size_t m = p + q;
  RationalMatrix e = eta(p, q);
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out.push_back((matrix_unit(m, i, j) - matrix_unit(m, j, i)) * e);
  return out;
}

std::vector<RationalMatrix> free_bracket_basis(std::size_t p, std::size_t q) {
  std::vector<RationalMatrix> out;
  for (auto& psi : free_center_basis(p, q)) out.push_back(Rational(-1, 2) * psi);
  return out;
}

StandardPseudoMetricAlgebra free_algebra(std::size_t p, std::size_t q) {
  std::size_t m = p + q;
  if (m < 2) throw Error(ErrorCode::Dim, "free_algebra needs p + q >= 2");
  MatrixSubspace w(m, free_center_basis(p, q));
  std::vector<RationalMatrix> c;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      RationalMatrix ck(m, m);
      ck(i, j) = Rational(-1, 2);
      ck(j, i) = Rational(1, 2);
      c.push_back(std::move(ck));
    }
  RationalMatrix gram = trace_gram(w);
  NilpotentAlgebra2 alg(m, std::move(c), SignatureForm(eta(p, q)), SignatureForm(gram));
  return {p, q, std::move(w), std::move(gram), std::move(alg)};
}

FreeIsomorphism free_isomorphism(std::size_t p, std::size_t q) {
  StandardPseudoMetricAlgebra src = free_algebra(p + q, 0);
  StandardPseudoMetricAlgebra dst = free_algebra(p, q);
  FreeIsomorphism out;
  // v_ij = -1/2 psi_ij in both algebras, so e_k -> e_k, v_ij -> phi_ij is the
  // identity on coordinates
  out.map = RationalMatrix::identity(src.algebra.dim());
  out.certified = is_homomorphism(src.algebra, dst.algebra, out.map) && inverse(out.map).has_value();
  out.phi_gram = trace_pairing(free_bracket_basis(p, q), free_bracket_basis(p, q));
  return out;
}

RationalMatrix eta_adjoint(const RationalMatrix& a, std::size_t p, std::size_t q) {
  RationalMatrix e = eta(p, q);
  return e * a.transpose() * e;
}

RationalMatrix gl_act(const RationalMatrix& a, const RationalMatrix& z, std::size_t p, std::size_t q) {
  if (a.rows() != p + q || !a.is_square()) throw Error(ErrorCode::DimMismatch, "A must be (p+q) square");
  if (determinant(a) == 0) throw Error(ErrorCode::SingularA, "A is singular");
  return a * z * eta_adjoint(a, p, q);
}

MatrixSubspace gl_action(const RationalMatrix& a, const MatrixSubspace& s, std::size_t p, std::size_t q) {
  if (a.rows() != p + q || !a.is_square()) throw Error(ErrorCode::DimMismatch, "A must be (p+q) square");
  if (determinant(a) == 0) throw Error(ErrorCode::SingularA, "A is singular");
  RationalMatrix e = eta(p, q);
  RationalMatrix adj = eta_adjoint(a, p, q);
  std::vector<RationalMatrix> out;
  for (const auto& z : s.basis()) {
    if (!in_so(z, e)) throw Error(ErrorCode::NotInSo, "gl_action input is not in so(p,q)");
    out.push_back(a * z * adj);
  }
  return MatrixSubspace(s.ambient_dim(), std::move(out));
}

RationalMatrix free_automorphism(std::size_t p, std::size_t q, const RationalMatrix& a,
                                 const std::vector<RationalMatrix>& s_hom) {
  StandardPseudoMetricAlgebra f = free_algebra(p, q);
  const std::size_t m = p + q, n = f.W.dim();
  if (s_hom.size() != m) throw Error(ErrorCode::DimMismatch, "S_hom needs one matrix per e_i");
  if (a.rows() != m || !a.is_square()) throw Error(ErrorCode::DimMismatch, "A must be (p+q) square");
  if (determinant(a) == 0) throw Error(ErrorCode::SingularA, "A is singular");
  RationalMatrix phi(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < m; ++r) phi(r, i) = a(r, i);
    auto coords = f.W.coordinates(s_hom[i]);
    if (!coords) throw Error(ErrorCode::NotInSo, "S_hom value is not in so(p,q)");
    for (std::size_t k = 0; k < n; ++k) phi(m + k, i) = (*coords)[k];
  }
  for (std::size_t l = 0; l < n; ++l) {
    auto coords = f.W.coordinates(gl_act(a, f.W[l], p, q));
    if (!coords) throw Error(ErrorCode::NotInSo, "A Z A^eta left so(p,q)");
    for (std::size_t k = 0; k < n; ++k) phi(m + k, m + l) = (*coords)[k];
  }
  if (!inverse(phi) || !is_homomorphism(f.algebra, f.algebra, phi)) {
    throw Error(ErrorCode::Homomorphism, "free automorphism failed the bracket certificate");
  }
  return phi;
}

RationalVector apply_free_automorphism(std::size_t p, std::size_t q, const RationalMatrix& a,
                                       const std::vector<RationalMatrix>& s_hom,
                                       const RationalVector& x) {
  RationalMatrix phi = free_automorphism(p, q, a, s_hom);
  if (x.size() != phi.cols()) throw Error(ErrorCode::DimMismatch, "element length differs from dim F_2(p,q)");
  return phi * x;
}

QuotientResult quotient_by_center_subspace(const StandardPseudoMetricAlgebra& f, const MatrixSubspace& k) {
  const std::size_t m = f.algebra.m(), n = f.W.dim();
  std::vector<RationalVector> k_coords;
  for (const auto& x : k.basis()) {
    auto c = f.W.coordinates(x);
    if (!c) throw Error(ErrorCode::Precondition, "K is not contained in the center");
    k_coords.push_back(std::move(*c));
  }
  QuotientResult out;
  std::vector<RationalVector> comp;
  out.metric_complement = signature(trace_gram(k)).nullity == 0;
  if (out.metric_complement) {
    // x with sum_a x_a <W_a, K_b> = 0 for every b
    RationalMatrix pairing = trace_pairing(k.basis(), f.W.basis());
    comp = k.dim() == 0 ? kernel_basis(RationalMatrix(0, n)) : kernel_basis(pairing);
  } else {
    SpanReducer span(n);
    for (const auto& c : k_coords) span.insert(c);
    for (std::size_t a = 0; a < n; ++a) {
      RationalVector e = unit_vector(n, a);
      if (span.insert(e)) comp.push_back(std::move(e));
    }
  }
  std::vector<RationalMatrix> comp_mats;
  for (const auto& c : comp) comp_mats.push_back(f.W.combination(c));
  out.complement = MatrixSubspace(f.W.ambient_dim(), comp_mats);

  std::vector<RationalVector> full = k_coords;
  full.insert(full.end(), comp.begin(), comp.end());
  const std::size_t r = comp.size();
  std::vector<RationalMatrix> c_new(r, RationalMatrix(m, m));
  if (!full.empty()) {
    CoordinateSolver solver(full, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        RationalVector y = *solver.coordinates(f.algebra.bracket_coeffs(i, j));
        for (std::size_t t = 0; t < r; ++t) c_new[t](i, j) = y[k_coords.size() + t];
      }
  }
  if (out.metric_complement) {
    out.algebra = NilpotentAlgebra2(m, std::move(c_new), f.algebra.form_V(),
                                    SignatureForm(trace_gram(out.complement)));
  } else {
    out.algebra = NilpotentAlgebra2(m, std::move(c_new), f.algebra.form_V());
  }
  return out;
}

bool orbit_witness(const RationalMatrix& a, const MatrixSubspace& w1, const MatrixSubspace& w2,
                   std::size_t p, std::size_t q) {
  return same_subspace(gl_action(a, w1, p, q), w2);
}

}  // namespace nilforge
