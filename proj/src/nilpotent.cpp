#include "nilforge/nilpotent.hpp"

#include "nilforge/error.hpp"

namespace nilforge {

namespace {

int sign_of(const Rational& x) { return sgn(x); }

RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

}  // namespace

NilpotentAlgebra2::NilpotentAlgebra2(std::size_t m, std::vector<RationalMatrix> c,
                                     std::optional<SignatureForm> form_v,
                                     std::optional<SignatureForm> form_z, bool symbolic)
    : m_(m), c_(std::move(c)), form_v_(std::move(form_v)), form_z_(std::move(form_z)),
      symbolic_(symbolic) {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].rows() != m_ || c_[k].cols() != m_) {
      throw Error(ErrorCode::DimMismatch, "structure matrix C^" + std::to_string(k + 1) +
                                              " is not " + std::to_string(m_) + "x" +
                                              std::to_string(m_));
    }
    if (!c_[k].is_antisymmetric()) {
      throw Error(ErrorCode::NotAntisymmetric,
                  "structure matrix C^" + std::to_string(k + 1) + " is not antisymmetric");
    }
  }
  if (form_v_ && form_v_->size() != m_) throw Error(ErrorCode::DimMismatch, "form_V size differs from m");
  if (form_z_ && form_z_->size() != c_.size()) {
    throw Error(ErrorCode::DimMismatch, "form_Z size differs from n");
  }
  SpanReducer span(m_ * m_);
  bool independent = true;
  for (const auto& ck : c_) independent = span.insert(vectorize(ck)) && independent;
  tag_ = independent ? AlgebraTag::Adapted : AlgebraTag::Raw;
}

RationalVector NilpotentAlgebra2::bracket_coeffs(std::size_t i, std::size_t j) const {
  RationalVector r(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] = c_[k](i, j);
  return r;
}

MetricAlgebra::MetricAlgebra(NilpotentAlgebra2 algebra) : algebra_(std::move(algebra)) {
  if (!algebra_.form_V() || !algebra_.form_Z()) {
    throw Error(ErrorCode::DegenerateForm, "metric algebra needs both form_V and form_Z");
  }
  if (!algebra_.form_V()->is_nondegenerate() || !algebra_.form_Z()->is_nondegenerate()) {
    throw Error(ErrorCode::DegenerateForm, "form_V or form_Z is degenerate");
  }
}

RationalVector bracket(const NilpotentAlgebra2& a, const RationalVector& x, const RationalVector& y) {
  if (x.size() != a.dim() || y.size() != a.dim()) {
    throw Error(ErrorCode::DimMismatch, "bracket: element length differs from m + n");
  }
  RationalVector r(a.dim());
  for (std::size_t k = 0; k < a.n(); ++k) {
    const RationalMatrix& ck = a.C(k);
    Rational acc = 0;
    for (std::size_t i = 0; i < a.m(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < a.m(); ++j) {
        if (y[j] != 0 && ck(i, j) != 0) acc += x[i] * y[j] * ck(i, j);
      }
    }
    r[a.m() + k] = acc;
  }
  return r;
}

RationalMatrix j_map(const MetricAlgebra& a, const RationalVector& z) {
  if (z.size() != a.n()) throw Error(ErrorCode::DimMismatch, "j_map: center vector length");
  RationalVector gz = a.form_Z().matrix() * z;
  RationalMatrix mz(a.m(), a.m());
  for (std::size_t k = 0; k < a.n(); ++k) {
    if (gz[k] != 0) mz += gz[k] * a.algebra().C(k);
  }
  auto gv_inv = inverse(a.form_V().matrix());
  if (!gv_inv) throw Error(ErrorCode::DegenerateForm, "form_V is singular");
  // J_z^T G_V = M_z and M_z is antisymmetric, hence J_z = -G_V^{-1} M_z
  return -(*gv_inv * mz);
}

std::vector<RationalMatrix> j_basis(const MetricAlgebra& a) {
  std::vector<RationalMatrix> js;
  for (std::size_t k = 0; k < a.n(); ++k) js.push_back(j_map(a, unit_vector(a.n(), k)));
  return js;
}

MetricAlgebra algebra_from_J(const std::vector<RationalMatrix>& j, const SignatureForm& form_v,
                             const SignatureForm& form_z) {
  if (!form_v.is_nondegenerate() || !form_z.is_nondegenerate()) {
    throw Error(ErrorCode::DegenerateForm, "algebra_from_J: degenerate form");
  }
  std::size_t m = form_v.size(), n = form_z.size();
  if (j.size() != n) throw Error(ErrorCode::DimMismatch, "algebra_from_J: |J| differs from form_Z size");
  const RationalMatrix& gv = form_v.matrix();
  std::vector<RationalMatrix> jt_g;
  for (std::size_t l = 0; l < n; ++l) {
    if (j[l].rows() != m || j[l].cols() != m) {
      throw Error(ErrorCode::DimMismatch, "algebra_from_J: J matrix size differs from form_V");
    }
    RationalMatrix t = j[l].transpose() * gv;
    if (!t.is_antisymmetric()) {
      throw Error(ErrorCode::NotSkew, "J_" + std::to_string(l + 1) + " is not skew for form_V");
    }
    jt_g.push_back(std::move(t));
  }
  RationalMatrix gz_inv = *inverse(form_z.matrix());
  std::vector<RationalMatrix> c;
  for (std::size_t k = 0; k < n; ++k) {
    RationalMatrix ck(m, m);
    for (std::size_t l = 0; l < n; ++l) {
      if (gz_inv(k, l) != 0) ck += gz_inv(k, l) * jt_g[l];
    }
    c.push_back(std::move(ck));
  }
  return MetricAlgebra(NilpotentAlgebra2(m, std::move(c), form_v, form_z));
}

std::vector<RationalVector> derived_ideal(const NilpotentAlgebra2& a) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < a.m(); ++i)
    for (std::size_t j = i + 1; j < a.m(); ++j) rows.push_back(a.bracket_coeffs(i, j));
  if (rows.empty()) return {};
  return row_space_basis(rows, a.n());
}

AbelianSplit abelian_factor(const MetricAlgebra& a) {
  const NilpotentAlgebra2& g = a.algebra();
  const RationalMatrix& gz = a.form_Z().matrix();
  AbelianSplit out;
  out.derived_basis = derived_ideal(g);
  std::size_t r = out.derived_basis.size();

  RationalMatrix b = stack_rows(out.derived_basis, g.n());
  RationalMatrix restricted = b * gz * b.transpose();
  if (signature(restricted).nullity != 0) {
    throw Error(ErrorCode::DegenerateRestriction, "form_Z is degenerate on [g, g]");
  }
  // [g, g]^perp = {z : b G_Z z = 0}
  out.factor_basis = r == 0 ? kernel_basis(RationalMatrix(0, g.n())) : kernel_basis(b * gz);
  out.a_dim = out.factor_basis.size();

  // ker J: z with sum_k (G_Z z)_k C^k = 0
  RationalMatrix jmat(g.m() * g.m(), g.n());
  for (std::size_t col = 0; col < g.n(); ++col) {
    RationalVector gzcol = gz * unit_vector(g.n(), col);
    RationalMatrix mz(g.m(), g.m());
    for (std::size_t k = 0; k < g.n(); ++k) {
      if (gzcol[k] != 0) mz += gzcol[k] * g.C(k);
    }
    for (std::size_t e = 0; e < g.m() * g.m(); ++e) jmat(e, col) = mz.entries()[e];
  }
  out.kernel_dim = kernel_basis(jmat).size();

  std::vector<RationalMatrix> c_star(r, RationalMatrix(g.m(), g.m()));
  if (r > 0) {
    CoordinateSolver coords(out.derived_basis, g.n());
    for (std::size_t i = 0; i < g.m(); ++i)
      for (std::size_t j = 0; j < g.m(); ++j) {
        RationalVector y = *coords.coordinates(g.bracket_coeffs(i, j));
        for (std::size_t t = 0; t < r; ++t) c_star[t](i, j) = y[t];
      }
  }
  out.g_star = NilpotentAlgebra2(g.m(), std::move(c_star), a.form_V(), SignatureForm(restricted));
  return out;
}

PseudoHReport is_pseudo_H_type(const MetricAlgebra& a) {
  PseudoHReport rep;
  const RationalMatrix& gv = a.form_V().matrix();
  std::vector<RationalMatrix> js = j_basis(a);
  auto add_sample = [&](const std::string& label, const RationalVector& z) {
    Rational zz = a.form_Z()(z, z);
    RationalMatrix jz(a.m(), a.m());
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (z[k] != 0) jz += z[k] * js[k];
    }
    rep.samples.push_back({label, zz, evaluate_laws(jz, gv, zz)});
  };
  for (std::size_t k = 0; k < a.n(); ++k) add_sample("z" + std::to_string(k + 1), unit_vector(a.n(), k));
  for (std::size_t k = 0; k < a.n(); ++k)
    for (std::size_t l = k + 1; l < a.n(); ++l) {
      RationalVector zk = unit_vector(a.n(), k), zl = unit_vector(a.n(), l);
      std::string lk = "z" + std::to_string(k + 1), ll = "z" + std::to_string(l + 1);
      add_sample(lk + "+" + ll, add(zk, zl));
      add_sample(lk + "-" + ll, add(zk, scale(Rational(-1), zl)));
    }
  rep.skew = rep.orthogonality = rep.square_law = true;
  for (const auto& s : rep.samples) {
    rep.skew = rep.skew && s.status.skew;
    rep.orthogonality = rep.orthogonality && s.status.orthogonal;
    rep.square_law = rep.square_law && s.status.square;
  }
  rep.verdict = rep.orthogonality;
  return rep;
}

bool rescale_and_compare(const MetricAlgebra& a, const Rational& c) {
  if (c == 0) throw Error(ErrorCode::Precondition, "rescale factor must be nonzero");
  std::vector<RationalMatrix> js = j_basis(a);
  SignatureForm fv(c * a.form_V().matrix());
  SignatureForm fz(c * a.form_Z().matrix());
  MetricAlgebra rebuilt = algebra_from_J(js, fv, fz);
  return rebuilt.algebra().C() == a.algebra().C();
}

bool is_homomorphism(const NilpotentAlgebra2& src, const NilpotentAlgebra2& dst,
                     const RationalMatrix& t) {
  if (t.rows() != dst.dim() || t.cols() != src.dim()) return false;
  for (std::size_t a = 0; a < src.dim(); ++a)
    for (std::size_t b = a + 1; b < src.dim(); ++b) {
      RationalVector lhs = t * bracket(src, unit_vector(src.dim(), a), unit_vector(src.dim(), b));
      RationalVector rhs = bracket(dst, t.col(a), t.col(b));
      if (lhs != rhs) return false;
    }
  return true;
}

std::optional<RationalMatrix> extend_to_isomorphism(const NilpotentAlgebra2& src,
                                                    const NilpotentAlgebra2& dst,
                                                    const RationalMatrix& a) {
  if (src.m() != dst.m() || src.n() != dst.n() || a.rows() != dst.m() || a.cols() != src.m()) {
    return std::nullopt;
  }
  std::size_t m = src.m(), n = src.n();
  // unknown L (n x n), row-major; equations L c_src(i,j) = c_dst(A v_i, A v_j)
  std::vector<RationalVector> eqs;
  RationalVector rhs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      RationalVector cs = src.bracket_coeffs(i, j);
      RationalVector av_i(dst.dim()), av_j(dst.dim());
      for (std::size_t r = 0; r < m; ++r) {
        av_i[r] = a(r, i);
        av_j[r] = a(r, j);
      }
      RationalVector target = bracket(dst, av_i, av_j);
      for (std::size_t row = 0; row < n; ++row) {
        RationalVector eq(n * n);
        for (std::size_t col = 0; col < n; ++col) eq[row * n + col] = cs[col];
        eqs.push_back(std::move(eq));
        rhs.push_back(target[m + row]);
      }
    }
  RationalMatrix l(n, n);
  if (!eqs.empty()) {
    auto sol = solve(stack_rows(eqs, n * n), rhs);
    if (!sol) return std::nullopt;
    l = RationalMatrix(n, n, *sol);
  }
  RationalMatrix t = block_diag(a, l);
  if (!inverse(t) || !is_homomorphism(src, dst, t)) return std::nullopt;
  return t;
}

std::string scaling_kind_name(ScalingKind k) {
  switch (k) {
    case ScalingKind::Isometry: return "isometry";
    case ScalingKind::AntiIsometry: return "anti-isometry";
    case ScalingKind::IrrationalScaling: return "irrational-scaling";
    case ScalingKind::NotDiagonalizable: return "not-diagonalizable";
    case ScalingKind::NotCertified: return "not-certified";
  }
  return "unknown";
}

ScalingOutcome scaling_isomorphism(const MetricAlgebra& a1, const MetricAlgebra& a2,
                                   const std::vector<RationalVector>& witnesses) {
  const std::size_t m = a1.m(), n = a1.n();
  if (a2.m() != m || a2.n() != n) throw Error(ErrorCode::Precondition, "algebra dimensions differ");
  if (!(a1.form_Z() == a2.form_Z())) throw Error(ErrorCode::Precondition, "center forms differ");
  if (j_basis(a1) != j_basis(a2)) throw Error(ErrorCode::Precondition, "J-maps differ");

  const RationalMatrix& g1 = a1.form_V().matrix();
  const RationalMatrix& g2 = a2.form_V().matrix();
  ScalingOutcome out;
  out.s = *inverse(g1) * g2;
  if (!(g1 * out.s).is_symmetric() || !(g2 * out.s).is_symmetric()) {
    throw Error(ErrorCode::Precondition, "S is not symmetric for both forms");
  }
  for (const auto& jz : j_basis(a1)) {
    if (out.s * jz != jz * out.s) throw Error(ErrorCode::Precondition, "S does not commute with J");
  }

  // causal types must agree up to one global sign
  int relation = 0;
  auto check_causal = [&](const RationalVector& x) {
    int s1 = sign_of(a1.form_V()(x, x)), s2 = sign_of(a2.form_V()(x, x));
    if ((s1 == 0) != (s2 == 0)) throw Error(ErrorCode::Precondition, "causal types differ on a witness");
    if (s1 == 0) return;
    int rel = s1 * s2;
    if (relation != 0 && rel != relation) {
      throw Error(ErrorCode::Precondition, "causal types differ on a witness");
    }
    relation = rel;
  };
  for (const auto& w : witnesses) {
    if (w.size() != m) throw Error(ErrorCode::DimMismatch, "witness length differs from m");
    check_causal(w);
  }

  out.char_poly = characteristic_polynomial(out.s);
  out.eigenvalues = rational_roots(out.char_poly);
  std::size_t found = 0;
  for (const auto& r : out.eigenvalues) found += r.multiplicity;
  if (found < m) {
    out.kind = ScalingKind::IrrationalScaling;
    return out;
  }

  std::vector<RationalVector> eigvecs;
  std::vector<Rational> lambdas;
  bool all_positive = true, all_negative = true;
  for (const auto& r : out.eigenvalues) {
    all_positive = all_positive && r.value > 0;
    all_negative = all_negative && r.value < 0;
    RationalMatrix shifted = out.s - r.value * RationalMatrix::identity(m);
    for (auto& v : kernel_basis(shifted)) {
      check_causal(v);
      eigvecs.push_back(std::move(v));
      lambdas.push_back(r.value);
    }
  }
  if (relation == 1) {
    if (!(a1.form_V().inertia() == a2.form_V().inertia())) {
      throw Error(ErrorCode::Precondition, "form_V indices differ");
    }
  } else if (relation == -1) {
    const Inertia &i1 = a1.form_V().inertia(), &i2 = a2.form_V().inertia();
    if (i1.p != i2.q || i1.q != i2.p) throw Error(ErrorCode::Precondition, "form_V indices are not swapped");
  }
  if (eigvecs.size() < m) {
    out.kind = ScalingKind::NotDiagonalizable;
    return out;
  }
  if (!all_positive && !all_negative) {
    throw Error(ErrorCode::Precondition, "S has eigenvalues of both signs");
  }
  std::vector<Rational> roots;
  for (const auto& mu : lambdas) {
    auto r = rational_sqrt(mu < 0 ? Rational(-mu) : mu);
    if (!r) {
      out.kind = ScalingKind::IrrationalScaling;
      return out;
    }
    roots.push_back(*r);
  }
  RationalMatrix e(m, m);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t r = 0; r < m; ++r) e(r, c) = eigvecs[c][r];
  RationalMatrix phi_v = e * RationalMatrix::diagonal(roots) * *inverse(e);

  const ScalingKind order[2] = {ScalingKind::Isometry, ScalingKind::AntiIsometry};
  for (ScalingKind kind : order) {
    Rational u_sign = kind == ScalingKind::Isometry ? 1 : -1;
    RationalMatrix phi = block_diag(phi_v, u_sign * RationalMatrix::identity(n));
    if (is_homomorphism(a2.algebra(), a1.algebra(), phi)) {
      out.kind = kind;
      out.phi = std::move(phi);
      return out;
    }
  }
  out.kind = ScalingKind::NotCertified;
  return out;
}

}  // namespace nilforge
