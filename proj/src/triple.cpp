#include "nilforge/triple.hpp"

#include <random>

#include "nilforge/error.hpp"

namespace nilforge {

namespace {

SpanReducer reducer_of(const MatrixSubspace& s) {
  SpanReducer span(s.ambient_dim() * s.ambient_dim());
  for (const auto& b : s.basis()) span.insert(vectorize(b));
  return span;
}

bool brackets_inside(const MatrixSubspace& a, const MatrixSubspace& b, const SpanReducer& target) {
  for (const auto& x : a.basis())
    for (const auto& y : b.basis())
      if (!target.contains(vectorize(commutator(x, y)))) return false;
  return true;
}

}  // namespace

MatrixSubspace bracket_span(const MatrixSubspace& a, const MatrixSubspace& b) {
  std::vector<RationalMatrix> gens;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) gens.push_back(commutator(x, y));
  return MatrixSubspace::span_of(a.ambient_dim(), gens);
}

bool is_lie_triple(const MatrixSubspace& w) {
  SpanReducer span = reducer_of(w);
  const auto& b = w.basis();
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t k = j + 1; k < b.size(); ++k) {
      RationalMatrix inner = commutator(b[j], b[k]);
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (!span.contains(vectorize(commutator(b[i], inner)))) return false;
      }
    }
  return true;
}

MatrixSubspace triple_center(const MatrixSubspace& w) {
  const std::size_t n2 = w.ambient_dim() * w.ambient_dim();
  const std::size_t k = w.dim();
  // column a: stacked vec([w_a, w_b]) over b
  RationalMatrix m(n2 * k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      RationalVector v = vectorize(commutator(w[a], w[b]));
      for (std::size_t e = 0; e < n2; ++e) m(b * n2 + e, a) = v[e];
    }
  std::vector<RationalMatrix> out;
  for (const auto& c : kernel_basis(m)) out.push_back(w.combination(c));
  return MatrixSubspace(w.ambient_dim(), std::move(out));
}

MatrixSubspace clifford_image(const CliffordModule& m) {
  return MatrixSubspace(m.module_dim, m.generators);
}

std::vector<RationalMatrix> adjoint_matrices(const MatrixSubspace& l) {
  const std::size_t d = l.dim();
  std::vector<RationalMatrix> ads;
  if (d == 0) return ads;
  std::vector<RationalVector> rows;
  for (const auto& b : l.basis()) rows.push_back(vectorize(b));
  CoordinateSolver solver(rows, l.ambient_dim() * l.ambient_dim());
  for (std::size_t a = 0; a < d; ++a) {
    RationalMatrix ad(d, d);
    for (std::size_t b = 0; b < d; ++b) {
      auto c = solver.coordinates(vectorize(commutator(l[a], l[b])));
      if (!c) throw Error(ErrorCode::NotClosed, "subspace is not closed under the bracket");
      for (std::size_t r = 0; r < d; ++r) ad(r, b) = (*c)[r];
    }
    ads.push_back(std::move(ad));
  }
  return ads;
}

RationalMatrix killing_form(const MatrixSubspace& l) {
  auto ads = adjoint_matrices(l);
  const std::size_t d = l.dim();
  RationalMatrix k(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      Rational t = 0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (ads[a](i, j) != 0 && ads[b](j, i) != 0) t += ads[a](i, j) * ads[b](j, i);
      k(a, b) = t;
      k(b, a) = t;
    }
  return k;
}

bool is_semisimple(const MatrixSubspace& l) { return signature(killing_form(l)).nullity == 0; }

MatrixSubspace lie_center(const MatrixSubspace& l) { return triple_center(l); }

SpecialSplit special_ideal_split(std::size_t r, std::size_t s, const CliffordModule& m) {
  bool allowed = (r == 3 && s == 0) || (r == 1 && s == 2);
  if (!allowed || m.signature.r != r || m.signature.s != s) {
    throw Error(ErrorCode::Signature, "the ideal split applies to (3,0) and (1,2) only");
  }
  const auto& j = m.generators;
  const std::size_t n = m.module_dim;
  RationalMatrix j23 = j[1] * j[2];
  auto build = [&](const RationalMatrix& h) {
    return MatrixSubspace::span_of(n, {h, commutator(h, j[1]), commutator(h, j[2])});
  };
  SpecialSplit out;
  out.h_plus = build(j[0] + j23);
  out.h_minus = build(j[0] - j23);
  out.dims_ok = out.h_plus.dim() == 3 && out.h_minus.dim() == 3;

  TripleSystemReport rep = generated_algebra(clifford_image(m));
  const MatrixSubspace& l = rep.L_basis;
  out.spans_L = sum_dim(out.h_plus, out.h_minus) == l.dim() &&
                out.h_plus.dim() + out.h_minus.dim() == l.dim() && subspace_contains(l, out.h_plus) &&
                subspace_contains(l, out.h_minus);
  out.commuting = true;
  for (const auto& x : out.h_plus.basis())
    for (const auto& y : out.h_minus.basis())
      if (!commutator(x, y).is_zero()) out.commuting = false;
  out.ideals = brackets_inside(out.h_plus, l, reducer_of(out.h_plus)) &&
               brackets_inside(out.h_minus, l, reducer_of(out.h_minus));
  return out;
}

TripleSystemReport generated_algebra(const MatrixSubspace& w) {
  TripleSystemReport rep;
  rep.is_triple = is_lie_triple(w);
  if (!rep.is_triple) return rep;
  rep.center_dim = triple_center(w).dim();
  rep.derived = bracket_span(w, w);
  std::vector<RationalMatrix> gens = w.basis();
  gens.insert(gens.end(), rep.derived.basis().begin(), rep.derived.basis().end());
  rep.L_basis = MatrixSubspace::span_of(w.ambient_dim(), gens);
  rep.L_dim = rep.L_basis.dim();
  const SpanReducer t_span = reducer_of(rep.derived);
  const SpanReducer p_span = reducer_of(w);
  rep.cartan_certified = brackets_inside(rep.derived, rep.derived, t_span) &&
                         brackets_inside(rep.derived, w, p_span) && brackets_inside(w, w, t_span);
  rep.killing = killing_form(rep.L_basis);
  rep.killing_signature = signature(rep.killing);
  return rep;
}

TripleSystemReport generated_algebra(const CliffordModule& m) {
  TripleSystemReport rep = generated_algebra(clifford_image(m));
  const std::size_t n = m.signature.n();
  rep.expected_L_dim = n + n * (n - 1) / 2;
  std::vector<RationalMatrix> lie_basis = m.generators;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) lie_basis.push_back(m.generators[j] * m.generators[k]);
  rep.clifford_basis_full_rank = MatrixSubspace::span_of(m.module_dim, lie_basis).dim() == *rep.expected_L_dim;
  const auto& sig = m.signature;
  if ((sig.r == 3 && sig.s == 0) || (sig.r == 1 && sig.s == 2)) {
    rep.special_split = special_ideal_split(sig.r, sig.s, m);
  }
  return rep;
}

DecompositionReport decomposition_checks(const MatrixSubspace& w) {
  if (!is_lie_triple(w)) throw Error(ErrorCode::Precondition, "W is not a Lie triple system");
  TripleSystemReport rep = generated_algebra(w);
  const MatrixSubspace& l = rep.L_basis;
  DecompositionReport out;
  MatrixSubspace zw = triple_center(w);
  MatrixSubspace zl = lie_center(l);
  MatrixSubspace dl = bracket_span(l, l);
  out.center_W_dim = zw.dim();
  out.center_L_dim = zl.dim();
  out.centers_equal = same_subspace(zw, zl);
  out.derived_L_dim = dl.dim();
  out.direct_sum = zl.dim() + dl.dim() == l.dim() && sum_dim(zl, dl) == l.dim();
  out.perfect = dl.dim() == l.dim();
  out.trivial_center_implies_perfect = zw.dim() != 0 || out.perfect;
  return out;
}

ThetaReport theta_closure(const MatrixSubspace& d1, const MatrixSubspace& d2, std::size_t p, std::size_t q) {
  RationalMatrix e = eta(p, q);
  auto theta = [&](const MatrixSubspace& s) {
    std::vector<RationalMatrix> out;
    for (const auto& x : s.basis()) out.push_back(e * x * e);
    return MatrixSubspace(s.ambient_dim(), std::move(out));
  };
  std::vector<RationalMatrix> gens = d1.basis();
  gens.insert(gens.end(), d2.basis().begin(), d2.basis().end());
  MatrixSubspace sum = MatrixSubspace::span_of(d1.ambient_dim(), gens);
  std::vector<RationalMatrix> transposed;
  for (const auto& x : sum.basis()) transposed.push_back(x.transpose());
  MatrixSubspace sum_t(sum.ambient_dim(), std::move(transposed));

  ThetaReport out;
  MatrixSubspace td1 = theta(d1);
  out.theta_maps_d1_to_d2 = same_subspace(td1, d2);
  out.sum_transpose_closed = same_subspace(sum_t, sum);
  out.sum_theta_closed = same_subspace(theta(sum), sum);
  out.isometric = trace_gram(td1) == trace_gram(d1);
  return out;
}

MatrixSubspace ideal_generated(const MatrixSubspace& l, const RationalMatrix& x) {
  SpanReducer span(l.ambient_dim() * l.ambient_dim());
  std::vector<RationalMatrix> basis;
  if (span.insert(vectorize(x))) basis.push_back(x);
  for (std::size_t cur = 0; cur < basis.size(); ++cur) {
    for (const auto& b : l.basis()) {
      RationalMatrix y = commutator(b, basis[cur]);
      if (span.insert(vectorize(y))) basis.push_back(std::move(y));
    }
  }
  return MatrixSubspace(l.ambient_dim(), std::move(basis));
}

namespace {

/// Basis of {T : T ad_x = ad_x T for every x}, in L coordinates.
std::vector<RationalMatrix> centroid_basis(const std::vector<RationalMatrix>& ad, std::size_t d) {
  RationalMatrix system(ad.size() * d * d, d * d);
  for (std::size_t a = 0; a < ad.size(); ++a)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::size_t row = (a * d + i) * d + j;
        for (std::size_t t = 0; t < d; ++t) {
          system(row, i * d + t) += ad[a](t, j);
          system(row, t * d + j) -= ad[a](i, t);
        }
      }
  std::vector<RationalMatrix> out;
  for (const auto& v : kernel_basis(system)) out.push_back(unvectorize(v, d, d));
  return out;
}

}  // namespace

IdealProbe ideal_probe(const MatrixSubspace& l, std::uint64_t seed, std::size_t random_trials) {
  IdealProbe out;
  const std::size_t d = l.dim();
  // Eigenspaces of centroid elements are ideals.
  auto ad = adjoint_matrices(l);
  for (const auto& t : centroid_basis(ad, d)) {
    for (const auto& root : rational_roots(characteristic_polynomial(t))) {
      ++out.trials;
      auto eig = kernel_basis(t - root.value * RationalMatrix::identity(d));
      if (!eig.empty() && eig.size() < d) {
        out.proper_ideal_found = true;
        out.witness = l.combination(eig.front());
        return out;
      }
    }
  }
  std::vector<RationalMatrix> probes = l.basis();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (std::size_t t = 0; t < random_trials; ++t) {
    RationalVector c(d);
    for (auto& v : c) v = coeff(rng);
    probes.push_back(l.combination(c));
  }
  for (const auto& x : probes) {
    if (x.is_zero()) continue;
    ++out.trials;
    MatrixSubspace ideal = ideal_generated(l, x);
    if (ideal.dim() != d) {
      out.proper_ideal_found = true;
      out.witness = x;
      break;
    }
  }
  return out;
}

}  // namespace nilforge
