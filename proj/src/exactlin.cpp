#include "nilforge/exactlin.hpp"

#include <algorithm>

#include "nilforge/error.hpp"

namespace nilforge {

Echelon rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    }
    Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (a(row, j) != 0) a(i, j) -= f * a(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimMismatch, "solve: rhs length");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimMismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimMismatch, "determinant of a non-square matrix");
  RationalMatrix a = m;
  std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a(sel, c) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

RationalMatrix stack_rows(const std::vector<RationalVector>& rows, std::size_t width) {
  RationalMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw Error(ErrorCode::DimMismatch, "stack_rows: width");
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<RationalVector> row_space_basis(const std::vector<RationalVector>& rows,
                                            std::size_t width) {
  Echelon e = rref(stack_rows(rows, width));
  std::vector<RationalVector> basis;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.push_back(e.reduced.row(r));
  return basis;
}

Inertia signature(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "signature: matrix is not symmetric");
  RationalMatrix a = m;
  std::size_t n = a.rows();
  Inertia in;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t t = 0; t < n; ++t) std::swap(a(i, t), a(j, t));
    for (std::size_t t = 0; t < n; ++t) std::swap(a(t, i), a(t, j));
  };
  std::size_t k = 0;
  while (k < n) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv < n) {
      swap_index(piv, k);
      const Rational d = a(k, k);
      (d > 0 ? in.p : in.q) += 1;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        Rational f = a(i, k) / d;
        for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      }
      ++k;
      continue;
    }
    // every remaining diagonal entry is zero: look for a hyperbolic pair
    std::size_t bi = n, bj = n;
    for (std::size_t i = k; i < n && bi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a(i, j) != 0) {
          bi = i;
          bj = j;
          break;
        }
    if (bi == n) {
      in.nullity += n - k;
      break;
    }
    swap_index(bi, k);
    swap_index(bj, k + 1);
    const Rational b = a(k, k + 1);
    in.p += 1;
    in.q += 1;
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t j = k + 2; j < n; ++j)
        a(i, j) -= (a(i, k) * a(k + 1, j) + a(i, k + 1) * a(k, j)) / b;
    k += 2;
  }
  return in;
}

RationalMatrix eta(std::size_t p, std::size_t q) {
  RationalMatrix e(p + q, p + q);
  for (std::size_t i = 0; i < p + q; ++i) e(i, i) = i < p ? 1 : -1;
  return e;
}

SignatureForm::SignatureForm(RationalMatrix matrix)
    : matrix_(std::move(matrix)), inertia_(signature(matrix_)) {}

SignatureForm SignatureForm::standard(std::size_t p, std::size_t q) {
  return SignatureForm(eta(p, q));
}

Rational SignatureForm::operator()(const RationalVector& u, const RationalVector& v) const {
  RationalVector mv = matrix_ * v;
  if (u.size() != mv.size()) throw Error(ErrorCode::DimMismatch, "form evaluation");
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * mv[i];
  return s;
}

RationalVector SpanReducer::reduce(RationalVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (c == 0) continue;
    Rational f = c;
    for (std::size_t j = 0; j < width_; ++j) {
      if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
    }
  }
  return v;
}

bool SpanReducer::contains(const RationalVector& v) const {
  if (v.size() != width_) throw Error(ErrorCode::DimMismatch, "SpanReducer: width");
  return is_zero(reduce(v));
}

bool SpanReducer::insert(const RationalVector& v) {
  if (v.size() != width_) throw Error(ErrorCode::DimMismatch, "SpanReducer: width");
  RationalVector w = reduce(v);
  std::size_t piv = 0;
  while (piv < width_ && w[piv] == 0) ++piv;
  if (piv == width_) return false;
  Rational inv = 1 / w[piv];
  for (auto& x : w) x *= inv;
  // keep existing rows reduced against the new pivot
  for (auto& row : rows_) {
    if (row[piv] == 0) continue;
    Rational f = row[piv];
    for (std::size_t j = 0; j < width_; ++j) {
      if (w[j] != 0) row[j] -= f * w[j];
    }
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

CoordinateSolver::CoordinateSolver(std::vector<RationalVector> basis, std::size_t width)
    : basis_(std::move(basis)), width_(width) {
  RationalMatrix b = stack_rows(basis_, width_);
  Echelon e = rref(b);
  if (e.pivots.size() != basis_.size()) {
    throw Error(ErrorCode::NotIndependent, "CoordinateSolver: dependent basis");
  }
  pivot_cols_ = e.pivots;
  std::size_t k = basis_.size();
  // x_P = B_P^T c, so c = (B_P^T)^{-1} x_P
  RationalMatrix bp(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t t = 0; t < k; ++t) bp(t, a) = basis_[a][pivot_cols_[t]];
  pivot_inverse_ = *inverse(bp);
}

std::optional<RationalVector> CoordinateSolver::coordinates(const RationalVector& x) const {
  if (x.size() != width_) throw Error(ErrorCode::DimMismatch, "coordinates: width");
  std::size_t k = basis_.size();
  RationalVector xp(k);
  for (std::size_t t = 0; t < k; ++t) xp[t] = x[pivot_cols_[t]];
  RationalVector c = pivot_inverse_ * xp;
  RationalVector back(width_);
  for (std::size_t a = 0; a < k; ++a) {
    if (c[a] == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) {
      if (basis_[a][j] != 0) back[j] += c[a] * basis_[a][j];
    }
  }
  if (back != x) return std::nullopt;
  return c;
}

MatrixSubspace::MatrixSubspace(std::size_t ambient_dim, std::vector<RationalMatrix> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  SpanReducer span(ambient_dim_ * ambient_dim_);
  for (const auto& b : basis_) {
    if (b.rows() != ambient_dim_ || b.cols() != ambient_dim_) {
      throw Error(ErrorCode::DimMismatch, "MatrixSubspace: basis matrix has the wrong size");
    }
    if (!span.insert(vectorize(b))) {
      throw Error(ErrorCode::NotIndependent, "MatrixSubspace: basis is linearly dependent");
    }
  }
}

MatrixSubspace MatrixSubspace::span_of(std::size_t ambient_dim,
                                       const std::vector<RationalMatrix>& generators) {
  SpanReducer span(ambient_dim * ambient_dim);
  std::vector<RationalMatrix> kept;
  for (const auto& g : generators) {
    if (g.rows() != ambient_dim || g.cols() != ambient_dim) {
      throw Error(ErrorCode::DimMismatch, "span_of: generator has the wrong size");
    }
    if (span.insert(vectorize(g))) kept.push_back(g);
  }
  return MatrixSubspace(ambient_dim, std::move(kept));
}

std::optional<RationalVector> MatrixSubspace::coordinates(const RationalMatrix& x) const {
  if (basis_.empty()) {
    if (x.is_zero()) return RationalVector{};
    return std::nullopt;
  }
  std::vector<RationalVector> rows;
  rows.reserve(basis_.size());
  for (const auto& b : basis_) rows.push_back(vectorize(b));
  return CoordinateSolver(std::move(rows), ambient_dim_ * ambient_dim_).coordinates(vectorize(x));
}

bool MatrixSubspace::contains(const RationalMatrix& x) const {
  return coordinates(x).has_value();
}

RationalMatrix MatrixSubspace::combination(const RationalVector& coeffs) const {
  if (coeffs.size() != basis_.size()) throw Error(ErrorCode::DimMismatch, "combination length");
  RationalMatrix r(ambient_dim_, ambient_dim_);
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    if (coeffs[a] != 0) r += coeffs[a] * basis_[a];
  }
  return r;
}

Rational trace_form(const RationalMatrix& x, const RationalMatrix& y) {
  if (!x.is_square() || x.rows() != y.cols() || x.cols() != y.rows()) {
    throw Error(ErrorCode::DimMismatch, "trace_form: shapes");
  }
  Rational t = 0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k) != 0 && y(k, i) != 0) t += x(i, k) * y(k, i);
    }
  return -t;
}

RationalMatrix trace_pairing(const std::vector<RationalMatrix>& a,
                             const std::vector<RationalMatrix>& b) {
  RationalMatrix g(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) g(i, j) = trace_form(a[i], b[j]);
  return g;
}

RationalMatrix trace_gram(const MatrixSubspace& s) { return trace_pairing(s.basis(), s.basis()); }

bool subspace_contains(const MatrixSubspace& big, const MatrixSubspace& small) {
  if (big.ambient_dim() != small.ambient_dim()) return false;
  SpanReducer span(big.ambient_dim() * big.ambient_dim());
  for (const auto& b : big.basis()) span.insert(vectorize(b));
  for (const auto& s : small.basis()) {
    if (!span.contains(vectorize(s))) return false;
  }
  return true;
}

bool same_subspace(const MatrixSubspace& a, const MatrixSubspace& b) {
  return a.dim() == b.dim() && subspace_contains(a, b) && subspace_contains(b, a);
}

std::size_t sum_dim(const MatrixSubspace& a, const MatrixSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimMismatch, "sum_dim: ambient");
  SpanReducer span(a.ambient_dim() * a.ambient_dim());
  for (const auto& x : a.basis()) span.insert(vectorize(x));
  for (const auto& x : b.basis()) span.insert(vectorize(x));
  return span.dim();
}

bool in_so(const RationalMatrix& x, const RationalMatrix& eta_matrix) {
  if (!x.is_square() || x.rows() != eta_matrix.rows()) return false;
  return eta_matrix * x.transpose() * eta_matrix == -x;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial characteristic_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimMismatch, "characteristic polynomial of non-square");
  std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return Polynomial{std::move(c)};
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, e] : factors) {
    std::size_t existing = divs.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= prime;
      for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Divides p by (x - r); the caller guarantees r is a root.
Polynomial deflate(const Polynomial& p, const Rational& r) {
  std::size_t n = p.degree();
  std::vector<Rational> q(n);
  Rational carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    carry = p.coeffs[i + 1] + carry * r;
    q[i] = carry;
  }
  return Polynomial{std::move(q)};
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Polynomial& p) {
  Polynomial cur = p;
  while (!cur.coeffs.empty() && cur.coeffs.back() == 0) cur.coeffs.pop_back();
  std::vector<RationalRoot> roots;
  if (cur.coeffs.size() <= 1) return roots;
  std::size_t zero_mult = 0;
  while (cur.coeffs.size() > 1 && cur.coeffs.front() == 0) {
    cur.coeffs.erase(cur.coeffs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});
  if (cur.degree() == 0) return roots;

  mpz_class lcm_den = 1;
  for (const auto& c : cur.coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  mpz_class a0 = Rational(cur.coeffs.front() * lcm_den).get_num();
  mpz_class an = Rational(cur.coeffs.back() * lcm_den).get_num();
  auto num_divs = positive_divisors(a0);
  auto den_divs = positive_divisors(an);
  std::vector<Rational> candidates;
  for (const auto& a : num_divs)
    for (const auto& b : den_divs) {
      Rational c(a, b);
      c.canonicalize();
      candidates.push_back(c);
      candidates.push_back(-c);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& c : candidates) {
    std::size_t mult = 0;
    while (cur.degree() > 0 && cur(c) == 0) {
      cur = deflate(cur, c);
      ++mult;
    }
    if (mult > 0) roots.push_back({c, mult});
  }
  std::sort(roots.begin(), roots.end(),
            [](const RationalRoot& x, const RationalRoot& y) { return x.value < y.value; });
  return roots;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn = sqrt(n), rd = sqrt(d);
  return Rational(rn, rd);
}

}  // namespace nilforge
