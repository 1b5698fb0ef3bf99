/// @file support.hpp
/// @brief Seeded random generators and independent oracles shared by the tests.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "nilforge/exactlin.hpp"
#include "nilforge/matrix.hpp"
#include "nilforge/nilpotent.hpp"

namespace nilforge::testing {

/// NILFORGE_SEED if set, otherwise the given default.
inline std::uint64_t base_seed(std::uint64_t fallback = 20240611) {
  if (const char* s = std::getenv("NILFORGE_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 5, long den_bound = 4) {
    Rational r(integer(-bound, bound), integer(1, den_bound));
    r.canonicalize();
    return r;
  }

  RationalVector vector(std::size_t n, long bound = 5) {
    RationalVector v(n);
    for (auto& x : v) x = rational(bound);
    return v;
  }

  RationalMatrix matrix(std::size_t r, std::size_t c, long bound = 5) {
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(bound);
    return m;
  }

  RationalMatrix symmetric(std::size_t n, long bound = 5) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rational(bound);
    return m;
  }

  RationalMatrix antisymmetric_int(std::size_t n, long bound = 2) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = integer(-bound, bound);
        m(j, i) = -m(i, j);
      }
    return m;
  }

  RationalMatrix invertible(std::size_t n, long bound = 3) {
    for (;;) {
      RationalMatrix m = matrix(n, n, bound);
      if (determinant(m) != 0) return m;
    }
  }

  /// Random element of so(p,q): eta times an antisymmetric matrix.
  RationalMatrix so_element(std::size_t p, std::size_t q, long bound = 4) {
    RationalMatrix a(p + q, p + q);
    for (std::size_t i = 0; i < p + q; ++i)
      for (std::size_t j = i + 1; j < p + q; ++j) {
        a(i, j) = rational(bound);
        a(j, i) = -a(i, j);
      }
    return eta(p, q) * a;
  }

  /// Adapted algebra with 2 <= m <= max_m, small integer constants.
  NilpotentAlgebra2 adapted_algebra(std::size_t max_m) {
    for (;;) {
      std::size_t m = static_cast<std::size_t>(integer(2, static_cast<long>(max_m)));
      std::size_t n = static_cast<std::size_t>(integer(1, static_cast<long>(m * (m - 1) / 2)));
      std::vector<RationalMatrix> c;
      for (std::size_t k = 0; k < n; ++k) c.push_back(antisymmetric_int(m));
      NilpotentAlgebra2 a(m, std::move(c));
      if (a.tag() == AlgebraTag::Adapted) return a;
    }
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

/// Basis {E_ij - nu_i nu_j E_ji : i < j} of so(p,q), built directly from the
/// defining relation.
inline std::vector<RationalMatrix> so_basis(std::size_t p, std::size_t q) {
  std::size_t m = p + q;
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      RationalMatrix x(m, m);
      int nu_ij = (i < p ? 1 : -1) * (j < p ? 1 : -1);
      x(i, j) = 1;
      x(j, i) = -nu_ij;
      out.push_back(std::move(x));
    }
  return out;
}

// ---- Sturm-sequence inertia oracle --------------------------------------

using Poly = std::vector<Rational>;  // constant term first

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

/// det(xI - M) by Leibniz expansion over permutations.
inline Poly leibniz_char_poly(const RationalMatrix& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Poly total;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Poly term{Rational(sign)};
    for (std::size_t i = 0; i < n; ++i) {
      Poly entry = i == perm[i] ? Poly{-m(i, i), Rational(1)} : Poly{-m(i, perm[i])};
      trim(entry);
      term = poly_mul(term, entry);
    }
    total = poly_add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

struct SturmCount {
  bool squarefree = false;
  Inertia inertia;
};

/// Inertia of a symmetric matrix from the Sturm sequence of its characteristic
/// polynomial. Only decisive when the non-zero part is squarefree.
inline SturmCount sturm_inertia(const RationalMatrix& m) {
  Poly p = leibniz_char_poly(m);
  SturmCount out;
  std::size_t zero = 0;
  while (!p.empty() && p.front() == 0) {
    p.erase(p.begin());
    ++zero;
  }
  std::vector<Poly> chain{p, derivative(p)};
  while (chain.back().size() > 1) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(r);
  }
  out.squarefree = chain.back().size() == 1;
  auto changes = [&](auto sign_of) {
    int last = 0;
    std::size_t v = 0;
    for (const auto& c : chain) {
      int s = sign_of(c);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  auto at_zero = [](const Poly& c) { return c.empty() ? 0 : sgn(c.front()); };
  auto at_pos_inf = [](const Poly& c) { return c.empty() ? 0 : sgn(c.back()); };
  auto at_neg_inf = [](const Poly& c) {
    if (c.empty()) return 0;
    int s = sgn(c.back());
    return (c.size() - 1) % 2 == 0 ? s : -s;
  };
  std::size_t v0 = changes(at_zero), vp = changes(at_pos_inf), vn = changes(at_neg_inf);
  out.inertia = {v0 - vp, vn - v0, zero};
  return out;
}

}  // namespace nilforge::testing
