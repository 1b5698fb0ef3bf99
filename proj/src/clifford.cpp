#include "nilforge/clifford.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "nilforge/error.hpp"

namespace nilforge {

namespace {

// Letter encoding: bit 0 = "x" part, bit 1 = "z" part, so I=0, X=1, Z=2, E=3
// and the product of two letters has code a ^ b up to sign.
using Word = std::vector<std::uint8_t>;

constexpr std::uint8_t kI = 0, kX = 1, kZ = 2, kE = 3;

char letter_name(std::uint8_t c) {
  switch (c) {
    case kX: return 'X';
    case kZ: return 'Z';
    case kE: return 'E';
    default: return 'I';
  }
}

RationalMatrix letter_matrix(std::uint8_t c) {
  switch (c) {
    case kX: return RationalMatrix::from_rows({{0, 1}, {1, 0}});
    case kZ: return RationalMatrix::from_rows({{1, 0}, {0, -1}});
    case kE: return RationalMatrix::from_rows({{0, -1}, {1, 0}});
    default: return RationalMatrix::identity(2);
  }
}

bool anticommute(const Word& a, const Word& b) {
  unsigned parity = 0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    unsigned ax = a[t] & 1u, az = (a[t] >> 1) & 1u;
    unsigned bx = b[t] & 1u, bz = (b[t] >> 1) & 1u;
    parity ^= (ax & bz) ^ (az & bx);
  }
  return parity == 1;
}

std::size_t count_e(const Word& w) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), kE));
}

// Skew-symmetry against a form whose first `plain` factors are I and the rest Z.
bool skew_for_form(const Word& w, std::size_t plain) {
  unsigned parity = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    bool flips = t < plain ? w[t] == kE : w[t] == kX;
    parity ^= flips ? 1u : 0u;
  }
  return parity == 1;
}

Word xor_word(const Word& a, const Word& b) {
  Word r(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) r[t] = a[t] ^ b[t];
  return r;
}

std::string word_name(const Word& w) {
  std::string s;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t > 0) s += '.';
    s += letter_name(w[t]);
  }
  return s;
}

RationalMatrix word_matrix(const Word& w) {
  RationalMatrix m = RationalMatrix::identity(1);
  for (auto c : w) m = kronecker(m, letter_matrix(c));
  return m;
}

struct WordSearch {
  CliffordSignature sig;
  std::vector<Word> minus_class;  // square to -I, used for the first r generators
  std::vector<Word> plus_class;   // square to +I, used for the last s generators
  std::vector<std::size_t> chosen_index;
  std::vector<Word> chosen;

  // Pattern set of {J_i} and {J_j J_k}: distinct patterns make these
  // products linearly independent, which is what faithfulness needs here.
  bool patterns_distinct(const Word& candidate) const {
    std::vector<Word> patterns;
    for (const auto& w : chosen) patterns.push_back(w);
    patterns.push_back(candidate);
    std::size_t base = patterns.size();
    for (std::size_t a = 0; a < base; ++a)
      for (std::size_t b = a + 1; b < base; ++b) patterns.push_back(xor_word(patterns[a], patterns[b]));
    std::sort(patterns.begin(), patterns.end());
    return std::adjacent_find(patterns.begin(), patterns.end()) == patterns.end();
  }

  bool extend() {
    std::size_t i = chosen.size();
    if (i == sig.n()) return true;
    const auto& pool = i < sig.r ? minus_class : plus_class;
    // generators of the same sign class are interchangeable, so keep them increasing
    std::size_t start = 0;
    if (i > 0 && (i < sig.r) == (i - 1 < sig.r)) start = chosen_index.back() + 1;
    for (std::size_t c = start; c < pool.size(); ++c) {
      const Word& w = pool[c];
      bool ok = true;
      for (const auto& prev : chosen) {
        if (!anticommute(prev, w)) {
          ok = false;
          break;
        }
      }
      if (!ok || !patterns_distinct(w)) continue;
      chosen.push_back(w);
      chosen_index.push_back(c);
      if (extend()) return true;
      chosen.pop_back();
      chosen_index.pop_back();
    }
    return false;
  }
};

std::vector<Word> all_words(std::size_t k) {
  std::vector<Word> words;
  std::size_t total = std::size_t{1} << (2 * k);
  for (std::size_t code = 0; code < total; ++code) {
    Word w(k);
    for (std::size_t t = 0; t < k; ++t) w[t] = static_cast<std::uint8_t>((code >> (2 * (k - 1 - t))) & 3u);
    words.push_back(std::move(w));
  }
  return words;
}

}  // namespace

Rational CliffordSignature::norm(const RationalVector& z) const {
  if (z.size() != n()) throw Error(ErrorCode::DimMismatch, "norm: vector length differs from r + s");
  Rational t = 0;
  for (std::size_t i = 0; i < z.size(); ++i) t += nu(i) * z[i] * z[i];
  return t;
}

std::size_t clifford_dim(const CliffordSignature& sig) { return std::size_t{1} << sig.n(); }

CliffordModule build_module(const CliffordSignature& sig) {
  if (sig.n() == 0 || sig.n() > kCliffordCap) {
    throw Error(ErrorCode::UnsupportedSignature,
                "build_module supports 1 <= r + s <= " + std::to_string(kCliffordCap));
  }
  for (std::size_t k = 1; k <= sig.n() + 1; ++k) {
    std::vector<Word> words = all_words(k);
    // s = 0 needs a positive definite form (all factors I); s > 0 needs a Z factor
    std::vector<std::size_t> plain_counts;
    if (sig.s == 0) {
      plain_counts.push_back(k);
    } else {
      for (std::size_t plain = k; plain-- > 0;) plain_counts.push_back(plain);
    }
    for (std::size_t plain : plain_counts) {
      WordSearch search;
      search.sig = sig;
      for (const auto& w : words) {
        if (!skew_for_form(w, plain)) continue;
        (count_e(w) % 2 == 1 ? search.minus_class : search.plus_class).push_back(w);
      }
      if (!search.extend()) continue;

      std::size_t n_mod = std::size_t{1} << k;
      Word form_word(k, kI);
      for (std::size_t t = plain; t < k; ++t) form_word[t] = kZ;
      RationalMatrix form = word_matrix(form_word);
      std::vector<std::size_t> perm(n_mod);
      std::iota(perm.begin(), perm.end(), 0);
      std::stable_sort(perm.begin(), perm.end(),
                       [&](std::size_t a, std::size_t b) { return form(a, a) > form(b, b); });
      auto reorder = [&](const RationalMatrix& m) {
        RationalMatrix out(n_mod, n_mod);
        for (std::size_t a = 0; a < n_mod; ++a)
          for (std::size_t b = 0; b < n_mod; ++b) out(a, b) = m(perm[a], perm[b]);
        return out;
      };

      CliffordModule mod;
      mod.signature = sig;
      mod.module_dim = n_mod;
      mod.module_form = SignatureForm(reorder(form));
      std::ostringstream path;
      path << "tensor-words k=" << k << " form=" << word_name(form_word);
      for (std::size_t i = 0; i < search.chosen.size(); ++i) {
        mod.generators.push_back(reorder(word_matrix(search.chosen[i])));
        path << " J" << (i + 1) << "=" << word_name(search.chosen[i]);
      }
      path << " basis=positive-first";
      mod.construction = path.str();
      return mod;
    }
  }
  throw Error(ErrorCode::UnsupportedSignature, "no tensor-word module found");
}

LawStatus evaluate_laws(const RationalMatrix& j, const RationalMatrix& g, const Rational& zz) {
  LawStatus st;
  RationalMatrix jt = j.transpose();
  st.skew = jt * g == -(g * j);
  st.orthogonal = jt * g * j == zz * g;
  st.square = j * j == -zz * RationalMatrix::identity(j.rows());
  return st;
}

std::vector<LawSample> sample_laws(const std::vector<RationalMatrix>& generators,
                                   const RationalMatrix& form, const CliffordSignature& sig) {
  std::vector<LawSample> samples;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    Rational zz = sig.nu(i);
    samples.push_back({"z" + std::to_string(i + 1), zz, evaluate_laws(generators[i], form, zz)});
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      Rational zz = sig.nu(i) + sig.nu(j);
      std::string a = "z" + std::to_string(i + 1), b = "z" + std::to_string(j + 1);
      samples.push_back({a + "+" + b, zz, evaluate_laws(generators[i] + generators[j], form, zz)});
      samples.push_back({a + "-" + b, zz, evaluate_laws(generators[i] - generators[j], form, zz)});
    }
  return samples;
}

bool ModuleReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ModuleReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ModuleReport verify_module(const CliffordModule& m) {
  ModuleReport rep;
  const auto& sig = m.signature;
  const std::size_t n_mod = m.module_dim;
  const RationalMatrix& g = m.module_form.matrix();

  bool shapes = m.generators.size() == sig.n() && g.rows() == n_mod && g.cols() == n_mod;
  for (const auto& j : m.generators) shapes = shapes && j.rows() == n_mod && j.cols() == n_mod;
  rep.checks.push_back({"dimensions", shapes,
                        shapes ? "" : "generator count or matrix sizes do not match (r, s, N)"});
  if (!shapes) return rep;

  const RationalMatrix id = RationalMatrix::identity(n_mod);
  std::string detail;
  bool ok = true;
  for (std::size_t i = 0; i < sig.n(); ++i) {
    if (m.generators[i] * m.generators[i] != Rational(-sig.nu(i)) * id) {
      ok = false;
      detail += "J" + std::to_string(i + 1) + " ";
    }
  }
  rep.checks.push_back({"square_law", ok, ok ? "" : "fails for " + detail});

  ok = true;
  detail.clear();
  for (std::size_t i = 0; i < sig.n(); ++i)
    for (std::size_t j = i + 1; j < sig.n(); ++j) {
      const auto& a = m.generators[i];
      const auto& b = m.generators[j];
      if (!(a * b + b * a).is_zero()) {
        ok = false;
        detail += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") ";
      }
    }
  rep.checks.push_back({"anticommutation", ok, ok ? "" : "fails for " + detail});

  ok = true;
  detail.clear();
  for (std::size_t i = 0; i < sig.n(); ++i) {
    const auto& j = m.generators[i];
    if (j.transpose() * g != -(g * j)) {
      ok = false;
      detail += "J" + std::to_string(i + 1) + " ";
    }
  }
  rep.checks.push_back({"admissibility", ok, ok ? "" : "not skew for " + detail});

  ok = true;
  detail.clear();
  for (std::size_t i = 0; i < sig.n(); ++i) {
    const auto& j = m.generators[i];
    if (j.transpose() * g * j != Rational(sig.nu(i)) * g) {
      ok = false;
      detail += "J" + std::to_string(i + 1) + " ";
    }
    for (std::size_t k = i + 1; k < sig.n(); ++k) {
      const auto& l = m.generators[k];
      if (!(j.transpose() * g * l + l.transpose() * g * j).is_zero()) {
        ok = false;
        detail += "(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ") ";
      }
    }
  }
  rep.checks.push_back({"orthogonality", ok, ok ? "" : "fails for " + detail});

  const Inertia& in = m.module_form.inertia();
  if (sig.s > 0) {
    ok = n_mod % 2 == 0 && in.nullity == 0 && in.p == n_mod / 2 && in.q == n_mod / 2;
    rep.checks.push_back({"neutral_form", ok, ok ? "" : "module form is not of index (N/2, N/2)"});
  } else {
    ok = in.p == n_mod && in.q == 0 && in.nullity == 0;
    rep.checks.push_back({"positive_form", ok, ok ? "" : "module form is not positive definite"});
  }

  ok = true;
  for (const auto& j : m.generators)
    for (const auto& x : j.entries())
      if (x != 0 && x != 1 && x != -1) ok = false;
  rep.checks.push_back({"integer_entries", ok, ok ? "" : "an entry lies outside {-1, 0, 1}"});

  rep.law_samples = sample_laws(m.generators, g, sig);
  ok = true;
  detail.clear();
  for (const auto& s : rep.law_samples) {
    if (s.status.passing() == 2) {
      ok = false;
      detail += s.label + " ";
    }
  }
  rep.checks.push_back({"two_of_three", ok, ok ? "" : "exactly two laws hold for " + detail});
  return rep;
}

RationalMatrix extend_J(const CliffordModule& m, const RationalVector& z) {
  if (z.size() != m.signature.n()) {
    throw Error(ErrorCode::DimMismatch, "extend_J: expected a vector of length r + s");
  }
  RationalMatrix r(m.module_dim, m.module_dim);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] != 0) r += z[i] * m.generators[i];
  }
  return r;
}

}  // namespace nilforge
