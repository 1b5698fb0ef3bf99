#include <gtest/gtest.h>

#include "goldens.hpp"
#include "nilforge/catalog.hpp"
#include "nilforge/error.hpp"
#include "nilforge/nilpotent.hpp"
#include "support.hpp"

using namespace nilforge;
using nilforge::testing::Gen;

namespace {

RationalVector basis_vec(std::size_t dim, std::size_t i) { return unit_vector(dim, i); }

MetricAlgebra abelian(std::size_t m, std::size_t n) {
  return algebra_from_J(std::vector<RationalMatrix>(n, RationalMatrix(m, m)),
                        SignatureForm::standard(m, 0), SignatureForm::standard(n, 0));
}

MetricAlgebra with_forms(const MetricAlgebra& a, const RationalMatrix& gv, const RationalMatrix& gz) {
  return algebra_from_J(j_basis(a), SignatureForm(gv), SignatureForm(gz));
}

RationalMatrix rotation_blocks() {
  return RationalMatrix::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
}

std::vector<MetricAlgebra> constructed_instances() {
  std::vector<MetricAlgebra> out{catalog::n20(), catalog::n11(), catalog::n02(), catalog::heisenberg()};
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      auto mod = build_module({r, n - r});
      out.push_back(algebra_from_J(mod.generators, mod.module_form, SignatureForm::standard(r, n - r)));
    }
  return out;
}

}  // namespace

TEST(Algebra, ConstructionValidates) {
  try {
    NilpotentAlgebra2(2, {RationalMatrix::from_rows({{0, 1}, {1, 0}})});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAntisymmetric);
  }
  try {
    NilpotentAlgebra2(3, {RationalMatrix::from_rows({{0, 1}, {-1, 0}})});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimMismatch);
  }
  RationalMatrix h = RationalMatrix::from_rows({{0, 1}, {-1, 0}});
  EXPECT_EQ(NilpotentAlgebra2(2, {h}).tag(), AlgebraTag::Adapted);
  EXPECT_EQ(NilpotentAlgebra2(2, {h, Rational(2) * h}).tag(), AlgebraTag::Raw);
  EXPECT_EQ(NilpotentAlgebra2(2, {h, RationalMatrix(2, 2)}).tag(), AlgebraTag::Raw);
}

TEST(Bracket, Examples) {
  auto n20 = catalog::n20().algebra();
  auto z = bracket(n20, basis_vec(6, 0), basis_vec(6, 2));
  EXPECT_EQ(z, (RationalVector{0, 0, 0, 0, 1, 0}));
  auto n11 = catalog::n11().algebra();
  EXPECT_EQ(bracket(n11, basis_vec(6, 0), basis_vec(6, 1)), (RationalVector{0, 0, 0, 0, 1, 0}));
  RationalVector x{1, 2, 3, 4, 5, 6};
  EXPECT_TRUE(is_zero(bracket(n20, x, x)));
  EXPECT_TRUE(is_zero(bracket(n20, x, basis_vec(6, 4))));
  try {
    bracket(n20, RationalVector(5), x);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimMismatch);
  }
}

TEST(Duality, PublishedConstants) {
  EXPECT_EQ(catalog::n20().algebra().C(0), goldens::c20_1());
  EXPECT_EQ(catalog::n20().algebra().C(1), goldens::c20_2());
  EXPECT_EQ(catalog::n11().algebra().C(0), goldens::c11_1());
  EXPECT_EQ(catalog::n11().algebra().C(1), goldens::c11_2());
  auto n02 = catalog::n02();
  auto j02 = catalog::n02_generators();
  for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(n02.algebra().C(k), eta(2, 2) * j02[k]);
}

TEST(JMap, Examples) {
  auto n20 = catalog::n20();
  EXPECT_EQ(j_map(n20, {Rational(1), Rational(0)}), catalog::n20_generators()[0]);
  EXPECT_EQ(j_map(n20, {Rational(1), Rational(0)}), Rational(-1) * goldens::c20_1());
  EXPECT_TRUE(j_map(n20, RationalVector(2)).is_zero());
  auto n11 = catalog::n11();
  RationalMatrix j1 = j_map(n11, {Rational(1), Rational(0)});
  EXPECT_EQ(j1, catalog::n11_generators()[0]);
  EXPECT_EQ(goldens::c11_1(), Rational(-1) * (eta(2, 2) * j1));
  EXPECT_EQ(goldens::c11_2(), eta(2, 2) * j_map(n11, {Rational(0), Rational(1)}));
}

TEST(AlgebraFromJ, ZeroAndErrors) {
  auto ab = abelian(3, 2);
  for (const auto& c : ab.algebra().C()) EXPECT_TRUE(c.is_zero());
  try {
    algebra_from_J({RationalMatrix::identity(2)}, SignatureForm::standard(2, 0),
                   SignatureForm::standard(1, 0));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSkew);
  }
  try {
    algebra_from_J({RationalMatrix(2, 2)}, SignatureForm(RationalMatrix::from_rows({{1, 1}, {1, 1}})),
                   SignatureForm::standard(1, 0));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateForm);
  }
  try {
    MetricAlgebra(NilpotentAlgebra2(2, {RationalMatrix::from_rows({{0, 1}, {-1, 0}})}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateForm);
  }
}

TEST(DerivedIdeal, Examples) {
  EXPECT_EQ(derived_ideal(catalog::n20().algebra()).size(), 2u);
  EXPECT_TRUE(derived_ideal(abelian(3, 2).algebra()).empty());
  EXPECT_EQ(derived_ideal(catalog::heisenberg().algebra()).size(), 1u);
}

TEST(AbelianFactor, Examples) {
  EXPECT_EQ(abelian_factor(catalog::n20()).a_dim, 0u);
  auto ab = abelian_factor(abelian(2, 3));
  EXPECT_EQ(ab.a_dim, 3u);
  EXPECT_EQ(ab.kernel_dim, 3u);
  EXPECT_EQ(ab.g_star.n(), 0u);
  MetricAlgebra hr(NilpotentAlgebra2(2, {RationalMatrix::from_rows({{0, 1}, {-1, 0}}), RationalMatrix(2, 2)},
                                     SignatureForm::standard(2, 0), SignatureForm::standard(2, 0)));
  auto split = abelian_factor(hr);
  EXPECT_EQ(split.a_dim, 1u);
  EXPECT_EQ(split.kernel_dim, 1u);
  EXPECT_EQ(split.g_star.n(), 1u);
}

TEST(AbelianFactor, DegenerateRestriction) {
  // [g,g] spanned by z1 + z2, which is null for eta_{1,1}.
  RationalMatrix h = RationalMatrix::from_rows({{0, 1}, {-1, 0}});
  MetricAlgebra a(NilpotentAlgebra2(2, {h, h}, SignatureForm::standard(2, 0), SignatureForm::standard(1, 1)));
  try {
    abelian_factor(a);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateRestriction);
  }
}

TEST(PseudoH, Examples) {
  EXPECT_TRUE(is_pseudo_H_type(catalog::n20()).verdict);
  EXPECT_TRUE(is_pseudo_H_type(catalog::n11()).verdict);
  EXPECT_TRUE(is_pseudo_H_type(catalog::n02()).verdict);
  EXPECT_TRUE(is_pseudo_H_type(catalog::heisenberg()).verdict);
  auto rot = algebra_from_J({rotation_blocks(), rotation_blocks()}, SignatureForm::standard(4, 0),
                            SignatureForm::standard(2, 0));
  auto report = is_pseudo_H_type(rot);
  EXPECT_FALSE(report.verdict);
  EXPECT_FALSE(report.square_law);
  EXPECT_TRUE(report.skew);
}

TEST(RescaleAndCompare, Examples) {
  EXPECT_TRUE(rescale_and_compare(catalog::n20(), Rational(3)));
  EXPECT_TRUE(rescale_and_compare(catalog::n20(), Rational(1)));
  EXPECT_TRUE(rescale_and_compare(catalog::n11(), Rational(-2)));
}

TEST(Isomorphism, ExtendAndCertify) {
  auto n20 = catalog::n20().algebra();
  auto id = extend_to_isomorphism(n20, n20, RationalMatrix::identity(4));
  ASSERT_TRUE(id);
  EXPECT_EQ(*id, RationalMatrix::identity(6));
  EXPECT_TRUE(is_homomorphism(n20, n20, *id));
  EXPECT_FALSE(extend_to_isomorphism(n20, n20, RationalMatrix(4, 4)));
  EXPECT_FALSE(is_homomorphism(n20, n20, Rational(2) * RationalMatrix::identity(6)));
}

TEST(ScalingIsomorphism, DoubledFormIsIrrational) {
  auto a1 = catalog::n20();
  auto a2 = with_forms(a1, Rational(2) * RationalMatrix::identity(4), RationalMatrix::identity(2));
  auto out = scaling_isomorphism(a1, a2);
  EXPECT_EQ(out.kind, ScalingKind::IrrationalScaling);
  EXPECT_EQ(out.s, Rational(2) * RationalMatrix::identity(4));
  // (x - 2)^4
  EXPECT_EQ(out.char_poly.coeffs, (std::vector<Rational>{16, -32, 24, -8, 1}));
  EXPECT_FALSE(out.phi);
}

TEST(ScalingIsomorphism, SquareScaleGivesRationalMap) {
  auto a1 = catalog::n20();
  auto a2 = with_forms(a1, Rational(4) * RationalMatrix::identity(4), RationalMatrix::identity(2));
  auto out = scaling_isomorphism(a1, a2, {unit_vector(4, 0)});
  EXPECT_EQ(out.kind, ScalingKind::Isometry);
  ASSERT_TRUE(out.phi);
  RationalMatrix expected = RationalMatrix::identity(6);
  for (std::size_t i = 0; i < 4; ++i) expected(i, i) = 2;
  EXPECT_EQ(*out.phi, expected);
  EXPECT_TRUE(is_homomorphism(a2.algebra(), a1.algebra(), *out.phi));
}

TEST(ScalingIsomorphism, IdenticalIsIdentity) {
  auto a = catalog::n11();
  auto out = scaling_isomorphism(a, a);
  EXPECT_EQ(out.kind, ScalingKind::Isometry);
  EXPECT_EQ(out.s, RationalMatrix::identity(4));
  ASSERT_TRUE(out.phi);
  EXPECT_EQ(*out.phi, RationalMatrix::identity(6));
}

TEST(ScalingIsomorphism, Preconditions) {
  try {
    scaling_isomorphism(catalog::n20(), catalog::n02());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
  }
}

TEST(Property, AntisymmetryAndJacobi) {
  Gen gen(nilforge::testing::base_seed(31));
  for (int trial = 0; trial < 100; ++trial) {
    auto a = gen.adapted_algebra(4);
    RationalVector x = gen.vector(a.dim()), y = gen.vector(a.dim()), z = gen.vector(a.dim());
    EXPECT_EQ(bracket(a, x, y), scale(Rational(-1), bracket(a, y, x)));
    RationalVector jac = add(add(bracket(a, x, bracket(a, y, z)), bracket(a, y, bracket(a, z, x))),
                             bracket(a, z, bracket(a, x, y)));
    EXPECT_TRUE(is_zero(jac));
  }
}

TEST(Property, DualityRoundTrip) {
  for (const auto& a : constructed_instances()) {
    auto back = algebra_from_J(j_basis(a), a.form_V(), a.form_Z());
    EXPECT_EQ(back.algebra().C(), a.algebra().C());
  }
  Gen gen(nilforge::testing::base_seed(32));
  for (int trial = 0; trial < 30; ++trial) {
    auto raw = gen.adapted_algebra(4);
    MetricAlgebra a(NilpotentAlgebra2(raw.m(), raw.C(), SignatureForm(eta(1, raw.m() - 1)),
                                      SignatureForm::standard(raw.n(), 0)));
    auto back = algebra_from_J(j_basis(a), a.form_V(), a.form_Z());
    EXPECT_EQ(back.algebra().C(), a.algebra().C());
  }
}

TEST(Property, JointRescaleKeepsBrackets) {
  Gen gen(nilforge::testing::base_seed(33));
  for (const auto& a : constructed_instances()) {
    Rational c = gen.rational();
    if (c == 0) c = -3;
    EXPECT_TRUE(rescale_and_compare(a, c));
  }
}

TEST(Property, PseudoHOnConstructedInstances) {
  for (const auto& a : constructed_instances()) {
    auto report = is_pseudo_H_type(a);
    EXPECT_TRUE(report.verdict);
    for (const auto& s : report.samples) EXPECT_NE(s.status.passing(), 2) << s.label;
  }
}
