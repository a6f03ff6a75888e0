#include <cmath>
#include <random>

#include "arithdyn/abvar.hpp"
#include "arithdyn/pisot.hpp"
#include "doctest.h"

using namespace arithdyn;

namespace {
const Curve kE2(0, -2);
const Curve kE1(0, -1);
const CurvePoint kP(3, 5);
const IntPolynomial kPlastic{-1, -1, 0, 1};
const IntPolynomial kGolden2{1, -3, 1};
const Rational kTight(1, 100000000);

PointTuple plastic_basis() {
  return {kP, scalar_mul(kE2, 2, kP), scalar_mul(kE2, 3, kP)};
}

bool contains(const Enclosure& e, long double x) { return e.lo.get_d() - 1e-15 <= x && x <= e.hi.get_d() + 1e-15; }
}  // namespace

TEST_CASE("self-map construction") {
  auto f = AffineSelfMap::endomorphism(kE2, companion(kPlastic));
  CHECK(f.dimension() == 3);
  CHECK(f.is_automorphism());
  CHECK_FALSE(f.has_translation());
  CHECK_THROWS_AS(AffineSelfMap(kE2, IntMatrix::identity(2), PointTuple{kP}), DomainError);
  CHECK_THROWS_AS(AffineSelfMap::translation(kE2, CurvePoint(1, 1)), DomainError);
  CHECK_FALSE(AffineSelfMap::endomorphism(kE2, IntMatrix{{2}}).is_automorphism());
}

TEST_CASE("apply examples") {
  auto id = AffineSelfMap::endomorphism(kE2, IntMatrix::identity(3));
  CHECK(arithdyn::apply(id, plastic_basis()) == plastic_basis());

  auto f = AffineSelfMap::endomorphism(kE2, companion(kPlastic));
  const CurvePoint o;
  CHECK(arithdyn::apply(f, {kP, o, o}) == PointTuple{o, kP, o});

  auto tr = AffineSelfMap::translation(kE2, kP);
  CHECK(arithdyn::apply(tr, {o}) == PointTuple{kP});

  try {
    (void)arithdyn::apply(tr, {CurvePoint(1, 1)});
    FAIL("expected NotOnCurve");
  } catch (const DomainError& e) {
    CHECK(e.kind() == "NotOnCurve");
  }
}

TEST_CASE("property: the endomorphism part acts linearly") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> mult(-3, 3);
  const CurvePoint t = scalar_mul(kE2, 2, kP);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = entry(rng);
    AffineSelfMap f(kE2, m, {t, kP.negated()});
    AffineSelfMap lin = AffineSelfMap::endomorphism(kE2, m);
    PointTuple p{scalar_mul(kE2, mult(rng), kP), scalar_mul(kE2, mult(rng), kP)};
    PointTuple q{scalar_mul(kE2, mult(rng), kP), scalar_mul(kE2, mult(rng), kP)};
    const PointTuple fp = arithdyn::apply(f, p);
    const PointTuple fq = arithdyn::apply(f, q);
    PointTuple diff(2);
    PointTuple lhs(2);
    for (int i = 0; i < 2; ++i) {
      lhs[static_cast<std::size_t>(i)] = subtract(kE2, fp[static_cast<std::size_t>(i)], fq[static_cast<std::size_t>(i)]);
      diff[static_cast<std::size_t>(i)] = subtract(kE2, p[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(i)]);
    }
    CHECK(lhs == arithdyn::apply(lin, diff));
  }
}

TEST_CASE("orbit examples") {
  auto f = AffineSelfMap::endomorphism(kE2, companion(kPlastic));
  CHECK(orbit(f, plastic_basis(), 0).size() == 1);
  auto id = AffineSelfMap::endomorphism(kE2, IntMatrix::identity(3));
  auto still = orbit(id, plastic_basis(), 5);
  REQUIRE(still.size() == 6);
  for (const auto& q : still) CHECK(q == plastic_basis());

  // direct iteration oracle: F^k(P) = M^k w * P with w = (1, 2, 3)
  auto path = orbit(f, plastic_basis(), 8);
  REQUIRE(path.size() == 9);
  const IntMatrix m = companion(kPlastic);
  std::vector<Integer> w{1, 2, 3};
  for (std::size_t k = 0; k < path.size(); ++k) {
    for (int i = 0; i < 3; ++i) CHECK(path[k][static_cast<std::size_t>(i)] == scalar_mul(kE2, w[static_cast<std::size_t>(i)], kP));
    std::vector<Integer> next(3, Integer(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) next[static_cast<std::size_t>(i)] += m(i, j) * w[static_cast<std::size_t>(j)];
    w = next;
  }
  auto naive = height_sequence_naive(f, plastic_basis(), 8);
  for (std::size_t k = 2; k + 1 < naive.h.size(); ++k) CHECK(naive.h[k + 1] > naive.h[k]);
}

TEST_CASE("orbit size guard") {
  // multiplication by 4 roughly quadruples heights each step
  auto f = AffineSelfMap::endomorphism(kE2, IntMatrix{{4}});
  try {
    (void)orbit(f, {kP}, 20);
    FAIL("expected SizeGuardExceeded");
  } catch (const DomainError& e) {
    CHECK(e.kind() == "SizeGuardExceeded");
    CHECK(std::string(e.what()).find("last safe index") != std::string::npos);
  }
}

TEST_CASE("coefficient trajectory") {
  auto f = AffineSelfMap::endomorphism(kE2, companion(kPlastic));
  auto c0 = coefficient_trajectory(f, 0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].power == IntMatrix::identity(3));
  CHECK(c0[0].sum.is_zero());

  auto c = coefficient_trajectory(f, 2);
  CHECK(c[2].power == f.matrix() * f.matrix());
  CHECK(c[2].sum == f.matrix() + IntMatrix::identity(3));

  AffineSelfMap tr(kE2, IntMatrix::identity(2), {kP, kP});
  auto ct = coefficient_trajectory(tr, 3);
  CHECK(ct[3].sum == IntMatrix{{3, 0}, {0, 3}});
  for (std::size_t k = 0; k + 1 < ct.size(); ++k) {
    CHECK(ct[k + 1].power == tr.matrix() * ct[k].power);
    CHECK(ct[k + 1].sum == tr.matrix() * ct[k].sum + IntMatrix::identity(2));
  }
}

TEST_CASE("Gram height sequences") {
  const double tol = 1e-6;
  SUBCASE("identity map is constant") {
    auto id = AffineSelfMap::endomorphism(kE2, IntMatrix::identity(3));
    auto g = basis_gram(id, plastic_basis(), tol);
    auto seq = height_sequence_gram(id, g, 5);
    const double trace = g(0, 0) + g(1, 1) + g(2, 2);
    for (double h : seq.h) CHECK(h == doctest::Approx(trace).epsilon(1e-15));
  }
  SUBCASE("translation grows quadratically") {
    auto tr = AffineSelfMap::translation(kE2, kP);
    auto g = basis_gram(tr, {CurvePoint()}, tol);
    const double ht = canonical_height(kE2, kP, tol).value;
    auto seq = height_sequence_gram(tr, g, 200);
    for (std::size_t k = 0; k < seq.h.size(); ++k)
      CHECK(seq.h[k] == doctest::Approx(static_cast<double>(k * k) * ht).epsilon(1e-15));
  }
  SUBCASE("plastic example matches |M^k w|^2 growth") {
    auto f = AffineSelfMap::endomorphism(kE2, companion(kPlastic));
    auto g = basis_gram(f, plastic_basis(), tol);
    const double hp = canonical_height(kE2, kP, tol).value;
    auto seq = height_sequence_gram(f, g, 30);
    const IntMatrix m = companion(kPlastic);
    std::vector<Integer> w{1, 2, 3};
    for (std::size_t k = 0; k < seq.h.size(); ++k) {
      double norm2 = 0;
      for (const auto& x : w) norm2 += x.get_d() * x.get_d();
      CHECK(std::fabs(seq.h[k] - hp * norm2) <= norm2 * 10 * tol + seq.err[k]);
      std::vector<Integer> next(3, Integer(0));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) next[static_cast<std::size_t>(i)] += m(i, j) * w[static_cast<std::size_t>(j)];
      w = next;
    }
    CHECK(seq.h[30] / seq.h[29] == doctest::Approx(1.7548776662466927).epsilon(1e-3));
    auto naive = height_sequence_naive(f, plastic_basis(), 8);
    CHECK(std::fabs(naive.h[8] / seq.h[8] - 1) <= 0.15);
  }
  SUBCASE("dimension mismatch") {
    auto f = AffineSelfMap::endomorphism(kE2, companion(kPlastic));
    CHECK_THROWS_AS(height_sequence_gram(f, GramMatrix(3), 4), DomainError);
  }
  SUBCASE("all-identity points give zeros") {
    auto f = AffineSelfMap::endomorphism(kE2, companion(kPlastic));
    auto naive = height_sequence_naive(f, PointTuple(3), 6);
    for (double h : naive.h) CHECK(h == 0.0);
  }
}

TEST_CASE("products") {
  auto a = AffineSelfMap::endomorphism(kE2, companion(kGolden2));
  auto b = AffineSelfMap::endomorphism(kE2, companion(kPlastic));
  auto ab = product(a, b);
  CHECK(ab.dimension() == 5);
  CHECK(char_poly(ab.matrix()) == kGolden2 * kPlastic);
  auto with_id = product(a, AffineSelfMap::endomorphism(kE2, IntMatrix::identity(2)));
  CHECK(with_id.matrix() == block_diagonal(companion(kGolden2), IntMatrix::identity(2)));
  try {
    (void)product(a, AffineSelfMap::endomorphism(kE1, IntMatrix::identity(1)));
    FAIL("expected CurveMismatch");
  } catch (const DomainError& e) {
    CHECK(e.kind() == "CurveMismatch");
  }
  const auto da = dynamical_degree(a, kTight);
  const auto db = dynamical_degree(b, kTight);
  const auto dab = dynamical_degree(ab, kTight);
  const Enclosure expected = max_degree(da, db).value;
  const Rational eps(1, 1000000000);
  CHECK(Enclosure{expected.lo - eps, expected.hi + eps}.contains(dab.value));
}

TEST_CASE("property: product char poly multiplies") {
  std::vector<IntPolynomial> pool;
  for (int m = 2; m <= 3; ++m)
    for (auto& p : pisot_unit_search(m, 2)) pool.push_back(p);
  for (const auto& p : pool)
    for (const auto& q : pool) {
      auto f = product(AffineSelfMap::endomorphism(kE2, companion(p)), AffineSelfMap::endomorphism(kE2, companion(q)));
      CHECK(char_poly(f.matrix()) == p * q);
    }
}

TEST_CASE("dynamical degrees") {
  auto tr = dynamical_degree(AffineSelfMap::translation(kE2, kP), kTight);
  CHECK(tr.exact());
  CHECK(tr.value.lo == 1);

  auto plastic = dynamical_degree(AffineSelfMap::endomorphism(kE2, companion(kPlastic)), kTight);
  CHECK(contains(plastic.value, 1.7548776662466927600L));
  CHECK(plastic.value.width() <= kTight);

  auto golden = dynamical_degree(AffineSelfMap::endomorphism(kE2, companion(kGolden2)), kTight);
  CHECK(contains(golden.value, (7 + 3 * std::sqrt(5.0L)) / 2));
  CHECK(golden.power == 2);
  CHECK(golden.defining_poly == kGolden2);
}

TEST_CASE("density certificates") {
  auto plastic = density_certificate(AffineSelfMap::endomorphism(kE2, companion(kPlastic)));
  CHECK(plastic.kind == CertificateKind::EigenvalueCriterion);
  REQUIRE(plastic.resultant.has_value());
  CHECK(*plastic.resultant == -1);

  auto golden = density_certificate(AffineSelfMap::endomorphism(kE2, companion(kGolden2)));
  CHECK(golden.kind == CertificateKind::XieSurface);
  REQUIRE(golden.delta.has_value());
  CHECK(golden.delta->exceeds_one());

  auto torsion = density_certificate(AffineSelfMap::translation(kE1, CurvePoint(1, 0)));
  CHECK(torsion.kind == CertificateKind::None);
  CHECK(torsion.torsion.value_or(false));

  auto free = density_certificate(AffineSelfMap::translation(kE2, kP));
  CHECK(free.kind == CertificateKind::NonTorsionTranslation);

  auto flat = density_certificate(AffineSelfMap(kE2, IntMatrix::identity(2), {kP, kP}));
  CHECK(flat.kind == CertificateKind::None);
  CHECK(flat.note.find("n >= 2") != std::string::npos);

  auto prod = density_certificate(product(AffineSelfMap::endomorphism(kE2, companion(kGolden2)),
                                          AffineSelfMap::endomorphism(kE2, companion(kPlastic))));
  // the golden block has x1 x2 = 1, so only the split certifies
  CHECK(prod.kind == CertificateKind::CoprimeProduct);
  REQUIRE(prod.factors.size() == 2);
  CHECK(prod.factors[0].kind == CertificateKind::XieSurface);
  CHECK(prod.factors[1].kind == CertificateKind::EigenvalueCriterion);
  CHECK(*prod.resultant == -19);

  auto two_plastic = density_certificate(product(AffineSelfMap::endomorphism(kE2, companion(kPlastic)),
                                                 AffineSelfMap::endomorphism(kE2, companion(IntPolynomial{-1, 0, 0, -1, 1}))));
  CHECK(two_plastic.kind == CertificateKind::None);  // T^4 - T^3 - 1 has det -1, outside SL

  auto sl_pair = density_certificate(product(AffineSelfMap::endomorphism(kE2, companion(kPlastic)),
                                             AffineSelfMap::endomorphism(kE2, companion(IntPolynomial{1, -1, 0, -2, 1}))));
  CHECK(sl_pair.kind == CertificateKind::EigenvalueCriterion);

  auto with_translation = density_certificate(
      product(AffineSelfMap::endomorphism(kE2, companion(kPlastic)), AffineSelfMap::translation(kE2, kP)));
  CHECK(with_translation.kind == CertificateKind::CoprimeProduct);
  REQUIRE(with_translation.factors.size() == 2);
  CHECK(with_translation.factors[0].kind == CertificateKind::EigenvalueCriterion);
  CHECK(with_translation.factors[1].kind == CertificateKind::NonTorsionTranslation);
  CHECK(with_translation.split == 3);

  auto same = density_certificate(product(AffineSelfMap::endomorphism(kE2, companion(kGolden2)),
                                          AffineSelfMap::endomorphism(kE2, companion(kGolden2))));
  CHECK(same.kind == CertificateKind::None);
}

TEST_CASE("property: certified endomorphisms have dynamical degree above one") {
  for (int m = 2; m <= 4; ++m) {
    for (const auto& p : pisot_unit_search(m, 2)) {
      auto f = AffineSelfMap::endomorphism(kE2, companion(p));
      auto c = density_certificate(f);
      if (c.kind == CertificateKind::EigenvalueCriterion || c.kind == CertificateKind::XieSurface)
        CHECK(dynamical_degree(f, Rational(1, 1000000)).exceeds_one());
    }
  }
}
