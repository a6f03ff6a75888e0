#include <doctest.h>

#include <set>
#include <utility>

#include "arithdyn/gallery.hpp"
#include "arithdyn/matrix.hpp"
#include "arithdyn/resultant.hpp"

using namespace arithdyn;

namespace {

// The admissible (kappa, q) pairs in dimension d, minus (0, d - 1).
std::multiset<std::pair<std::string, int>> expected_pairs(int d) {
  std::multiset<std::pair<std::string, int>> s;
  for (int q = 0; q <= d; ++q)
    if (q != d - 1) s.insert({"0", q});
  for (int q = 0; q <= d - 1; ++q) s.insert({"-inf", q});
  return s;
}

const ExampleRecord& find(const std::vector<ExampleRecord>& g, Kappa k, int q) {
  for (const auto& r : g)
    if (r.kappa == k && r.q == q && !r.extra) return r;
  FAIL("missing record");
  return g.front();
}

}  // namespace

TEST_CASE("default pool has two SL Pisot units per degree") {
  const PisotPool pool = default_pisot_pool(5);
  CHECK(pool.size() == 8);
  CHECK(pool[0] == IntPolynomial{1, -3, 1});
  CHECK(pool[1] == IntPolynomial{1, -4, 1});
  CHECK(pool[2] == IntPolynomial{-1, -1, 0, 1});
  for (const auto& p : pool) {
    CHECK(usable_in_pool(p));
    CHECK(companion(p).in_sl());
  }
  CHECK_FALSE(usable_in_pool(IntPolynomial{-1, -1, 1}));  // det -1
}

TEST_CASE("coverage for d = 2..8") {
  for (int d = 2; d <= 8; ++d) {
    CAPTURE(d);
    const auto g = build_gallery(d);
    CHECK(g.size() == static_cast<std::size_t>(2 * d));
    std::multiset<std::pair<std::string, int>> got;
    for (const auto& r : g) {
      CHECK(r.dim == d);
      got.insert({to_string(r.kappa), r.q});
    }
    CHECK(got == expected_pairs(d));
  }
}

TEST_CASE("delta excludes 1 except on the ruled surface") {
  for (int d = 2; d <= 8; ++d) {
    for (const auto& r : build_gallery(d)) {
      CAPTURE(describe(r, DescribeFormat::Text));
      if (d == 2 && r.kappa == Kappa::NegInfinity && r.q == 1) {
        CHECK(r.recipe == Recipe::RuledExceptional);
        CHECK(r.delta.exact());
        CHECK(r.delta.value.lo == 1);
      } else {
        CHECK(r.delta.value.lo > 1);
      }
    }
  }
}

TEST_CASE("product records use coprime Pisot polynomials") {
  for (int d = 3; d <= 8; ++d) {
    for (const auto& r : build_gallery(d)) {
      std::vector<IntPolynomial> polys;
      for (const auto& f : r.factors)
        if (f.poly) polys.push_back(*f.poly);
      if (r.recipe == Recipe::ProductZ && r.n >= 2) REQUIRE(polys.size() == 2);
      if (polys.size() == 2) {
        REQUIRE(r.coprime.has_value());
        CHECK(*r.coprime);
        CHECK(coprime_test(polys[0], polys[1]));
      }
    }
  }
}

TEST_CASE("quotient inherits delta from the power") {
  for (int d = 2; d <= 6; ++d) {
    const auto g = build_gallery(d);
    const auto& power = find(g, Kappa::Zero, d);
    const auto& quotient = find(g, Kappa::Zero, 0);
    CHECK(power.recipe == Recipe::PisotOnPower);
    CHECK(quotient.recipe == Recipe::QuotientY);
    CHECK(quotient.delta.value.lo == power.delta.value.lo);
    CHECK(quotient.delta.value.hi == power.delta.value.hi);
    CHECK(quotient.delta.defining_poly == power.delta.defining_poly);
  }
}

TEST_CASE("product delta is the max of factor deltas") {
  const auto g = build_gallery(5);
  for (const auto& r : g) {
    if (r.recipe != Recipe::ProductZ) continue;
    Rational best = 1;
    for (const auto& f : r.factors)
      if (f.poly) best = std::max(best, squared_spectral_radius(companion(*f.poly), Rational(1, 1000000)).value.lo);
    CHECK(r.delta.value.hi >= best);
  }
}

TEST_CASE("d = 2 table") {
  const auto g = build_gallery(2);
  CHECK(find(g, Kappa::Zero, 0).recipe == Recipe::QuotientY);
  const auto& xie = find(g, Kappa::Zero, 2);
  CHECK(xie.density == "XieSurface");
  CHECK(xie.computable);
  CHECK(find(g, Kappa::NegInfinity, 0).recipe == Recipe::WCross);
  CHECK(find(g, Kappa::NegInfinity, 0).variety == "W");
  const auto& ruled = find(g, Kappa::NegInfinity, 1);
  CHECK(ruled.delta_forced_one);
  CHECK(ruled.density == "NonTorsionTranslation");
}

TEST_CASE("d = 3 table skips (0, 2)") {
  const auto g = build_gallery(3);
  for (const auto& r : g) CHECK_FALSE((r.kappa == Kappa::Zero && r.q == 2));
  CHECK(find(g, Kappa::Zero, 3).density == "EigenvalueCriterion");
  CHECK(find(g, Kappa::Zero, 1).recipe == Recipe::ProductZ);
  CHECK(find(g, Kappa::NegInfinity, 1).recipe == Recipe::WCross);
  CHECK(find(g, Kappa::NegInfinity, 2).recipe == Recipe::P1Cross);
  CHECK(find(g, Kappa::NegInfinity, 2).computable);
}

TEST_CASE("extras are flagged and only added on request") {
  CHECK(build_gallery(3, true).size() == 8);
  int extras = 0;
  for (const auto& r : build_gallery(3, true))
    if (r.extra) {
      ++extras;
      CHECK(r.recipe == Recipe::CyclicQuotient);
      CHECK_FALSE(r.computable);
      CHECK(r.delta.value.lo > 1);
    }
  CHECK(extras == 2);
  CHECK(build_gallery(4, true).size() == 8);
}

TEST_CASE("describe") {
  const auto g2 = build_gallery(2);
  const std::string text = describe(find(g2, Kappa::NegInfinity, 1), DescribeFormat::Text);
  CHECK(text.find("delta = 1 (forced)") != std::string::npos);

  const auto g3 = build_gallery(3);
  const auto& power = find(g3, Kappa::Zero, 3);
  CHECK(*power.factors[0].poly == IntPolynomial{-1, -1, 0, 1});
  const Json j = Json::parse(describe(power, DescribeFormat::Json));
  const double lo = std::stod(j["delta"]["lo"].get<std::string>());
  const double hi = std::stod(j["delta"]["hi"].get<std::string>());
  CHECK(hi - lo <= 1e-10);
  CHECK(lo < 1.754877666247);
  CHECK(hi > 1.754877666246);

  const Json q = Json::parse(describe(find(g2, Kappa::Zero, 0), DescribeFormat::Json));
  CHECK(q["computable"] == false);
  CHECK(q["citations"].size() >= 2);
  CHECK(q["density"] == "descends from covering example");
  CHECK(describe(power, DescribeFormat::Json) == describe(power, DescribeFormat::Json));
}

TEST_CASE("pool errors") {
  CHECK_THROWS_AS(build_gallery(3, PisotPool{IntPolynomial{1, -3, 1}}), DomainError);
  try {
    build_gallery(2, PisotPool{IntPolynomial{1, -3, 1}, IntPolynomial{1, -3, 1}});
    FAIL("expected InsufficientPisotPool");
  } catch (const DomainError& e) {
    CHECK(e.kind() == "InsufficientPisotPool");
  }
  const auto g = build_gallery(2, PisotPool{IntPolynomial{1, -4, 1}, IntPolynomial{1, -3, 1}, IntPolynomial{-1, -1, 1}});
  CHECK(*find(g, Kappa::Zero, 2).factors[0].poly == IntPolynomial{1, -4, 1});
}
