#include <cmath>
#include <random>

#include "arithdyn/resultant.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arithdyn;

namespace {
const IntPolynomial kGolden2{1, -3, 1};    // T^2 - 3T + 1
const IntPolynomial kPlastic{-1, -1, 0, 1};  // T^3 - T - 1
}  // namespace

TEST_CASE("resultant examples") {
  CHECK(resultant(IntPolynomial{-2, 1}, IntPolynomial{-3, 1}) == -1);
  CHECK(resultant(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1}) == 0);

  // frozen from the Sylvester-determinant oracle, cross-checked numerically
  const Integer oracle_value = oracle::sylvester_resultant(kPlastic, kGolden2);
  CHECK(oracle_value == -19);
  CHECK(std::fabs(static_cast<double>(oracle::root_product(kPlastic, kGolden2)) - (-19.0)) < 1e-9);
  CHECK(resultant(kPlastic, kGolden2) == -19);
  CHECK(resultant(kGolden2, kPlastic) == -19);  // (-1)^(2*3)

  CHECK_THROWS_AS(resultant(IntPolynomial{}, kPlastic), DomainError);
}

TEST_CASE("dense orbit test") {
  auto golden = dense_orbit_test(kGolden2);
  CHECK_FALSE(golden.certified);
  CHECK(golden.resultant == 0);

  const IntPolynomial rev = kPlastic.reversed();
  CHECK(rev == IntPolynomial{1, 0, -1, -1});
  CHECK(oracle::sylvester_resultant(kPlastic, rev) == -1);
  auto plastic = dense_orbit_test(kPlastic);
  CHECK(plastic.certified);
  CHECK(plastic.resultant == -1);

  CHECK_FALSE(dense_orbit_test(IntPolynomial{-1, 1}).certified);
  try {
    (void)dense_orbit_test(IntPolynomial{0, 0, 1});
    FAIL("expected ZeroConstantTerm");
  } catch (const DomainError& e) {
    CHECK(e.kind() == "ZeroConstantTerm");
  }
}

TEST_CASE("dense orbit test fails for every quadratic with p(0) = 1") {
  for (int b = -12; b <= 12; ++b) {
    IntPolynomial p{1, b, 1};
    CHECK_FALSE(dense_orbit_test(p).certified);
  }
}

TEST_CASE("coprime test") {
  CHECK(coprime_test(kPlastic, kGolden2));
  CHECK_FALSE(coprime_test(kPlastic, kPlastic));
  CHECK_FALSE(coprime_test(kGolden2, kGolden2));
  CHECK_FALSE(coprime_test(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1}));
}

TEST_CASE("property: resultant matches Sylvester oracle and vanishes iff gcd is nonconstant") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(1, 5);
  std::uniform_int_distribution<int> coin(0, 3);
  auto random_poly = [&](int d) {
    std::vector<Integer> c;
    for (int k = 0; k < d; ++k) c.emplace_back(coeff(rng));
    int lead = coeff(rng);
    c.emplace_back(lead == 0 ? 1 : lead);
    return IntPolynomial(c);
  };
  int shared = 0;
  for (int trial = 0; trial < 250; ++trial) {
    IntPolynomial p = random_poly(deg(rng));
    IntPolynomial q = random_poly(deg(rng));
    if (coin(rng) == 0) {
      // force a common factor in a quarter of the cases
      IntPolynomial f = random_poly(1 + coin(rng) % 2);
      p = p * f;
      q = q * f;
    }
    const Integer res = resultant(p, q);
    CHECK(res == oracle::sylvester_resultant(p, q));
    const bool common = gcd(p, q).degree() > 0;
    shared += common;
    CHECK((res == 0) == common);
  }
  CHECK(shared >= 50);
}
