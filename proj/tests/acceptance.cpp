// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "arithdyn/abvar.hpp"
#include "arithdyn/degrees.hpp"
#include "arithdyn/elliptic.hpp"
#include "arithdyn/gallery.hpp"
#include "arithdyn/matrix.hpp"
#include "arithdyn/pisot.hpp"
#include "arithdyn/resultant.hpp"
#include "arithdyn/spectral.hpp"

using namespace arithdyn;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const Curve kE(0, -2);
const CurvePoint kP(3, 5);

Outcome density_decisions() {
  const DenseOrbitResult golden = dense_orbit_test(IntPolynomial{1, -3, 1});
  const DenseOrbitResult plastic = dense_orbit_test(IntPolynomial{-1, -1, 0, 1});
  const bool ok = !golden.certified && golden.resultant == 0 && plastic.certified && plastic.resultant != 0;
  return {ok, "Res(T^2-3T+1) = " + golden.resultant.get_str() + ", Res(T^3-T-1) = " + plastic.resultant.get_str()};
}

Outcome spectral_closed_form() {
  const Rational prec(1, 1000000000);
  const AlgebraicDegree g =
      dynamical_degree(AffineSelfMap::endomorphism(kE, companion(IntPolynomial{1, -3, 1})), prec);
  const AlgebraicDegree p =
      dynamical_degree(AffineSelfMap::endomorphism(kE, companion(IntPolynomial{-1, -1, 0, 1})), prec);
  // (7 + 3 sqrt 5) / 2 is the larger root of x^2 - 7x + 1, increasing past 7/2
  const IntPolynomial gq{1, -7, 1};
  const bool golden_in = g.value.lo > Rational(7, 2) && gq.sign_at(g.value.lo) <= 0 && gq.sign_at(g.value.hi) >= 0;
  // rho^2 for the plastic number rho is the real root of x^3 - 2x^2 + x - 1
  const IntPolynomial sq{-1, 1, -2, 1};
  const bool plastic_in = sq.sign_at(p.value.lo) <= 0 && sq.sign_at(p.value.hi) >= 0 && p.value.lo > Rational(175, 100) &&
                          p.value.hi < Rational(176, 100);
  const Rational limit(1, 100000000);
  const bool ok = golden_in && plastic_in && g.value.width() <= limit && p.value.width() <= limit;
  return {ok, fmt("golden %.12f width %.1e, plastic %.12f", g.value.midpoint(), g.value.width().get_d(), p.value.midpoint()) +
                  fmt(" width %.1e", p.value.width().get_d())};
}

Outcome product_rule() {
  std::vector<IntPolynomial> pool;
  for (int m = 2; m <= 4; ++m)
    for (const auto& p : pisot_unit_search(m, 3)) pool.push_back(p);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const Rational prec(1, 1000000000000L);
  int good = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix a = companion(pool[pick(rng)]);
    const IntMatrix b = companion(pool[pick(rng)]);
    const AlgebraicDegree whole = squared_spectral_radius(block_diagonal(a, b), prec);
    const AlgebraicDegree rule =
        max_degree(squared_spectral_radius(a, prec), squared_spectral_radius(b, prec));
    const Enclosure wide_whole{whole.value.lo - prec, whole.value.hi + prec};
    const Enclosure wide_rule{rule.value.lo - prec, rule.value.hi + prec};
    if (wide_whole.contains(rule.value) && wide_rule.contains(whole.value)) ++good;
  }
  return {good == 50, std::to_string(good) + "/50 pairs from a pool of " + std::to_string(pool.size())};
}

Outcome height_engine() {
  const double tol = 1e-6;
  const CurvePoint p2 = scalar_mul(kE, 2, kP);
  const CurvePoint p3 = scalar_mul(kE, 3, kP);
  const double h1 = canonical_height(kE, kP, tol).value;
  const double h2 = canonical_height(kE, p2, tol).value;
  const double h3 = canonical_height(kE, p3, tol).value;
  const double h5 = canonical_height(kE, scalar_mul(kE, 5, kP), tol).value;
  const double doubling = std::fabs(h2 - 4 * h1);
  // P + Q and P - Q for (P, 2P) and (2P, 3P)
  const double par1 = std::fabs(h3 + h1 - 2 * h1 - 2 * h2);
  const double par2 = std::fabs(h5 + h1 - 2 * h2 - 2 * h3);
  const double par = std::max(par1, par2);
  const bool torsion = is_torsion(Curve(0, -1), CurvePoint(1, 0));
  const bool ok = doubling <= 1e-6 && par <= 6e-6 && torsion;
  return {ok, fmt("|h(2P) - 4h(P)| = %.2e, parallelogram %.2e, torsion %g", doubling, par, torsion ? 1.0 : 0.0)};
}

Outcome ksc_plastic() {
  const auto f = AffineSelfMap::endomorphism(kE, companion(IntPolynomial{-1, -1, 0, 1}));
  const PointTuple p{kP, scalar_mul(kE, 2, kP), scalar_mul(kE, 3, kP)};
  const KscReport r = ksc_check(f, basis_gram(f, p, 1e-6), 60, 1e-2);
  const double delta = r.delta.value.midpoint();
  const bool ok = std::fabs(r.estimate.slope - delta) <= 1e-2 && r.estimate.upper <= r.delta.value.hi.get_d() + 1e-2 &&
                  r.inequality && r.identity.value_or(false) &&
                  r.certificate.kind == CertificateKind::EigenvalueCriterion;
  return {ok, fmt("slope %.9f vs delta %.9f, upper %.9f", r.estimate.slope, delta, r.estimate.upper) + ", " +
                  to_string(r.certificate.kind)};
}

Outcome naive_vs_gram() {
  const auto f = AffineSelfMap::endomorphism(kE, companion(IntPolynomial{-1, -1, 0, 1}));
  const PointTuple p{kP, scalar_mul(kE, 2, kP), scalar_mul(kE, 3, kP)};
  const HeightSequence naive = height_sequence_naive(f, p, 8);
  const HeightSequence gram = height_sequence_gram(f, basis_gram(f, p, 1e-6), 8);
  const double ratio = naive.h[8] / gram.h[8];
  return {std::fabs(ratio - 1) <= 0.15, fmt("h_naive(8) / h_gram(8) = %.6f", ratio)};
}

Outcome translation_degeneration() {
  const auto f = AffineSelfMap::translation(kE, kP);
  const GramMatrix g = basis_gram(f, {CurvePoint::identity()}, 1e-6);
  const HeightSequence s = height_sequence_gram(f, g, 200);
  const DegreeEstimate est = arithmetic_degree_estimate(s.h);
  const HeightValue ht = canonical_height(kE, kP, 1e-6);
  double worst_rel = 0, worst_excess = 0;
  for (std::size_t k = 0; k < s.h.size(); ++k) {
    const double kk = static_cast<double>(k * k);
    const double exact = kk * g(1, 1);
    if (exact > 0) worst_rel = std::max(worst_rel, std::fabs(s.h[k] - exact) / exact);
    worst_excess = std::max(worst_excess, std::fabs(s.h[k] - kk * ht.value) - kk * ht.err);
  }
  const bool ok = est.slope <= 1.01 && worst_rel <= 1e-13 && worst_excess <= 0;
  return {ok, fmt("slope %.6f, max |h_k / (k^2 G_tt) - 1| = %.1e, excess over k^2 err = %.1e", est.slope, worst_rel,
                  worst_excess)};
}

Outcome gallery_coverage() {
  std::string detail;
  bool ok = true;
  for (int d = 2; d <= 5; ++d) {
    const auto records = build_gallery(d);
    std::multiset<std::pair<int, int>> got, want;
    for (int q = 0; q <= d; ++q)
      if (q != d - 1) want.insert({0, q});
    for (int q = 0; q <= d - 1; ++q) want.insert({-1, q});
    int exceptional = 0;
    for (const auto& r : records) {
      got.insert({r.kappa == Kappa::Zero ? 0 : -1, r.q});
      const bool is_exception = d == 2 && r.kappa == Kappa::NegInfinity && r.q == 1;
      if (is_exception) {
        ++exceptional;
        ok &= r.delta.value.lo == 1 && r.delta.value.hi == 1;
      } else {
        ok &= r.delta.value.lo > 1;
      }
    }
    ok &= records.size() == static_cast<std::size_t>(2 * d) && got == want && exceptional == (d == 2 ? 1 : 0);
    detail += (detail.empty() ? "" : ", ") + std::string("d=") + std::to_string(d) + ": " +
              std::to_string(records.size());
  }
  return {ok, detail + " records"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact density decisions", 1, density_decisions},
      {2, "spectral closed forms", 1, spectral_closed_form},
      {3, "product rule for dynamical degrees", 30, product_rule},
      {4, "canonical height soundness", 10, height_engine},
      {5, "KSC identity on plastic-e3", 30, ksc_plastic},
      {6, "naive and Gram heights agree", 60, naive_vs_gram},
      {7, "translation degeneration", 10, translation_degeneration},
      {8, "gallery coverage", 30, gallery_coverage},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && secs < c.limit_s;
    failures += pass ? 0 : 1;
    std::printf("criterion %d: %s  %s: %s (%.3f s, limit %g s)\n", c.id, pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                secs, c.limit_s);
  }
  return failures == 0 ? 0 : 1;
}
