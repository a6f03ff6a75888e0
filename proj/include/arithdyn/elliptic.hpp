#pragma once

#include <string>
#include <vector>

#include "arithdyn/common.hpp"

namespace arithdyn {

// A rational point on a short Weierstrass curve, or the point at infinity.
struct CurvePoint {
  bool infinity = true;
  Rational x;
  Rational y;

  CurvePoint() = default;
  CurvePoint(Rational px, Rational py);

  static CurvePoint identity() { return {}; }
  bool is_identity() const { return infinity; }
  CurvePoint negated() const;
  std::string to_string() const;

  friend bool operator==(const CurvePoint& a, const CurvePoint& b);
};

// y^2 = x^3 + A x + B over Q with nonzero discriminant.
class Curve {
 public:
  Curve(Rational a, Rational b);

  const Rational& A() const { return a_; }
  const Rational& B() const { return b_; }
  Rational discriminant() const;  // -16 (4A^3 + 27B^2)
  bool contains(const CurvePoint& p) const;
  void require(const CurvePoint& p) const;  // throws NotOnCurve
  std::string to_string() const;

  friend bool operator==(const Curve& a, const Curve& b) { return a.a_ == b.a_ && a.b_ == b.b_; }

 private:
  Rational a_;
  Rational b_;
};

struct HeightValue {
  double value = 0;
  double err = 0;
};

// Group law. The checked versions verify that inputs lie on the curve.
CurvePoint add(const Curve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint subtract(const Curve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint scalar_mul(const Curve& e, const Integer& k, const CurvePoint& p);

// Same operations without the membership check, for callers that already
// validated their inputs (orbit iteration on large coordinates).
CurvePoint add_unchecked(const Curve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint scalar_mul_unchecked(const Curve& e, const Integer& k, const CurvePoint& p);

// log max(|num x|, |den x|); zero at the identity.
double naive_height(const CurvePoint& p);

// 4^-n h(2^n P), with h the naive height on an integral model of E.
double doubling_estimate(const Curve& e, const CurvePoint& p, int n);

// Neron-Tate height as the limit of doubling_estimate, doubling until both
// the last change and the estimated tail drop below tol. err reports the
// larger of the two. Nonconvergent after max_doublings. Torsion points
// (exact check) have height 0.
HeightValue canonical_height(const Curve& e, const CurvePoint& p, double tol, int max_doublings = 12);

// <P, Q> = (h(P + Q) - h(P) - h(Q)) / 2.
HeightValue height_pairing(const Curve& e, const CurvePoint& p, const CurvePoint& q, double tol);

// kP = O for some 1 <= k <= 12.
bool is_torsion(const Curve& e, const CurvePoint& p);

// Symmetric matrix of pairings with entrywise error bounds.
struct GramMatrix {
  std::size_t n = 0;
  std::vector<double> value;
  std::vector<double> err;

  GramMatrix() = default;
  explicit GramMatrix(std::size_t size) : n(size), value(size * size, 0.0), err(size * size, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return value[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return value[i * n + j]; }
  double& error(std::size_t i, std::size_t j) { return err[i * n + j]; }
  double error(std::size_t i, std::size_t j) const { return err[i * n + j]; }
};

GramMatrix gram_matrix(const Curve& e, const std::vector<CurvePoint>& points, double tol);

}  // namespace arithdyn
