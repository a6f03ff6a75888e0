#include "arithdyn/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "arithdyn/polynomial.hpp"
#include "arithdyn/resultant.hpp"

namespace arithdyn {

CurvePoint::CurvePoint(Rational px, Rational py) : infinity(false), x(std::move(px)), y(std::move(py)) {
  x.canonicalize();
  y.canonicalize();
}

CurvePoint CurvePoint::negated() const {
  if (infinity) return {};
  return {x, -y};
}

std::string CurvePoint::to_string() const {
  if (infinity) return "identity";
  return "(" + x.get_str() + ", " + y.get_str() + ")";
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinity || b.infinity) return a.infinity == b.infinity;
  return a.x == b.x && a.y == b.y;
}

Curve::Curve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (discriminant() == 0) throw DomainError("SingularCurve", "curve " + to_string() + " is singular");
}

Rational Curve::discriminant() const { return -16 * (4 * a_ * a_ * a_ + 27 * b_ * b_); }

bool Curve::contains(const CurvePoint& p) const {
  if (p.infinity) return true;
  return p.y * p.y == p.x * p.x * p.x + a_ * p.x + b_;
}

void Curve::require(const CurvePoint& p) const {
  if (!contains(p)) throw DomainError("NotOnCurve", "point " + p.to_string() + " is not on " + to_string());
}

std::string Curve::to_string() const {
  return "y^2 = x^3 + (" + a_.get_str() + ")x + (" + b_.get_str() + ")";
}

CurvePoint add_unchecked(const Curve& e, const CurvePoint& p, const CurvePoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  Rational lambda;
  if (p.x == q.x) {
    if (p.y != q.y || p.y == 0) return {};
    lambda = (3 * p.x * p.x + e.A()) / (2 * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  Rational x3 = lambda * lambda - p.x - q.x;
  Rational y3 = lambda * (p.x - x3) - p.y;
  return {std::move(x3), std::move(y3)};
}

CurvePoint scalar_mul_unchecked(const Curve& e, const Integer& k, const CurvePoint& p) {
  if (k == 0 || p.infinity) return {};
  Integer n = abs(k);
  CurvePoint base = k < 0 ? p.negated() : p;
  CurvePoint acc;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = add_unchecked(e, acc, acc);
    if (mpz_tstbit(n.get_mpz_t(), i)) acc = add_unchecked(e, acc, base);
  }
  return acc;
}

CurvePoint add(const Curve& e, const CurvePoint& p, const CurvePoint& q) {
  e.require(p);
  e.require(q);
  return add_unchecked(e, p, q);
}

CurvePoint subtract(const Curve& e, const CurvePoint& p, const CurvePoint& q) { return add(e, p, q.negated()); }

CurvePoint scalar_mul(const Curve& e, const Integer& k, const CurvePoint& p) {
  e.require(p);
  return scalar_mul_unchecked(e, k, p);
}

double naive_height(const CurvePoint& p) {
  if (p.infinity) return 0.0;
  const Integer num = abs(p.x.get_num());
  const Integer& den = p.x.get_den();
  return log_abs(num > den ? num : den);
}

namespace {

// Doubling on x = a/b over the integral model y^2 = x^3 + A'x + B' with
// A' = u^4 A, B' = u^6 B, x' = u^2 x (the model change moves the naive
// height by a bounded amount that the 4^-N scaling removes):
//   x(2P) = F(a, b) / G(a, b),
//   F = a^4 - 2A'a^2b^2 - 8B'ab^3 + A'^2b^4,  G = 4b(a^3 + A'ab^2 + B'b^3).
// With t = max(|a|, |b|) and (xi, eta) = (a, b) / t,
//   h(2P) - 4h(P) = log max(|F(xi, eta)|, |G(xi, eta)|) - log gcd(F, G).
// The gcd divides R = Res(F, G), so it only depends on (a, b) mod a power of
// R; each step costs one factor R of the modulus. The archimedean term is
// iterated projectively in long double. Summing the increments gives exactly
// 4^-N h(2^N P) without ever forming 2^N P.
// Smallest u with u^4 A and u^6 B integral (up to factors past the trial
// division bound, which are taken whole).
Integer integral_scale(const Rational& a, const Rational& b) {
  Integer u = 1;
  Integer da = a.get_den();
  Integer db = b.get_den();
  for (unsigned long p = 2; p < 100000 && (da > 1 || db > 1); ++p) {
    int va = 0, vb = 0;
    while (mpz_divisible_ui_p(da.get_mpz_t(), p)) {
      da /= p;
      ++va;
    }
    while (mpz_divisible_ui_p(db.get_mpz_t(), p)) {
      db /= p;
      ++vb;
    }
    const int need = std::max((va + 3) / 4, (vb + 5) / 6);
    for (int i = 0; i < need; ++i) u *= p;
  }
  u *= lcm(da, db);
  for (;;) {
    Integer u2 = u * u;
    Rational ta = a * u2 * u2, tb = b * u2 * u2 * u2;
    if (ta.get_den() == 1 && tb.get_den() == 1) return u;
    u *= lcm(ta.get_den(), tb.get_den());
  }
}

class Doubler {
 public:
  Doubler(const Curve& e, const Rational& x, int steps) {
    const Integer u = integral_scale(e.A(), e.B());
    const Integer u2 = u * u;
    a_ = Rational(e.A() * u2 * u2).get_num();
    b_ = Rational(e.B() * u2 * u2 * u2).get_num();
    const IntPolynomial f(std::vector<Integer>{a_ * a_, -8 * b_, -2 * a_, 0, 1});
    const IntPolynomial g(std::vector<Integer>{4 * b_, 4 * a_, 0, 4});
    res_ = abs(resultant(f, g));
    mpz_pow_ui(modulus_.get_mpz_t(), res_.get_mpz_t(), static_cast<unsigned long>(steps + 1));

    const Rational scaled = x * u2;
    const Integer& num = scaled.get_num();
    const Integer& den = scaled.get_den();
    const Integer anum = abs(num);
    height_ = log_abs(anum > den ? anum : den);
    xi_ = ratio(num, anum > den ? anum : den);
    eta_ = ratio(den, anum > den ? anum : den);
    am_ = num % modulus_;
    bm_ = den % modulus_;
    af_ = a_.get_d();
    bf_ = b_.get_d();
  }

  double initial_height() const { return height_; }

  // h(2Q) - 4h(Q) for the current Q, then Q <- 2Q.
  double step() {
    const Integer a2 = am_ * am_;
    const Integer b2 = bm_ * bm_;
    const Integer b3 = b2 * bm_;
    Integer fm = (a2 * a2 - 2 * a_ * a2 * b2 - 8 * b_ * am_ * b3 + a_ * a_ * b2 * b2) % modulus_;
    Integer gm = (4 * bm_ * (a2 * am_ + a_ * am_ * b2 + b_ * b3)) % modulus_;
    Integer g = gcd(gcd(fm, res_), gm);
    mpz_divexact(fm.get_mpz_t(), fm.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(gm.get_mpz_t(), gm.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(modulus_.get_mpz_t(), modulus_.get_mpz_t(), g.get_mpz_t());
    am_ = fm % modulus_;
    bm_ = gm % modulus_;

    const long double x = xi_, z = eta_;
    const long double x2 = x * x, z2 = z * z;
    const long double fv = x2 * x2 - 2 * af_ * x2 * z2 - 8 * bf_ * x * z2 * z + af_ * af_ * z2 * z2;
    const long double gv = 4 * z * (x2 * x + af_ * x * z2 + bf_ * z2 * z);
    const long double m = std::max(std::fabs(fv), std::fabs(gv));
    xi_ = fv / m;
    eta_ = gv / m;
    return static_cast<double>(std::log(m)) - log_abs(g);
  }

 private:
  static long double ratio(const Integer& p, const Integer& q) {
    return static_cast<long double>(Rational(p, q).get_d());
  }

  Integer a_, b_, res_, modulus_, am_, bm_;
  long double af_ = 0, bf_ = 0, xi_ = 0, eta_ = 0;
  double height_ = 0;
};

}  // namespace

double doubling_estimate(const Curve& e, const CurvePoint& p, int n) {
  e.require(p);
  if (p.infinity) return 0.0;
  if (is_torsion(e, p)) {
    CurvePoint q = p;
    for (int i = 0; i < n; ++i) q = add_unchecked(e, q, q);
    return std::ldexp(naive_height(q), -2 * n);
  }
  Doubler d(e, p.x, n);
  double h = d.initial_height();
  double scale = 1.0;
  for (int i = 0; i < n; ++i) {
    scale *= 0.25;
    h += scale * d.step();
  }
  return h;
}

HeightValue canonical_height(const Curve& e, const CurvePoint& p, double tol, int max_doublings) {
  if (!(tol > 0)) throw DomainError("BadPrecision", "height tolerance must be positive");
  e.require(p);
  if (p.infinity || is_torsion(e, p)) return {};
  Doubler d(e, p.x, max_doublings);
  double h = d.initial_height();
  double scale = 1.0;
  double worst = 0.0;
  double err = 0.0;
  for (int n = 1; n <= max_doublings; ++n) {
    const double phi = d.step();
    scale *= 0.25;
    h += scale * phi;
    // |h(2Q) - 4h(Q)| is bounded on E; the largest value seen so far stands
    // in for that bound, giving the tail sum_{j>n} 4^-j |phi_j| <= worst 4^-n / 3.
    worst = std::max(worst, std::fabs(phi));
    err = std::max(scale * std::fabs(phi), scale * worst / 3);
    if (n >= 2 && err < tol) return {h, err};
  }
  throw DomainError("Nonconvergent", "canonical height of " + p.to_string() + " not within " + std::to_string(tol) +
                                         " after " + std::to_string(max_doublings) + " doublings (error estimate " +
                                         std::to_string(err) + ")");
}

HeightValue height_pairing(const Curve& e, const CurvePoint& p, const CurvePoint& q, double tol) {
  e.require(p);
  e.require(q);
  if (p.infinity || q.infinity) return {};
  if (p == q) return canonical_height(e, p, tol);
  const HeightValue hp = canonical_height(e, p, tol);
  const HeightValue hq = canonical_height(e, q, tol);
  const HeightValue hs = canonical_height(e, add_unchecked(e, p, q), tol);
  return {(hs.value - hp.value - hq.value) / 2, (hs.err + hp.err + hq.err) / 2};
}

bool is_torsion(const Curve& e, const CurvePoint& p) {
  e.require(p);
  CurvePoint acc = p;
  for (int k = 1; k <= 12; ++k) {
    if (acc.infinity) return true;
    acc = add_unchecked(e, acc, p);
  }
  return false;
}

GramMatrix gram_matrix(const Curve& e, const std::vector<CurvePoint>& points, double tol) {
  for (const auto& p : points) e.require(p);
  const std::size_t n = points.size();
  GramMatrix g(n);
  std::vector<HeightValue> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = canonical_height(e, points[i], tol);
    g(i, i) = diag[i].value;
    g.error(i, i) = diag[i].err;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      HeightValue v;
      if (points[i].infinity || points[j].infinity) {
        v = {};
      } else if (points[i] == points[j]) {
        v = diag[i];
      } else {
        const HeightValue hs = canonical_height(e, add_unchecked(e, points[i], points[j]), tol);
        v = {(hs.value - diag[i].value - diag[j].value) / 2, (hs.err + diag[i].err + diag[j].err) / 2};
      }
      g(i, j) = g(j, i) = v.value;
      g.error(i, j) = g.error(j, i) = v.err;
    }
  }
  return g;
}

}  // namespace arithdyn
