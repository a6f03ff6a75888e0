#include "arithdyn/root_moduli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace arithdyn {

IntPolynomial graeffe_step(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 0) return {};
  std::vector<Integer> even, odd;
  for (int k = 0; k <= n; ++k) (k % 2 == 0 ? even : odd).push_back(p[k]);
  IntPolynomial e(std::move(even));
  IntPolynomial o(std::move(odd));
  IntPolynomial y = IntPolynomial::monomial(1, 1);
  IntPolynomial q = e * e - y * (o * o);
  return n % 2 == 0 ? q : q.negated();
}

std::optional<int> pellet_count(const IntPolynomial& p, long log2_radius) {
  const int n = p.degree();
  if (n < 0) return std::nullopt;
  std::vector<Integer> terms(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Integer t = abs(p[j]);
    const long shift = log2_radius >= 0 ? log2_radius * j : -log2_radius * (n - j);
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    terms[static_cast<std::size_t>(j)] = std::move(t);
  }
  std::size_t k = 0;
  Integer total = 0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    total += terms[j];
    if (terms[j] > terms[k]) k = j;
  }
  if (terms[k] > total - terms[k]) return static_cast<int>(k);
  return std::nullopt;
}

namespace {

constexpr std::size_t kGraeffeBitCap = std::size_t{1} << 22;

std::size_t max_bits(const IntPolynomial& p) {
  std::size_t b = 0;
  for (const auto& c : p.coefficients()) b = std::max(b, bit_length(c));
  return b;
}

// Rational bound on 2^(e / 2^k) from below (upper == false) or above.
Rational dyadic_root_bound(long e, int k, bool upper) {
  const unsigned long power = 1ul << k;
  const double approx = std::exp2(static_cast<double>(e) / static_cast<double>(power));
  constexpr int frac_bits = 60;
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), frac_bits);
  Integer num(std::ldexp(approx, frac_bits));
  // N^(2^k) <= 2^(e + frac_bits 2^k) is the exact test for N / 2^frac_bits <= 2^(e/2^k)
  auto compare = [&](const Integer& candidate) {
    Integer lhs;
    mpz_pow_ui(lhs.get_mpz_t(), candidate.get_mpz_t(), power);
    const long rhs_exp = e + static_cast<long>(frac_bits) * static_cast<long>(power);
    Integer rhs = 1;
    if (rhs_exp >= 0) {
      mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(rhs_exp));
    } else {
      return 1;  // candidate^power >= 1 > 2^rhs_exp whenever candidate >= 1
    }
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  };
  Integer step = 1;
  mpz_mul_2exp(step.get_mpz_t(), step.get_mpz_t(), 8);
  if (upper) {
    while (compare(num) < 0) num += step;
  } else {
    while (num > 0 && compare(num) > 0) num -= step;
    if (num < 0) num = 0;
  }
  Rational r(num, scale);
  r.canonicalize();
  return r;
}

struct HullVertex {
  int index;
  double log2_abs;
};

std::vector<HullVertex> newton_upper_hull(const IntPolynomial& g) {
  std::vector<HullVertex> pts;
  for (int j = 0; j <= g.degree(); ++j)
    if (g[j] != 0) pts.push_back({j, log_abs(g[j]) / std::numbers::ln2});
  std::vector<HullVertex> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b if it lies on or below segment a -> pt
      const double cross = (b.index - a.index) * (pt.log2_abs - a.log2_abs) - (b.log2_abs - a.log2_abs) * (pt.index - a.index);
      if (cross >= 0) hull.pop_back(); else break;
    }
    hull.push_back(pt);
  }
  return hull;
}

// ---- complex root approximation --------------------------------------------

struct ComplexQ {
  Rational re;
  Rational im;
};

ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) { return {a.re + b.re, a.im + b.im}; }
ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) { return {a.re - b.re, a.im - b.im}; }
ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational norm2(const ComplexQ& a) { return a.re * a.re + a.im * a.im; }
ComplexQ operator/(const ComplexQ& a, const ComplexQ& b) {
  const Rational d = norm2(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Rational round_dyadic(const Rational& x, unsigned bits) {
  Integer scaled = x.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational r(q, den);
  r.canonicalize();
  return r;
}

void horner(const IntPolynomial& p, const ComplexQ& z, ComplexQ& value, ComplexQ& deriv) {
  value = {Rational(0), Rational(0)};
  deriv = {Rational(0), Rational(0)};
  for (int k = p.degree(); k >= 0; --k) {
    deriv = deriv * z + value;
    value = value * z + ComplexQ{Rational(p[k]), Rational(0)};
  }
}

std::vector<std::complex<long double>> aberth_long_double(const IntPolynomial& p) {
  using C = std::complex<long double>;
  const int n = p.degree();
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = static_cast<long double>(p[k].get_d());
  auto eval = [&](C z, C& v, C& d) {
    v = 0;
    d = 0;
    for (int k = n; k >= 0; --k) {
      d = d * z + v;
      v = v * z + c[static_cast<std::size_t>(k)];
    }
  };
  const long double radius = std::pow(std::fabs(c[0] / c[static_cast<std::size_t>(n)]), 1.0L / n);
  std::vector<C> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius > 0 ? radius : 1.0L, angle);
  }
  for (int iter = 0; iter < 500; ++iter) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      C v, d;
      eval(z[static_cast<std::size_t>(i)], v, d);
      if (v == C(0)) continue;
      const C ratio = v / d;
      C s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0L / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      const C w = ratio / (1.0L - ratio * s);
      z[static_cast<std::size_t>(i)] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

// Aberth sweeps in exact arithmetic, rounding each iterate to `bits`
// fractional bits. Returns the largest correction norm squared.
Rational aberth_polish(const IntPolynomial& p, std::vector<ComplexQ>& z, unsigned bits) {
  const std::size_t n = z.size();
  Rational worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ComplexQ v, d;
    horner(p, z[i], v, d);
    if (norm2(v) == 0) continue;
    if (norm2(d) == 0) continue;
    const ComplexQ ratio = v / d;
    ComplexQ s{Rational(0), Rational(0)};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const ComplexQ diff = z[i] - z[j];
      if (norm2(diff) == 0) continue;
      s = s + ComplexQ{Rational(1), Rational(0)} / diff;
    }
    const ComplexQ denom = ComplexQ{Rational(1), Rational(0)} - ratio * s;
    const ComplexQ w = norm2(denom) == 0 ? ratio : ratio / denom;
    z[i] = {round_dyadic(z[i].re - w.re, bits), round_dyadic(z[i].im - w.im, bits)};
    worst = std::max(worst, norm2(w));
  }
  return worst;
}

// Inclusion radius n |p(z_i)| / |lc prod (z_i - z_j)|, returned as an upper bound.
Rational inclusion_radius(const IntPolynomial& p, const std::vector<ComplexQ>& z, std::size_t i) {
  ComplexQ v, d;
  horner(p, z[i], v, d);
  Rational denom = Rational(p.leading() * p.leading());
  for (std::size_t j = 0; j < z.size(); ++j)
    if (j != i) denom *= norm2(z[i] - z[j]);
  if (denom == 0) return Rational(-1);
  const auto n = static_cast<long>(z.size());
  const Rational r2 = Rational(n * n) * norm2(v) / denom;
  return sqrt_upper(r2);
}

}  // namespace

std::optional<int> unit_disk_count(const IntPolynomial& p, int max_iterations) {
  if (p.is_zero()) throw DomainError("ZeroPolynomial", "unit-disk count of the zero polynomial");
  IntPolynomial g = p.primitive_part();
  for (int k = 0; k <= max_iterations; ++k) {
    if (auto c = pellet_count(g, 0)) return c;
    if (max_bits(g) > kGraeffeBitCap) break;
    g = graeffe_step(g).primitive_part();
  }
  return std::nullopt;
}

std::vector<Annulus> graeffe_annuli(const IntPolynomial& p, int iterations) {
  if (p.is_zero()) throw DomainError("ZeroPolynomial", "annuli of the zero polynomial");
  std::vector<Annulus> out;
  int zeros = 0;
  while (zeros <= p.degree() && p[zeros] == 0) ++zeros;
  if (zeros > 0) out.push_back({Rational(0), Rational(0), zeros});
  std::vector<Integer> rest(p.coefficients().begin() + zeros, p.coefficients().end());
  const IntPolynomial q(std::move(rest));
  const int n = q.degree();
  if (n < 1) return out;

  IntPolynomial g = q.primitive_part();
  for (int k = 0; k < iterations; ++k) g = graeffe_step(g).primitive_part();
  const auto hull = newton_upper_hull(g);

  // certified splits: (count below, rational lower bound of radius, upper bound)
  struct Split {
    int below;
    Rational r_lo;
    Rational r_hi;
  };
  std::vector<Split> splits;
  for (std::size_t v = 1; v + 1 < hull.size(); ++v) {
    const auto& a = hull[v - 1];
    const auto& b = hull[v];
    const auto& c = hull[v + 1];
    const double left = (a.log2_abs - b.log2_abs) / (b.index - a.index);
    const double right = (b.log2_abs - c.log2_abs) / (c.index - b.index);
    const long e = std::lround((left + right) / 2);
    auto count = pellet_count(g, e);
    if (!count || *count != b.index) continue;
    splits.push_back({b.index, dyadic_root_bound(e, iterations, false), dyadic_root_bound(e, iterations, true)});
  }

  const Rational outer = root_bound(q);
  const Rational inner = Rational(1) / root_bound(q.reversed());
  Rational lo = inner;
  int below = 0;
  for (const auto& s : splits) {
    out.push_back({lo, s.r_hi, s.below - below});
    lo = s.r_lo;
    below = s.below;
  }
  out.push_back({lo, outer, n - below});
  return out;
}

std::vector<RootInterval> root_moduli(const IntPolynomial& p, const Rational& precision) {
  if (p.is_zero()) throw DomainError("ZeroPolynomial", "root moduli of the zero polynomial");
  if (precision <= 0) throw DomainError("BadPrecision", "precision must be positive");
  if (!is_squarefree(p))
    throw DomainError("NotSquarefree", "root_moduli needs a squarefree polynomial; divide by gcd(p, p') first");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;

  IntPolynomial q = p;
  if (q.constant_term() == 0) {
    out.push_back({Rational(0), Rational(0), 1});
    std::vector<Integer> rest(q.coefficients().begin() + 1, q.coefficients().end());
    q = IntPolynomial(std::move(rest));
  }
  if (q.degree() == 1) {
    Rational r(q[0], q[1]);
    r.canonicalize();
    out.push_back({abs(r), abs(r), 1});
  } else if (q.degree() > 1) {
    const auto annuli = graeffe_annuli(q, 6);

    const auto approx = aberth_long_double(q);
    std::vector<ComplexQ> z;
    for (const auto& a : approx) z.push_back({round_dyadic(to_rational(static_cast<double>(a.real())), 64),
                                              round_dyadic(to_rational(static_cast<double>(a.imag())), 64)});
    std::vector<RootInterval> refined;
    bool done = false;
    for (unsigned bits = 96; bits <= 8192 && !done; bits *= 2) {
      Rational target(1);
      mpz_mul_2exp(target.get_den_mpz_t(), target.get_den_mpz_t(), 2 * bits);
      target.canonicalize();
      for (int sweep = 0; sweep < 12; ++sweep)
        if (aberth_polish(q, z, bits) < target) break;

      std::vector<Rational> radius(z.size());
      bool ok = true;
      for (std::size_t i = 0; i < z.size() && ok; ++i) {
        radius[i] = inclusion_radius(q, z, i);
        if (radius[i] < 0) ok = false;
      }
      for (std::size_t i = 0; i < z.size() && ok; ++i)
        for (std::size_t j = i + 1; j < z.size() && ok; ++j) {
          const Rational sum = radius[i] + radius[j];
          if (sum * sum >= norm2(z[i] - z[j])) ok = false;
        }
      if (!ok) continue;
      refined.clear();
      for (std::size_t i = 0; i < z.size(); ++i) {
        const Rational m2 = norm2(z[i]);
        Rational lo = sqrt_lower(m2, bits) - radius[i];
        if (lo < 0) lo = 0;
        const Rational hi = sqrt_upper(m2, bits) + radius[i];
        if (hi - lo > precision) {
          ok = false;
          break;
        }
        refined.push_back({lo, hi, 1});
      }
      done = ok;
    }
    if (!done) throw DomainError("Undecidable", "root moduli could not be separated for " + q.to_string());

    // every refined modulus must fall in a Graeffe annulus, with matching counts
    std::vector<int> seen(annuli.size(), 0);
    for (const auto& r : refined) {
      bool placed = false;
      for (std::size_t a = 0; a < annuli.size(); ++a)
        if (r.hi >= annuli[a].lo && r.lo <= annuli[a].hi) {
          ++seen[a];
          placed = true;
        }
      if (!placed) throw std::logic_error("root modulus outside every certified annulus");
    }
    for (std::size_t a = 0; a < annuli.size(); ++a)
      if (seen[a] < annuli[a].count) throw std::logic_error("annulus root count mismatch");
    out.insert(out.end(), refined.begin(), refined.end());
  }

  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) {
    if (a.hi != b.hi) return a.hi > b.hi;
    return a.lo > b.lo;
  });
  return out;
}

}  // namespace arithdyn
