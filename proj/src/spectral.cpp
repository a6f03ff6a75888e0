#include "arithdyn/spectral.hpp"

#include <algorithm>

#include "arithdyn/root_moduli.hpp"

namespace arithdyn {

AlgebraicDegree exactly_one() {
  AlgebraicDegree d;
  d.defining_poly = IntPolynomial{-1, 1};
  d.root = {Rational(1), Rational(1), 1};
  d.root_is_real = true;
  d.power = 1;
  d.value = {Rational(1), Rational(1)};
  return d;
}

AlgebraicDegree spectral_radius(const IntMatrix& m, const Rational& precision) {
  if (m.size() == 0 || m.is_zero()) throw DomainError("ZeroMatrix", "spectral radius needs a nonzero matrix");
  const IntPolynomial cp = char_poly(m);
  const IntPolynomial sf = squarefree_part(cp);
  const auto moduli = root_moduli(sf, precision);

  AlgebraicDegree d;
  d.defining_poly = sf;
  d.power = 1;
  Rational lo = moduli.front().lo;
  Rational hi = moduli.front().hi;
  for (const auto& r : moduli) {
    lo = std::max(lo, r.lo);
    hi = std::max(hi, r.hi);
  }
  d.value = {lo, hi};
  d.root = {lo, hi, 1};

  // the dominant modulus is a positive real root when it is the only
  // modulus in range and Sturm finds a real root there
  int overlapping = 0;
  for (const auto& r : moduli)
    if (r.hi >= lo) ++overlapping;
  if (overlapping == 1 && hi > 0) {
    if (lo == hi) {
      d.root_is_real = sf.sign_at(lo) == 0;
    } else {
      SturmSequence sturm(sf);
      d.root_is_real = sturm.count(lo, hi) == 1 && sf.sign_at(lo) != 0;
    }
  }
  return d;
}

AlgebraicDegree squared_spectral_radius(const IntMatrix& m, const Rational& precision) {
  if (m.is_identity()) {
    AlgebraicDegree d = exactly_one();
    d.defining_poly = char_poly(m);
    d.power = 2;
    return d;
  }
  // (hi - lo)(hi + lo) <= precision once the root width is below precision / (2 hi + 1)
  const AlgebraicDegree coarse = spectral_radius(m, Rational(1, 1000));
  const Rational root_precision = precision / (2 * coarse.value.hi + 1);
  AlgebraicDegree d = spectral_radius(m, root_precision);
  d.power = 2;
  d.value = {d.root.lo * d.root.lo, d.root.hi * d.root.hi};
  return d;
}

AlgebraicDegree max_degree(const AlgebraicDegree& a, const AlgebraicDegree& b) {
  AlgebraicDegree d = a.value.hi >= b.value.hi ? a : b;
  d.value = {std::max(a.value.lo, b.value.lo), std::max(a.value.hi, b.value.hi)};
  return d;
}

}  // namespace arithdyn
