#include "arithdyn/pisot.hpp"

#include <algorithm>

#include "arithdyn/resultant.hpp"
#include "arithdyn/root_moduli.hpp"

namespace arithdyn {

std::string to_string(PisotClass c) {
  switch (c) {
    case PisotClass::PisotUnit: return "PisotUnit";
    case PisotClass::PisotNonUnit: return "PisotNonUnit";
    case PisotClass::NotPisot: return "NotPisot";
  }
  return "?";
}

PisotClass is_pisot_unit(const IntPolynomial& p) {
  if (!p.is_monic()) throw DomainError("NotMonic", "Pisot classification needs a monic polynomial, got " + p.to_string());
  const int n = p.degree();
  if (n < 1) return PisotClass::NotPisot;
  const Integer c0 = p.constant_term();
  if (c0 == 0) return PisotClass::NotPisot;
  // p(1) = (1 - a) prod (1 - x_i) < 0 and (-1)^n p(-1) = prod (1 + x) > 0
  if (p.evaluate(Integer(1)) >= 0) return PisotClass::NotPisot;
  Integer at_minus_one = p.evaluate(Integer(-1));
  if (n % 2 == 1) at_minus_one = -at_minus_one;
  if (at_minus_one <= 0) return PisotClass::NotPisot;

  if (auto inside = unit_disk_count(p)) {
    if (*inside != n - 1) return PisotClass::NotPisot;
    return abs(c0) == 1 ? PisotClass::PisotUnit : PisotClass::PisotNonUnit;
  }
  // No Graeffe iterate separated the unit circle. A Pisot polynomial has
  // Res(p, reversed p) != 0 unless it is T^2 + bT + 1, whose roots are far
  // from the circle, so a vanishing resultant settles it.
  if (resultant(p, p.reversed()) == 0) return PisotClass::NotPisot;
  throw DomainError("Undecidable", "roots of " + p.to_string() + " too close to the unit circle");
}

RootInterval dominant_real_root(const IntPolynomial& p, const Rational& precision) {
  auto roots = real_root_isolate(p, precision);
  if (roots.empty()) throw DomainError("NoRealRoot", p.to_string() + " has no real root");
  return roots.back();
}

std::vector<IntPolynomial> pisot_unit_search(int degree, int bound) {
  std::vector<IntPolynomial> found;
  if (degree < 1 || bound < 1) return found;
  const std::size_t m = static_cast<std::size_t>(degree);
  std::vector<long> c(m, -bound);  // c[0..m-1], leading 1 implicit
  for (;;) {
    if (c[0] == 1 || c[0] == -1) {
      long at_one = 1;
      long at_minus_one = (degree % 2 == 0) ? 1 : -1;
      for (std::size_t k = 0; k < m; ++k) {
        at_one += c[k];
        at_minus_one += (k % 2 == 0) ? c[k] : -c[k];
      }
      if (degree % 2 == 1) at_minus_one = -at_minus_one;
      if (at_one < 0 && at_minus_one > 0) {
        std::vector<Integer> coeffs(c.begin(), c.end());
        coeffs.emplace_back(1);
        IntPolynomial p(std::move(coeffs));
        if (is_pisot_unit(p) == PisotClass::PisotUnit) found.push_back(std::move(p));
      }
    }
    std::size_t k = 0;
    while (k < m && c[k] == bound) c[k++] = -bound;
    if (k == m) break;
    ++c[k];
  }

  const Rational precision(Integer(1), Integer("1000000000000000000000000000000"));
  std::vector<std::pair<RootInterval, IntPolynomial>> keyed;
  keyed.reserve(found.size());
  for (auto& p : found) keyed.emplace_back(dominant_real_root(p, precision), std::move(p));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.hi < b.first.lo) return true;
    if (b.first.hi < a.first.lo) return false;
    const auto ca = a.second.coefficients();
    const auto cb = b.second.coefficients();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
  });
  std::vector<IntPolynomial> out;
  out.reserve(keyed.size());
  for (auto& [root, p] : keyed) out.push_back(std::move(p));
  return out;
}

}  // namespace arithdyn
