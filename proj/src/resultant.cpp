#include "arithdyn/resultant.hpp"

namespace arithdyn {

namespace {

// Divide by the positive content, keeping the sign of the leading coefficient.
IntPolynomial divide_content(const IntPolynomial& p, Integer& content) {
  content = p.content();
  std::vector<Integer> v(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial divide_by(const IntPolynomial& p, const Integer& d) {
  std::vector<Integer> v(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return IntPolynomial(std::move(v));
}

Integer ipow(const Integer& base, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Integer resultant(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("ZeroPolynomial", "resultant of the zero polynomial");
  IntPolynomial a = p;
  IntPolynomial b = q;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
  }
  if (b.degree() == 0) return ipow(b.leading(), a.degree());

  Integer ca, cb;
  a = divide_content(a, ca);
  b = divide_content(b, cb);
  Integer t = ipow(ca, b.degree()) * ipow(cb, a.degree());

  Integer g = 1;
  Integer h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divide_by(r, g * ipow(h, delta));
    g = a.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_div(ipow(g, delta), ipow(h, delta - 1));
    }
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  h = exact_div(ipow(b.leading(), da), ipow(h, da - 1));
  return s * t * h;
}

DenseOrbitResult dense_orbit_test(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("ZeroPolynomial", "dense-orbit test of the zero polynomial");
  if (p.constant_term() == 0) throw DomainError("ZeroConstantTerm", "dense-orbit test needs p(0) != 0");
  DenseOrbitResult out;
  out.resultant = resultant(p, p.reversed());
  out.certified = out.resultant != 0;
  return out;
}

bool coprime_test(const IntPolynomial& p, const IntPolynomial& q) { return resultant(p, q) != 0; }

}  // namespace arithdyn
