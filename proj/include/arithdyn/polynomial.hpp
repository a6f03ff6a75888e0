#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "arithdyn/common.hpp"

namespace arithdyn {

// Dense univariate polynomial with integer coefficients, constant term first.
// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, int degree);
  // "1,-3,1" -> T^2 - 3T + 1
  static IntPolynomial parse(const std::string& csv);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const Integer& leading() const;
  Integer constant_term() const { return is_zero() ? Integer(0) : coeffs_.front(); }
  Integer operator[](int i) const;
  std::span<const Integer> coefficients() const { return coeffs_; }

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;
  // sign of p(x) for rational x, without forming the rational value
  int sign_at(const Rational& x) const;

  IntPolynomial derivative() const;
  Integer content() const;  // positive gcd of coefficients, 0 for the zero polynomial
  IntPolynomial primitive_part() const;  // leading coefficient made positive
  IntPolynomial negated() const;
  // T^deg p(1/T)
  IntPolynomial reversed() const;
  // p(-T)
  IntPolynomial reflected() const;

  std::string to_string(const std::string& var = "T") const;
  std::string to_csv() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned e);

// lc(b)^(deg a - deg b + 1) * a = q * b + r with deg r < deg b.
void pseudo_divide(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& q, IntPolynomial& r);
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Exact division; throws if b does not divide a over Z.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
bool divides(const IntPolynomial& b, const IntPolynomial& a);

// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Primitive squarefree part p / gcd(p, p').
IntPolynomial squarefree_part(const IntPolynomial& p);
bool is_squarefree(const IntPolynomial& p);

// Yun decomposition: factors[i] is the product of the irreducible factors of
// multiplicity i+1 (primitive, possibly constant 1).
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

}  // namespace arithdyn
