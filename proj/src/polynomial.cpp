#include "arithdyn/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace arithdyn {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, Integer(0));
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::parse(const std::string& csv) {
  std::vector<Integer> v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) throw DomainError("ParseError", "empty coefficient in \"" + csv + "\"");
    if (item[0] == '+') item.erase(0, 1);
    try {
      v.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw DomainError("ParseError", "bad integer coefficient \"" + item + "\"");
    }
  }
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::leading() const {
  if (is_zero()) throw DomainError("ZeroPolynomial", "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPolynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return Integer(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  // den^deg * p(num/den), same sign since den > 0
  if (is_zero()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = coeffs_.back();
  Integer den_pow = den;
  for (int k = degree() - 1; k >= 0; --k) {
    acc = acc * num + coeffs_[static_cast<std::size_t>(k)] * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(v));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t k = 0; k < v.size(); ++k) mpz_divexact(v[k].get_mpz_t(), coeffs_[k].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::negated() const {
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = -coeffs_[k];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const {
  if (constant_term() == 0) throw DomainError("ZeroConstantTerm", "reversal needs a nonzero constant term");
  std::vector<Integer> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reflected() const {
  std::vector<Integer> v = coeffs_;
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    Integer mag = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::string IntPolynomial::to_csv() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ",";
    out += coeffs_[k].get_str();
  }
  return out.empty() ? "0" : out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + b.negated(); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& p) {
  std::vector<Integer> v(p.coeffs_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * p.coeffs_[k];
  return IntPolynomial(std::move(v));
}

IntPolynomial pow(const IntPolynomial& p, unsigned e) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

void pseudo_divide(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& q, IntPolynomial& r) {
  if (b.is_zero()) throw DomainError("ZeroPolynomial", "division by the zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) {
    q = {};
    r = a;
    return;
  }
  const int delta = a.degree() - db;
  const Integer& lb = b.leading();
  std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Integer> quo(static_cast<std::size_t>(delta) + 1, Integer(0));
  // standard pseudo-division: multiply by lb at each step
  for (int k = a.degree(); k >= db; --k) {
    const Integer lead = rem[static_cast<std::size_t>(k)];
    for (auto& c : quo) c *= lb;
    quo[static_cast<std::size_t>(k - db)] += lead;
    for (auto& c : rem) c *= lb;
    if (lead != 0)
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= lead * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  q = IntPolynomial(std::move(quo));
  r = IntPolynomial(std::move(rem));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial q, r;
  pseudo_divide(a, b, q, r);
  return r;
}

namespace {

// Division over Z; returns false if some step is inexact.
bool try_exact_quotient(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& out) {
  if (b.is_zero()) throw DomainError("ZeroPolynomial", "division by the zero polynomial");
  if (a.is_zero()) {
    out = {};
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Integer& lb = b.leading();
  for (int k = a.degree(); k >= b.degree(); --k) {
    const Integer& lead = rem[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), lb.get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), lead.get_mpz_t(), lb.get_mpz_t());
    quo[static_cast<std::size_t>(k - b.degree())] = c;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k - b.degree() + j)] -= c * b[j];
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  out = IntPolynomial(std::move(quo));
  return true;
}

}  // namespace

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial q;
  if (!try_exact_quotient(a, b, q)) throw DomainError("InexactDivision", "polynomial division is not exact");
  return q;
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  IntPolynomial q;
  return try_exact_quotient(a, b, q);
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPolynomial u = a.primitive_part();
  IntPolynomial v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p.primitive_part();
  IntPolynomial g = gcd(p, p.derivative());
  return exact_quotient(p.primitive_part(), g).primitive_part();
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() < 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<IntPolynomial> factors;
  if (p.degree() < 1) return factors;
  IntPolynomial f = p.primitive_part();
  IntPolynomial g = gcd(f, f.derivative());
  IntPolynomial w = exact_quotient(f, g).primitive_part();
  while (w.degree() > 0) {
    IntPolynomial y = gcd(w, g);
    factors.push_back(exact_quotient(w, y).primitive_part());
    w = y;
    g = exact_quotient(g, y).primitive_part();
  }
  return factors;
}

}  // namespace arithdyn
