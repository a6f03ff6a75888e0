#include "arithdyn/common.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace arithdyn {

namespace {

Rational pow10(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  return Rational(Integer(1), p);
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string trim_fraction(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

double Enclosure::midpoint() const {
  Rational m = (lo + hi) / 2;
  return m.get_d();
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw DomainError("ParseError", "empty rational literal");
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    long exponent = 0;
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw DomainError("ParseError", "bad exponent in " + text);
    }
    const Rational mantissa = parse_rational(s.substr(0, e));
    return exponent >= 0 ? Rational(mantissa * pow10(exponent)) : Rational(mantissa / pow10(-exponent));
  }
  auto dot = s.find('.');
  if (dot != std::string::npos && s.find('/') == std::string::npos) {
    // decimal literal
    bool neg = s[0] == '-';
    std::string digits = s.substr(neg || s[0] == '+' ? 1 : 0);
    dot = digits.find('.');
    std::string whole = digits.substr(0, dot) + digits.substr(dot + 1);
    long frac = static_cast<long>(digits.size() - dot - 1);
    Rational q;
    try {
      q = Rational(Integer(whole.empty() ? "0" : whole)) / pow10(frac);
    } catch (const std::invalid_argument&) {
      throw DomainError("ParseError", "bad rational literal: " + text);
    }
    return neg ? Rational(-q) : q;
  }
  try {
    Rational q(s);
    q.canonicalize();
    if (q.get_den() == 0) throw DomainError("ParseError", "zero denominator: " + text);
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("ParseError", "bad rational literal: " + text);
  }
}

std::string to_decimal(const Rational& q, int digits, Rounding mode) {
  if (q == 0) return "0";
  const bool negative = q < 0;
  const Rational a = abs(q);

  double est = (log_abs(a.get_num()) - log_abs(a.get_den())) / std::numbers::ln10;
  long e = static_cast<long>(std::floor(est));
  while (a < pow10(e)) --e;
  while (a >= pow10(e + 1)) ++e;

  const Rational scaled = a * pow10(digits - 1 - e);
  bool round_up_magnitude = false;
  switch (mode) {
    case Rounding::Down: round_up_magnitude = negative; break;
    case Rounding::Up: round_up_magnitude = !negative; break;
    case Rounding::Nearest: break;
  }
  Integer m;
  if (mode == Rounding::Nearest)
    m = floor_of(scaled + Rational(1, 2));
  else
    m = round_up_magnitude ? ceil_of(scaled) : floor_of(scaled);

  Integer limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  if (m >= limit) {
    m /= 10;
    ++e;
  }
  std::string ds = m.get_str();

  std::string out;
  if (e >= -6 && e < 15) {
    if (e >= 0) {
      if (static_cast<long>(ds.size()) <= e + 1) {
        out = ds + std::string(static_cast<std::size_t>(e + 1 - static_cast<long>(ds.size())), '0');
      } else {
        out = ds.substr(0, static_cast<std::size_t>(e + 1)) + "." + ds.substr(static_cast<std::size_t>(e + 1));
      }
    } else {
      out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    }
    out = trim_fraction(out);
  } else {
    std::string mant = trim_fraction(ds.substr(0, 1) + "." + ds.substr(1));
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%+03ld", e);
    out = mant + buf;
  }
  return negative ? "-" + out : out;
}

std::string lower_decimal(const Rational& q, int digits) { return to_decimal(q, digits, Rounding::Down); }
std::string upper_decimal(const Rational& q, int digits) { return to_decimal(q, digits, Rounding::Up); }

Rational to_rational(double x) {
  Rational q(x);
  q.canonicalize();
  return q;
}

double log_abs(const Integer& z) {
  if (z == 0) throw DomainError("DomainError", "log of zero");
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(exp) * std::numbers::ln2;
}

std::size_t bit_length(const Integer& z) {
  if (z == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

Rational sqrt_lower(const Rational& q, unsigned extra_bits) {
  if (q <= 0) return Rational(0);
  // sqrt(n/d) = sqrt(n d 4^k) / (d 2^k)
  Integer t = q.get_num() * q.get_den();
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 2 * extra_bits);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
  Integer den = q.get_den();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), extra_bits);
  Rational r(s, den);
  r.canonicalize();
  return r;
}

Rational sqrt_upper(const Rational& q, unsigned extra_bits) {
  if (q <= 0) return Rational(0);
  Integer t = q.get_num() * q.get_den();
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 2 * extra_bits);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
  if (s * s != t) s += 1;
  Integer den = q.get_den();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), extra_bits);
  Rational r(s, den);
  r.canonicalize();
  return r;
}

}  // namespace arithdyn
