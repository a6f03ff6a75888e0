#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace arithdyn {

using Integer = mpz_class;
using Rational = mpq_class;

// Every failure the library reports carries a stable kind tag ("NotMonic",
// "NotOnCurve", ...) so front ends can emit structured errors.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

enum class Rounding { Down, Up, Nearest };

// Closed rational interval [lo, hi].
struct Enclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Enclosure& other) const { return lo <= other.lo && other.hi <= hi; }
  bool intersects(const Enclosure& other) const { return lo <= other.hi && other.lo <= hi; }
  bool is_point() const { return lo == hi; }
  double midpoint() const;
};

Rational parse_rational(const std::string& text);

// Decimal rendering of an exact rational with `digits` significant digits,
// rounded in the requested direction.
std::string to_decimal(const Rational& q, int digits, Rounding mode);

// Outward-rounded decimal strings; [lo_str, hi_str] still contains [lo, hi].
std::string lower_decimal(const Rational& q, int digits = 12);
std::string upper_decimal(const Rational& q, int digits = 12);

// Rational value exactly equal to a finite double.
Rational to_rational(double x);

// Natural logarithm of |z| for z != 0, accurate for arbitrarily large z.
double log_abs(const Integer& z);

// Bits needed to write |z|.
std::size_t bit_length(const Integer& z);

// Round to 12 significant digits, the precision used for printed floats.
double round_sig(double x, int digits = 12);

// Certified rational bounds on sqrt(q) for q >= 0.
Rational sqrt_lower(const Rational& q, unsigned extra_bits = 64);
Rational sqrt_upper(const Rational& q, unsigned extra_bits = 64);

}  // namespace arithdyn
