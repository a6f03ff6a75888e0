#pragma once

#include <vector>

#include "arithdyn/common.hpp"
#include "arithdyn/polynomial.hpp"

namespace arithdyn {

// An isolating interval for one distinct root. For real roots [lo, hi]
// brackets the root itself; for modulus enclosures it brackets |root|.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  Enclosure enclosure() const { return {lo, hi}; }
};

// Sturm chain of a squarefree polynomial, with positive rescaling so sign
// variations are preserved.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& squarefree);

  int variations_at(const Rational& x) const;
  // number of distinct roots in (a, b]
  int count(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }
  const IntPolynomial& base() const { return chain_.front(); }

 private:
  std::vector<IntPolynomial> chain_;
};

// Power of two strictly larger than the modulus of every complex root.
Rational root_bound(const IntPolynomial& p);

// Disjoint intervals, one per distinct real root, sorted ascending, each of
// width <= precision. Rational roots met during bisection come back as
// point intervals.
std::vector<RootInterval> real_root_isolate(const IntPolynomial& p, const Rational& precision);

// Shrinks an isolating interval of a root of the squarefree p to width <= precision.
RootInterval refine_root(const IntPolynomial& squarefree, RootInterval iv, const Rational& precision);

}  // namespace arithdyn
