#pragma once

#include "arithdyn/matrix.hpp"
#include "arithdyn/real_roots.hpp"

namespace arithdyn {

// An algebraic number given as root^power, where root is a selected root of
// defining_poly (or its modulus), with a certified decimal enclosure.
struct AlgebraicDegree {
  IntPolynomial defining_poly;
  RootInterval root;          // isolating interval of the root, or of its modulus
  bool root_is_real = false;  // root is a positive real root of defining_poly
  int power = 1;
  Enclosure value;            // encloses root^power

  bool exact() const { return value.is_point(); }
  bool exceeds_one() const { return value.lo > 1; }
};

// max |eigenvalue| of M, enclosure width <= precision.
AlgebraicDegree spectral_radius(const IntMatrix& m, const Rational& precision);

// rho(M)^2 with enclosure width <= precision; exactly 1 for the identity.
AlgebraicDegree squared_spectral_radius(const IntMatrix& m, const Rational& precision);

// Enclosure of max(a, b) for two enclosed values.
AlgebraicDegree max_degree(const AlgebraicDegree& a, const AlgebraicDegree& b);

AlgebraicDegree exactly_one();

}  // namespace arithdyn
