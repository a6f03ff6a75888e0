#pragma once

#include "arithdyn/polynomial.hpp"

namespace arithdyn {

// Res(p, q) = lc(p)^deg q * prod q(alpha) over the roots alpha of p,
// computed with the subresultant PRS.
Integer resultant(const IntPolynomial& p, const IntPolynomial& q);

// Whether the roots x_1..x_n of p satisfy x_i * conj(x_j) != 1 for all i, j.
// For real p this is exactly Res(p, reversed(p)) != 0.
struct DenseOrbitResult {
  bool certified = false;
  Integer resultant;
};

DenseOrbitResult dense_orbit_test(const IntPolynomial& p);

// true iff p and q have no common complex root.
bool coprime_test(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace arithdyn
