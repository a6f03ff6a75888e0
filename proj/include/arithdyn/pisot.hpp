#pragma once

#include <string>
#include <vector>

#include "arithdyn/polynomial.hpp"
#include "arithdyn/real_roots.hpp"

namespace arithdyn {

enum class PisotClass { PisotUnit, PisotNonUnit, NotPisot };

std::string to_string(PisotClass c);

// Exact classification of a monic integer polynomial: Pisot when exactly one
// root lies outside the closed unit disk and it is real > 1, with p(0) != 0
// (which forces irreducibility). Unit when additionally |p(0)| = 1.
PisotClass is_pisot_unit(const IntPolynomial& p);

// Isolating interval of the largest real root, at most `precision` wide.
RootInterval dominant_real_root(const IntPolynomial& p, const Rational& precision);

// Every monic degree-`degree` polynomial with coefficients in [-bound, bound]
// classified PisotUnit, sorted by dominant root, then lexicographically on
// the coefficient tuple.
std::vector<IntPolynomial> pisot_unit_search(int degree, int bound);

}  // namespace arithdyn
