#pragma once

#include <optional>
#include <vector>

#include "arithdyn/common.hpp"
#include "arithdyn/polynomial.hpp"
#include "arithdyn/real_roots.hpp"

namespace arithdyn {

// One Dandelin-Graeffe root-squaring step: the result has roots x_i^2.
IntPolynomial graeffe_step(const IntPolynomial& p);

// Pellet test at radius 2^log2_radius: if one term dominates the sum of all
// others, returns its index k, which is then the exact number of roots with
// modulus < radius (none lie on the circle).
std::optional<int> pellet_count(const IntPolynomial& p, long log2_radius);

// Exact number of roots strictly inside the unit disk, certified by Pellet's
// test on successive Graeffe iterates. nullopt if no iterate up to
// max_iterations (or the coefficient size cap) separates the unit circle.
std::optional<int> unit_disk_count(const IntPolynomial& p, int max_iterations = 16);

// Certified annulus lo <= |z| <= hi holding `count` roots.
struct Annulus {
  Rational lo;
  Rational hi;
  int count = 0;
};

// Annuli obtained by Pellet tests on the iterations-th Graeffe iterate at
// radii placed between Newton-polygon segments. Annuli are ordered by
// increasing modulus and their counts sum to deg p.
std::vector<Annulus> graeffe_annuli(const IntPolynomial& p, int iterations);

// Certified enclosures of |x| for every complex root x of a squarefree p
// (counted with multiplicity, so the list has deg p entries), sorted by
// decreasing modulus. Coarse counts come from graeffe_annuli; each root is
// then refined with inclusion disks around high-precision approximations
// until every enclosure is at most `precision` wide.
std::vector<RootInterval> root_moduli(const IntPolynomial& p, const Rational& precision);

}  // namespace arithdyn
