#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arithdyn/abvar.hpp"
#include "arithdyn/serialize.hpp"
#include "arithdyn/spectral.hpp"

namespace arithdyn {

enum class Recipe { PisotOnPower, QuotientY, ProductZ, P1Cross, WCross, RuledExceptional, CyclicQuotient };

std::string to_string(Recipe r);

enum class Kappa { Zero, NegInfinity };

std::string to_string(Kappa k);  // "0" or "-inf"

// One dynamical factor of a construction. Pisot factors carry their
// polynomial; a degree-1 h-factor is the translation by a non-torsion point.
struct GalleryFactor {
  std::string name;                   // "f_3", "h_2", "tau", ...
  int degree = 0;
  std::optional<IntPolynomial> poly;
};

struct ExampleRecord {
  int dim = 0;
  Kappa kappa = Kappa::Zero;
  int q = 0;
  Recipe recipe = Recipe::PisotOnPower;
  int m = 0;                          // size of the Pisot block on E^m, Y_m or W
  int n = 0;                          // size of the E^n factor
  std::string variety;                // "Y_2 x E^1", "P^1 x E^2", ...
  std::string map;                    // "g_2 x h_1", ...
  std::vector<GalleryFactor> factors;
  Curve curve{Rational(0), Rational(-2)};
  AlgebraicDegree delta;
  bool delta_forced_one = false;
  std::string density;                // certificate kind or citation tag
  std::optional<DensityCertificate> certificate;
  std::optional<bool> coprime;        // coprime_test of the two Pisot polynomials
  bool computable = false;
  bool extra = false;
  std::vector<std::string> citations;
};

using PisotPool = std::vector<IntPolynomial>;

// Pool entries usable as f- or h-factors: monic PisotUnit with companion in
// SL(m, Z), i.e. (-1)^m p(0) = 1.
bool usable_in_pool(const IntPolynomial& p);

// For each requested degree, the search bound grows until two usable
// polynomials exist; the first two of each degree are kept.
PisotPool default_pisot_pool(int max_degree);

// 2d records covering every admissible (kappa, q) except (0, d - 1).
// extras adds the two order-3 and order-6 quotients of E^3 when d = 3.
std::vector<ExampleRecord> build_gallery(int d, const PisotPool& pool, bool extras = false);
std::vector<ExampleRecord> build_gallery(int d, bool extras = false);

Json to_json(const ExampleRecord& r);

enum class DescribeFormat { Json, Text };

std::string describe(const ExampleRecord& r, DescribeFormat format);

// Whole-table renderings for the command line.
std::string gallery_csv(const std::vector<ExampleRecord>& records);
std::string gallery_markdown(const std::vector<ExampleRecord>& records);

}  // namespace arithdyn
