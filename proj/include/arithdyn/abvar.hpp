#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arithdyn/elliptic.hpp"
#include "arithdyn/matrix.hpp"
#include "arithdyn/spectral.hpp"

namespace arithdyn {

using PointTuple = std::vector<CurvePoint>;

// x -> M x + t on E^n.
class AffineSelfMap {
 public:
  AffineSelfMap(Curve curve, IntMatrix m, PointTuple t);

  static AffineSelfMap endomorphism(Curve curve, IntMatrix m);
  static AffineSelfMap translation(Curve curve, CurvePoint t);

  int dimension() const { return m_.size(); }
  const Curve& curve() const { return curve_; }
  const IntMatrix& matrix() const { return m_; }
  const PointTuple& translation_part() const { return t_; }
  bool has_translation() const;
  bool is_automorphism() const { return m_.is_unimodular(); }

  // Restriction to coordinates [first, first + count), assuming the
  // off-diagonal blocks vanish.
  AffineSelfMap block(int first, int count) const;

 private:
  Curve curve_;
  IntMatrix m_;
  PointTuple t_;
};

PointTuple apply(const AffineSelfMap& f, const PointTuple& p);

// Coordinates are abandoned once a numerator or denominator passes this size.
inline constexpr std::size_t kOrbitBitGuard = 1000000;

// [P, F(P), ..., F^N(P)]. SizeGuardExceeded names the last safe index.
std::vector<PointTuple> orbit(const AffineSelfMap& f, const PointTuple& p, int steps);

// C_k = [M^k | S_k] with S_k = sum_{j<k} M^j, so F^k(P) = M^k P + S_k t.
struct CoefficientStep {
  IntMatrix power;
  IntMatrix sum;
};

std::vector<CoefficientStep> coefficient_trajectory(const AffineSelfMap& f, int steps);

struct HeightSequence {
  std::vector<double> h;
  std::vector<double> err;
};

// Gram matrix of (P_1..P_n, t_1..t_n).
GramMatrix basis_gram(const AffineSelfMap& f, const PointTuple& p, double tol);

// h_k = trace(C_k G C_k^T), with G's entrywise errors propagated.
HeightSequence height_sequence_gram(const AffineSelfMap& f, const GramMatrix& g, int steps);

// h_k = sum_i naive_height(F^k(P)_i), from the exact orbit.
HeightSequence height_sequence_naive(const AffineSelfMap& f, const PointTuple& p, int steps);

AffineSelfMap product(const AffineSelfMap& a, const AffineSelfMap& b);

// rho(M)^2, exactly 1 for pure translations.
AlgebraicDegree dynamical_degree(const AffineSelfMap& f, const Rational& precision);

enum class CertificateKind { NonTorsionTranslation, EigenvalueCriterion, XieSurface, CoprimeProduct, None };

std::string to_string(CertificateKind k);

struct DensityCertificate {
  CertificateKind kind = CertificateKind::None;
  std::string note;
  std::optional<Integer> resultant;     // dense-orbit or coprimality resultant
  std::optional<AlgebraicDegree> delta;
  std::optional<bool> torsion;
  int split = 0;                        // first block size for CoprimeProduct
  std::vector<DensityCertificate> factors;
};

DensityCertificate density_certificate(const AffineSelfMap& f);

}  // namespace arithdyn
