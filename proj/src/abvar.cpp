#include "arithdyn/abvar.hpp"

#include <cmath>
#include <limits>

#include "arithdyn/pisot.hpp"
#include "arithdyn/resultant.hpp"

namespace arithdyn {

AffineSelfMap::AffineSelfMap(Curve curve, IntMatrix m, PointTuple t)
    : curve_(std::move(curve)), m_(std::move(m)), t_(std::move(t)) {
  if (m_.size() == 0) throw DomainError("DimensionMismatch", "self-map of E^0");
  if (static_cast<int>(t_.size()) != m_.size())
    throw DomainError("DimensionMismatch", "translation has " + std::to_string(t_.size()) + " components, matrix is " +
                                               std::to_string(m_.size()) + "x" + std::to_string(m_.size()));
  for (const auto& p : t_) curve_.require(p);
}

AffineSelfMap AffineSelfMap::endomorphism(Curve curve, IntMatrix m) {
  PointTuple t(static_cast<std::size_t>(m.size()));
  return {std::move(curve), std::move(m), std::move(t)};
}

AffineSelfMap AffineSelfMap::translation(Curve curve, CurvePoint t) {
  return {std::move(curve), IntMatrix::identity(1), PointTuple{std::move(t)}};
}

bool AffineSelfMap::has_translation() const {
  for (const auto& p : t_)
    if (!p.is_identity()) return true;
  return false;
}

AffineSelfMap AffineSelfMap::block(int first, int count) const {
  IntMatrix sub(count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) sub(i, j) = m_(first + i, first + j);
  PointTuple t(t_.begin() + first, t_.begin() + first + count);
  return {curve_, std::move(sub), std::move(t)};
}

namespace {

PointTuple apply_unchecked(const AffineSelfMap& f, const PointTuple& p) {
  const int n = f.dimension();
  const Curve& e = f.curve();
  PointTuple out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    CurvePoint acc = f.translation_part()[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const Integer& c = f.matrix()(i, j);
      if (c == 0) continue;
      acc = add_unchecked(e, acc, scalar_mul_unchecked(e, c, p[static_cast<std::size_t>(j)]));
    }
    out[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return out;
}

void check_tuple(const AffineSelfMap& f, const PointTuple& p) {
  if (static_cast<int>(p.size()) != f.dimension())
    throw DomainError("DimensionMismatch", "point has " + std::to_string(p.size()) + " components, map acts on E^" +
                                               std::to_string(f.dimension()));
  for (const auto& q : p) f.curve().require(q);
}

bool within_guard(const PointTuple& p) {
  for (const auto& q : p) {
    if (q.is_identity()) continue;
    for (const Integer* z : {&q.x.get_num(), &q.x.get_den(), &q.y.get_num(), &q.y.get_den()})
      if (bit_length(*z) > kOrbitBitGuard) return false;
  }
  return true;
}

long double to_long_double(const Integer& z) {
  const std::size_t bits = bit_length(z);
  Integer top = abs(z);
  mp_bitcnt_t shift = 0;
  if (bits > 64) {
    shift = static_cast<mp_bitcnt_t>(bits - 64);
    mpz_tdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), shift);
  }
  const long double v = std::ldexp(static_cast<long double>(mpz_get_ui(top.get_mpz_t())), static_cast<int>(shift));
  return z < 0 ? -v : v;
}

}  // namespace

PointTuple apply(const AffineSelfMap& f, const PointTuple& p) {
  check_tuple(f, p);
  return apply_unchecked(f, p);
}

std::vector<PointTuple> orbit(const AffineSelfMap& f, const PointTuple& p, int steps) {
  if (steps < 0) throw DomainError("BadPrecision", "orbit length must be nonnegative");
  check_tuple(f, p);
  std::vector<PointTuple> out{p};
  for (int k = 1; k <= steps; ++k) {
    PointTuple next = apply_unchecked(f, out.back());
    if (!within_guard(next))
      throw DomainError("SizeGuardExceeded", "orbit coordinates pass " + std::to_string(kOrbitBitGuard) +
                                                 " bits at step " + std::to_string(k) + "; last safe index " +
                                                 std::to_string(k - 1));
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<CoefficientStep> coefficient_trajectory(const AffineSelfMap& f, int steps) {
  if (steps < 0) throw DomainError("BadPrecision", "trajectory length must be nonnegative");
  const int n = f.dimension();
  const IntMatrix id = IntMatrix::identity(n);
  std::vector<CoefficientStep> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back({id, IntMatrix(n)});
  for (int k = 0; k < steps; ++k) {
    const CoefficientStep& c = out.back();
    out.push_back({f.matrix() * c.power, f.matrix() * c.sum + id});
  }
  return out;
}

GramMatrix basis_gram(const AffineSelfMap& f, const PointTuple& p, double tol) {
  check_tuple(f, p);
  PointTuple basis = p;
  basis.insert(basis.end(), f.translation_part().begin(), f.translation_part().end());
  return gram_matrix(f.curve(), basis, tol);
}

HeightSequence height_sequence_gram(const AffineSelfMap& f, const GramMatrix& g, int steps) {
  const int n = f.dimension();
  if (g.n != static_cast<std::size_t>(2 * n))
    throw DomainError("DimensionMismatch", "Gram matrix is " + std::to_string(g.n) + "x" + std::to_string(g.n) +
                                               ", expected " + std::to_string(2 * n));
  const std::size_t w = g.n;
  // accumulated rounding in a length-w^2 long double dot product, generously
  const long double gamma = static_cast<long double>(4 * w * w + 4) * std::numeric_limits<long double>::epsilon();
  HeightSequence out;
  std::vector<long double> row(w);
  for (const auto& c : coefficient_trajectory(f, steps)) {
    long double h = 0, err = 0, mag = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        row[static_cast<std::size_t>(j)] = to_long_double(c.power(i, j));
        row[static_cast<std::size_t>(n + j)] = to_long_double(c.sum(i, j));
      }
      for (std::size_t a = 0; a < w; ++a) {
        if (row[a] == 0) continue;
        for (std::size_t b = 0; b < w; ++b) {
          const long double ab = row[a] * row[b];
          h += ab * g(a, b);
          err += std::fabs(ab) * g.error(a, b);
          mag += std::fabs(ab * g(a, b));
        }
      }
    }
    out.h.push_back(static_cast<double>(h));
    out.err.push_back(static_cast<double>(err + gamma * mag));
  }
  return out;
}

HeightSequence height_sequence_naive(const AffineSelfMap& f, const PointTuple& p, int steps) {
  HeightSequence out;
  for (const auto& q : orbit(f, p, steps)) {
    double h = 0;
    for (const auto& c : q) h += naive_height(c);
    out.h.push_back(h);
    out.err.push_back(0.0);
  }
  return out;
}

AffineSelfMap product(const AffineSelfMap& a, const AffineSelfMap& b) {
  if (!(a.curve() == b.curve()))
    throw DomainError("CurveMismatch", "product of maps on " + a.curve().to_string() + " and " + b.curve().to_string());
  PointTuple t = a.translation_part();
  t.insert(t.end(), b.translation_part().begin(), b.translation_part().end());
  return {a.curve(), block_diagonal(a.matrix(), b.matrix()), std::move(t)};
}

AlgebraicDegree dynamical_degree(const AffineSelfMap& f, const Rational& precision) {
  if (f.matrix().is_zero()) {
    AlgebraicDegree d;
    d.defining_poly = IntPolynomial{0, 1};
    d.root = {Rational(0), Rational(0), 1};
    d.root_is_real = true;
    d.power = 2;
    d.value = {Rational(0), Rational(0)};
    return d;
  }
  return squared_spectral_radius(f.matrix(), precision);
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::NonTorsionTranslation: return "NonTorsionTranslation";
    case CertificateKind::EigenvalueCriterion: return "EigenvalueCriterion";
    case CertificateKind::XieSurface: return "XieSurface";
    case CertificateKind::CoprimeProduct: return "CoprimeProduct";
    case CertificateKind::None: return "None";
  }
  return "None";
}

namespace {

const Rational kCertificatePrecision(1, 1000000);

std::optional<DensityCertificate> translation_certificate(const AffineSelfMap& f) {
  if (f.dimension() != 1 || !f.matrix().is_identity()) return std::nullopt;
  DensityCertificate c;
  const CurvePoint& t = f.translation_part().front();
  c.torsion = is_torsion(f.curve(), t);
  if (*c.torsion) {
    c.note = t.is_identity() ? "identity map" : "translation by a torsion point has finite orbits";
    return c;
  }
  c.kind = CertificateKind::NonTorsionTranslation;
  c.note = "translation by a point of infinite order";
  return c;
}

std::optional<DensityCertificate> eigenvalue_certificate(const AffineSelfMap& f) {
  if (f.has_translation() || f.matrix().determinant() != 1) return std::nullopt;
  const auto test = dense_orbit_test(char_poly(f.matrix()));
  if (!test.certified) return std::nullopt;
  DensityCertificate c;
  c.kind = CertificateKind::EigenvalueCriterion;
  c.resultant = test.resultant;
  c.note = "no two eigenvalues satisfy x_i conj(x_j) = 1";
  return c;
}

std::optional<DensityCertificate> xie_certificate(const AffineSelfMap& f) {
  if (f.dimension() != 2 || f.has_translation() || !f.is_automorphism()) return std::nullopt;
  AlgebraicDegree delta = dynamical_degree(f, kCertificatePrecision);
  if (!delta.exceeds_one()) return std::nullopt;
  DensityCertificate c;
  c.kind = CertificateKind::XieSurface;
  c.delta = std::move(delta);
  c.note = "surface automorphism with dynamical degree > 1";
  return c;
}

// A factor of a coprime product: a Pisot companion block with its own
// certificate, or a non-torsion translation of E.
std::optional<DensityCertificate> factor_certificate(const AffineSelfMap& f) {
  if (auto t = translation_certificate(f)) {
    if (t->kind == CertificateKind::NonTorsionTranslation) return t;
    return std::nullopt;
  }
  if (f.has_translation()) return std::nullopt;
  try {
    if (is_pisot_unit(char_poly(f.matrix())) != PisotClass::PisotUnit) return std::nullopt;
  } catch (const DomainError&) {
    return std::nullopt;
  }
  if (auto c = eigenvalue_certificate(f)) return c;
  return xie_certificate(f);
}

bool splits_at(const IntMatrix& m, int s) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i < s) != (j < s) && m(i, j) != 0) return false;
  return true;
}

std::optional<DensityCertificate> coprime_certificate(const AffineSelfMap& f) {
  const int n = f.dimension();
  for (int s = 1; s < n; ++s) {
    if (!splits_at(f.matrix(), s)) continue;
    const AffineSelfMap left = f.block(0, s);
    const AffineSelfMap right = f.block(s, n - s);
    auto lc = factor_certificate(left);
    if (!lc) continue;
    auto rc = factor_certificate(right);
    if (!rc) continue;
    const Integer res = resultant(char_poly(left.matrix()), char_poly(right.matrix()));
    if (res == 0) continue;
    DensityCertificate c;
    c.kind = CertificateKind::CoprimeProduct;
    c.resultant = res;
    c.split = s;
    c.factors = {std::move(*lc), std::move(*rc)};
    c.note = "coprime characteristic polynomials of certified factors";
    return c;
  }
  return std::nullopt;
}

}  // namespace

DensityCertificate density_certificate(const AffineSelfMap& f) {
  if (auto c = translation_certificate(f)) return *c;
  if (auto c = eigenvalue_certificate(f)) return *c;
  if (auto c = xie_certificate(f)) return *c;
  if (auto c = coprime_certificate(f)) return *c;
  DensityCertificate none;
  if (f.dimension() >= 2 && f.matrix().is_identity())
    none.note = "translations of E^n with n >= 2 are not certified";
  else
    none.note = "no criterion applies";
  return none;
}

}  // namespace arithdyn
