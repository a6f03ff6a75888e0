#include "arithdyn/gallery.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "arithdyn/matrix.hpp"
#include "arithdyn/pisot.hpp"
#include "arithdyn/resultant.hpp"

namespace arithdyn {

namespace {

const Rational kDeltaPrecision(1, 1000000000000L);

const char* kPisotPower = "pisot-on-power: delta(f_m) = a_m^2 > 1";
const char* kEigenDense = "dense orbit of f_m from the eigenvalue criterion";
const char* kBlowupQuotient = "Y_m: blow-up of E^m at E^m[2] modulo -Id, (kappa, q) = (0, 0)";
const char* kBirational = "birational invariance of the first dynamical degree";
const char* kProductMax = "delta of a product is the max of the factors";
const char* kDistinctPisot = "distinct Pisot minimal polynomials give dense orbits on E^m x E^n";
const char* kTauCross = "tau(t) = t + 1 on P^1: dense orbits persist and delta(tau x rho) = delta(rho)";
const char* kWQuotient = "W: resolution of E^2 / <(tau, tau)> on y^2 = x^3 - 1, a rational surface";
const char* kRuled = "ruled surface over an elliptic curve: delta = 1 for every birational map";
const char* kTranslation = "translation by a non-torsion point has dense orbits and delta = 1";
const char* kCyclicExtras = "quotients of E^3 by <tau^2> and <tau> on y^2 = x^3 - 1";
const char* kDescends = "descends from covering example";

Curve main_curve() { return Curve(Rational(0), Rational(-2)); }
Curve hexagonal_curve() { return Curve(Rational(0), Rational(-1)); }

std::string power(const std::string& base, int k) { return base + "^" + std::to_string(k); }

class Builder {
 public:
  Builder(int d, const PisotPool& pool) : d_(d) {
    for (const IntPolynomial& p : pool) {
      if (!usable_in_pool(p)) continue;
      auto& list = by_degree_[p.degree()];
      if (list.size() < 2 && std::find(list.begin(), list.end(), p) == list.end()) list.push_back(p);
    }
    for (int m = 2; m <= d; ++m) {
      const auto it = by_degree_.find(m);
      const std::size_t have = it == by_degree_.end() ? 0 : it->second.size();
      if (have < 2)
        throw DomainError("InsufficientPisotPool", "need two SL Pisot units of degree " + std::to_string(m) +
                                                       " for dimension " + std::to_string(d) + ", pool has " +
                                                       std::to_string(have));
      if (!coprime_test(it->second[0], it->second[1]))
        throw DomainError("InsufficientPisotPool", "the two degree-" + std::to_string(m) + " pool entries share a root");
    }
  }

  GalleryFactor f(int m) const { return {"f_" + std::to_string(m), m, by_degree_.at(m)[0]}; }
  GalleryFactor g(int m) const { return {"g_" + std::to_string(m), m, by_degree_.at(m)[0]}; }

  GalleryFactor h(int n) const {
    if (n == 1) return {"h_1", 1, std::nullopt};
    return {"h_" + std::to_string(n), n, by_degree_.at(n)[1]};
  }

  AlgebraicDegree delta(const GalleryFactor& x) {
    if (!x.poly) return exactly_one();
    const std::string key = x.poly->to_csv();
    auto it = deltas_.find(key);
    if (it == deltas_.end())
      it = deltas_.emplace(key, squared_spectral_radius(companion(*x.poly), kDeltaPrecision)).first;
    return it->second;
  }

  DensityCertificate certificate(const GalleryFactor& x) const {
    if (!x.poly) return density_certificate(AffineSelfMap::translation(main_curve(), CurvePoint(3, 5)));
    return density_certificate(AffineSelfMap::endomorphism(main_curve(), companion(*x.poly)));
  }

  ExampleRecord record(Kappa kappa, int q, Recipe recipe) const {
    ExampleRecord r;
    r.dim = d_;
    r.kappa = kappa;
    r.q = q;
    r.recipe = recipe;
    return r;
  }

  // Quotient-type record over g_m (x h_n), optionally crossed with P^1.
  ExampleRecord quotient_product(Kappa kappa, int q, Recipe recipe, int m, int n, bool with_p1) {
    ExampleRecord r = record(kappa, q, recipe);
    r.m = m;
    r.n = n;
    const GalleryFactor gm = g(m);
    r.variety = "Y_" + std::to_string(m);
    r.map = gm.name;
    r.factors = {gm};
    r.delta = delta(gm);
    r.citations = {kBlowupQuotient, kBirational};
    if (n > 0) {
      const GalleryFactor hn = h(n);
      r.variety += " x " + power("E", n);
      r.map += " x " + hn.name;
      r.factors.push_back(hn);
      r.delta = max_degree(r.delta, delta(hn));
      if (hn.poly) r.coprime = coprime_test(*gm.poly, *hn.poly);
      r.citations.push_back(kProductMax);
      r.citations.push_back(kDistinctPisot);
    }
    if (with_p1) {
      r.variety = "P^1 x " + r.variety;
      r.map = "tau x " + r.map;
      r.factors.insert(r.factors.begin(), GalleryFactor{"tau", 1, std::nullopt});
      r.citations.push_back(kTauCross);
    }
    r.density = kDescends;
    return r;
  }

  ExampleRecord w_record() {
    const int n = d_ - 2;
    ExampleRecord r = record(Kappa::NegInfinity, n, Recipe::WCross);
    r.m = 2;
    r.n = n;
    r.curve = hexagonal_curve();
    const GalleryFactor f2 = f(2);
    r.variety = "W";
    r.map = "f_W";
    r.factors = {GalleryFactor{"f_W", 2, f2.poly}};
    r.delta = delta(f2);
    r.citations = {kWQuotient, kBirational};
    if (n > 0) {
      const GalleryFactor hn = h(n);
      r.variety += " x " + power("E", n);
      r.map += " x " + hn.name;
      r.factors.push_back(hn);
      r.delta = max_degree(r.delta, delta(hn));
      if (hn.poly) r.coprime = coprime_test(*f2.poly, *hn.poly);
      r.citations.push_back(kProductMax);
    }
    r.density = kDescends;
    return r;
  }

  ExampleRecord p1_over_abelian() {
    const int n = d_ - 1;
    const GalleryFactor hn = h(n);
    ExampleRecord r = record(Kappa::NegInfinity, n, d_ == 2 ? Recipe::RuledExceptional : Recipe::P1Cross);
    r.n = n;
    r.variety = "P^1 x " + power("E", n);
    r.map = "tau x " + hn.name;
    r.factors = {GalleryFactor{"tau", 1, std::nullopt}, hn};
    r.delta = max_degree(exactly_one(), delta(hn));
    r.certificate = certificate(hn);
    r.density = to_string(r.certificate->kind);
    r.computable = true;
    if (d_ == 2) {
      r.delta = exactly_one();
      r.delta_forced_one = true;
      r.citations = {kRuled, kTranslation, kTauCross};
    } else {
      r.citations = {kTauCross, kEigenDense};
    }
    return r;
  }

  std::vector<ExampleRecord> build(bool extras) {
    std::vector<ExampleRecord> out;

    ExampleRecord top = record(Kappa::Zero, d_, Recipe::PisotOnPower);
    const GalleryFactor fd = f(d_);
    top.m = d_;
    top.variety = power("E", d_);
    top.map = fd.name;
    top.factors = {fd};
    top.delta = delta(fd);
    top.certificate = certificate(fd);
    top.density = to_string(top.certificate->kind);
    top.computable = true;
    top.citations = {kPisotPower, kEigenDense};
    out.push_back(top);

    out.push_back(quotient_product(Kappa::Zero, 0, Recipe::QuotientY, d_, 0, false));
    for (int n = 1; n <= d_ - 2; ++n) out.push_back(quotient_product(Kappa::Zero, n, Recipe::ProductZ, d_ - n, n, false));

    out.push_back(p1_over_abelian());
    if (d_ == 2) {
      out.push_back(w_record());
    } else {
      out.push_back(quotient_product(Kappa::NegInfinity, 0, Recipe::P1Cross, d_ - 1, 0, true));
      for (int q = 1; q <= d_ - 3; ++q)
        out.push_back(quotient_product(Kappa::NegInfinity, q, Recipe::P1Cross, d_ - 1 - q, q, true));
      out.push_back(w_record());
    }

    if (extras && d_ == 3) {
      for (const auto& [kappa, name, order] :
           {std::tuple{Kappa::Zero, "Y_3", "<tau^2>"}, std::tuple{Kappa::NegInfinity, "Z_3", "<tau>"}}) {
        ExampleRecord r = record(kappa, 0, Recipe::CyclicQuotient);
        r.m = 3;
        r.curve = hexagonal_curve();
        r.variety = std::string(name) + " (E^3 / " + order + ")";
        r.map = "f_" + std::string(name);
        r.factors = {f(3)};
        r.delta = delta(f(3));
        r.density = kDescends;
        r.extra = true;
        r.citations = {kCyclicExtras, kBirational};
        out.push_back(r);
      }
    }
    return out;
  }

 private:
  int d_;
  std::map<int, std::vector<IntPolynomial>> by_degree_;
  std::map<std::string, AlgebraicDegree> deltas_;
};

std::string delta_text(const ExampleRecord& r) {
  if (r.delta_forced_one) return "1 (forced)";
  return to_decimal((r.delta.value.lo + r.delta.value.hi) / 2, 12, Rounding::Nearest) + " in [" +
         lower_decimal(r.delta.value.lo) + ", " + upper_decimal(r.delta.value.hi) + "]";
}

}  // namespace

std::string to_string(Recipe r) {
  switch (r) {
    case Recipe::PisotOnPower: return "PisotOnPower";
    case Recipe::QuotientY: return "QuotientY";
    case Recipe::ProductZ: return "ProductZ";
    case Recipe::P1Cross: return "P1Cross";
    case Recipe::WCross: return "WCross";
    case Recipe::RuledExceptional: return "RuledExceptional";
    case Recipe::CyclicQuotient: return "CyclicQuotient";
  }
  return "?";
}

std::string to_string(Kappa k) { return k == Kappa::Zero ? "0" : "-inf"; }

bool usable_in_pool(const IntPolynomial& p) {
  if (!p.is_monic() || p.degree() < 2) return false;
  const Integer sign = p.degree() % 2 == 0 ? 1 : -1;
  if (sign * p.constant_term() != 1) return false;
  return is_pisot_unit(p) == PisotClass::PisotUnit;
}

PisotPool default_pisot_pool(int max_degree) {
  PisotPool pool;
  for (int m = 2; m <= max_degree; ++m) {
    for (int bound = 1;; ++bound) {
      std::vector<IntPolynomial> found;
      for (const IntPolynomial& p : pisot_unit_search(m, bound))
        if (usable_in_pool(p) && found.size() < 2) found.push_back(p);
      if (found.size() == 2) {
        pool.insert(pool.end(), found.begin(), found.end());
        break;
      }
    }
  }
  return pool;
}

std::vector<ExampleRecord> build_gallery(int d, const PisotPool& pool, bool extras) {
  if (d < 2) throw DomainError("DimensionMismatch", "gallery dimension must be at least 2");
  return Builder(d, pool).build(extras);
}

std::vector<ExampleRecord> build_gallery(int d, bool extras) {
  if (d < 2) throw DomainError("DimensionMismatch", "gallery dimension must be at least 2");
  return build_gallery(d, default_pisot_pool(d), extras);
}

Json to_json(const ExampleRecord& r) {
  Json factors = Json::array();
  for (const GalleryFactor& x : r.factors) {
    Json j{{"name", x.name}, {"degree", x.degree}};
    j["poly"] = x.poly ? to_json(*x.poly) : Json(nullptr);
    factors.push_back(j);
  }
  Json j{{"dim", r.dim},
         {"kappa", to_string(r.kappa)},
         {"q", r.q},
         {"recipe", to_string(r.recipe)},
         {"m", r.m},
         {"n", r.n},
         {"variety", r.variety},
         {"map", r.map},
         {"factors", factors},
         {"curve", to_json(r.curve)},
         {"delta", to_json(r.delta)},
         {"delta_forced_one", r.delta_forced_one},
         {"density", r.density}};
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  j["coprime"] = r.coprime ? Json(*r.coprime) : Json(nullptr);
  j["computable"] = r.computable;
  j["extra"] = r.extra;
  j["citations"] = r.citations;
  return j;
}

std::string describe(const ExampleRecord& r, DescribeFormat format) {
  if (format == DescribeFormat::Json) return to_json(r).dump();
  std::ostringstream out;
  out << "dim = " << r.dim << ", kappa = " << to_string(r.kappa) << ", q = " << r.q << ": " << to_string(r.recipe)
      << '\n';
  out << "variety = " << r.variety << ", map = " << r.map << '\n';
  for (const GalleryFactor& x : r.factors)
    if (x.poly) out << x.name << " = " << x.poly->to_string() << '\n';
  out << "curve = " << r.curve.to_string() << '\n';
  out << "delta = " << delta_text(r) << '\n';
  out << "density = " << r.density << '\n';
  if (r.coprime) out << "coprime = " << (*r.coprime ? "true" : "false") << '\n';
  out << "computable = " << (r.computable ? "true" : "false") << '\n';
  for (const std::string& c : r.citations) out << "cite: " << c << '\n';
  return out.str();
}

std::string gallery_csv(const std::vector<ExampleRecord>& records) {
  std::ostringstream out;
  out << "dim,kappa,q,recipe,variety,map,delta_lo,delta_hi,density,computable\n";
  for (const ExampleRecord& r : records)
    out << r.dim << ',' << to_string(r.kappa) << ',' << r.q << ',' << to_string(r.recipe) << ",\"" << r.variety
        << "\",\"" << r.map << "\"," << lower_decimal(r.delta.value.lo) << ',' << upper_decimal(r.delta.value.hi)
        << ",\"" << r.density << "\"," << (r.computable ? "true" : "false") << '\n';
  return out.str();
}

std::string gallery_markdown(const std::vector<ExampleRecord>& records) {
  std::ostringstream out;
  out << "| κ | q | recipe | δ | certificate | computable |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const ExampleRecord& r : records)
    out << "| " << (r.kappa == Kappa::Zero ? "0" : "−∞") << " | " << r.q << " | " << to_string(r.recipe) << " ("
        << r.variety << ") | " << delta_text(r) << " | " << r.density << " | " << (r.computable ? "yes" : "no")
        << " |\n";
  return out.str();
}

}  // namespace arithdyn
