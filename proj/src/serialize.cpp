#include "arithdyn/serialize.hpp"

#include <cmath>
#include <sstream>

namespace arithdyn {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

Json real_json(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? Json("nan") : Json(x > 0 ? "inf" : "-inf");
  return round_sig(x);
}

Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const Integer& c : p.coefficients()) a.push_back(integer_json(c));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.rows()) {
    Json r = Json::array();
    for (const Integer& c : row) r.push_back(integer_json(c));
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const Enclosure& e) { return {{"lo", lower_decimal(e.lo)}, {"hi", upper_decimal(e.hi)}}; }

Json to_json(const RootInterval& r) {
  return {{"lo", lower_decimal(r.lo)}, {"hi", upper_decimal(r.hi)}, {"multiplicity", r.multiplicity}};
}

Json to_json(const AlgebraicDegree& d) {
  Json j = to_json(d.value);
  j["defining_poly"] = to_json(d.defining_poly);
  j["root_is_real"] = d.root_is_real;
  j["power"] = d.power;
  j["exact"] = d.exact();
  return j;
}

Json to_json(const CurvePoint& p) {
  if (p.is_identity()) return "identity";
  return {{"x", p.x.get_str()}, {"y", p.y.get_str()}};
}

Json to_json(const Curve& e) { return {{"A", e.A().get_str()}, {"B", e.B().get_str()}}; }

Json to_json(const HeightValue& h) { return {{"value", real_json(h.value)}, {"err", real_json(h.err)}}; }

Json to_json(const GramMatrix& g) {
  Json value = Json::array(), err = Json::array();
  for (std::size_t i = 0; i < g.n; ++i) {
    Json v = Json::array(), e = Json::array();
    for (std::size_t j = 0; j < g.n; ++j) {
      v.push_back(real_json(g(i, j)));
      e.push_back(real_json(g.error(i, j)));
    }
    value.push_back(v);
    err.push_back(e);
  }
  return {{"value", value}, {"err", err}};
}

Json to_json(const DenseOrbitResult& r) {
  return {{"result", r.certified ? "certified" : "fails"}, {"resultant", r.resultant.get_str()}};
}

Json to_json(const DensityCertificate& c) {
  Json j{{"kind", to_string(c.kind)}};
  if (!c.note.empty()) j["note"] = c.note;
  if (c.resultant) j["resultant"] = c.resultant->get_str();
  if (c.delta) j["delta"] = to_json(*c.delta);
  if (c.torsion) j["torsion"] = *c.torsion;
  if (c.kind == CertificateKind::CoprimeProduct) {
    j["split"] = c.split;
    Json f = Json::array();
    for (const auto& sub : c.factors) f.push_back(to_json(sub));
    j["factors"] = f;
  }
  return j;
}

Json to_json(const DegreeEstimate& e) {
  Json per = Json::array();
  for (double v : e.per_step) per.push_back(real_json(v));
  return {{"slope", real_json(e.slope)},
          {"upper", real_json(e.upper)},
          {"lower", real_json(e.lower)},
          {"window", e.window},
          {"converged", e.converged},
          {"per_step_last", e.per_step.empty() ? Json(nullptr) : real_json(e.per_step.back())}};
}

Json to_json(const KscReport& r) {
  Json j{{"delta", to_json(r.delta)}, {"estimate", to_json(r.estimate)}, {"inequality", r.inequality}};
  j["identity"] = r.identity ? Json(*r.identity) : Json("skipped");
  j["certificate"] = to_string(r.certificate.kind);
  return j;
}

std::string height_csv(const HeightSequence& s) {
  std::ostringstream out;
  out.precision(12);
  out << "k,h,err\n";
  for (std::size_t k = 0; k < s.h.size(); ++k) out << k << ',' << s.h[k] << ',' << s.err[k] << '\n';
  return out.str();
}

}  // namespace arithdyn
