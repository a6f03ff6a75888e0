#include "arithdyn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "arithdyn/degrees.hpp"
#include "arithdyn/gallery.hpp"
#include "arithdyn/matrix.hpp"
#include "arithdyn/pisot.hpp"
#include "arithdyn/real_roots.hpp"
#include "arithdyn/resultant.hpp"
#include "arithdyn/root_moduli.hpp"
#include "arithdyn/serialize.hpp"

namespace arithdyn {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

// "a,b;c,d"
IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  for (const std::string& row : split(text, ';')) {
    const IntPolynomial parsed = IntPolynomial::parse(row);
    std::vector<Integer> r(parsed.coefficients().begin(), parsed.coefficients().end());
    // parse() trims trailing zeros, so count the commas instead
    const std::size_t width = static_cast<std::size_t>(std::count(row.begin(), row.end(), ',')) + 1;
    r.resize(width, 0);
    rows.push_back(r);
  }
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw DomainError("DimensionMismatch", "matrix \"" + text + "\" is not square");
  return IntMatrix::from_rows(rows);
}

CurvePoint parse_point(const std::string& text) {
  const std::string s = strip(text);
  if (s == "identity" || s == "O") return CurvePoint::identity();
  const auto xy = split(s, ',');
  if (xy.size() != 2) throw DomainError("ParseError", "point \"" + text + "\" is not x,y");
  return CurvePoint(parse_rational(xy[0]), parse_rational(xy[1]));
}

PointTuple parse_points(const std::string& text) {
  PointTuple pts;
  for (const std::string& p : split(text, ';')) pts.push_back(parse_point(p));
  return pts;
}

Curve parse_curve(const std::string& text) {
  const auto ab = split(strip(text), ',');
  if (ab.size() != 2) throw DomainError("ParseError", "curve \"" + text + "\" is not A,B");
  return Curve(parse_rational(ab[0]), parse_rational(ab[1]));
}

Rational parse_precision(const std::string& text) {
  const Rational p = parse_rational(text);
  if (p <= 0) throw DomainError("BadPrecision", "precision must be positive, got " + text);
  return p;
}

IntPolynomial require_poly(const std::string& text, const char* flag) {
  if (text.empty()) throw CLI::ValidationError(std::string("--") + flag, "required for this operation");
  return IntPolynomial::parse(text);
}

Json roots_json(const std::vector<RootInterval>& roots) {
  Json a = Json::array();
  for (const auto& r : roots) a.push_back(to_json(r));
  return a;
}

struct MapOptions {
  std::string example;
  std::string curve = "0,-2";
  std::string matrix;
  std::string translation;
  std::string point;
};

void add_map_options(CLI::App* cmd, MapOptions& o) {
  cmd->add_option("--example", o.example, "Named example")->check(CLI::IsMember(named_example_names()));
  cmd->add_option("--curve", o.curve, "A,B for y^2 = x^3 + A x + B")->capture_default_str();
  cmd->add_option("--matrix", o.matrix, "Integer matrix, rows separated by ';'");
  cmd->add_option("--translation", o.translation, "Translation points x,y;x,y (default identity)");
  cmd->add_option("--point", o.point, "Starting points x,y;x,y (default identity)");
}

NamedExample resolve_map(const MapOptions& o) {
  if (!o.example.empty()) {
    NamedExample ex = named_example(o.example);
    if (!o.point.empty()) ex.point = parse_points(o.point);
    return ex;
  }
  if (o.matrix.empty()) throw CLI::ValidationError("--matrix", "give --example or --matrix");
  const Curve e = parse_curve(o.curve);
  const IntMatrix m = parse_matrix(o.matrix);
  const auto n = static_cast<std::size_t>(m.size());
  PointTuple t = o.translation.empty() ? PointTuple(n) : parse_points(o.translation);
  PointTuple p = o.point.empty() ? PointTuple(n) : parse_points(o.point);
  return {AffineSelfMap(e, m, t), p};
}

void write_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

NamedExample named_example(const std::string& name) {
  const Curve e(0, -2);
  const CurvePoint p(3, 5);
  if (name == "plastic-e3")
    return {AffineSelfMap::endomorphism(e, companion(IntPolynomial{-1, -1, 0, 1})),
            {p, scalar_mul(e, 2, p), scalar_mul(e, 3, p)}};
  if (name == "golden-e2")
    return {AffineSelfMap::endomorphism(e, companion(IntPolynomial{1, -3, 1})), {p, scalar_mul(e, 2, p)}};
  if (name == "translate-e1") return {AffineSelfMap::translation(e, p), {CurvePoint::identity()}};
  if (name == "torsion-null")
    return {AffineSelfMap::translation(Curve(0, -1), CurvePoint(1, 0)), {CurvePoint::identity()}};
  throw DomainError("ParseError", "unknown example " + name);
}

std::vector<std::string> named_example_names() { return {"plastic-e3", "golden-e2", "translate-e1", "torsion-null"}; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical tools for self-maps of products of elliptic curves", "arithdyn"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string precision_text = "1e-12";

  // poly
  auto* poly = app.add_subcommand("poly", "Integer polynomial and matrix operations");
  std::string poly_op, poly_text, poly2_text, matrix_text;
  int degree = 3, bound = 2;
  const std::vector<std::string> poly_ops{"charpoly", "companion", "resultant", "dense-orbit", "coprime",
                                          "roots",    "moduli",    "pisot",     "search",      "spectral-radius"};
  poly->add_option("op", poly_op, "Operation")->required()->check(CLI::IsMember(poly_ops));
  poly->add_option("--poly", poly_text, "Coefficients, constant term first: \"1,-3,1\"");
  poly->add_option("--poly2", poly2_text, "Second polynomial for resultant and coprime");
  poly->add_option("--matrix", matrix_text, "Integer matrix, rows separated by ';'");
  poly->add_option("--degree", degree, "Degree for search")->capture_default_str();
  poly->add_option("--bound", bound, "Coefficient bound for search")->capture_default_str();
  poly->add_option("--precision", precision_text, "Enclosure width")->capture_default_str();

  // curve
  auto* curve = app.add_subcommand("curve", "Group law and heights on y^2 = x^3 + A x + B");
  std::string curve_op, curve_text = "0,-2", point_text, point2_text, points_text;
  std::string k_text = "2";
  double height_tol = 1e-6;
  const std::vector<std::string> curve_ops{"check", "add", "mul", "naive-height", "height", "pairing", "torsion", "gram"};
  curve->add_option("op", curve_op, "Operation")->required()->check(CLI::IsMember(curve_ops));
  curve->add_option("--curve", curve_text, "A,B")->capture_default_str();
  curve->add_option("--point", point_text, "x,y");
  curve->add_option("--point2", point2_text, "x,y");
  curve->add_option("--points", points_text, "x,y;x,y for gram");
  curve->add_option("--k", k_text, "Multiplier for mul")->capture_default_str();
  curve->add_option("--tol", height_tol, "Canonical height tolerance")->capture_default_str();

  // map
  auto* map = app.add_subcommand("map", "Affine self-maps x -> M x + t of E^n");
  std::string map_op, format = "json", engine = "gram";
  int steps = 10;
  MapOptions map_opts;
  map->add_option("op", map_op, "Operation")
      ->required()
      ->check(CLI::IsMember({"orbit", "heights", "degree", "certificate"}));
  add_map_options(map, map_opts);
  map->add_option("--steps", steps, "Orbit length N")->capture_default_str();
  map->add_option("--engine", engine, "Height engine")->check(CLI::IsMember({"gram", "naive"}))->capture_default_str();
  map->add_option("--height-tol", height_tol, "Canonical height tolerance")->capture_default_str();
  map->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  map->add_option("--precision", precision_text, "Enclosure width for degree")->capture_default_str();

  // ksc
  auto* ksc = app.add_subcommand("ksc", "Compare height growth with the dynamical degree");
  MapOptions ksc_opts;
  int ksc_steps = 60;
  double tol = 1e-2;
  bool force = false;
  std::optional<int> window;
  std::string ksc_format = "json";
  add_map_options(ksc, ksc_opts);
  ksc->add_option("--steps", ksc_steps, "Orbit length N")->capture_default_str();
  ksc->add_option("--tol", tol, "Verdict tolerance")->capture_default_str();
  ksc->add_option("--height-tol", height_tol, "Canonical height tolerance")->capture_default_str();
  ksc->add_option("--window", window, "Trailing fit window (default max(5, N/4))");
  ksc->add_flag("--force", force, "Check the identity even without a density certificate");
  ksc->add_option("--format", ksc_format, "json report or csv height series")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // gallery
  auto* gallery = app.add_subcommand("gallery", "Examples for every admissible (kappa, q)");
  int dim = 3;
  bool extras = false;
  std::string gallery_format = "json";
  gallery->add_option("--dim", dim, "Dimension d >= 2")->capture_default_str();
  gallery->add_option("--format", gallery_format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md", "text"}))
      ->capture_default_str();
  gallery->add_flag("--extras", extras, "Add the two cyclic quotients of E^3 (d = 3)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    if (poly->parsed()) {
      if (poly_op == "charpoly") {
        if (matrix_text.empty()) throw CLI::ValidationError("--matrix", "required for charpoly");
        const IntPolynomial cp = char_poly(parse_matrix(matrix_text));
        write_json(out, {{"charpoly", to_json(cp)}, {"text", cp.to_string()}});
      } else if (poly_op == "companion") {
        write_json(out, {{"matrix", to_json(companion(require_poly(poly_text, "poly")))}});
      } else if (poly_op == "resultant") {
        const Integer r = resultant(require_poly(poly_text, "poly"), require_poly(poly2_text, "poly2"));
        write_json(out, {{"resultant", r.get_str()}});
      } else if (poly_op == "dense-orbit") {
        write_json(out, to_json(dense_orbit_test(require_poly(poly_text, "poly"))));
      } else if (poly_op == "coprime") {
        write_json(out, {{"coprime", coprime_test(require_poly(poly_text, "poly"), require_poly(poly2_text, "poly2"))}});
      } else if (poly_op == "roots") {
        write_json(out, {{"roots", roots_json(real_root_isolate(require_poly(poly_text, "poly"),
                                                                parse_precision(precision_text)))}});
      } else if (poly_op == "moduli") {
        write_json(out, {{"moduli", roots_json(root_moduli(require_poly(poly_text, "poly"),
                                                           parse_precision(precision_text)))}});
      } else if (poly_op == "pisot") {
        const IntPolynomial p = require_poly(poly_text, "poly");
        const PisotClass c = is_pisot_unit(p);
        Json j{{"class", to_string(c)}};
        if (c != PisotClass::NotPisot) j["dominant_root"] = to_json(dominant_real_root(p, parse_precision(precision_text)));
        write_json(out, j);
      } else if (poly_op == "search") {
        Json a = Json::array();
        for (const auto& p : pisot_unit_search(degree, bound)) a.push_back(to_json(p));
        write_json(out, {{"degree", degree}, {"bound", bound}, {"polynomials", a}});
      } else if (poly_op == "spectral-radius") {
        IntMatrix m;
        if (!matrix_text.empty())
          m = parse_matrix(matrix_text);
        else
          m = companion(require_poly(poly_text, "poly"));
        const Rational prec = parse_precision(precision_text);
        write_json(out, {{"spectral_radius", to_json(spectral_radius(m, prec))},
                         {"dynamical_degree", to_json(squared_spectral_radius(m, prec))}});
      }
    } else if (curve->parsed()) {
      const Curve e = parse_curve(curve_text);
      auto point = [&](const std::string& text, const char* flag) {
        if (text.empty()) throw CLI::ValidationError(std::string("--") + flag, "required for " + curve_op);
        return parse_point(text);
      };
      if (curve_op == "check") {
        const CurvePoint p = point(point_text, "point");
        write_json(out, {{"curve", to_json(e)}, {"discriminant", e.discriminant().get_str()}, {"on_curve", e.contains(p)}});
      } else if (curve_op == "add") {
        write_json(out, {{"sum", to_json(add(e, point(point_text, "point"), point(point2_text, "point2")))}});
      } else if (curve_op == "mul") {
        Integer k;
        try {
          k = Integer(strip(k_text));
        } catch (const std::invalid_argument&) {
          throw DomainError("ParseError", "bad multiplier " + k_text);
        }
        write_json(out, {{"k", k.get_str()}, {"result", to_json(scalar_mul(e, k, point(point_text, "point")))}});
      } else if (curve_op == "naive-height") {
        const CurvePoint p = point(point_text, "point");
        e.require(p);
        write_json(out, {{"height", real_json(naive_height(p))}});
      } else if (curve_op == "height") {
        write_json(out, to_json(canonical_height(e, point(point_text, "point"), height_tol)));
      } else if (curve_op == "pairing") {
        write_json(out, to_json(height_pairing(e, point(point_text, "point"), point(point2_text, "point2"), height_tol)));
      } else if (curve_op == "torsion") {
        write_json(out, {{"torsion", is_torsion(e, point(point_text, "point"))}});
      } else if (curve_op == "gram") {
        if (points_text.empty()) throw CLI::ValidationError("--points", "required for gram");
        write_json(out, to_json(gram_matrix(e, parse_points(points_text), height_tol)));
      }
    } else if (map->parsed()) {
      const NamedExample ex = resolve_map(map_opts);
      if (map_op == "orbit") {
        Json a = Json::array();
        for (const PointTuple& tuple : orbit(ex.map, ex.point, steps)) {
          Json t = Json::array();
          for (const CurvePoint& p : tuple) t.push_back(to_json(p));
          a.push_back(t);
        }
        write_json(out, {{"orbit", a}});
      } else if (map_op == "heights") {
        const HeightSequence s = engine == "gram"
                                     ? height_sequence_gram(ex.map, basis_gram(ex.map, ex.point, height_tol), steps)
                                     : height_sequence_naive(ex.map, ex.point, steps);
        if (format == "csv") {
          out << height_csv(s);
        } else {
          Json h = Json::array(), e = Json::array();
          for (std::size_t k = 0; k < s.h.size(); ++k) {
            h.push_back(real_json(s.h[k]));
            e.push_back(real_json(s.err[k]));
          }
          write_json(out, {{"engine", engine}, {"h", h}, {"err", e}});
        }
      } else if (map_op == "degree") {
        write_json(out, {{"delta", to_json(dynamical_degree(ex.map, parse_precision(precision_text)))}});
      } else if (map_op == "certificate") {
        write_json(out, to_json(density_certificate(ex.map)));
      }
    } else if (ksc->parsed()) {
      const NamedExample ex = resolve_map(ksc_opts);
      const KscReport report = ksc_check(ex.map, basis_gram(ex.map, ex.point, height_tol), ksc_steps, tol, force, window);
      if (ksc_format == "csv")
        out << height_csv(report.heights);
      else
        write_json(out, to_json(report));
    } else if (gallery->parsed()) {
      const auto records = build_gallery(dim, extras);
      if (gallery_format == "json") {
        Json a = Json::array();
        for (const auto& r : records) a.push_back(to_json(r));
        write_json(out, a);
      } else if (gallery_format == "csv") {
        out << gallery_csv(records);
      } else if (gallery_format == "md") {
        out << gallery_markdown(records);
      } else {
        for (const auto& r : records) out << describe(r, DescribeFormat::Text) << '\n';
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  } catch (const DomainError& e) {
    err << Json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << Json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace arithdyn
