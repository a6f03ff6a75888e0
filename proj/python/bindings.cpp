#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arithdyn/cli.hpp"
#include "arithdyn/degrees.hpp"
#include "arithdyn/gallery.hpp"
#include "arithdyn/matrix.hpp"
#include "arithdyn/pisot.hpp"
#include "arithdyn/resultant.hpp"
#include "arithdyn/serialize.hpp"

namespace py = pybind11;
using namespace arithdyn;

namespace {

// Python ints cross the boundary as decimal strings so size is unbounded.
IntPolynomial poly_from(const std::vector<py::int_>& coeffs) {
  std::vector<Integer> v;
  for (const auto& c : coeffs) v.emplace_back(py::str(static_cast<py::handle>(c)).cast<std::string>());
  return IntPolynomial(std::move(v));
}

IntMatrix matrix_from(const std::vector<std::vector<py::int_>>& rows) {
  std::vector<std::vector<Integer>> m;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (const auto& c : row) r.emplace_back(py::str(static_cast<py::handle>(c)).cast<std::string>());
    m.push_back(std::move(r));
  }
  return IntMatrix::from_rows(m);
}

Curve curve_from(const std::string& a, const std::string& b) { return Curve(parse_rational(a), parse_rational(b)); }

CurvePoint point_from(const std::string& x, const std::string& y) { return CurvePoint(parse_rational(x), parse_rational(y)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact dynamical degrees, density certificates and canonical heights on products of elliptic curves";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      domain_error(Json{{"error", e.kind()}, {"message", e.what()}}.dump().c_str());
    }
  });

  m.def("char_poly", [](const std::vector<std::vector<py::int_>>& rows) { return to_json(char_poly(matrix_from(rows))).dump(); });
  m.def("companion", [](const std::vector<py::int_>& p) { return to_json(companion(poly_from(p))).dump(); });
  m.def("resultant", [](const std::vector<py::int_>& p, const std::vector<py::int_>& q) {
    return resultant(poly_from(p), poly_from(q)).get_str();
  });
  m.def("dense_orbit_test", [](const std::vector<py::int_>& p) { return to_json(dense_orbit_test(poly_from(p))).dump(); });
  m.def("coprime_test", [](const std::vector<py::int_>& p, const std::vector<py::int_>& q) {
    return coprime_test(poly_from(p), poly_from(q));
  });
  m.def("is_pisot_unit", [](const std::vector<py::int_>& p) { return to_string(is_pisot_unit(poly_from(p))); });
  m.def("pisot_unit_search", [](int degree, int bound) {
    Json a = Json::array();
    for (const auto& p : pisot_unit_search(degree, bound)) a.push_back(to_json(p));
    return a.dump();
  });
  m.def("dynamical_degree", [](const std::vector<std::vector<py::int_>>& rows, const std::string& precision) {
    return to_json(squared_spectral_radius(matrix_from(rows), parse_rational(precision))).dump();
  }, py::arg("matrix"), py::arg("precision") = "1e-12");
  m.def("canonical_height", [](const std::string& a, const std::string& b, const std::string& x, const std::string& y,
                               double tol) {
    return to_json(canonical_height(curve_from(a, b), point_from(x, y), tol)).dump();
  }, py::arg("A"), py::arg("B"), py::arg("x"), py::arg("y"), py::arg("tol") = 1e-6);
  m.def("is_torsion", [](const std::string& a, const std::string& b, const std::string& x, const std::string& y) {
    return is_torsion(curve_from(a, b), point_from(x, y));
  });
  m.def("arithmetic_degree_estimate", [](const std::vector<double>& heights, std::optional<int> window) {
    return to_json(arithmetic_degree_estimate(heights, window)).dump();
  }, py::arg("heights"), py::arg("window") = py::none());
  m.def("ksc", [](const std::string& example, int steps, double tol, bool force) {
    const NamedExample ex = named_example(example);
    return to_json(ksc_check(ex.map, basis_gram(ex.map, ex.point, 1e-6), steps, tol, force)).dump();
  }, py::arg("example"), py::arg("steps") = 60, py::arg("tol") = 1e-2, py::arg("force") = false);
  m.def("gallery", [](int d, bool extras) {
    Json a = Json::array();
    for (const auto& r : build_gallery(d, extras)) a.push_back(to_json(r));
    return a.dump();
  }, py::arg("dim"), py::arg("extras") = false);
  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
