#pragma once

#include <json.hpp>

#include "arithdyn/abvar.hpp"
#include "arithdyn/degrees.hpp"
#include "arithdyn/elliptic.hpp"
#include "arithdyn/pisot.hpp"
#include "arithdyn/resultant.hpp"
#include "arithdyn/spectral.hpp"

namespace arithdyn {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& z);

// Doubles rounded to 12 significant digits.
Json real_json(double x);

Json to_json(const IntPolynomial& p);
Json to_json(const IntMatrix& m);
Json to_json(const Enclosure& e);          // {"lo", "hi"}, outward 12-digit decimals
Json to_json(const RootInterval& r);
Json to_json(const AlgebraicDegree& d);
Json to_json(const CurvePoint& p);         // {"x": "p/q", "y": ...} or "identity"
Json to_json(const Curve& e);
Json to_json(const HeightValue& h);
Json to_json(const GramMatrix& g);
Json to_json(const DenseOrbitResult& r);
Json to_json(const DensityCertificate& c);
Json to_json(const DegreeEstimate& e);
Json to_json(const KscReport& r);

// "k,h,err" rows for k = 0..N.
std::string height_csv(const HeightSequence& s);

}  // namespace arithdyn
