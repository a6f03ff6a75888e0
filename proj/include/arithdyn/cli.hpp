#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "arithdyn/abvar.hpp"

namespace arithdyn {

struct NamedExample {
  AffineSelfMap map;
  PointTuple point;
};

// plastic-e3, golden-e2, translate-e1, torsion-null.
NamedExample named_example(const std::string& name);
std::vector<std::string> named_example_names();

// Command-line entry point; args excludes the program name. Exit codes:
// 0 success, 1 usage error, 2 domain error (JSON object on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arithdyn
