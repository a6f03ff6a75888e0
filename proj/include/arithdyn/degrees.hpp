#pragma once

#include <optional>
#include <vector>

#include "arithdyn/abvar.hpp"

namespace arithdyn {

struct DegreeEstimate {
  std::vector<double> per_step;  // h_k^(1/k) for k = 1..N
  double upper = 1;
  double lower = 1;
  double slope = 1;
  int window = 0;
  bool converged = false;
};

inline constexpr double kReportingTolerance = 1e-3;

int default_window(int steps);

// Growth rate of h_0..h_N. Over the last `window` steps, log h_k is fitted by
// a + k log r + e log k; slope = r. upper and lower bracket the step ratios
// h_k / h_{k-1} after removing the fitted polynomial factor. Heights below 1
// are raised to 1 first.
DegreeEstimate arithmetic_degree_estimate(const std::vector<double>& heights, std::optional<int> window = std::nullopt);

struct KscReport {
  AlgebraicDegree delta;
  DegreeEstimate estimate;
  HeightSequence heights;
  bool inequality = false;        // upper <= delta + tol
  std::optional<bool> identity;   // |slope - delta| <= tol; empty when skipped
  DensityCertificate certificate;
};

// The identity check runs only under a density certificate unless forced.
KscReport ksc_check(const AffineSelfMap& f, const GramMatrix& g, int steps, double tol, bool force = false,
                    std::optional<int> window = std::nullopt);

}  // namespace arithdyn
