#include "arithdyn/degrees.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace arithdyn {

int default_window(int steps) { return std::max(5, steps / 4); }

DegreeEstimate arithmetic_degree_estimate(const std::vector<double>& heights, std::optional<int> window) {
  if (heights.empty()) throw DomainError("EmptyInput", "no heights to estimate from");
  const int n = static_cast<int>(heights.size()) - 1;
  const int w = window.value_or(std::min(default_window(n), n));
  if (w < 3) throw DomainError("WindowTooSmall", "window needs at least 3 steps, got " + std::to_string(w));
  if (w > n)
    throw DomainError("WindowTooLarge", "window " + std::to_string(w) + " exceeds the " + std::to_string(n) + " available steps");

  std::vector<double> logh(heights.size());
  for (std::size_t k = 0; k < heights.size(); ++k) logh[k] = std::log(std::max(1.0, heights[k]));

  DegreeEstimate est;
  est.window = w;
  for (int k = 1; k <= n; ++k) est.per_step.push_back(std::exp(logh[static_cast<std::size_t>(k)] / k));

  // centred regressors keep the k and log k columns well conditioned
  const int first = n - w + 1;
  double kbar = 0, lbar = 0;
  for (int k = first; k <= n; ++k) {
    kbar += k;
    lbar += std::log(static_cast<double>(k));
  }
  kbar /= w;
  lbar /= w;
  Eigen::MatrixXd x(w, 3);
  Eigen::VectorXd y(w);
  for (int i = 0; i < w; ++i) {
    const int k = first + i;
    x(i, 0) = 1.0;
    x(i, 1) = k - kbar;
    x(i, 2) = std::log(static_cast<double>(k)) - lbar;
    y(i) = logh[static_cast<std::size_t>(k)];
  }
  const Eigen::Vector3d coef = x.colPivHouseholderQr().solve(y);
  est.slope = std::exp(coef(1));
  const double e = coef(2);

  est.upper = -HUGE_VAL;
  est.lower = HUGE_VAL;
  for (int k = std::max(first, 2); k <= n; ++k) {
    const double r = std::exp(logh[static_cast<std::size_t>(k)] - logh[static_cast<std::size_t>(k - 1)] +
                              e * std::log(static_cast<double>(k - 1) / k));
    est.upper = std::max(est.upper, r);
    est.lower = std::min(est.lower, r);
  }
  if (n >= 2)
    est.converged = std::fabs(est.per_step[static_cast<std::size_t>(n - 1)] - est.per_step[static_cast<std::size_t>(n - 2)]) <
                    kReportingTolerance;
  return est;
}

KscReport ksc_check(const AffineSelfMap& f, const GramMatrix& g, int steps, double tol, bool force,
                    std::optional<int> window) {
  KscReport report;
  report.delta = dynamical_degree(f, Rational(1, 1000000000000L));
  report.certificate = density_certificate(f);
  report.heights = height_sequence_gram(f, g, steps);
  report.estimate = arithmetic_degree_estimate(report.heights.h, window);
  const double lo = report.delta.value.lo.get_d();
  const double hi = report.delta.value.hi.get_d();
  report.inequality = report.estimate.upper <= hi + tol;
  if (force || report.certificate.kind != CertificateKind::None) {
    const double s = report.estimate.slope;
    report.identity = s >= lo - tol && s <= hi + tol;
  }
  return report;
}

}  // namespace arithdyn
