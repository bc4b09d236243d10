#pragma once

#include <complex>

namespace pacs {

/// A truncated-series value with convergence metadata.
/// converged == true guarantees abs_error_estimate <= the tolerance the
/// caller asked for; terms_used never exceeds the configured budget.
struct SeriesResult {
  std::complex<double> value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  int terms_used = 0;
  bool converged = false;
};

struct TruncationPolicy {
  double tol = 1e-13; // relative to the accumulated sum (floored at 1)
  int max_terms = 200000;
};

} // namespace pacs
