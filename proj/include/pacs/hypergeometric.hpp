#pragma once

#include <complex>
#include <span>

#include "pacs/series.hpp"

namespace pacs {

/// Generalized hypergeometric series pFq(a; b; w) summed by its term
/// recurrence. Preconditions: no lower parameter is a nonpositive
/// integer; p <= q+1; for p == q+1 the argument must satisfy |w| < 1.
/// Violations throw std::invalid_argument / std::domain_error.
SeriesResult pfq(std::span<const double> a, std::span<const double> b,
                 std::complex<double> w, TruncationPolicy policy = {});

SeriesResult pfq(std::initializer_list<double> a,
                 std::initializer_list<double> b, std::complex<double> w,
                 TruncationPolicy policy = {});

/// Real-argument convenience; result of every in-range call is real.
double pfq_real(std::initializer_list<double> a,
                std::initializer_list<double> b, double x,
                TruncationPolicy policy = {});

} // namespace pacs
