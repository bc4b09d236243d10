#include "pacs/meijer_g.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "pacs/gamma.hpp"
#include "pacs/quadrature.hpp"

namespace pacs {

void MeijerGSpec::validate() const {
  if (b.empty())
    throw std::invalid_argument("MeijerGSpec: b_params must be nonempty");
  if (q() < p())
    throw std::invalid_argument(
        "MeijerGSpec: needs q >= p for a decaying Mellin-Barnes integrand");
  if (!(arg_scale > 0.0))
    throw std::invalid_argument("MeijerGSpec: arg_scale must be positive");
}

namespace {

using cplx = std::complex<double>;

// Upper half of the integration path. Vertical line Re s = shift; for
// balanced specs (q == p) the decay comes from the x^{-s} factor alone,
// so past t0 the path bends into the left half-plane at 45 degrees,
// staying above every (real) pole of the numerator gammas.
struct Path {
  double shift;
  bool bent;
  double t0 = 2.0;

  cplx point(double u) const {
    if (!bent || u <= t0)
      return {shift, u};
    const double w = (u - t0) * std::numbers::sqrt2 / 2.0;
    return {shift - w, t0 + w};
  }
  cplx derivative(double u) const {
    if (!bent || u <= t0)
      return {0.0, 1.0};
    return {-std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};
  }
};

} // namespace

SeriesResult meijer_g_q0(const MeijerGSpec& spec, double x,
                         const ContourConfig& contour) {
  spec.validate();
  if (!(x > 0.0))
    throw std::domain_error("meijer_g_q0: argument must be positive");
  const double y = spec.arg_scale * x;
  const int p = spec.p(), q = spec.q();
  const bool balanced = (q == p);

  if (balanced && y >= 1.0) {
    // G^{q,0}_{q,q} vanishes outside (0,1): closing the contour to the
    // right encircles no poles.
    return {cplx(0.0, 0.0), 0.0, 0, true};
  }
  if (!balanced) {
    // G^{q,0} decays like exp(-(q-p) y^{1/(q-p)}) for large argument;
    // once that is far below the double range, skip the contour.
    const double decay =
        (q - p) * std::pow(y, 1.0 / static_cast<double>(q - p));
    if (decay > 1450.0)
      return {cplx(0.0, 0.0), 0.0, 0, true};
  }

  const double rightmost_pole =
      -*std::min_element(spec.b.begin(), spec.b.end());
  Path path;
  path.bent = balanced;
  if (std::isnan(contour.real_shift)) {
    path.shift = rightmost_pole + 0.75;
    if (q > p) // shift toward the saddle to limit tail cancellation
      path.shift = std::max(path.shift,
                            std::pow(y, 1.0 / static_cast<double>(q - p)));
  } else {
    if (contour.real_shift <= rightmost_pole)
      throw std::invalid_argument(
          "meijer_g_q0: real_shift must lie right of every Gamma(b_j+s) pole");
    path.shift = contour.real_shift;
  }

  const double log_y = std::log(y);
  int evals = 0;
  auto integrand = [&](double u) -> cplx {
    const cplx s = path.point(u);
    cplx acc(0.0, 0.0);
    for (double bj : spec.b)
      acc += log_gamma(bj + s);
    for (double aj : spec.a)
      acc -= log_gamma(aj + s);
    acc -= s * log_y;
    ++evals;
    if (acc.real() > 700.0)
      throw std::overflow_error("meijer_g_q0: integrand overflow");
    return std::exp(acc) * path.derivative(u);
  };

  // Adaptive integration of one block [ua, ub] of the path parameter.
  // The error target is relative to the larger of the caller's scale
  // (the running contour magnitude) and this block's own value, so the
  // very first block can bootstrap its own scale.
  auto integrate_block = [&](double ua, double ub,
                             double scale_floor) -> ComplexQuadResult {
    struct Seg {
      double a, b, error;
      cplx value;
      bool operator<(const Seg& o) const { return error < o.error; }
    };
    std::priority_queue<Seg> work;
    ComplexQuadResult first = gk15_complex(integrand, ua, ub);
    work.push({ua, ub, first.abs_error, first.value});
    cplx total = first.value;
    double total_err = first.abs_error;
    int splits = 0;
    double abs_target = 0.25 * contour.tol *
                        std::max({scale_floor, std::abs(total), 1e-300});
    while (total_err > abs_target && splits < contour.max_subdivisions) {
      Seg s = work.top();
      work.pop();
      const double m = 0.5 * (s.a + s.b);
      if (m <= s.a || m >= s.b) {
        work.push({s.a, s.b, 0.0, s.value});
        total_err -= s.error;
        continue;
      }
      ComplexQuadResult l = gk15_complex(integrand, s.a, m);
      ComplexQuadResult r = gk15_complex(integrand, m, s.b);
      total += l.value + r.value - s.value;
      total_err += l.abs_error + r.abs_error - s.error;
      work.push({s.a, m, l.abs_error, l.value});
      work.push({m, s.b, r.abs_error, r.value});
      ++splits;
      abs_target = 0.25 * contour.tol *
                   std::max({scale_floor, std::abs(total), 1e-300});
    }
    ComplexQuadResult out;
    out.value = total;
    out.abs_error = total_err;
    out.converged = total_err <= abs_target;
    return out;
  };

  cplx acc(0.0, 0.0);
  double err_acc = 0.0;
  double peak = 0.0;
  double lo = 0.0, hi = contour.im_cutoff;
  bool tail_done = false;
  double last_mag = std::numeric_limits<double>::max();
  for (int block = 0; block < contour.max_doublings; ++block) {
    ComplexQuadResult blk =
        integrate_block(lo, hi, std::max(peak, std::abs(acc)));
    acc += blk.value;
    err_acc += blk.abs_error;
    peak = std::max(peak, std::abs(blk.value));
    const double mag = std::abs(blk.value);
    if (block > 0 &&
        mag <= 0.1 * contour.tol * std::max(peak, std::abs(acc)) &&
        mag <= last_mag) {
      tail_done = true;
      break;
    }
    last_mag = mag;
    lo = hi;
    hi *= 2.0;
  }

  SeriesResult out;
  out.value = acc.imag() / std::numbers::pi;
  out.abs_error_estimate =
      (err_acc + 0.1 * contour.tol * peak) / std::numbers::pi;
  out.terms_used = evals;
  out.converged = tail_done;
  return out;
}

} // namespace pacs
