#include "pacs/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace pacs {

namespace {

// QUADPACK dqk15 abscissae/weights on [-1,1]; xk[7] = 0.
constexpr double xk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// 7-point Gauss weights, attached to the odd-index Kronrod nodes plus
// the centre node.
constexpr double wg[4] = {0.129484966168870, 0.279705391489277,
                          0.381830050505119, 0.417959183673469};

struct Node {
  double t;      // abscissa in [-1,1]
  double wkron;  // Kronrod weight
  double wgauss; // Gauss weight (0 where the 7-point rule has no node)
};

std::array<Node, 15> gk_nodes() {
  std::array<Node, 15> nodes{};
  int idx = 0;
  for (int i = 0; i < 7; ++i) {
    const double gwt = (i % 2 == 1) ? wg[i / 2] : 0.0;
    nodes[idx++] = {-xk[i], wk[i], gwt};
    nodes[idx++] = {+xk[i], wk[i], gwt};
  }
  nodes[idx++] = {0.0, wk[7], wg[3]};
  return nodes;
}

const std::array<Node, 15> kNodes = gk_nodes();

// QUADPACK-style error estimate from the K15/G7 discrepancy, scaled by
// the variation of the integrand over the panel.
double gk_error(double resk, double resg, double resasc, double h) {
  double err = std::abs((resk - resg) * h);
  const double asc = resasc * h;
  if (asc != 0.0 && err != 0.0)
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  return err;
}

} // namespace

QuadResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv[15];
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 15; ++i) {
    fv[i] = f(mid + h * kNodes[i].t);
    resk += kNodes[i].wkron * fv[i];
    resg += kNodes[i].wgauss * fv[i];
  }
  const double reskh = resk * 0.5;
  double resasc = 0.0;
  for (int i = 0; i < 15; ++i)
    resasc += kNodes[i].wkron * std::abs(fv[i] - reskh);
  QuadResult r;
  r.value = resk * h;
  r.abs_error = gk_error(resk, resg, resasc, std::abs(h));
  r.converged = std::isfinite(r.value);
  r.evaluations = 15;
  return r;
}

ComplexQuadResult gk15_complex(
    const std::function<std::complex<double>(double)>& f, double a,
    double b) {
  const double mid = 0.5 * (a + b), h = 0.5 * (b - a);
  std::complex<double> fv[15];
  std::complex<double> resk(0.0, 0.0), resg(0.0, 0.0);
  for (int i = 0; i < 15; ++i) {
    fv[i] = f(mid + h * kNodes[i].t);
    resk += kNodes[i].wkron * fv[i];
    resg += kNodes[i].wgauss * fv[i];
  }
  const std::complex<double> reskh = resk * 0.5;
  double resasc = 0.0;
  for (int i = 0; i < 15; ++i)
    resasc += kNodes[i].wkron * std::abs(fv[i] - reskh);
  ComplexQuadResult r;
  r.value = resk * h;
  double err = std::abs(resk - resg) * std::abs(h);
  const double asc = resasc * std::abs(h);
  if (asc != 0.0 && err != 0.0)
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  r.abs_error = err;
  r.converged = std::isfinite(r.value.real()) && std::isfinite(r.value.imag());
  r.evaluations = 15;
  return r;
}

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, const QuadratureConfig& cfg) {
  struct Seg {
    double a, b, value, error;
    bool operator<(const Seg& o) const { return error < o.error; }
  };
  std::priority_queue<Seg> work;
  QuadResult first = gk15(f, a, b);
  work.push({a, b, first.value, first.abs_error});
  double total = first.value, total_err = first.abs_error;
  int evals = first.evaluations, splits = 0;
  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) &&
         splits < cfg.max_subdivisions) {
    Seg s = work.top();
    work.pop();
    const double m = 0.5 * (s.a + s.b);
    if (m <= s.a || m >= s.b) { // exhausted at double precision
      work.push({s.a, s.b, s.value, 0.0});
      total_err -= s.error;
      continue;
    }
    QuadResult l = gk15(f, s.a, m), r = gk15(f, m, s.b);
    total += l.value + r.value - s.value;
    total_err += l.abs_error + r.abs_error - s.error;
    work.push({s.a, m, l.value, l.abs_error});
    work.push({m, s.b, r.value, r.abs_error});
    evals += 30;
    ++splits;
  }
  QuadResult out;
  out.value = total;
  out.abs_error = total_err;
  out.converged =
      total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) &&
      std::isfinite(total);
  out.evaluations = evals;
  return out;
}

namespace {

// One region of the moment integral in a transformed coordinate; the
// map provides x(t) and the Jacobian dx/dt (both positive).
struct Region {
  std::function<double(double)> x_of;
  std::function<double(double)> jac;
};

struct VecPanel {
  int region;
  double a, b;
  std::vector<double> value, error;
};

void eval_panel(const std::function<double(double)>& density,
                const std::vector<Region>& regions, int k_max, VecPanel& p,
                int& evals) {
  const int nk = k_max + 1;
  const Region& reg = regions[p.region];
  const double mid = 0.5 * (p.a + p.b), h = 0.5 * (p.b - p.a);
  std::vector<std::vector<double>> fv(15, std::vector<double>(nk));
  for (int i = 0; i < 15; ++i) {
    const double t = mid + h * kNodes[i].t;
    const double x = reg.x_of(t);
    const double base = density(x) * reg.jac(t);
    double xp = 1.0;
    for (int k = 0; k < nk; ++k) {
      fv[i][k] = base * xp;
      xp *= x;
    }
    ++evals;
  }
  p.value.assign(nk, 0.0);
  p.error.assign(nk, 0.0);
  for (int k = 0; k < nk; ++k) {
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 15; ++i) {
      resk += kNodes[i].wkron * fv[i][k];
      resg += kNodes[i].wgauss * fv[i][k];
    }
    const double reskh = resk * 0.5;
    double resasc = 0.0;
    for (int i = 0; i < 15; ++i)
      resasc += kNodes[i].wkron * std::abs(fv[i][k] - reskh);
    p.value[k] = resk * h;
    p.error[k] = gk_error(resk, resg, resasc, h);
  }
}

} // namespace

std::vector<QuadResult> integrate_moments(
    const std::function<double(double)>& density, int k_max,
    const QuadratureConfig& cfg) {
  if (k_max < 0)
    throw std::invalid_argument("integrate_moments: k_max must be >= 0");
  const bool infinite =
      cfg.endpoint_strategy == EndpointStrategy::exponential_tail;
  const double split = infinite ? 1.0 : 0.5;
  const int nk = k_max + 1;

  std::vector<Region> regions;
  // Lower endpoint: x = split * exp(-t); the sign of dx and the reversed
  // orientation cancel.
  regions.push_back({[split](double t) { return split * std::exp(-t); },
                     [split](double t) { return split * std::exp(-t); }});
  if (infinite) {
    regions.push_back({[split](double u) { return split * std::exp(u); },
                       [split](double u) { return split * std::exp(u); }});
  } else {
    regions.push_back(
        {[split](double u) { return 1.0 - (1.0 - split) * std::exp(-u); },
         [split](double u) { return (1.0 - split) * std::exp(-u); }});
  }

  int evals = 0;
  std::vector<VecPanel> panels;
  std::vector<double> acc(nk, 0.0), err(nk, 0.0);

  auto push_panel = [&](int region, double a, double b) {
    VecPanel p;
    p.region = region;
    p.a = a;
    p.b = b;
    eval_panel(density, regions, k_max, p, evals);
    for (int k = 0; k < nk; ++k) {
      acc[k] += p.value[k];
      err[k] += p.error[k];
    }
    panels.push_back(std::move(p));
  };

  // Each transformed semi-axis is covered by blocks until the last block
  // is negligible for every k and still shrinking. The lower endpoint
  // and the infinite tail can run until exp(+-t) nears the double range;
  // the upper endpoint of (0,1) must stop while 1-x is still
  // representable, so there the blocks keep a constant width and the
  // remaining sliver is added by geometric extrapolation.
  for (int region = 0; region < 2; ++region) {
    const bool capped_geometric = !infinite && region == 1;
    const double t_cap = capped_geometric ? 36.0 : 690.0;
    double a = 0.0;
    double width = capped_geometric ? 4.0 : 1.0;
    std::vector<double> prev_block(nk, std::numeric_limits<double>::max());
    bool hit_cap = true;
    for (int block = 0; block < 700 && a < t_cap; ++block) {
      width = std::min(width, t_cap - a);
      push_panel(region, a, a + width);
      const VecPanel& last = panels.back();
      bool negligible = true, shrinking = true;
      for (int k = 0; k < nk; ++k) {
        const double scale =
            std::max(cfg.abs_tol, cfg.rel_tol * std::abs(acc[k]));
        if (std::abs(last.value[k]) > 0.05 * scale)
          negligible = false;
        if (std::abs(last.value[k]) > std::abs(prev_block[k]))
          shrinking = false;
        prev_block[k] = last.value[k];
      }
      a += width;
      if (!capped_geometric && block >= 2)
        width *= 2.0;
      if (block >= 3 && negligible && shrinking) {
        hit_cap = false;
        break;
      }
    }
    if (capped_geometric && hit_cap && panels.size() >= 2) {
      // Geometric tail beyond the cap, estimated from the last two
      // constant-width blocks.
      const VecPanel& lastp = panels[panels.size() - 1];
      const VecPanel& prevp = panels[panels.size() - 2];
      for (int k = 0; k < nk; ++k) {
        const double c1 = lastp.value[k], c0 = prevp.value[k];
        if (!(std::abs(c1) > 0.0) || !(std::abs(c0) > std::abs(c1)))
          continue;
        const double r = std::min(0.999, std::abs(c1) / std::abs(c0));
        const double tail = c1 * r / (1.0 - r);
        acc[k] += tail;
        err[k] += 0.3 * std::abs(tail);
      }
    }
  }

  // Refine the panel with the worst error-to-tolerance ratio until every
  // component meets its target.
  auto badness = [&](const VecPanel& p) {
    double worst = 0.0;
    for (int k = 0; k < nk; ++k) {
      const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(acc[k]));
      worst = std::max(worst, p.error[k] / tol);
    }
    return worst;
  };
  int splits = 0;
  while (splits < cfg.max_subdivisions) {
    bool done = true;
    for (int k = 0; k < nk; ++k)
      if (err[k] > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(acc[k])))
        done = false;
    if (done)
      break;
    std::size_t worst = 0;
    double worst_badness = -1.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      const double bd = badness(panels[i]);
      if (bd > worst_badness) {
        worst_badness = bd;
        worst = i;
      }
    }
    VecPanel old = panels[worst];
    const double m = 0.5 * (old.a + old.b);
    if (m <= old.a || m >= old.b)
      break;
    for (int k = 0; k < nk; ++k) {
      acc[k] -= old.value[k];
      err[k] -= old.error[k];
    }
    panels.erase(panels.begin() + static_cast<std::ptrdiff_t>(worst));
    push_panel(old.region, old.a, m);
    push_panel(old.region, m, old.b);
    ++splits;
  }

  std::vector<QuadResult> out(nk);
  for (int k = 0; k < nk; ++k) {
    out[k].value = acc[k];
    out[k].abs_error = err[k];
    out[k].converged =
        err[k] <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(acc[k])) &&
        std::isfinite(acc[k]);
    out[k].evaluations = evals;
  }
  return out;
}

} // namespace pacs
