#include "pacs/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "pacs/measures.hpp"
#include "pacs/states.hpp"
#include "pacs/statistics.hpp"

namespace pacs::cli {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    std::size_t pos = 0;
    const int v = std::stoi(item, &pos);
    if (pos != item.size())
      throw ConfigError("malformed integer list entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw ConfigError("empty integer list");
  return out;
}

double parse_double(const std::string& key, const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError("field '" + key + "': malformed number '" + s + "'");
  }
  if (pos != s.size())
    throw ConfigError("field '" + key + "': malformed number '" + s + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError("field '" + key + "': malformed integer '" + s + "'");
  }
  if (pos != s.size())
    throw ConfigError("field '" + key + "': malformed integer '" + s + "'");
  return v;
}

} // namespace

RunConfig default_config(const std::string& command) {
  RunConfig cfg;
  cfg.command = command;
  cfg.output_path = command + ".csv";

  auto dtype = [&] {
    cfg.family = Family::DType;
    cfg.gamma = 1.0;
    cfg.c = 1.0; // |c|^2 = gamma
  };
  auto ctype = [&](double rho) {
    cfg.family = Family::CType;
    cfg.gamma = 1.0;
    cfg.rho = rho;
  };
  auto atype1 = [&] {
    cfg.family = Family::AType1;
    cfg.kappa = 1.0;
    cfg.rho = 0.5;
  };
  auto atype2 = [&](double nu) {
    cfg.family = Family::AType2;
    cfg.kappa = 1.0;
    cfg.nu = nu;
  };
  auto q_sweep = [&](double zmax) {
    cfg.quantity = "q";
    cfg.m_list = {1, 2, 5, 10};
    cfg.z_min = 0.05;
    cfg.z_max = zmax;
    cfg.z_scale = GridScale::abs_z;
  };
  auto weight_table = [&](std::vector<int> ms, double xmax) {
    cfg.quantity = "weight";
    cfg.m_list = std::move(ms);
    cfg.z_min = 0.01;
    cfg.z_max = xmax;
    cfg.z_scale = GridScale::abs_z_sq;
  };
  auto pnd_table = [&](double zabs, int nmax) {
    cfg.quantity = "pnd";
    cfg.m_list = {0, 1, 2, 3};
    cfg.z_abs = zabs;
    cfg.n_max = nmax;
  };

  if (command == "fig1") {
    dtype();
    weight_table({1, 2, 3, 4}, 20.0);
  } else if (command == "fig2") {
    dtype();
    q_sweep(10.0);
  } else if (command == "fig3") {
    dtype();
    pnd_table(2.0, 40);
  } else if (command == "fig4") {
    ctype(-2.0);
    weight_table({0, 1, 2, 3}, 0.99);
  } else if (command == "fig5") {
    ctype(-4.0);
    q_sweep(0.99);
  } else if (command == "fig6") {
    ctype(-8.0);
    pnd_table(0.5, 40);
  } else if (command == "fig7") {
    atype1();
    weight_table({0, 1, 2, 3}, 30.0);
  } else if (command == "fig8") {
    atype1();
    q_sweep(20.0);
  } else if (command == "fig9") {
    atype1();
    pnd_table(5.0, 80);
  } else if (command == "fig10") {
    atype2(1.5);
    weight_table({0, 1, 2}, 0.99);
  } else if (command == "fig11") {
    atype2(5.0);
    q_sweep(0.99);
  } else if (command == "fig12") {
    atype2(5.0);
    pnd_table(0.5, 40);
  } else if (command == "weight") {
    dtype();
    weight_table({0, 1, 2}, 10.0);
  } else if (command == "pnd") {
    dtype();
    pnd_table(2.0, 40);
  } else if (command == "stats" || command == "sweep") {
    dtype();
    cfg.m_list = {1};
    cfg.z_min = 0.05;
    cfg.z_max = 5.0;
  } else if (command == "verify") {
    cfg.output_path.clear();
  } else {
    throw ConfigError("unknown command '" + command + "'");
  }
  return cfg;
}

void apply_override(RunConfig& cfg, const std::string& key,
                    const std::string& value) {
  if (key == "family") {
    if (value == "dtype")
      cfg.family = Family::DType;
    else if (value == "ctype")
      cfg.family = Family::CType;
    else if (value == "atype1")
      cfg.family = Family::AType1;
    else if (value == "atype2")
      cfg.family = Family::AType2;
    else
      throw ConfigError("field 'family': unknown family '" + value +
                        "' (dtype|ctype|atype1|atype2)");
    cfg.user_system = true;
  } else if (key == "gamma") {
    cfg.gamma = parse_double(key, value);
    cfg.user_system = true;
  } else if (key == "c") {
    cfg.c = parse_double(key, value);
    cfg.user_system = true;
  } else if (key == "kappa") {
    cfg.kappa = parse_double(key, value);
    cfg.user_system = true;
  } else if (key == "rho") {
    cfg.rho = parse_double(key, value);
    cfg.user_system = true;
  } else if (key == "nu") {
    cfg.nu = parse_double(key, value);
    cfg.user_system = true;
  } else if (key == "alpha") {
    cfg.alpha = parse_double(key, value);
    cfg.user_system = true;
  } else if (key == "m_list") {
    cfg.m_list = parse_int_list(value);
  } else if (key == "z_min") {
    cfg.z_min = parse_double(key, value);
  } else if (key == "z_max") {
    cfg.z_max = parse_double(key, value);
  } else if (key == "z_count") {
    cfg.z_count = parse_int(key, value);
  } else if (key == "z_scale") {
    if (value == "abs")
      cfg.z_scale = GridScale::abs_z;
    else if (value == "abs2")
      cfg.z_scale = GridScale::abs_z_sq;
    else
      throw ConfigError("field 'z_scale': expected abs or abs2");
  } else if (key == "z_abs") {
    cfg.z_abs = parse_double(key, value);
  } else if (key == "n_max") {
    cfg.n_max = parse_int(key, value);
  } else if (key == "quantity") {
    cfg.quantity = value;
  } else if (key == "out") {
    cfg.output_path = value;
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    // trim
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto strip = [](std::string& s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      s = (a == std::string::npos) ? std::string()
                                   : s.substr(a, b - a + 1);
    };
    strip(key);
    strip(value);
    try {
      apply_override(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " +
                        e.what());
    }
  }
}

SipSystem make_system(const RunConfig& cfg) {
  SipSystem sys;
  try {
    switch (cfg.family) {
    case Family::DType:
      sys = SipSystem::d_type(cfg.gamma, cfg.c);
      break;
    case Family::CType:
      sys = SipSystem::c_type(cfg.rho, cfg.gamma, cfg.alpha);
      break;
    case Family::AType1:
      sys = SipSystem::a_type1(cfg.kappa, cfg.rho);
      break;
    case Family::AType2:
      sys = SipSystem::a_type2(cfg.kappa, cfg.nu, cfg.alpha);
      break;
    }
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid system parameters: ") + e.what());
  }
  return sys;
}

void validate_config(const RunConfig& cfg) {
  const SipSystem sys = make_system(cfg);
  for (int m : cfg.m_list)
    if (m < 0)
      throw ConfigError("m_list entries must be >= 0");
  if (cfg.z_count < 1)
    throw ConfigError("z_count must be >= 1");
  if (!(cfg.z_min > 0.0) || !(cfg.z_max > cfg.z_min))
    throw ConfigError("need 0 < z_min < z_max");
  const double radius = sys.convergence_radius();
  const double limit =
      cfg.z_scale == GridScale::abs_z ? radius : radius * radius;
  if (!(cfg.z_max < limit))
    throw ConfigError("grid extends outside the convergence domain");
  if (cfg.command == "pnd" || cfg.command == "fig3" || cfg.command == "fig6" ||
      cfg.command == "fig9" || cfg.command == "fig12") {
    if (!(cfg.z_abs > 0.0 && cfg.z_abs < radius))
      throw ConfigError("z_abs outside the convergence domain");
    if (cfg.n_max < 0)
      throw ConfigError("n_max must be >= 0");
  }
  static const std::map<std::string, int> known_quantities = {
      {"q", 0},    {"g2", 0},  {"mean_n", 0},
      {"mean_n2", 0}, {"norm", 0}, {"weight", 0}, {"pnd", 0}};
  if (!known_quantities.count(cfg.quantity))
    throw ConfigError("unknown quantity '" + cfg.quantity + "'");
}

namespace {

struct Table {
  std::string abscissa_name;
  std::vector<double> abscissa;
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> columns; // [col][row]
  int failures = 0;
};

void write_csv(const Table& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ConfigError("cannot write output file '" + path + "'");
  out << t.abscissa_name;
  for (const auto& name : t.column_names)
    out << ',' << name;
  out << '\n';
  for (std::size_t row = 0; row < t.abscissa.size(); ++row) {
    out << fmt(t.abscissa[row]);
    for (const auto& col : t.columns)
      out << ',' << fmt(col[row]);
    out << '\n';
  }
}

void write_plot_script(const Table& t, const std::string& csv_path) {
  std::ofstream out(csv_path + ".gp", std::ios::binary);
  out << "set datafile separator \",\"\n";
  out << "set key autotitle columnhead\n";
  out << "set xlabel \"" << t.abscissa_name << "\"\n";
  out << "plot ";
  for (std::size_t i = 0; i < t.column_names.size(); ++i) {
    if (i)
      out << ", ";
    out << "\"" << csv_path << "\" using 1:" << (i + 2) << " with lines";
  }
  out << "\n";
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  for (int i = 0; i < count; ++i)
    out.push_back(lo + (hi - lo) * i / (count - 1));
  return out;
}

// Evaluate one column cell; numerical failures become NaN and are
// counted so the run can finish and flag exit code 3.
double guarded(Table& t, const std::function<double()>& f,
               std::ostream& diag, const std::string& what) {
  try {
    return f();
  } catch (const std::exception& e) {
    ++t.failures;
    diag << "numerical failure at " << what << ": " << e.what() << "\n";
    return std::numeric_limits<double>::quiet_NaN();
  }
}

Table build_sweep_table(const RunConfig& cfg, const SipSystem& sys,
                        std::ostream& diag) {
  Table t;
  t.abscissa_name =
      cfg.z_scale == GridScale::abs_z ? std::string("|z|") : "|z|^2";
  t.abscissa = linspace(cfg.z_min, cfg.z_max, cfg.z_count);
  const std::string q = cfg.quantity;
  for (int m : cfg.m_list) {
    std::string base = (q == "q") ? "Q" : q == "norm" ? "N" : q;
    t.column_names.push_back(base + "_m" + std::to_string(m));
    std::vector<double> col;
    col.reserve(t.abscissa.size());
    for (double u : t.abscissa) {
      const double abs_z =
          cfg.z_scale == GridScale::abs_z ? u : std::sqrt(u);
      const double x = abs_z * abs_z;
      auto cell = [&]() -> double {
        if (q == "weight")
          return weight(sys, m, x);
        if (q == "norm")
          return normalization(sys, m, x, EvalMethod::closed);
        PacsPoint pt{sys, {abs_z, 0.0}, m};
        const StatsMethod method =
            m >= 1 ? StatsMethod::closed : StatsMethod::generic;
        if (q == "q")
          return mandel_q(pt, method);
        if (q == "g2")
          return g2(pt, method);
        if (q == "mean_n")
          return mean_n(pt, method);
        return mean_n2(pt, method);
      };
      col.push_back(guarded(t, cell, diag,
                            t.column_names.back() + " @ " + fmt(u)));
    }
    t.columns.push_back(std::move(col));
  }
  return t;
}

Table build_pnd_table(const RunConfig& cfg, const SipSystem& sys,
                      std::ostream& diag) {
  Table t;
  t.abscissa_name = "n";
  for (int n = 0; n <= cfg.n_max; ++n)
    t.abscissa.push_back(n);
  for (int m : cfg.m_list) {
    t.column_names.push_back("P_m" + std::to_string(m));
    std::vector<double> col;
    PacsPoint pt{sys, {cfg.z_abs, 0.0}, m};
    for (int n = 0; n <= cfg.n_max; ++n) {
      auto cell = [&] { return pnd(pt, n, StatsMethod::closed); };
      col.push_back(
          guarded(t, cell, diag,
                  t.column_names.back() + " @ n=" + std::to_string(n)));
    }
    t.columns.push_back(std::move(col));
  }
  return t;
}

Table build_stats_table(const RunConfig& cfg, const SipSystem& sys,
                        std::ostream& diag) {
  Table t;
  t.abscissa_name = "|z|";
  t.abscissa = linspace(cfg.z_min, cfg.z_max, cfg.z_count);
  for (int m : cfg.m_list) {
    const std::string suffix = "_m" + std::to_string(m);
    const StatsMethod method =
        m >= 1 ? StatsMethod::closed : StatsMethod::generic;
    std::vector<std::vector<double>> cols(4);
    for (double abs_z : t.abscissa) {
      PacsPoint pt{sys, {abs_z, 0.0}, m};
      StatsReport rep;
      bool ok = true;
      try {
        rep = stats_report(pt, method);
      } catch (const std::exception& e) {
        ++t.failures;
        diag << "numerical failure at stats" << suffix << " @ "
             << fmt(abs_z) << ": " << e.what() << "\n";
        ok = false;
      }
      const double nan = std::numeric_limits<double>::quiet_NaN();
      cols[0].push_back(ok ? rep.mean_n : nan);
      cols[1].push_back(ok ? rep.mean_n2 : nan);
      cols[2].push_back(ok ? rep.mandel_q : nan);
      cols[3].push_back(ok ? rep.g2 : nan);
    }
    t.column_names.push_back("meanN" + suffix);
    t.columns.push_back(std::move(cols[0]));
    t.column_names.push_back("meanN2" + suffix);
    t.columns.push_back(std::move(cols[1]));
    t.column_names.push_back("Q" + suffix);
    t.columns.push_back(std::move(cols[2]));
    t.column_names.push_back("g2" + suffix);
    t.columns.push_back(std::move(cols[3]));
  }
  return t;
}

// ---------------------------------------------------------------------
// verify command

struct Verifier {
  std::ostream& out;
  bool all_ok = true;

  void report(const std::string& name, double residual, double tol) {
    const bool ok = residual <= tol && std::isfinite(residual);
    all_ok = all_ok && ok;
    out << (ok ? "ok   " : "FAIL ") << name << ": residual " << residual
        << " (tol " << tol << ")\n";
  }
  void report_bool(const std::string& name, bool ok,
                   const std::string& detail) {
    all_ok = all_ok && ok;
    out << (ok ? "ok   " : "FAIL ") << name << ": " << detail << "\n";
  }
};

std::vector<SipSystem> preset_systems() {
  return {SipSystem::d_type(1.0, 1.0), SipSystem::c_type(-2.0),
          SipSystem::a_type1(1.0, 0.5), SipSystem::a_type2(1.0, 1.5)};
}

std::vector<double> domain_grid(const SipSystem& sys, int count,
                                double span_infinite) {
  const double radius = sys.convergence_radius();
  const double hi = std::isinf(radius) ? span_infinite : 0.95;
  std::vector<double> zs;
  for (int i = 1; i <= count; ++i)
    zs.push_back(hi * i / count);
  return zs;
}

void verify_coefficients(Verifier& v, const SipSystem& sys) {
  double worst = 0.0;
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 60; ++n) {
      const auto raw = k_coeff(sys, n, m, CoeffMethod::raw);
      const auto closed = k_coeff(sys, n, m, CoeffMethod::closed);
      worst = std::max(worst, std::abs(raw - closed) / std::abs(closed));
    }
  v.report(std::string("coeff raw/closed ") + sys.family_name(), worst,
           1e-10);
}

void verify_m0_anchor(Verifier& v, const SipSystem& sys) {
  double worst = 0.0;
  for (double z : domain_grid(sys, 50, 3.0)) {
    const double x = z * z;
    const double n_series = normalization(sys, 0, x);
    double reference = 0.0;
    switch (sys.family) {
    case Family::DType:
      reference = std::exp(-0.5 * sys.c * sys.c * x / sys.gamma);
      break;
    case Family::CType:
      reference = std::pow(1.0 - x, -0.5 * sys.rho);
      break;
    case Family::AType1:
      reference = std::sqrt(1.0 / std::cosh(z)); // rho = 1/2 reference curve
      break;
    case Family::AType2:
      reference = std::pow(1.0 - x, 0.5 * (sys.nu + 1.0));
      break;
    }
    worst = std::max(worst, std::abs(n_series - reference) / reference);
  }
  v.report(std::string("m=0 normalization anchor ") + sys.family_name(),
           worst, 1e-10);
}

void verify_normalization(Verifier& v, const SipSystem& sys) {
  double worst = 0.0;
  for (int m = 0; m <= 5; ++m)
    for (double z : domain_grid(sys, 10, 2.0)) {
      const double x = z * z;
      const double a = normalization(sys, m, x, EvalMethod::series);
      const double b = normalization(sys, m, x, EvalMethod::closed);
      worst = std::max(worst, std::abs(a - b) / b);
    }
  v.report(std::string("normalization series/closed ") + sys.family_name(),
           worst, 1e-10);
}

void verify_statistics(Verifier& v) {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  std::uniform_int_distribution<int> mdist(1, 5);
  const auto systems = preset_systems();
  double worst_identity = 0.0, worst_agreement = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const SipSystem& sys = systems[static_cast<std::size_t>(trial % 4)];
    const double radius = sys.convergence_radius();
    const double span = std::isinf(radius) ? 3.0 : 0.95;
    const int m = mdist(rng);
    PacsPoint pt{sys, {span * unit(rng) / 0.95, 0.0}, m};
    const StatsReport gen = stats_report(pt, StatsMethod::generic);
    const StatsReport cls = stats_report(pt, StatsMethod::closed);
    worst_identity = std::max(
        worst_identity,
        std::abs(gen.mandel_q - gen.mean_n * (gen.g2 - 1.0)));
    worst_agreement =
        std::max(worst_agreement,
                 std::abs(gen.mandel_q - cls.mandel_q) /
                     std::max(1.0, std::abs(cls.mandel_q)));
  }
  v.report("statistics Q = <N>(g2-1) identity", worst_identity, 1e-10);
  v.report("statistics generic/closed", worst_agreement, 1e-8);
}

void verify_pnd(Verifier& v) {
  double worst_norm = 0.0, worst_moment = 0.0;
  for (const SipSystem& sys : preset_systems()) {
    const double z = std::isinf(sys.convergence_radius()) ? 1.5 : 0.6;
    for (int m : {0, 2}) {
      PacsPoint pt{sys, {z, 0.0}, m};
      double total = 0.0, e_mean = 0.0;
      for (int n = 0; n <= 400; ++n) {
        const double p = pnd(pt, n, StatsMethod::generic);
        total += p;
        e_mean += energy(sys, n) * p;
        if (n > m + 20 && p < 1e-18)
          break;
      }
      worst_norm = std::max(worst_norm, std::abs(total - 1.0));
      const double mean = mean_n(pt, StatsMethod::generic);
      worst_moment =
          std::max(worst_moment, std::abs(e_mean - mean) /
                                     std::max(1.0, std::abs(mean)));
    }
  }
  v.report("PND normalization", worst_norm, 1e-9);
  v.report("PND energy-moment consistency", worst_moment, 1e-9);
}

void verify_moments(Verifier& v) {
  for (const SipSystem& sys : preset_systems()) {
    double worst = 0.0;
    for (int m : {0, 1})
      for (int n = 0; n <= 4; ++n)
        worst = std::max(worst, moment_check(sys, m, n));
    v.report(std::string("moment identity ") + sys.family_name(), worst,
             1e-6);
  }
}

void verify_kernel(Verifier& v) {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> unit(-0.9, 0.9);
  double worst_herm = 0.0, worst_diag = 0.0;
  for (const SipSystem& sys : preset_systems()) {
    const double scale = std::isinf(sys.convergence_radius()) ? 1.5 : 0.65;
    for (int pair = 0; pair < 10; ++pair) {
      const std::complex<double> z(scale * unit(rng), scale * unit(rng));
      const std::complex<double> zp(scale * unit(rng), scale * unit(rng));
      const int m = pair % 3;
      const auto k12 = kernel(sys, m, z, zp);
      const auto k21 = kernel(sys, m, zp, z);
      worst_herm = std::max(worst_herm, std::abs(k12 - std::conj(k21)));
      worst_diag =
          std::max(worst_diag, std::abs(kernel(sys, m, z, z) - 1.0));
    }
  }
  v.report("kernel hermiticity", worst_herm, 1e-12);
  v.report("kernel K(z,z) = 1", worst_diag, 1e-12);
  const double residual = kernel_idempotence_check(
      SipSystem::d_type(1.0, 1.0), 0, {0.0, 0.0}, {0.0, 0.0});
  v.report("kernel idempotence (reference point)", residual, 1e-6);
}

void verify_positivity(Verifier& v, const SipSystem& sys) {
  const bool condition = sys.measure_positivity_condition();
  std::vector<double> grid;
  const bool finite = !std::isinf(sys.convergence_radius());
  const double hi = finite ? 0.99 : 20.0;
  for (int i = 0; i < 40; ++i)
    grid.push_back(0.01 + (hi - 0.01) * i / 39.0);
  double min_value = std::numeric_limits<double>::infinity();
  for (int m : {0, 1, 2}) {
    if (sys.family == Family::DType && m == 0)
      continue; // constant weight, covered by the m >= 1 rows
    min_value =
        std::min(min_value, weight_positivity_scan(sys, m, grid));
  }
  std::ostringstream detail;
  detail << "min weight " << min_value
         << (condition ? " (parameters inside stated window)"
                       : " (parameters OUTSIDE stated window)");
  v.report_bool(std::string("weight positivity ") + sys.family_name(),
                min_value > 0.0, detail.str());
}

int run_verify(const RunConfig& cfg, std::ostream& diag) {
  Verifier v{diag};
  for (const SipSystem& sys : preset_systems()) {
    verify_coefficients(v, sys);
    verify_m0_anchor(v, sys);
    verify_normalization(v, sys);
  }
  verify_statistics(v);
  verify_pnd(v);
  verify_moments(v);
  verify_kernel(v);
  for (const SipSystem& sys : preset_systems())
    verify_positivity(v, sys);
  if (cfg.user_system) {
    const SipSystem sys = make_system(cfg);
    verify_coefficients(v, sys);
    verify_normalization(v, sys);
    verify_positivity(v, sys);
  }
  diag << (v.all_ok ? "verification PASSED\n" : "verification FAILED\n");
  return v.all_ok ? 0 : 1;
}

} // namespace

int run_command(const RunConfig& cfg, std::ostream& diag) {
  validate_config(cfg);
  if (cfg.command == "verify")
    return run_verify(cfg, diag);

  const SipSystem sys = make_system(cfg);
  Table t;
  if (cfg.quantity == "pnd")
    t = build_pnd_table(cfg, sys, diag);
  else if (cfg.command == "stats")
    t = build_stats_table(cfg, sys, diag);
  else
    t = build_sweep_table(cfg, sys, diag);

  write_csv(t, cfg.output_path);
  if (cfg.emit_plot_script)
    write_plot_script(t, cfg.output_path);
  diag << "wrote " << cfg.output_path << " (" << t.abscissa.size()
       << " rows, " << t.column_names.size() << " columns)\n";
  if (t.failures > 0) {
    diag << t.failures << " cells failed numerically\n";
    return 3;
  }
  return 0;
}

} // namespace pacs::cli
