#include "eelbm/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "eelbm/closures.hpp"
#include "eelbm/steady.hpp"

namespace eelbm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ScenarioConfig test1() {
  ScenarioConfig c;
  c.nx = 200;
  c.nt = 6'000'000;
  c.n_ramp = 500'000;
  c.rho_g0 = 1.2;
  c.rho_l0 = 2.4;
  c.nu_g = c.nu_l = 1.1667;
  c.g_hat = 1e-6;
  c.drag_model = DragModel::Constant;
  c.drag_interphase = 1e-2;
  c.drag_wall = 1e-2;
  c.gamma = 0.0;
  c.n_gamma = 1;
  c.alpha_g = {1e-2, 0.8};
  c.u_l = {0.0, 1e-3};
  c.u_g = {0.0, 1e-2};
  return c;
}

void set_bubble_column_min(ScenarioConfig& c) {
  c.u_g.min = bubble_column_velocity(c.alpha_g.min, c.density_ratio(), c.g_hat, c.drag_interphase);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

FieldDiff diff(const std::vector<double>& a, const std::vector<double>& b) {
  FieldDiff d;
  if (a.empty()) return d;
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double e = std::abs(a[i] - b[i]);
    d.linf = std::max(d.linf, e);
    sum += e * e;
  }
  d.l2 = std::sqrt(sum / static_cast<double>(a.size()));
  const double den = max_abs(b);
  if (den > 0.0) {
    d.linf /= den;
    d.l2 /= den;
  }
  return d;
}

std::vector<double> central_gradient(const std::vector<double>& v) {
  std::vector<double> g;
  for (size_t i = 1; i + 1 < v.size(); ++i) g.push_back(0.5 * (v[i + 1] - v[i - 1]));
  return g;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s, const std::string& key) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ConfigError("bad number for '" + key + "': " + s);
  return v;
}

std::int64_t parse_int(const std::string& s, const std::string& key) {
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ConfigError("bad integer for '" + key + "': " + s);
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Key {
  std::function<std::string(const ScenarioConfig&)> get;
  std::function<void(ScenarioConfig&, const std::string&)> set;
};

const std::vector<std::pair<std::string, Key>>& config_keys() {
  static const std::vector<std::pair<std::string, Key>> keys = [] {
    std::vector<std::pair<std::string, Key>> k;
    auto dbl = [&k](const std::string& name, double ScenarioConfig::*m) {
      k.push_back({name,
                   {[m](const ScenarioConfig& c) { return format_double(c.*m); },
                    [m, name](ScenarioConfig& c, const std::string& v) {
                      c.*m = parse_double(v, name);
                    }}});
    };
    auto ramp = [&k](const std::string& name, RampBounds ScenarioConfig::*r, bool is_min) {
      k.push_back({name,
                   {[r, is_min](const ScenarioConfig& c) {
                      return format_double(is_min ? (c.*r).min : (c.*r).max);
                    },
                    [r, is_min, name](ScenarioConfig& c, const std::string& v) {
                      (is_min ? (c.*r).min : (c.*r).max) = parse_double(v, name);
                    }}});
    };
    k.push_back({"nx",
                 {[](const ScenarioConfig& c) { return std::to_string(c.nx); },
                  [](ScenarioConfig& c, const std::string& v) {
                    c.nx = static_cast<int>(parse_int(v, "nx"));
                  }}});
    k.push_back({"nt",
                 {[](const ScenarioConfig& c) { return std::to_string(c.nt); },
                  [](ScenarioConfig& c, const std::string& v) { c.nt = parse_int(v, "nt"); }}});
    k.push_back({"n_ramp",
                 {[](const ScenarioConfig& c) { return std::to_string(c.n_ramp); },
                  [](ScenarioConfig& c, const std::string& v) {
                    c.n_ramp = parse_int(v, "n_ramp");
                  }}});
    dbl("rho_g0", &ScenarioConfig::rho_g0);
    dbl("rho_l0", &ScenarioConfig::rho_l0);
    dbl("nu_g", &ScenarioConfig::nu_g);
    dbl("nu_l", &ScenarioConfig::nu_l);
    dbl("g_hat", &ScenarioConfig::g_hat);
    k.push_back({"drag_model",
                 {[](const ScenarioConfig& c) { return to_string(c.drag_model); },
                  [](ScenarioConfig& c, const std::string& v) {
                    c.drag_model = drag_model_from_string(v);
                  }}});
    dbl("drag_interphase", &ScenarioConfig::drag_interphase);
    dbl("drag_wall", &ScenarioConfig::drag_wall);
    dbl("gamma", &ScenarioConfig::gamma);
    k.push_back({"n_gamma",
                 {[](const ScenarioConfig& c) { return std::to_string(c.n_gamma); },
                  [](ScenarioConfig& c, const std::string& v) {
                    c.n_gamma = parse_int(v, "n_gamma");
                  }}});
    dbl("chi_alpha", &ScenarioConfig::chi_alpha);
    ramp("alpha_g_min", &ScenarioConfig::alpha_g, true);
    ramp("alpha_g_max", &ScenarioConfig::alpha_g, false);
    ramp("u_g_min", &ScenarioConfig::u_g, true);
    ramp("u_g_max", &ScenarioConfig::u_g, false);
    ramp("u_l_min", &ScenarioConfig::u_l, true);
    ramp("u_l_max", &ScenarioConfig::u_l, false);
    k.push_back({"bulk",
                 {[](const ScenarioConfig& c) { return to_string(c.bulk); },
                  [](ScenarioConfig& c, const std::string& v) {
                    c.bulk = bulk_strategy_from_string(v);
                  }}});
    dbl("steady_tol", &ScenarioConfig::steady_tol);
    k.push_back({"steady_window",
                 {[](const ScenarioConfig& c) { return std::to_string(c.steady_window); },
                  [](ScenarioConfig& c, const std::string& v) {
                    c.steady_window = parse_int(v, "steady_window");
                  }}});
    return k;
  }();
  return keys;
}

}  // namespace

TestPreset preset(TestId id) {
  ScenarioConfig c = test1();
  switch (id) {
    case TestId::Test1:
      break;
    case TestId::Test2:
      c.rho_l0 = 6.0;
      c.g_hat = 2.5e-7;
      break;
    case TestId::Test3:
      c.rho_l0 = 1000.0;
      c.g_hat = 1.2e-9;
      c.gamma = 1.0;
      c.n_gamma = 200;
      break;
    case TestId::Test4:
      c.rho_l0 = 1000.0;
      c.g_hat = 1.2e-9;
      c.gamma = 1.0;
      c.n_gamma = 200;
      c.drag_model = DragModel::CliftGraceWeber;
      c.drag_interphase = 1.45e-4;
      c.drag_wall = 1.45e-4;
      c.u_g = {0.0043 / 10.0, 0.0043};
      c.u_l = {0.0011 / 10.0, 0.0011};
      c.alpha_g = {1e-2, 0.1};
      return {id, c};
  }
  set_bubble_column_min(c);
  return {id, c};
}

TestId test_id_from_int(int n) {
  if (n < 1 || n > 4) throw HarnessError("test id must be 1, 2, 3 or 4");
  return static_cast<TestId>(n);
}

Engine engine_from_string(const std::string& s) {
  if (s == "lbm") return Engine::Lbm;
  if (s == "fd") return Engine::Fd;
  if (s == "both") return Engine::Both;
  throw HarnessError("unknown engine '" + s + "' (expected lbm|fd|both)");
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::Lbm: return "lbm";
    case Engine::Fd: return "fd";
    case Engine::Both: return "both";
  }
  return "?";
}

ScenarioConfig apply_scale(const ScenarioConfig& base, double s) {
  if (!(s > 0.0)) throw HarnessError("scale must be positive");
  ScenarioConfig c = base;
  c.nx = static_cast<int>(std::lround(base.nx * s));
  c.nt = std::llround(static_cast<double>(base.nt) * s * s);
  c.n_ramp = std::llround(static_cast<double>(base.n_ramp) * s * s);
  c.g_hat = base.g_hat / (s * s * s);
  c.drag_interphase = base.drag_interphase / s;
  c.drag_wall = base.drag_wall / s;
  for (RampBounds* r : {&c.u_g, &c.u_l}) {
    r->min /= s;
    r->max /= s;
  }
  // Per-step changes shrink as the time step does.
  c.steady_tol = base.steady_tol / (s * s);
  return c;
}

OutletValues outlet_values(const TwoPhaseState& s) {
  const int n = s.nx - 1;
  OutletValues o;
  o.u_g = s.gas.u[n];
  o.u_l = s.liquid.u[n];
  o.alpha_g = s.gas.alpha[n];
  o.flux = s.gas.alpha[n] * s.gas.u[n] + s.liquid.alpha[n] * s.liquid.u[n];
  return o;
}

double flux_deviation(const TwoPhaseState& s) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
  for (int i = 0; i < s.nx; ++i) {
    const double j = s.gas.alpha[i] * s.gas.u[i] + s.liquid.alpha[i] * s.liquid.u[i];
    lo = std::min(lo, j);
    hi = std::max(hi, j);
    sum += j;
  }
  const double mean = sum / s.nx;
  return mean != 0.0 ? (hi - lo) / std::abs(mean) : kNaN;
}

double analytic_residual(const TwoPhaseState& s, const ScenarioConfig& config) {
  const OutletValues o = outlet_values(s);
  const double R = config.density_ratio();
  double K_I = config.drag_interphase, K_W = config.drag_wall;
  if (config.drag_model == DragModel::CliftGraceWeber) {
    const double lambda = cgw_lambda(o.alpha_g, R);
    K_I *= lambda;
    K_W *= lambda;
  }
  try {
    const SteadyRegime r = steady_regime(o.u_g, o.alpha_g, R, config.g_hat, K_I, K_W);
    return std::abs(r.u_l_bar - o.u_l) / std::abs(o.u_l);
  } catch (const std::domain_error&) {
    return kNaN;
  }
}

ComparisonReport compare(const TwoPhaseState& lbm, const FDState& fd, const ScenarioConfig& config,
                         bool pressure_by_gradient) {
  if (lbm.nx != fd.nx()) throw HarnessError("compare: engines have different nx");
  ComparisonReport r;
  r.alpha_g = diff(lbm.gas.alpha, fd.alpha_g);
  r.u_g = diff(lbm.gas.u, fd.u_g);
  r.u_l = diff(lbm.liquid.u, fd.u_l);
  r.p_k_by_gradient = pressure_by_gradient;
  r.p_k = pressure_by_gradient ? diff(central_gradient(lbm.p_k), central_gradient(fd.p_k))
                               : diff(lbm.p_k, fd.p_k);
  r.lbm_outlet = outlet_values(lbm);
  const int n = fd.nx() - 1;
  r.fd_outlet = {fd.u_g[n], fd.u_l[n], fd.alpha_g[n],
                 fd.alpha_g[n] * fd.u_g[n] + (1.0 - fd.alpha_g[n]) * fd.u_l[n]};
  r.lbm_flux_deviation = flux_deviation(lbm);
  TwoPhaseState fd_view;
  fd_view.resize(fd.nx());
  fd_view.gas.alpha = fd.alpha_g;
  fd_view.gas.u = fd.u_g;
  fd_view.liquid.u = fd.u_l;
  for (int i = 0; i < fd.nx(); ++i) fd_view.liquid.alpha[i] = 1.0 - fd.alpha_g[i];
  r.fd_flux_deviation = flux_deviation(fd_view);
  r.analytic_residual = analytic_residual(lbm, config);
  return r;
}

RunResult run(const ScenarioConfig& config, const RunOptions& options) {
  RunResult result;
  const bool do_lbm = options.engine != Engine::Fd;
  const bool do_fd = options.engine != Engine::Lbm;
  if (options.lbm_csv) write_csv_header(*options.lbm_csv);
  if (options.fd_csv) write_csv_header(*options.fd_csv);

  if (do_lbm) {
    try {
      LbmSolver solver(config);
      solver.initialize();
      LbmSnapshotHook hook;
      if (options.lbm_csv)
        hook = [&](std::int64_t step, const TwoPhaseState& s) {
          write_csv_rows(*options.lbm_csv, static_cast<double>(step), s);
        };
      result.lbm_info = solver.run(options.snapshot_every, hook);
      result.lbm_final = solver.state();
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw EngineError(Engine::Lbm, e.what());
    }
  }
  if (do_fd) {
    try {
      FdSolver solver(config, options.fd);
      FdSnapshotHook hook;
      if (options.fd_csv)
        hook = [&](double t, const FDState& s) {
          write_csv_rows(*options.fd_csv, t, fd_fields(s, config, t));
        };
      result.fd_info = solver.run(options.snapshot_every, hook);
      result.fd_final = solver.state();
      result.fd_fields = solver.fields();
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw EngineError(Engine::Fd, e.what());
    }
  }
  if (do_lbm && do_fd) {
    ComparisonReport r = compare(*result.lbm_final, *result.fd_final, config,
                                 options.pressure_by_gradient);
    r.lbm_seconds = result.lbm_info.seconds;
    r.fd_seconds = result.fd_info.seconds;
    result.report = r;
  }
  return result;
}

std::vector<double> restrict_to(const std::vector<double>& fine, int n_coarse) {
  const int nf = static_cast<int>(fine.size());
  if (nf < 2 || n_coarse < 1) throw HarnessError("restrict_to: profile too short");
  std::vector<double> out(n_coarse);
  for (int i = 0; i < n_coarse; ++i) {
    const double y = (i + 0.5) / n_coarse * nf - 0.5;
    const int j = std::clamp(static_cast<int>(std::floor(y)), 0, nf - 2);
    const double w = y - j;
    out[i] = (1.0 - w) * fine[j] + w * fine[j + 1];
  }
  return out;
}

OrderEstimate observed_order(const std::string& field,
                             const std::vector<std::vector<double>>& profiles,
                             const std::vector<double>& scales) {
  if (profiles.size() < 3 || profiles.size() != scales.size())
    throw HarnessError("convergence study needs at least three scales");
  const double ratio = scales[1] / scales[0];
  for (size_t k = 1; k < scales.size(); ++k)
    if (!(scales[k] > scales[k - 1]) || std::abs(scales[k] / scales[k - 1] - ratio) > 1e-9 * ratio)
      throw HarnessError("convergence scales must increase with a constant ratio");

  OrderEstimate est;
  est.field = field;
  for (size_t k = 0; k + 1 < profiles.size(); ++k) {
    const auto& coarse = profiles[k];
    const std::vector<double> fine = restrict_to(profiles[k + 1], static_cast<int>(coarse.size()));
    double sum = 0.0, linf = 0.0;
    for (size_t i = 0; i < coarse.size(); ++i) {
      const double e = std::abs(fine[i] - coarse[i]);
      sum += e * e;
      linf = std::max(linf, e);
    }
    est.errors_l2.push_back(std::sqrt(sum / coarse.size()));
    est.errors_linf.push_back(linf);
  }
  const double log_ratio = std::log(ratio);
  std::vector<double> all;
  for (size_t k = 0; k + 1 < est.errors_l2.size(); ++k) {
    const double e1 = est.errors_l2[k], e2 = est.errors_l2[k + 1];
    const double m1 = est.errors_linf[k], m2 = est.errors_linf[k + 1];
    if (!(e2 < e1)) est.monotone = false;
    if (e1 <= 0.0 || e2 <= 0.0 || m1 <= 0.0 || m2 <= 0.0) {
      est.defined = false;
      est.orders.push_back(kNaN);
      continue;
    }
    const double p = std::log(e1 / e2) / log_ratio;
    est.orders.push_back(p);
    all.push_back(p);
    all.push_back(std::log(m1 / m2) / log_ratio);
  }
  if (!est.defined || all.empty()) {
    est.defined = false;
    est.order = est.band_low = est.band_high = kNaN;
    return est;
  }
  est.order = est.orders.back();
  est.band_low = *std::min_element(all.begin(), all.end());
  est.band_high = *std::max_element(all.begin(), all.end());
  return est;
}

ConvergenceResult convergence_study(const std::vector<std::vector<double>>& alpha_g,
                                    const std::vector<std::vector<double>>& u_g,
                                    const std::vector<std::vector<double>>& u_l,
                                    const std::vector<double>& scales) {
  ConvergenceResult r;
  r.scales = scales;
  r.fields.push_back(observed_order("alpha_g", alpha_g, scales));
  r.fields.push_back(observed_order("u_g", u_g, scales));
  r.fields.push_back(observed_order("u_l", u_l, scales));
  return r;
}

ConvergenceResult convergence_study(const ScenarioConfig& base, const std::vector<double>& scales) {
  std::vector<double> sorted = scales;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 3) throw HarnessError("convergence study needs at least three scales");
  std::vector<std::vector<double>> a, ug, ul;
  std::vector<double> seconds;
  for (double s : sorted) {
    const ScenarioConfig c = apply_scale(base, s);
    RunOptions opt;
    opt.engine = Engine::Lbm;
    const RunResult res = run(c, opt);
    const TwoPhaseState& st = *res.lbm_final;
    a.push_back(st.gas.alpha);
    std::vector<double> g = st.gas.u, l = st.liquid.u;
    for (double& v : g) v *= s;
    for (double& v : l) v *= s;
    ug.push_back(std::move(g));
    ul.push_back(std::move(l));
    seconds.push_back(res.lbm_info.seconds);
  }
  ConvergenceResult r = convergence_study(a, ug, ul, sorted);
  r.seconds = seconds;
  return r;
}

void write_config(std::ostream& os, const ScenarioConfig& c) {
  for (const auto& [name, key] : config_keys()) os << name << " = " << key.get(c) << '\n';
}

ScenarioConfig read_config(std::istream& is) {
  ScenarioConfig c;
  std::map<std::string, const Key*> lookup;
  for (const auto& [name, key] : config_keys()) lookup[name] = &key;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = lookup.find(key);
    if (it == lookup.end())
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    it->second->set(c, value);
  }
  c.validate();
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  return read_config(in);
}

void write_csv_header(std::ostream& os) {
  os << "step,x,alpha_g,alpha_l,u_g,u_l,p_k,S_g,S_l,sigma_g,sigma_l,G_g,G_l,phi\n";
}

void write_csv_rows(std::ostream& os, double step, const TwoPhaseState& s) {
  std::string row;
  for (int i = 0; i < s.nx; ++i) {
    const double x = (i + 0.5) / s.nx;
    row = format_double(step);
    for (double v : {x, s.gas.alpha[i], s.liquid.alpha[i], s.gas.u[i], s.liquid.u[i], s.p_k[i],
                     s.gas.S_frozen[i], s.liquid.S_frozen[i], s.gas.sigma[i], s.liquid.sigma[i],
                     s.gas.G[i], s.liquid.G[i], s.phi[i]}) {
      row += ',';
      row += format_double(v);
    }
    row += '\n';
    os << row;
  }
}

void write_report(std::ostream& os, const ComparisonReport& r) {
  auto kv = [&os](const std::string& k, double v) { os << k << " = " << format_double(v) << '\n'; };
  const std::pair<const char*, const FieldDiff*> fields[] = {
      {"alpha_g", &r.alpha_g}, {"u_g", &r.u_g}, {"u_l", &r.u_l}, {"p_k", &r.p_k}};
  for (const auto& [name, d] : fields) {
    kv(std::string(name) + "_linf", d->linf);
    kv(std::string(name) + "_l2", d->l2);
  }
  os << "p_k_by_gradient = " << (r.p_k_by_gradient ? "true" : "false") << '\n';
  for (const auto& [tag, o] : {std::pair{"lbm", &r.lbm_outlet}, std::pair{"fd", &r.fd_outlet}}) {
    const std::string p = std::string(tag) + "_outlet_";
    kv(p + "u_g", o->u_g);
    kv(p + "u_l", o->u_l);
    kv(p + "alpha_g", o->alpha_g);
    kv(p + "flux", o->flux);
  }
  kv("lbm_flux_deviation", r.lbm_flux_deviation);
  kv("fd_flux_deviation", r.fd_flux_deviation);
  kv("analytic_residual", r.analytic_residual);
  kv("lbm_seconds", r.lbm_seconds);
  kv("fd_seconds", r.fd_seconds);
}

void write_svg_plot(std::ostream& os, const std::string& title, const std::vector<double>& lbm,
                    const std::vector<double>& fd) {
  constexpr double W = 640, H = 400, L = 70, Rm = 20, T = 40, B = 50;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto* v : {&lbm, &fd})
    for (double y : *v) {
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
  if (!(hi > lo)) {
    const double pad = std::max(std::abs(lo), 1.0) * 1e-3;
    lo -= pad;
    hi += pad;
  }
  auto px = [&](double x) { return L + x * (W - L - Rm); };
  auto py = [&](double y) { return H - B - (y - lo) / (hi - lo) * (H - T - B); };
  auto polyline = [&](const std::vector<double>& v, const char* color, const char* dash) {
    if (v.empty()) return;
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"" << dash
       << " points=\"";
    char buf[64];
    for (size_t i = 0; i < v.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px((i + 0.5) / v.size()), py(v[i]));
      os << buf;
    }
    os << "\"/>\n";
  };
  char buf[128];
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
     << "font-size=\"15\">" << title << "</text>\n";
  os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - Rm << "\" height=\""
     << H - T - B << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double y = lo + (hi - lo) * k / 4.0;
    std::snprintf(buf, sizeof buf, "%.4g", y);
    os << "<text x=\"" << L - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\" "
       << "font-family=\"sans-serif\" font-size=\"11\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof buf, "%.2g", k / 4.0);
    os << "<text x=\"" << px(k / 4.0) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" "
       << "font-family=\"sans-serif\" font-size=\"11\">" << buf << "</text>\n";
  }
  os << "<text x=\"" << (L + W - Rm) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" "
     << "font-family=\"sans-serif\" font-size=\"12\">x / L</text>\n";
  polyline(fd, "#d62728", " stroke-dasharray=\"6,4\"");
  polyline(lbm, "#1f77b4", "");
  os << "<text x=\"" << L + 10 << "\" y=\"" << T + 16 << "\" fill=\"#1f77b4\" "
     << "font-family=\"sans-serif\" font-size=\"12\">LBM</text>\n";
  os << "<text x=\"" << L + 10 << "\" y=\"" << T + 32 << "\" fill=\"#d62728\" "
     << "font-family=\"sans-serif\" font-size=\"12\">FD</text>\n";
  os << "</svg>\n";
}

}  // namespace eelbm
