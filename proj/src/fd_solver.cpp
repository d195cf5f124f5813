#include "eelbm/fd_solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <utility>

#include <boost/numeric/odeint.hpp>

namespace eelbm {

namespace odeint = boost::numeric::odeint;

namespace {

inline double safe_alpha(double a) { return a > kAlphaFloor ? a : kAlphaFloor; }

constexpr int kHalfWindow = 6;
constexpr double kSigma = (12.0 - 1.0) / 5.0;

// Symmetric weights for offsets -6..6; the outermost pair counts half so the
// window spans 12 node intervals.
std::array<double, 2 * kHalfWindow + 1> gaussian_weights() {
  std::array<double, 2 * kHalfWindow + 1> w{};
  for (int k = -kHalfWindow; k <= kHalfWindow; ++k) {
    double v = std::exp(-0.5 * (k / kSigma) * (k / kSigma));
    if (std::abs(k) == kHalfWindow) v *= 0.5;
    w[k + kHalfWindow] = v;
  }
  return w;
}

// Flat state vector [p_k | u_g | u_l | alpha_g] used by the integrator.
using Flat = std::vector<double>;

void unpack(const Flat& x, int n, FDState& s) {
  s.p_k.assign(x.begin(), x.begin() + n);
  s.u_g.assign(x.begin() + n, x.begin() + 2 * n);
  s.u_l.assign(x.begin() + 2 * n, x.begin() + 3 * n);
  s.alpha_g.assign(x.begin() + 3 * n, x.end());
}

void pack(const FDState& s, Flat& x) {
  const int n = s.nx();
  x.resize(4 * static_cast<size_t>(n));
  std::copy(s.p_k.begin(), s.p_k.end(), x.begin());
  std::copy(s.u_g.begin(), s.u_g.end(), x.begin() + n);
  std::copy(s.u_l.begin(), s.u_l.end(), x.begin() + 2 * n);
  std::copy(s.alpha_g.begin(), s.alpha_g.end(), x.begin() + 3 * n);
}

// Everything the right-hand side produces, including the diagnostics.
struct Terms {
  NodalVector S_g, S_l, sigma_g, sigma_l, grad_g, grad_l, G_g, G_l;
};

// Core evaluation on raw pointers so that the integrator path does not
// allocate. Outputs of length n each; terms may be null.
// Inlet: Dirichlet at the half-way face. Outlet: pressure pinned at the
// face, zero-gradient velocities, extrapolated fraction.
void set_ghosts(std::vector<double>& w, int n, FdField which, const InletValues& in) {
  switch (which) {
    case FdField::Pk:
      w[0] = 2.0 * w[1] - w[2];
      w[n + 1] = 2.0 * kCs2 - w[n];
      return;
    case FdField::Ug:
      w[0] = 2.0 * in.u_g - w[1];
      w[n + 1] = w[n];
      return;
    case FdField::Ul:
      w[0] = 2.0 * in.u_l - w[1];
      w[n + 1] = w[n];
      return;
    case FdField::AlphaG:
      w[0] = 2.0 * in.alpha_g - w[1];
      w[n + 1] = 2.0 * w[n] - w[n - 1];
      return;
  }
}

class Evaluator {
 public:
  Evaluator(const ScenarioConfig& c) : c_(c), n_(c.nx) {
    for (auto* v : {&p_, &ug_, &ul_, &ag_}) v->resize(n_ + 2);
  }

  void operator()(const double* p, const double* ug, const double* ul, const double* ag, double t,
                  FdFrozen* frozen, double* dp, double* dug, double* dul, double* dag,
                  Terms* terms) {
    const int n = n_;
    const InletValues in = ramp_inlet(c_, t);
    fill(p, p_, FdField::Pk, in);
    fill(ug, ug_, FdField::Ug, in);
    fill(ul, ul_, FdField::Ul, in);
    fill(ag, ag_, FdField::AlphaG, in);

    const double R = c_.density_ratio();
    const double inv_R = 1.0 / R;
    const double buoyancy = (R - 1.0) * c_.g_hat;
    const bool freeze = frozen != nullptr && c_.n_gamma > 1;
    bool refresh = !freeze;
    if (freeze) {
      const auto epoch = static_cast<std::int64_t>(std::floor(t / static_cast<double>(c_.n_gamma)));
      if (epoch != frozen->epoch) {
        frozen->epoch = epoch;
        frozen->S_g.assign(n, 0.0);
        frozen->S_l.assign(n, 0.0);
        frozen->lambda.assign(n, 0.0);
        refresh = true;
      }
    }
    const bool cgw = c_.drag_model == DragModel::CliftGraceWeber;

    for (int j = 1; j <= n; ++j) {
      const int i = j - 1;
      // Fluxes at the neighbours, built from wrapped values.
      auto cg = [&](int k) { return (1.0 - ag_[k]) * (ug_[k] - ul_[k]); };
      auto cl = [&](int k) { return ag_[k] * (ul_[k] - ug_[k]); };
      double S_g = 0.5 * (cg(j + 1) - cg(j - 1));
      double S_l = 0.5 * (cl(j + 1) - cl(j - 1));
      const double eps_g1 = p_[j] / kCs2 - 1.0;
      double lambda = cgw ? cgw_lambda(ag_[j], R) : 0.0;
      if (refresh) {
        S_g -= c_.gamma * ug_[j] * ug_[j] * eps_g1;
        S_l -= c_.gamma * ul_[j] * ul_[j] * eps_g1 * inv_R;
        if (freeze) {
          frozen->S_g[i] = S_g;
          frozen->S_l[i] = S_l;
          frozen->lambda[i] = lambda;
        }
      } else {
        S_g = frozen->S_g[i];
        S_l = frozen->S_l[i];
        lambda = frozen->lambda[i];
      }
      const double K_I = cgw ? c_.drag_interphase * lambda : c_.drag_interphase;
      const double K_W = cgw ? c_.drag_wall * lambda : c_.drag_wall;

      const double Dug = 0.5 * (ug_[j + 1] - ug_[j - 1]);
      const double Dul = 0.5 * (ul_[j + 1] - ul_[j - 1]);
      const double Dp = 0.5 * (p_[j + 1] - p_[j - 1]);
      const double Dag = 0.5 * (ag_[j + 1] - ag_[j - 1]);
      const double D2ug = ug_[j + 1] - 2.0 * ug_[j] + ug_[j - 1];
      const double D2ul = ul_[j + 1] - 2.0 * ul_[j] + ul_[j - 1];
      const double Dug2 = 0.5 * (ug_[j + 1] * ug_[j + 1] - ug_[j - 1] * ug_[j - 1]);
      const double Dul2 = 0.5 * (ul_[j + 1] * ul_[j + 1] - ul_[j - 1] * ul_[j - 1]);
      const double Dagug = 0.5 * (ag_[j + 1] * ug_[j + 1] - ag_[j - 1] * ug_[j - 1]);

      const double a_g = ag_[j];
      const double a_l = 1.0 - a_g;
      const double sigma_g = c_.nu_g * Dug;
      const double sigma_l = c_.nu_l * Dul;
      const double grad_g = Dag / safe_alpha(a_g);
      const double grad_l = -Dag / safe_alpha(a_l);
      const double slip = ul_[j] - ug_[j];

      const double G_g = S_g * ug_[j] + sigma_g * grad_g + buoyancy +
                         K_I / safe_alpha(a_g) * std::abs(slip) * slip;
      // Wall friction opposes the liquid velocity.
      const double G_l = S_l * ul_[j] + sigma_l * grad_l -
                         inv_R * K_I / safe_alpha(a_l) * std::abs(slip) * slip -
                         inv_R * K_W / safe_alpha(a_l) * std::abs(ul_[j]) * ul_[j];

      dp[i] = -kCs2 * Dug + kCs2 * S_g;
      dug[i] = -Dug2 - Dp + c_.nu_g * D2ug + G_g;
      dul[i] = -Dul2 - inv_R * Dp + c_.nu_l * D2ul + G_l;
      dag[i] = -Dagug;

      if (terms) {
        terms->S_g[i] = S_g;
        terms->S_l[i] = S_l;
        terms->sigma_g[i] = sigma_g;
        terms->sigma_l[i] = sigma_l;
        terms->grad_g[i] = grad_g;
        terms->grad_l[i] = grad_l;
        terms->G_g[i] = G_g;
        terms->G_l[i] = G_l;
      }
    }
  }

 private:
  void fill(const double* v, std::vector<double>& w, FdField which, const InletValues& in) const {
    std::copy(v, v + n_, w.begin() + 1);
    set_ghosts(w, n_, which, in);
  }

  const ScenarioConfig& c_;
  int n_;
  std::vector<double> p_, ug_, ul_, ag_;
};

FDState evaluate(const FDState& s, const ScenarioConfig& config, double t, FdFrozen* frozen,
                 Terms* terms) {
  if (s.nx() != config.nx) throw ConfigError("FD state size does not match nx");
  const int n = config.nx;
  FDState d;
  for (auto* v : {&d.p_k, &d.u_g, &d.u_l, &d.alpha_g}) v->assign(n, 0.0);
  if (terms)
    for (auto* v : {&terms->S_g, &terms->S_l, &terms->sigma_g, &terms->sigma_l, &terms->grad_g,
                    &terms->grad_l, &terms->G_g, &terms->G_l})
      v->assign(n, 0.0);
  Evaluator eval(config);
  eval(s.p_k.data(), s.u_g.data(), s.u_l.data(), s.alpha_g.data(), t, frozen, d.p_k.data(),
       d.u_g.data(), d.u_l.data(), d.alpha_g.data(), terms);
  return d;
}

}  // namespace

FDState FDState::rest(int nx, double alpha_g) {
  FDState s;
  s.p_k.assign(nx, kCs2);
  s.u_g.assign(nx, 0.0);
  s.u_l.assign(nx, 0.0);
  s.alpha_g.assign(nx, alpha_g);
  return s;
}

NodalVector dx(const WrappedVector& w) {
  const int n = static_cast<int>(w.size()) - 2;
  NodalVector out(std::max(n, 0));
  for (int i = 1; i <= n; ++i) out[i - 1] = 0.5 * (w[i + 1] - w[i - 1]);
  return out;
}

NodalVector dx2(const WrappedVector& w) {
  const int n = static_cast<int>(w.size()) - 2;
  NodalVector out(std::max(n, 0));
  for (int i = 1; i <= n; ++i) out[i - 1] = w[i + 1] - 2.0 * w[i] + w[i - 1];
  return out;
}

WrappedVector wrap(const NodalVector& v, FdField which, const InletValues& inlet) {
  const int n = static_cast<int>(v.size());
  if (n < 2) throw ConfigError("wrap needs at least two nodes");
  WrappedVector w(n + 2);
  std::copy(v.begin(), v.end(), w.begin() + 1);
  set_ghosts(w, n, which, inlet);
  return w;
}

NodalVector gaussian_smooth(const NodalVector& v) {
  static const auto w = gaussian_weights();
  const int n = static_cast<int>(v.size());
  NodalVector out(n);
  for (int i = 0; i < n; ++i) {
    double num = 0.0, den = 0.0;
    for (int k = -kHalfWindow; k <= kHalfWindow; ++k) {
      const int j = i + k;
      if (j < 0 || j >= n) continue;
      num += w[k + kHalfWindow] * v[j];
      den += w[k + kHalfWindow];
    }
    out[i] = num / den;
  }
  return out;
}

FDState rhs(const FDState& state, const ScenarioConfig& config, double t, FdFrozen* frozen) {
  return evaluate(state, config, t, frozen, nullptr);
}

TwoPhaseState fd_fields(const FDState& state, const ScenarioConfig& config, double t,
                        FdFrozen* frozen) {
  Terms terms;
  evaluate(state, config, t, frozen, &terms);
  const int n = config.nx;
  const double R = config.density_ratio();
  TwoPhaseState s;
  s.resize(n);
  for (int i = 0; i < n; ++i) {
    const double eps_g = state.p_k[i] / kCs2;
    s.p_k[i] = state.p_k[i];
    s.phi[i] = (1.0 + (eps_g - 1.0) / R) / eps_g;
    s.gas.eps[i] = eps_g;
    s.liquid.eps[i] = eps_g;
    s.gas.u[i] = state.u_g[i];
    s.liquid.u[i] = state.u_l[i];
    s.gas.alpha[i] = state.alpha_g[i];
    s.liquid.alpha[i] = 1.0 - state.alpha_g[i];
    s.gas.S[i] = s.gas.S_frozen[i] = terms.S_g[i];
    s.liquid.S[i] = s.liquid.S_frozen[i] = terms.S_l[i];
    s.gas.sigma[i] = terms.sigma_g[i];
    s.liquid.sigma[i] = terms.sigma_l[i];
    s.gas.grad[i] = terms.grad_g[i];
    s.liquid.grad[i] = terms.grad_l[i];
    s.gas.G[i] = terms.G_g[i];
    s.liquid.G[i] = terms.G_l[i];
    s.gas.upsilon[i] = state.u_g[i];
    s.liquid.upsilon[i] = state.u_l[i];
  }
  return s;
}

FdSolver::FdSolver(ScenarioConfig config, FdOptions options)
    : config_(std::move(config)), options_(options) {
  config_.validate();
  if (config_.nx < 12) throw ConfigError("the FD engine needs nx >= 12 for smoothing");
  state_ = FDState::rest(config_.nx, config_.alpha_g.min);
}

void FdSolver::reset(const FDState& state, double t) {
  if (state.nx() != config_.nx || static_cast<int>(state.u_g.size()) != config_.nx ||
      static_cast<int>(state.u_l.size()) != config_.nx ||
      static_cast<int>(state.alpha_g.size()) != config_.nx)
    throw ConfigError("FD state size does not match nx");
  if (!(t >= 0.0 && t <= static_cast<double>(config_.nt)))
    throw ConfigError("FD restart time outside [0, nt]");
  state_ = state;
  t_ = t;
}

TwoPhaseState FdSolver::fields() const {
  FdFrozen frozen;
  return fd_fields(state_, config_, t_, config_.n_gamma > 1 ? &frozen : nullptr);
}

FdRunInfo FdSolver::run(std::int64_t snapshot_every, const FdSnapshotHook& hook) {
  const auto clock0 = std::chrono::steady_clock::now();
  const int n = config_.nx;
  FdRunInfo info;
  FdFrozen frozen;
  Evaluator eval(config_);

  auto system = [&](const Flat& x, Flat& dxdt, double t) {
    dxdt.resize(x.size());
    eval(x.data(), x.data() + n, x.data() + 2 * n, x.data() + 3 * n, t, &frozen, dxdt.data(),
         dxdt.data() + n, dxdt.data() + 2 * n, dxdt.data() + 3 * n, nullptr);
  };

  using Stepper = odeint::runge_kutta_dopri5<Flat>;
  using Checker = odeint::default_error_checker<double, odeint::range_algebra,
                                                odeint::default_operations>;
  odeint::controlled_runge_kutta<Stepper, Checker> stepper(
      Checker(options_.abs_tol, options_.rel_tol, 1.0, 0.0));

  Flat x, dxdt;
  pack(state_, x);
  system(x, dxdt, t_);

  const double t_end = static_cast<double>(config_.nt);
  const double smooth_until =
      options_.smooth_until < 0.0 ? static_cast<double>(config_.n_ramp) : options_.smooth_until;
  const double every = snapshot_every > 0 ? static_cast<double>(snapshot_every) : 0.0;
  double next_snapshot = every > 0.0 ? every * std::floor(t_ / every + 1.0) : t_end;
  double dt = options_.initial_dt;

  // Steady check over fixed windows of model time.
  const bool detect = config_.steady_tol > 0.0;
  const double window = static_cast<double>(config_.steady_window);
  double next_check = t_ + window;
  Flat checkpoint = x;

  double last_emitted = -1.0;
  auto emit = [&]() {
    unpack(x, n, state_);
    if (hook) hook(t_, state_);
    last_emitted = t_;
  };
  if (hook && every > 0.0 && t_ == 0.0) emit();

  while (t_ < t_end) {
    const double target = std::min({next_snapshot, t_end, detect ? next_check : t_end});
    double h = std::min(dt, target - t_);
    odeint::controlled_step_result res = stepper.try_step(system, x, dxdt, t_, h);
    if (res == odeint::fail) {
      ++info.rejected;
      dt = h;
      if (dt < options_.min_dt)
        throw SolverError("FD step size underflow at t = " + std::to_string(t_));
      continue;
    }
    ++info.accepted;
    // try_step advanced t_ and proposed the next step in h.
    dt = std::max(h, options_.min_dt);
    bool modified = false;
    for (int i = 3 * n; i < 4 * n; ++i) {
      const double a = std::clamp(x[i], 0.0, 1.0);
      if (a != x[i]) {
        x[i] = a;
        modified = true;
      }
    }
    if (options_.smooth_every > 0 && t_ <= smooth_until &&
        info.accepted % options_.smooth_every == 0) {
      NodalVector part(n);
      for (int f = 0; f < 4; ++f) {
        std::copy(x.begin() + f * n, x.begin() + (f + 1) * n, part.begin());
        const NodalVector sm = gaussian_smooth(part);
        std::copy(sm.begin(), sm.end(), x.begin() + f * n);
      }
      modified = true;
    }
    if (modified) system(x, dxdt, t_);
    for (double v : x)
      if (!std::isfinite(v)) throw SolverError("non-finite FD state at t = " + std::to_string(t_));

    // Snap accumulated round-off onto the target time.
    if (std::abs(t_ - target) < 1e-9 * std::max(1.0, target)) t_ = target;

    if (detect && t_ >= next_check) {
      double change = 0.0;
      for (int i = 0; i < 4 * n; ++i) {
        const double scale = i < n ? 1.0 / kCs2 : 1.0;
        change = std::max(change, std::abs(x[i] - checkpoint[i]) * scale);
      }
      checkpoint = x;
      next_check = t_ + window;
      if (change / window < config_.steady_tol) {
        info.steady = true;
        break;
      }
    }
    if (every > 0.0 && t_ >= next_snapshot) {
      emit();
      next_snapshot += every;
    }
  }
  if (last_emitted != t_) emit();
  unpack(x, n, state_);
  info.t_end = t_;
  info.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - clock0).count();
  return info;
}

}  // namespace eelbm
