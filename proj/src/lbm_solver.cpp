#include "eelbm/lbm_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <utility>

namespace eelbm {

namespace {

constexpr double kMaxSource = 0.1;

// Streams the lattice kinetic equilibrium f_S(1, c) into out and returns
// S = 1 - beta(t+1). Missing populations come from full-way extrapolated
// ghosts (beta_B = 1, c_B = 2c(edge) - c(edge -+ 1)).
void beta_stream(const std::vector<double>& c, double* out, std::vector<double>& S) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    const double c_left = i > 0 ? c[i - 1] : 2.0 * c[0] - c[1];
    const double c_right = i < n - 1 ? c[i + 1] : 2.0 * c[n - 1] - c[n - 2];
    // Components of f_S(1, c) taken from the node each population leaves.
    out[3 * i] = 2.0 / 3.0 - c[i] * c[i];
    out[3 * i + 1] = kSixth * (1.0 + 3.0 * c_left + 3.0 * c_left * c_left);
    out[3 * i + 2] = kSixth * (1.0 - 3.0 * c_right + 3.0 * c_right * c_right);
    S[i] = 1.0 - (out[3 * i] + out[3 * i + 1] + out[3 * i + 2]);
  }
}

inline double safe_alpha(double a) { return a > kAlphaFloor ? a : kAlphaFloor; }

}  // namespace

void PhaseFields::resize(int nx) {
  for (auto* v : {&eps, &u, &Pi, &alpha, &upsilon, &grad, &S, &S_frozen, &sigma, &G})
    v->assign(nx, 0.0);
}

void TwoPhaseState::resize(int n) {
  nx = n;
  gas.resize(n);
  liquid.resize(n);
  phi.assign(n, 1.0);
  p_k.assign(n, kCs2);
}

DistributionField beta_source_step(const std::vector<double>& c, SchemeId id,
                                   std::vector<double>& S) {
  const int n = static_cast<int>(c.size());
  if (n < 3) throw SolverError("beta scheme needs at least 3 nodes");
  DistributionField f(id, n);
  S.resize(n);
  beta_stream(c, f.data(), S);
  return f;
}

LbmSolver::LbmSolver(ScenarioConfig config) : config_(std::move(config)) {
  config_.validate();
  nx_ = config_.nx;
  R_ = config_.density_ratio();
  relax_[0] = relaxation_from_viscosity(config_.nu_g, config_.bulk);
  relax_[1] = relaxation_from_viscosity(config_.nu_l, config_.bulk);
  omega_alpha_ = alpha_relaxation(config_.chi_alpha, config_.mesh_ratio());
  fg_ = DistributionField(SchemeId::Fg, nx_);
  fl_ = DistributionField(SchemeId::Fl, nx_);
  fag_ = DistributionField(SchemeId::FalphaG, nx_);
  fal_ = DistributionField(SchemeId::FalphaL, nx_);
  fbg_ = DistributionField(SchemeId::FbetaG, nx_);
  fbl_ = DistributionField(SchemeId::FbetaL, nx_);
  tmp_ = DistributionField(SchemeId::Fg, nx_);
  state_.resize(nx_);
  source_cache_.assign(nx_, SourceCache{});
  lambda_cache_.assign(nx_, 0.0);
  c_g_.assign(nx_, 0.0);
  c_l_.assign(nx_, 0.0);
  J_g_.assign(nx_, 0.0);
  J_l_.assign(nx_, 0.0);
  initialize();
}

void LbmSolver::initialize() {
  t_ = 0;
  const double a0 = config_.alpha_g.min;
  for (int i = 0; i < nx_; ++i) {
    fg_.set(i, equilibrium_incompressible(1.0, 1.0, 0.0));
    fl_.set(i, equilibrium_incompressible(1.0, 1.0, 0.0));
    fag_.set(i, equilibrium_standard(a0, 0.0));
    fal_.set(i, equilibrium_standard(1.0 - a0, 0.0));
    fbg_.set(i, equilibrium_standard(1.0, 0.0));
    fbl_.set(i, equilibrium_standard(1.0, 0.0));
  }
  source_cache_.assign(nx_, SourceCache{});
  lambda_cache_.assign(nx_, 0.0);
}

const DistributionField& LbmSolver::field(SchemeId id) const {
  switch (id) {
    case SchemeId::Fg: return fg_;
    case SchemeId::Fl: return fl_;
    case SchemeId::FalphaG: return fag_;
    case SchemeId::FalphaL: return fal_;
    case SchemeId::FbetaG: return fbg_;
    case SchemeId::FbetaL: return fbl_;
  }
  return fg_;
}

DistributionField& LbmSolver::field(SchemeId id) {
  return const_cast<DistributionField&>(std::as_const(*this).field(id));
}

void LbmSolver::prepare() {
  inlet_ = ramp_inlet(config_, static_cast<double>(t_));
  auto& g = state_.gas;
  auto& l = state_.liquid;
  const double* pg = fg_.data();
  const double* pl = fl_.data();
  double* pag = fag_.data();
  double* pal = fal_.data();

  for (int i = 0; i < nx_; ++i) {
    const int k = 3 * i;
    g.eps[i] = pg[k] + pg[k + 1] + pg[k + 2];
    g.u[i] = pg[k + 1] - pg[k + 2];
    g.Pi[i] = pg[k + 1] + pg[k + 2];
    l.eps[i] = pl[k] + pl[k + 1] + pl[k + 2];
    l.u[i] = pl[k + 1] - pl[k + 2];
    l.Pi[i] = pl[k + 1] + pl[k + 2];

    const double ag_raw = pag[k] + pag[k + 1] + pag[k + 2];
    const double al_raw = pal[k] + pal[k + 1] + pal[k + 2];
    J_g_[i] = pag[k + 1] - pag[k + 2];
    J_l_[i] = pal[k + 1] - pal[k + 2];

    std::pair<double, double> ab;
    try {
      ab = spalding_bound(ag_raw, al_raw);
    } catch (const SolverError& e) {
      throw SolverError(e.what(), i + 1, t_);
    }
    // Shift along the rest-weight direction so the zeroth moment becomes the
    // bounded value and the first moment is untouched.
    const double dg = ab.first - ag_raw;
    const double dl = ab.second - al_raw;
    for (int q = 0; q < 3; ++q) {
      pag[k + q] += LatticeSpec::weights[q] * dg;
      pal[k + q] += LatticeSpec::weights[q] * dl;
    }
    g.alpha[i] = ab.first;
    l.alpha[i] = ab.second;
    g.upsilon[i] = J_g_[i] / safe_alpha(ab.first);
    l.upsilon[i] = J_l_[i] / safe_alpha(ab.second);

    // The liquid rest population is a passive accumulator, so eps_l (and with
    // it this phi) is not controlled near the boundaries; phi*eps_l is.
    state_.phi[i] = (1.0 + (g.eps[i] - 1.0) / R_) / l.eps[i];
    state_.p_k[i] = kCs2 * g.eps[i];

    c_g_[i] = l.alpha[i] * (g.u[i] - l.u[i]);
    c_l_[i] = g.alpha[i] * (l.u[i] - g.u[i]);
  }

  beta_stream(c_g_, fbg_.data(), g.S);
  beta_stream(c_l_, fbl_.data(), l.S);

  const double wa = omega_alpha_ / kCs2;
  const Relaxation rg = relax_[0];
  const Relaxation rl = relax_[1];
  const double buoyancy = (R_ - 1.0) * config_.g_hat;
  const double inv_R = 1.0 / R_;

  for (int i = 0; i < nx_; ++i) {
    if (std::abs(g.S[i]) > kMaxSource || std::abs(l.S[i]) > kMaxSource)
      throw SolverError("continuity source exceeds incompressible scaling bound", i + 1, t_);

    const auto sf = stabilize_sources(g.S[i], l.S[i], g.eps[i], g.u[i], l.u[i], config_.gamma, R_,
                                      t_, config_.n_gamma, source_cache_[i]);
    g.S_frozen[i] = sf.first;
    l.S_frozen[i] = sf.second;

    const double ag = g.alpha[i];
    const double al = l.alpha[i];
    const double inv_ag = 1.0 / safe_alpha(ag);
    const double inv_al = 1.0 / safe_alpha(al);
    const auto grads = gradient_symmetrize(wa * (ag * g.u[i] - J_g_[i]), wa * (al * l.u[i] - J_l_[i]));
    g.grad[i] = grads.first * inv_ag;
    l.grad[i] = grads.second * inv_al;

    const double Pi_eq_g = kCs2 * g.eps[i] + g.u[i] * g.u[i];
    const double Pi_eq_l = kCs2 * (1.0 + (g.eps[i] - 1.0) * inv_R) + l.u[i] * l.u[i];
    g.sigma[i] = stress_1d(g.Pi[i], Pi_eq_g, g.S_frozen[i], rg.omega, rg.psi);
    l.sigma[i] = stress_1d(l.Pi[i], Pi_eq_l, l.S_frozen[i], rl.omega, rl.psi);

    const double K_I = drag_coefficient(ag, config_, t_, lambda_cache_[i]);
    const double K_W = wall_coefficient(config_, lambda_cache_[i]);
    const double slip = l.u[i] - g.u[i];

    g.G[i] = g.S_frozen[i] * g.u[i] + g.sigma[i] * g.grad[i] + buoyancy +
             K_I * inv_ag * std::abs(slip) * slip;
    l.G[i] = l.S_frozen[i] * l.u[i] + l.sigma[i] * l.grad[i] -
             K_I * inv_R * inv_al * std::abs(slip) * slip -
             K_W * inv_R * inv_al * std::abs(l.u[i]) * l.u[i];

    const double probe = g.eps[i] + g.u[i] + g.G[i] + l.eps[i] + l.u[i] + l.G[i] + ag;
    if (!std::isfinite(probe) || std::abs(g.u[i]) >= 1.0 || std::abs(l.u[i]) >= 1.0)
      check_finite();
  }
}

void LbmSolver::check_finite() const {
  const auto& g = state_.gas;
  const auto& l = state_.liquid;
  for (int i = 0; i < nx_; ++i) {
    const double probe = g.eps[i] + g.u[i] + g.G[i] + l.eps[i] + l.u[i] + l.G[i] + g.alpha[i];
    if (!std::isfinite(probe)) throw SolverError("non-finite field value", i + 1, t_);
    if (std::abs(g.u[i]) >= 1.0 || std::abs(l.u[i]) >= 1.0)
      throw SolverError("lattice velocity reached the sound barrier", i + 1, t_);
  }
}

void LbmSolver::collide_stream() {
  const auto& g = state_.gas;
  const auto& l = state_.liquid;
  const int n = nx_;
  const int last = n - 1;
  double* out = tmp_.data();

  auto pressure_factor = [this](double p_k) { return 1.0 + (p_k / kCs2 - 1.0) / R_; };

  auto hydro = [&](DistributionField& f, const PhaseFields& ph, bool liquid, const Relaxation& r,
                   double eps_in, double u_in) {
    const double* in = f.data();
    Dist3 post_first{}, post_last{};
    for (int i = 0; i < n; ++i) {
      const int k = 3 * i;
      // Only phi*eps enters the moving populations; the rest population takes
      // eps itself. Written this way the liquid needs no division by eps_l.
      const double pe = liquid ? pressure_factor(state_.p_k[i]) : ph.eps[i];
      Dist3 feq = equilibrium_incompressible(1.0, pe, ph.u[i]);
      feq[0] += ph.eps[i] - pe;
      const Dist3 fL = equilibrium_linearized(r.psi, ph.S_frozen[i], ph.G[i]);
      const double p0 = in[k] + r.omega * (feq[0] - in[k]) + fL[0];
      const double p1 = in[k + 1] + r.omega * (feq[1] - in[k + 1]) + fL[1];
      const double p2 = in[k + 2] + r.omega * (feq[2] - in[k + 2]) + fL[2];
      out[k] = p0;
      if (i < last) out[k + 4] = p1;
      if (i > 0) out[k - 1] = p2;
      if (i == 0) post_first = {p0, p1, p2};
      if (i == last) post_last = {p0, p1, p2};
    }
    static constexpr BoundaryRule inlet{Transfer::BB, EquilibriumFamily::Incompressible,
                                        BoundarySource::ExtrapolateHW, BoundarySource::Dirichlet};
    static constexpr BoundaryRule outlet{Transfer::ABB, EquilibriumFamily::Incompressible,
                                         BoundarySource::FixedOne, BoundarySource::ExtrapolateHW};
    // Delta_BB does not depend on the density, so phi*eps is passed with phi = 1.
    out[1] = boundary_transfer(inlet, post_first, 2, eps_in, u_in, 1.0);
    const double u_out = boundary_value(outlet.velocity_source, 0.0, ph.u[last], ph.u[last - 1]);
    // eps_g = eps_l = 1 at the outlet, hence phi = 1 there for both phases.
    out[3 * last + 2] = boundary_transfer(outlet, post_last, 1, 1.0, u_out, 1.0);
    f.swap_values(tmp_);
    out = tmp_.data();
  };

  auto alpha = [&](DistributionField& f, const PhaseFields& ph, double alpha_in, double u_in) {
    const double* in = f.data();
    const double w = omega_alpha_;
    Dist3 post_last{};
    for (int i = 0; i < n; ++i) {
      const int k = 3 * i;
      const Dist3 feq = equilibrium_standard(ph.alpha[i], ph.u[i]);
      const double p0 = in[k] + w * (feq[0] - in[k]);
      const double p1 = in[k + 1] + w * (feq[1] - in[k + 1]);
      const double p2 = in[k + 2] + w * (feq[2] - in[k + 2]);
      out[k] = p0;
      if (i < last) out[k + 4] = p1;
      if (i > 0) out[k - 1] = p2;
      if (i == last) post_last = {p0, p1, p2};
    }
    static constexpr BoundaryRule inlet{Transfer::EQ, EquilibriumFamily::Standard,
                                        BoundarySource::Dirichlet, BoundarySource::Dirichlet};
    static constexpr BoundaryRule outlet{Transfer::ABB, EquilibriumFamily::Standard,
                                         BoundarySource::ExtrapolateHW, BoundarySource::ExtrapolateHW};
    out[1] = boundary_transfer(inlet, Dist3{}, 2, alpha_in, u_in);
    const double a_out = boundary_value(outlet.density_source, 0.0, ph.alpha[last], ph.alpha[last - 1]);
    const double u_out = boundary_value(outlet.velocity_source, 0.0, ph.u[last], ph.u[last - 1]);
    out[3 * last + 2] = boundary_transfer(outlet, post_last, 1, a_out, u_out);
    f.swap_values(tmp_);
    out = tmp_.data();
  };

  const double eps_g_in = boundary_value(BoundarySource::ExtrapolateHW, 0.0, g.eps[0], g.eps[1]);
  hydro(fg_, g, false, relax_[0], eps_g_in, inlet_.u_g);
  hydro(fl_, l, true, relax_[1], 1.0 + (eps_g_in - 1.0) / R_, inlet_.u_l);
  alpha(fag_, g, inlet_.alpha_g, inlet_.u_g);
  alpha(fal_, l, 1.0 - inlet_.alpha_g, inlet_.u_l);
}

void LbmSolver::step() {
  prepare();
  collide_stream();
  ++t_;
}

LbmRunInfo LbmSolver::run(std::int64_t snapshot_every, const LbmSnapshotHook& hook) {
  const auto t0 = std::chrono::steady_clock::now();
  LbmRunInfo info;
  const bool detect = config_.steady_tol > 0.0;
  std::vector<double> prev(4 * static_cast<size_t>(nx_), 0.0);
  std::int64_t quiet = 0;
  bool have_prev = false;

  for (;;) {
    prepare();
    bool done = t_ >= config_.nt;
    if (detect) {
      const auto& g = state_.gas;
      const auto& l = state_.liquid;
      double change = 0.0;
      for (int i = 0; i < nx_; ++i) {
        const double cur[4] = {g.alpha[i], g.u[i], l.u[i], g.eps[i]};
        for (int k = 0; k < 4; ++k) {
          double& p = prev[4 * i + k];
          change = std::max(change, std::abs(cur[k] - p));
          p = cur[k];
        }
      }
      if (have_prev && change < config_.steady_tol) {
        if (++quiet >= config_.steady_window) {
          info.steady = true;
          done = true;
        }
      } else {
        quiet = 0;
      }
      have_prev = true;
    }
    if (hook && (done || (snapshot_every > 0 && t_ % snapshot_every == 0))) hook(t_, state_);
    if (done) break;
    collide_stream();
    ++t_;
  }
  info.steps = t_;
  info.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return info;
}

}  // namespace eelbm
