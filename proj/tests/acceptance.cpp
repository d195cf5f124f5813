// Acceptance suite: one PASS/FAIL line per criterion. Exit code is the number
// of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "eelbm/closures.hpp"
#include "eelbm/harness.hpp"
#include "eelbm/lattice.hpp"
#include "eelbm/steady.hpp"
#include "invariants.hpp"
#include "oracles.hpp"

using namespace eelbm;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

bool finite(const TwoPhaseState& s) {
  for (const PhaseFields* p : {&s.gas, &s.liquid})
    for (const auto* v : {&p->alpha, &p->u, &p->eps})
      for (double x : *v)
        if (!std::isfinite(x)) return false;
  for (double x : s.p_k)
    if (!std::isfinite(x)) return false;
  return true;
}

struct LbmRun {
  TwoPhaseState state;
  LbmRunInfo info;
  bool ok = true;
  std::string error;
};

invariants::Stats all_stats;
double worst_flux_deviation = 0.0;

LbmRun run_lbm(const ScenarioConfig& c, const char* tag) {
  LbmRun r;
  try {
    LbmSolver s(c);
    invariants::Stats st;
    r.info = s.run(1, [&](std::int64_t, const TwoPhaseState&) { invariants::check(s, st); });
    r.state = s.state();
    all_stats.steps += st.steps;
    all_stats.sum_violations += st.sum_violations;
    all_stats.alpha_min = std::min(all_stats.alpha_min, st.alpha_min);
    all_stats.alpha_max = std::max(all_stats.alpha_max, st.alpha_max);
    all_stats.grad_sum = std::max(all_stats.grad_sum, st.grad_sum);
    all_stats.collision = std::max(all_stats.collision, st.collision);
    all_stats.bounded_moment = std::max(all_stats.bounded_moment, st.bounded_moment);
    worst_flux_deviation = std::max(worst_flux_deviation, flux_deviation(r.state));
  } catch (const std::exception& e) {
    r.ok = false;
    r.error = e.what();
  }
  std::printf("  [%s] lbm %lld steps, steady=%d, %.1f s%s%s\n", tag,
              static_cast<long long>(r.info.steps), r.info.steady, r.info.seconds,
              r.ok ? "" : ", error: ", r.error.c_str());
  return r;
}

struct FdRun {
  FDState state;
  bool ok = true;
  std::string error;
};

FdRun run_fd(const ScenarioConfig& c, const char* tag) {
  FdRun r;
  FdRunInfo info;
  try {
    FdSolver s(c);
    info = s.run();
    r.state = s.state();
  } catch (const std::exception& e) {
    r.ok = false;
    r.error = e.what();
  }
  std::printf("  [%s] fd t=%.0f, steady=%d, %.1f s%s%s\n", tag, info.t_end, info.steady,
              info.seconds, r.ok ? "" : ", error: ", r.error.c_str());
  return r;
}

ScenarioConfig scaled(TestId id, double s) { return apply_scale(preset(id).config, s); }

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  // 9: equilibrium moment identities.
  {
    std::mt19937_64 rng(20260116);
    std::uniform_real_distribution<double> U(-0.5, 0.5), A(0.0, 2.0), P(0.0, 3.0);
    double worst = 0.0;
    double w_sum = 0.0, w_v = 0.0, w_v2 = 0.0;
    for (int q = 0; q < 3; ++q) {
      const double w = LatticeSpec::weights[q], v = LatticeSpec::velocities[q];
      w_sum += w;
      w_v += w * v;
      w_v2 += w * v * v;
    }
    worst = std::max({std::abs(w_sum - 1.0), std::abs(w_v), std::abs(w_v2 - kCs2)});
    for (int k = 0; k < 100000; ++k) {
      const double a = A(rng), u = U(rng), phi = P(rng), s = U(rng), g = U(rng);
      const Moments ms = moments(equilibrium_standard(a, u));
      const Moments mi = moments(equilibrium_incompressible(phi, a, u));
      const Moments ml = moments(equilibrium_linearized(phi, s, g));
      const double errs[] = {ms.m0 - a,       ms.m1 - a * u, ms.m2 - a * (kCs2 + u * u),
                             mi.m0 - a,       mi.m1 - u,     mi.m2 - (phi * kCs2 * a + u * u),
                             ml.m0 - s,       ml.m1 - g,     ml.m2 - phi * kCs2 * s};
      for (double e : errs) worst = std::max(worst, std::abs(e));
    }
    report(9, worst <= 1e-14, fmt("max identity error %.2e over 1e5 inputs", worst));
  }

  // 8: similarity scaling.
  {
    const double g = 9.81, kappa = 247.5, R = 833.3;
    const SimilarityScale s = similarity_scale(g, kappa, 1.2e-9, 1.45e-4);
    const double M = momentum_ratio(kappa, 0.1, 0.3, 0.075, R, g);
    report(8, rel(s.c, 69.2) <= 5e-3 && rel(M, 1.04) <= 1e-2,
           fmt("c = %.4f, M_ex = %.4f", s.c, M));
  }

  // 5: oracle equivalence.
  {
    double worst = 1e300;
    std::string detail;
    const std::pair<const char*, double (*)(int)> cases[] = {
        {"source", [](int n) { return oracle::beta_source_error(n); }},
        {"stress", [](int n) { return oracle::stress_error(n); }},
        {"grad", [](int n) { return oracle::alpha_gradient_error(n); }}};
    for (const auto& [name, err] : cases) {
      const double e50 = err(50), e100 = err(100), e200 = err(200);
      const double r1 = e50 / e100, r2 = e100 / e200;
      worst = std::min({worst, r1, r2});
      detail += fmt("%s %.2f/%.2f ", name, r1, r2);
    }
    report(5, worst >= 3.5, detail + fmt("(min ratio %.2f)", worst));
  }

  // 1, 2: Test1 at scale 1.
  const ScenarioConfig c1 = preset(TestId::Test1).config;
  const LbmRun t1 = run_lbm(c1, "test1 s=1");
  {
    const OutletValues o = outlet_values(t1.state);
    const bool pass = t1.ok && finite(t1.state) && rel(o.u_g, 8.4237e-3) <= 0.02 &&
                      rel(o.u_l, 3.9750e-3) <= 0.02 && rel(o.alpha_g, 0.950) <= 0.02 &&
                      rel(o.flux, 8.1999e-3) <= 0.02;
    report(1, pass,
           fmt("outlet u_g=%.5e (%.2f%%) u_l=%.5e (%.2f%%) alpha_g=%.4f (%.2f%%) flux=%.5e (%.2f%%)",
               o.u_g, 100 * rel(o.u_g, 8.4237e-3), o.u_l, 100 * rel(o.u_l, 3.9750e-3), o.alpha_g,
               100 * rel(o.alpha_g, 0.950), o.flux, 100 * rel(o.flux, 8.1999e-3)));

    bool pass2 = false;
    std::string detail = "no steady regime";
    if (t1.ok) {
      try {
        const SteadyRegime r = steady_regime(o.u_g, o.alpha_g, c1.density_ratio(), c1.g_hat,
                                             c1.drag_interphase, c1.drag_wall);
        const double full = steady_liquid_velocity(o.u_g, r.u_g0_bar, r.r);
        const double approx = steady_liquid_velocity(o.u_g, r.u_g0_bar, 1.0);
        const double e_full = rel(full, o.u_l), e_approx = rel(approx, o.u_l);
        pass2 = e_full <= 5e-3 && e_approx <= 1.5e-2;
        detail = fmt("r=%.4f mismatch %.3f%%, r->1 mismatch %.3f%%", r.r, 100 * e_full,
                     100 * e_approx);
      } catch (const std::exception& e) {
        detail = e.what();
      }
    }
    report(2, pass2, detail);
  }

  // 3, 7: engine comparison at scale 1/2.
  std::map<TestId, LbmRun> half;
  std::map<TestId, ComparisonReport> cmp;
  std::map<TestId, bool> cmp_ok;
  for (TestId id : {TestId::Test1, TestId::Test2, TestId::Test4, TestId::Test3}) {
    const ScenarioConfig c = scaled(id, 0.5);
    const std::string tag = fmt("test%d s=1/2", static_cast<int>(id));
    LbmRun l = run_lbm(c, tag.c_str());
    const FdRun f = run_fd(c, tag.c_str());
    cmp_ok[id] = l.ok && f.ok;
    if (cmp_ok[id]) cmp[id] = compare(l.state, f.state, c, c.density_ratio() > 100.0);
    half[id] = std::move(l);
  }
  {
    bool pass = true;
    std::string detail;
    for (TestId id : {TestId::Test1, TestId::Test2}) {
      if (!cmp_ok[id]) {
        pass = false;
        detail += fmt("test%d failed to run; ", static_cast<int>(id));
        continue;
      }
      const ComparisonReport& r = cmp[id];
      pass = pass && r.alpha_g.linf < 0.05 && r.u_g.linf < 0.05 && r.u_l.linf < 0.05;
      detail += fmt("test%d linf alpha %.2e u_g %.2e u_l %.2e; ", static_cast<int>(id),
                    r.alpha_g.linf, r.u_g.linf, r.u_l.linf);
    }
    if (cmp_ok[TestId::Test4]) {
      const ComparisonReport& r = cmp[TestId::Test4];
      const double d = rel(r.lbm_outlet.u_g, r.fd_outlet.u_g);
      pass = pass && d <= 0.10;
      detail += fmt("test4 gas outlet %.2f%%", 100 * d);
    } else {
      pass = false;
      detail += "test4 failed to run";
    }
    report(3, pass, detail);
  }

  // 6: convergence of Test1 under diffusive scaling.
  {
    const LbmRun fine = run_lbm(scaled(TestId::Test1, 2.0), "test1 s=2");
    const LbmRun* runs[] = {&half[TestId::Test1], &t1, &fine};
    const double scales[] = {0.5, 1.0, 2.0};
    bool ok = true;
    std::vector<std::vector<double>> a, g, l;
    for (int k = 0; k < 3; ++k) {
      ok = ok && runs[k]->ok;
      a.push_back(runs[k]->state.gas.alpha);
      g.push_back(runs[k]->state.gas.u);
      l.push_back(runs[k]->state.liquid.u);
      for (double& v : g.back()) v *= scales[k];
      for (double& v : l.back()) v *= scales[k];
    }
    if (!ok) {
      report(6, false, "a convergence run failed");
    } else {
      const ConvergenceResult r = convergence_study(a, g, l, {0.5, 1.0, 2.0});
      std::map<std::string, double> order;
      std::string detail;
      for (const auto& f : r.fields) {
        order[f.field] = f.order;
        detail += fmt("%s %.3f [%.3f, %.3f] ", f.field.c_str(), f.order, f.band_low, f.band_high);
      }
      report(6, order["alpha_g"] >= 1.7 && order["u_g"] >= 1.7, detail);
    }
  }

  // 7: large density ratio.
  {
    const LbmRun& l = half[TestId::Test3];
    bool pass = cmp_ok[TestId::Test3] && finite(l.state);
    std::string detail = cmp_ok[TestId::Test3] ? "" : "run failed: " + l.error;
    if (pass) {
      const auto& ag = l.state.gas.alpha;
      const auto [lo, hi] = std::minmax_element(ag.begin(), ag.end());
      const ComparisonReport& r = cmp[TestId::Test3];
      pass = *lo >= 0.0 && *hi <= 1.0 && r.u_g.linf < 0.1 && r.u_l.linf < 0.1 &&
             r.p_k_by_gradient && r.p_k.linf < 0.1;
      detail = fmt("alpha_g in [%.4f, %.4f], linf u_g %.2e u_l %.2e grad p %.2e", *lo, *hi,
                   r.u_g.linf, r.u_l.linf, r.p_k.linf);
    }
    report(7, pass, detail);
  }

  // 4: invariants over every LBM step above.
  report(4, all_stats.ok() && worst_flux_deviation <= 1e-3,
         fmt("%ld steps, %ld sum violations, alpha in [%.3e, %.6f], grad sum %.1e, "
             "collision %.1e, bounded moment %.1e, flux deviation %.1e",
             all_stats.steps, all_stats.sum_violations, all_stats.alpha_min, all_stats.alpha_max,
             all_stats.grad_sum, all_stats.collision, all_stats.bounded_moment,
             worst_flux_deviation));

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("acceptance: %d failed, %.0f s\n", failures, secs);
  return failures;
}
