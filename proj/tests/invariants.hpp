#ifndef EELBM_TESTS_INVARIANTS_HPP_
#define EELBM_TESTS_INVARIANTS_HPP_

// Per-step normalization and conservation checks on a running LBM solver.

#include <algorithm>
#include <cmath>

#include "eelbm/lbm_solver.hpp"

namespace invariants {

struct Stats {
  long steps = 0;
  long sum_violations = 0;     // alpha_g + alpha_l != 1
  double alpha_min = 1.0;
  double alpha_max = 0.0;
  double grad_sum = 0.0;       // |alpha_g grad_g + alpha_l grad_l|, relative
  double collision = 0.0;      // zeroth-moment change in the alpha collision
  double bounded_moment = 0.0; // |sum f_alpha - alpha| after bounding

  bool ok() const {
    return steps > 0 && sum_violations == 0 && alpha_min >= 0.0 && alpha_max <= 1.0 &&
           grad_sum <= 1e-12 && collision <= 1e-15 && bounded_moment <= 1e-15;
  }
};

// Call after prepare() (e.g. from the run hook).
inline void check(const eelbm::LbmSolver& solver, Stats& st) {
  const auto& s = solver.state();
  const double w = solver.omega_alpha();
  const eelbm::DistributionField* fa[2] = {&solver.field(eelbm::SchemeId::FalphaG),
                                           &solver.field(eelbm::SchemeId::FalphaL)};
  const eelbm::PhaseFields* ph[2] = {&s.gas, &s.liquid};
  for (int i = 0; i < s.nx; ++i) {
    const double ag = s.gas.alpha[i], al = s.liquid.alpha[i];
    if (ag + al != 1.0) ++st.sum_violations;
    st.alpha_min = std::min({st.alpha_min, ag, al});
    st.alpha_max = std::max({st.alpha_max, ag, al});
    const double dg = ag * s.gas.grad[i], dl = al * s.liquid.grad[i];
    const double scale = std::max(std::abs(dg), 1e-300);
    st.grad_sum = std::max(st.grad_sum, std::abs(dg + dl) / scale * (dg != 0.0));
    for (int p = 0; p < 2; ++p) {
      const eelbm::Dist3 f = fa[p]->at(i);
      const double m0 = f[0] + f[1] + f[2];
      const eelbm::Dist3 feq = eelbm::equilibrium_standard(ph[p]->alpha[i], ph[p]->u[i]);
      double post = 0.0;
      for (int q = 0; q < 3; ++q) post += f[q] + w * (feq[q] - f[q]);
      st.collision = std::max(st.collision, std::abs(post - m0));
      st.bounded_moment = std::max(st.bounded_moment, std::abs(m0 - ph[p]->alpha[i]));
    }
  }
  ++st.steps;
}

}  // namespace invariants

#endif  // EELBM_TESTS_INVARIANTS_HPP_
