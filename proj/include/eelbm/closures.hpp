#ifndef EELBM_CLOSURES_HPP_
#define EELBM_CLOSURES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "eelbm/config.hpp"
#include "eelbm/lattice.hpp"

namespace eelbm {

/// Raised when a run leaves the admissible state space (NaN, negative
/// density, lost incompressible scaling, ...).
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, int node = -1, std::int64_t step = -1);

  int node() const { return node_; }
  std::int64_t step() const { return step_; }

 private:
  int node_;
  std::int64_t step_;
};

// Lower bound used when dividing by a volume fraction. Never stored.
inline constexpr double kAlphaFloor = 1e-12;

struct Relaxation {
  double omega;
  double psi;
};

/// phi = [1 + (eps_g - 1)/R] / eps_l.
double compute_phi(double eps_g, double eps_l, double R);

Relaxation relaxation_from_viscosity(double nu, BulkStrategy strategy);

/// Effective 1D viscosity (1/omega - 1/2) - cs2*psi/omega.
constexpr double effective_viscosity(double omega, double psi) {
  return (1.0 / omega - 0.5) - kCs2 * psi / omega;
}

/// omega_alpha = 2 / (1 + 2 eps^2 chi / cs2).
double alpha_relaxation(double chi_alpha, double epsilon);

/// Piecewise clamp B(x) followed by renormalization to unit sum.
inline std::pair<double, double> spalding_bound(double alpha_g_raw, double alpha_l_raw) {
  auto B = [](double x) { return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x); };
  const double bg = B(alpha_g_raw);
  const double bl = B(alpha_l_raw);
  const double sum = bg + bl;
  if (!(sum > 0.0)) throw SolverError("degenerate volume fractions (both non-positive)");
  const double ag = bg / sum;
  return {ag, 1.0 - ag};
}

/// Removes the common part delta/2 so that the returned pair sums to zero.
constexpr std::pair<double, double> gradient_symmetrize(double grad_g, double grad_l) {
  // grad_g - (grad_g + grad_l)/2, written so the pair cancels exactly.
  const double d = 0.5 * (grad_g - grad_l);
  return {d, -d};
}

/// (omega_alpha/cs2)(u - upsilon) ~ (1/alpha) d(alpha)/dx.
constexpr double alpha_gradient_over_alpha(double u, double upsilon, double omega_alpha) {
  return omega_alpha / kCs2 * (u - upsilon);
}

/// sigma = nu_ef [omega (Pi_eq - Pi) + psi cs2 S].
constexpr double stress_1d(double Pi, double Pi_eq, double S, double omega, double psi) {
  return effective_viscosity(omega, psi) * (omega * (Pi_eq - Pi) + psi * kCs2 * S);
}

/// Dashpot-corrected sources, frozen on the n_gamma grid.
struct SourceCache {
  double S_g = 0.0;
  double S_l = 0.0;
};

inline std::pair<double, double> stabilize_sources(double S_g, double S_l, double eps_g, double u_g,
                                            double u_l, double gamma, double R, std::int64_t step,
                                            std::int64_t n_gamma, SourceCache& cache) {
  if (step % n_gamma == 0) {
    const double gam = eps_g - 1.0;
    cache.S_g = S_g - gamma * u_g * u_g * gam;
    cache.S_l = S_l - gamma * u_l * u_l * gam / R;
  }
  return {cache.S_g, cache.S_l};
}

/// Lambda(alpha_g) = alpha_g alpha_l (alpha_g + alpha_l R).
constexpr double cgw_lambda(double alpha_g, double R) {
  const double alpha_l = 1.0 - alpha_g;
  return alpha_g * alpha_l * (alpha_g + alpha_l * R);
}

/// Interphase drag coefficient. For CGW the cached Lambda' is refreshed only
/// on steps that are multiples of n_gamma.
inline double drag_coefficient(double alpha_g, const ScenarioConfig& config, std::int64_t step,
                        double& lambda_cache) {
  if (config.drag_model == DragModel::Constant) return config.drag_interphase;
  if (step % config.n_gamma == 0) lambda_cache = cgw_lambda(alpha_g, config.density_ratio());
  return config.drag_interphase * lambda_cache;
}

/// Wall coefficient; scales with the same frozen Lambda' under CGW.
inline double wall_coefficient(const ScenarioConfig& config, double lambda_frozen) {
  if (config.drag_model == DragModel::Constant) return config.drag_wall;
  return config.drag_wall * lambda_frozen;
}

/// (y_max - y_min) tanh(t/n_t) + y_min.
double inlet_ramp(double t, double n_t, double y_min, double y_max);

struct InletValues {
  double alpha_g;
  double u_g;
  double u_l;
};

InletValues ramp_inlet(const ScenarioConfig& config, double t);

// Boundary rules for the edge nodes.

enum class Transfer { BB, ABB, EQ };

enum class BoundarySource { Dirichlet, ExtrapolateHW, ExtrapolateFW, FixedOne };

struct BoundaryRule {
  Transfer transfer;
  EquilibriumFamily family;
  BoundarySource density_source;
  BoundarySource velocity_source;
};

/// Value at the boundary from the edge value y1 and its neighbour y2.
constexpr double boundary_value(BoundarySource src, double dirichlet, double y1, double y2) {
  switch (src) {
    case BoundarySource::Dirichlet: return dirichlet;
    case BoundarySource::ExtrapolateHW: return 1.5 * y1 - 0.5 * y2;
    case BoundarySource::ExtrapolateFW: return 2.0 * y1 - y2;
    case BoundarySource::FixedOne: return 1.0;
  }
  return dirichlet;
}

/// Incoming population at the edge node along BB(q_out). phi only matters for
/// the incompressible family.
double boundary_transfer(const BoundaryRule& rule, const Dist3& f_star, int q_out, double y_eps,
                         double y_u, double phi = 1.0);

}  // namespace eelbm

#endif  // EELBM_CLOSURES_HPP_
