#include "eelbm/closures.hpp"

#include <cmath>
#include <sstream>

namespace eelbm {

namespace {

std::string decorate(const std::string& what, int node, std::int64_t step) {
  std::ostringstream os;
  os << what;
  if (node >= 0) os << " at node " << node;
  if (step >= 0) os << " (step " << step << ")";
  return os.str();
}

double equilibrium_q(EquilibriumFamily family, double y_eps, double y_u, double phi, int q) {
  switch (family) {
    case EquilibriumFamily::Standard: return equilibrium_standard(y_eps, y_u)[q];
    case EquilibriumFamily::Incompressible: return equilibrium_incompressible(phi, y_eps, y_u)[q];
    case EquilibriumFamily::Linearized: return equilibrium_linearized(phi, y_eps, y_u)[q];
  }
  return 0.0;
}

}  // namespace

SolverError::SolverError(const std::string& what, int node, std::int64_t step)
    : std::runtime_error(decorate(what, node, step)), node_(node), step_(step) {}

double compute_phi(double eps_g, double eps_l, double R) {
  if (!(eps_l > 0.0)) throw SolverError("non-positive liquid density moment");
  return (1.0 + (eps_g - 1.0) / R) / eps_l;
}

Relaxation relaxation_from_viscosity(double nu, BulkStrategy strategy) {
  if (!(nu > 0.0)) throw ConfigError("viscosity must be positive");
  Relaxation r{};
  if (strategy == BulkStrategy::Smooth) {
    r.omega = 1.0 / (nu + 0.5);
    r.psi = 0.0;
  } else {
    r.omega = 1.0 / (3.0 * nu + 0.5);
    r.psi = 2.0 * r.omega * nu / kCs2;
  }
  if (!(r.omega > 0.0 && r.omega < 2.0))
    throw ConfigError("relaxation frequency outside (0, 2) for the requested viscosity");
  return r;
}

double alpha_relaxation(double chi_alpha, double epsilon) {
  return 2.0 / (1.0 + 2.0 * epsilon * epsilon * chi_alpha / kCs2);
}

double inlet_ramp(double t, double n_t, double y_min, double y_max) {
  return (y_max - y_min) * std::tanh(t / n_t) + y_min;
}

InletValues ramp_inlet(const ScenarioConfig& config, double t) {
  const double n = static_cast<double>(config.n_ramp);
  return {inlet_ramp(t, n, config.alpha_g.min, config.alpha_g.max),
          inlet_ramp(t, n, config.u_g.min, config.u_g.max),
          inlet_ramp(t, n, config.u_l.min, config.u_l.max)};
}

double boundary_transfer(const BoundaryRule& rule, const Dist3& f_star, int q_out, double y_eps,
                         double y_u, double phi) {
  const int q_in = LatticeSpec::opposite(q_out);
  switch (rule.transfer) {
    case Transfer::BB:
      return f_star[q_out] + equilibrium_q(rule.family, y_eps, -y_u, phi, q_out) -
             equilibrium_q(rule.family, y_eps, y_u, phi, q_out);
    case Transfer::ABB:
      return -f_star[q_out] + equilibrium_q(rule.family, y_eps, -y_u, phi, q_out) +
             equilibrium_q(rule.family, y_eps, y_u, phi, q_out);
    case Transfer::EQ:
      return equilibrium_q(rule.family, y_eps, y_u, phi, q_in);
  }
  return 0.0;
}

}  // namespace eelbm
