#include "eelbm/config.hpp"

#include <cmath>

namespace eelbm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("invalid scenario: " + what);
}

void require_ramp(const RampBounds& b, const std::string& name) {
  require(std::isfinite(b.min) && std::isfinite(b.max), name + " ramp bounds must be finite");
  require(b.min <= b.max, name + " ramp min must not exceed max");
}

}  // namespace

void ScenarioConfig::validate() const {
  require(nx >= 3, "nx must be at least 3");
  require(nt > 0, "nt must be positive");
  require(n_ramp > 0, "n_ramp must be positive");
  require(n_ramp < nt, "n_ramp must be smaller than nt");
  require(rho_g0 > 0.0 && rho_l0 > 0.0, "densities must be positive");
  require(density_ratio() > 1.0, "density ratio rho_l0/rho_g0 must exceed 1");
  require(nu_g > 0.0 && nu_l > 0.0, "viscosities must be positive");
  require(std::isfinite(g_hat), "g_hat must be finite");
  require(drag_interphase >= 0.0 && drag_wall >= 0.0, "drag coefficients must be non-negative");
  require(gamma >= 0.0, "gamma must be non-negative");
  require(n_gamma >= 1, "n_gamma must be at least 1");
  require(n_gamma < nt, "n_gamma must be much smaller than nt");
  require(chi_alpha >= 0.0, "chi_alpha must be non-negative");
  require_ramp(alpha_g, "alpha_g");
  require_ramp(u_g, "u_g");
  require_ramp(u_l, "u_l");
  require(alpha_g.min > 0.0 && alpha_g.max < 1.0, "alpha_g ramp must lie inside (0, 1)");
  require(steady_tol >= 0.0, "steady_tol must be non-negative");
  require(steady_window >= 1, "steady_window must be at least 1");
}

std::string to_string(DragModel m) {
  return m == DragModel::Constant ? "constant" : "cgw";
}

std::string to_string(BulkStrategy b) {
  return b == BulkStrategy::Smooth ? "smooth" : "consistent";
}

DragModel drag_model_from_string(const std::string& s) {
  if (s == "constant") return DragModel::Constant;
  if (s == "cgw") return DragModel::CliftGraceWeber;
  throw ConfigError("unknown drag model '" + s + "' (expected constant|cgw)");
}

BulkStrategy bulk_strategy_from_string(const std::string& s) {
  if (s == "smooth") return BulkStrategy::Smooth;
  if (s == "consistent") return BulkStrategy::Consistent;
  throw ConfigError("unknown bulk strategy '" + s + "' (expected smooth|consistent)");
}

}  // namespace eelbm
