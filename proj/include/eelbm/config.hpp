#ifndef EELBM_CONFIG_HPP_
#define EELBM_CONFIG_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eelbm {

enum class DragModel { Constant, CliftGraceWeber };

/// How the 1D bulk viscosity degeneracy is resolved.
///  Consistent: xi = -nu/3, d = 1, psi = 2*omega*nu/cs2.
///  Smooth:     xi = 5nu/3, d = 3, psi = 0.
enum class BulkStrategy { Consistent, Smooth };

enum class Phase { Gas = 0, Liquid = 1 };

struct RampBounds {
  double min = 0.0;
  double max = 0.0;
};

/// Every physical and numerical parameter of a run, in lattice (hat) units.
struct ScenarioConfig {
  int nx = 200;
  std::int64_t nt = 6'000'000;
  std::int64_t n_ramp = 500'000;

  double rho_g0 = 1.2;
  double rho_l0 = 2.4;
  double nu_g = 1.1667;
  double nu_l = 1.1667;
  double g_hat = 1e-6;

  DragModel drag_model = DragModel::Constant;
  // K_I and K_W for the constant model, kappa_I and kappa_W for CGW.
  double drag_interphase = 1e-2;
  double drag_wall = 1e-2;

  double gamma = 0.0;
  std::int64_t n_gamma = 1;
  double chi_alpha = 1.0;

  RampBounds alpha_g{1e-2, 0.8};
  RampBounds u_g{0.0, 1e-2};
  RampBounds u_l{0.0, 1e-3};

  BulkStrategy bulk = BulkStrategy::Smooth;

  // Early exit once every field changes by less than this per step for
  // steady_window consecutive steps. Zero disables the check.
  double steady_tol = 1e-10;
  std::int64_t steady_window = 1000;

  double density_ratio() const { return rho_l0 / rho_g0; }
  double mesh_ratio() const { return 1.0 / static_cast<double>(nx); }

  void validate() const;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(DragModel m);
std::string to_string(BulkStrategy b);
DragModel drag_model_from_string(const std::string& s);
BulkStrategy bulk_strategy_from_string(const std::string& s);

}  // namespace eelbm

#endif  // EELBM_CONFIG_HPP_
