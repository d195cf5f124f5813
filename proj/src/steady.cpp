#include "eelbm/steady.hpp"

#include <cmath>
#include <stdexcept>

#include "eelbm/closures.hpp"

namespace eelbm {

double bubble_column_velocity(double alpha_g, double R, double g_hat, double K_I_hat) {
  if (!(alpha_g > 0.0 && alpha_g < 1.0)) throw std::domain_error("alpha_g must lie in (0, 1)");
  if (!(K_I_hat > 0.0)) throw std::domain_error("K_I must be positive");
  return std::sqrt(alpha_g * (1.0 - alpha_g) * (R - 1.0) * g_hat / K_I_hat);
}

double steady_liquid_velocity(double u_g_bar, double u_g0_bar, double r) {
  if (!(u_g_bar > u_g0_bar)) throw std::domain_error("steady branch requires u_g > u_g0");
  if (r < 0.0) throw std::domain_error("r must be non-negative");
  const double ug2 = u_g_bar * u_g_bar;
  const double u02 = u_g0_bar * u_g0_bar;
  if (r == 1.0) return (u_g_bar - u_g0_bar) * (1.0 + u_g0_bar / u_g_bar) / 2.0;
  const double disc = ug2 - (1.0 - r) * (ug2 - u02);
  if (disc < 0.0) throw std::domain_error("negative discriminant in steady liquid velocity");
  // Rationalized form of [u_g - sqrt(disc)]/(1 - r); avoids cancellation near r = 1.
  return (ug2 - u02) / (u_g_bar + std::sqrt(disc));
}

SteadyRegime steady_regime(double u_g_bar, double alpha_g_bar, double R, double g_hat,
                           double K_I_hat, double K_W_hat) {
  SteadyRegime s{};
  s.u_g_bar = u_g_bar;
  s.alpha_g_bar = alpha_g_bar;
  s.alpha_l_bar = 1.0 - alpha_g_bar;
  s.u_g0_bar = bubble_column_velocity(alpha_g_bar, R, g_hat, K_I_hat);
  s.r = K_W_hat / K_I_hat * alpha_g_bar;
  s.u_l_bar = steady_liquid_velocity(u_g_bar, s.u_g0_bar, s.r);
  return s;
}

SimilarityScale similarity_scale(double g_phys, double kappa_I_phys, double g_hat,
                                 double kappa_I_hat) {
  if (!(g_phys > 0.0 && kappa_I_phys > 0.0 && g_hat > 0.0 && kappa_I_hat > 0.0))
    throw std::domain_error("similarity inputs must be positive");
  SimilarityScale s{};
  s.c_over_tau = g_phys / g_hat;
  s.c_times_tau = kappa_I_hat / kappa_I_phys;
  s.c = std::sqrt(s.c_over_tau * s.c_times_tau);
  s.tau = std::sqrt(s.c_times_tau / s.c_over_tau);
  return s;
}

double momentum_ratio(double kappa_I, double alpha_g_ref, double u_g_ref, double u_l_ref,
                      double R, double g) {
  if (!(alpha_g_ref > 0.0 && R > 1.0 && g > 0.0))
    throw std::domain_error("momentum ratio denominators must be positive");
  const double slip = u_g_ref - u_l_ref;
  return kappa_I * cgw_lambda(alpha_g_ref, R) * slip * slip / (alpha_g_ref * (R - 1.0) * g);
}

}  // namespace eelbm
