#ifndef EELBM_STEADY_HPP_
#define EELBM_STEADY_HPP_

// Closed-form steady relations of the 1D column and the similarity map between
// physical and lattice units.

namespace eelbm {

struct SteadyRegime {
  double u_g_bar;
  double u_l_bar;
  double u_g0_bar;
  double alpha_g_bar;
  double alpha_l_bar;
  double r;
};

struct SimilarityScale {
  double c;
  double tau;
  double c_over_tau;
  double c_times_tau;
};

/// Gas velocity of the bubble column (zero liquid velocity):
/// sqrt(alpha_g (1 - alpha_g) (R - 1) g / K_I).
double bubble_column_velocity(double alpha_g, double R, double g_hat, double K_I_hat);

/// Liquid velocity of the flat-gradient regime. Throws std::domain_error when
/// the inputs lie outside the derived branch.
double steady_liquid_velocity(double u_g_bar, double u_g0_bar, double r);

/// Same regime assembled from the outlet state.
SteadyRegime steady_regime(double u_g_bar, double alpha_g_bar, double R, double g_hat,
                           double K_I_hat, double K_W_hat);

SimilarityScale similarity_scale(double g_phys, double kappa_I_phys, double g_hat,
                                 double kappa_I_hat);

/// Ratio of the exchange force to the buoyancy force with the CGW Lambda.
double momentum_ratio(double kappa_I, double alpha_g_ref, double u_g_ref, double u_l_ref,
                      double R, double g);

}  // namespace eelbm

#endif  // EELBM_STEADY_HPP_
