#ifndef EELBM_LATTICE_HPP_
#define EELBM_LATTICE_HPP_

#include <array>

// D1Q3 lattice and the three equilibrium families used by the two-phase
// schemes. Directions are ordered {0, +1, -1}.

namespace eelbm {

using Dist3 = std::array<double, 3>;

enum class Direction : int { Rest = 0, Forward = 1, Backward = 2 };

struct LatticeSpec {
  static constexpr std::array<int, 3> velocities{0, +1, -1};
  static constexpr std::array<double, 3> weights{2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0};
  static constexpr double cs2 = 1.0 / 3.0;

  static constexpr int opposite(int q) { return q == 0 ? 0 : (q == 1 ? 2 : 1); }
};

inline constexpr double kCs2 = LatticeSpec::cs2;
inline constexpr double kThird = 1.0 / 3.0;
inline constexpr double kSixth = 1.0 / 6.0;

enum class EquilibriumFamily { Standard, Incompressible, Linearized };

/// Standard equilibrium f_S(alpha, u): moments (alpha, alpha*u, alpha*(cs2 + u^2)).
constexpr Dist3 equilibrium_standard(double alpha, double u) {
  const double u2 = u * u;
  const double a6 = alpha * kSixth;
  return {alpha * (2.0 / 3.0 - u2),
          a6 * (1.0 + 3.0 * u + 3.0 * u2),
          a6 * (1.0 - 3.0 * u + 3.0 * u2)};
}

/// Incompressible equilibrium f_I(phi, eps, u). The first moment is u for
/// every eps; the second moment is phi*cs2*eps + u^2.
constexpr Dist3 equilibrium_incompressible(double phi, double eps, double u) {
  const double u2 = u * u;
  return {eps * (3.0 - phi) * kThird - u2,
          (eps * phi + 3.0 * u + 3.0 * u2) * kSixth,
          (eps * phi - 3.0 * u + 3.0 * u2) * kSixth};
}

/// Forcing population f_L(psi, S, G): moments (S, G, psi*cs2*S).
constexpr Dist3 equilibrium_linearized(double psi, double source, double force) {
  return {source * (3.0 - psi) * kThird,
          (source * psi + 3.0 * force) * kSixth,
          (source * psi - 3.0 * force) * kSixth};
}

struct Moments {
  double m0;
  double m1;
  double m2;
};

constexpr Moments moments(const Dist3& f) {
  return {f[0] + f[1] + f[2], f[1] - f[2], f[1] + f[2]};
}

/// eta_q(phi) from the generic weighted form; the closed-form equilibria
/// above embed it. Kept for identity checks.
constexpr double eta(int q, double phi) {
  const double w0 = LatticeSpec::weights[0];
  return q == 0 ? 1.0 + (1.0 - w0) / w0 * (1.0 - phi) : phi;
}

}  // namespace eelbm

#endif  // EELBM_LATTICE_HPP_
