#ifndef EELBM_FD_SOLVER_HPP_
#define EELBM_FD_SOLVER_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "eelbm/closures.hpp"
#include "eelbm/config.hpp"
#include "eelbm/lbm_solver.hpp"

namespace eelbm {

// Nodal values 1..N_x stored at 0..N_x-1.
using NodalVector = std::vector<double>;
// Nodal values 0..N_x+1 (ghosts at both ends).
using WrappedVector = std::vector<double>;

enum class FdField { Pk, Ug, Ul, AlphaG };

struct FDState {
  NodalVector p_k;
  NodalVector u_g;
  NodalVector u_l;
  NodalVector alpha_g;

  int nx() const { return static_cast<int>(p_k.size()); }
  /// Rest state: p_k = cs2, zero velocities, uniform alpha_g.
  static FDState rest(int nx, double alpha_g);
};

/// Central difference (w(i+1) - w(i-1))/2.
NodalVector dx(const WrappedVector& w);
/// Second difference w(i+1) - 2w(i) + w(i-1).
NodalVector dx2(const WrappedVector& w);
/// Adds the boundary ghosts of the given field.
WrappedVector wrap(const NodalVector& v, FdField which, const InletValues& inlet);

/// Gaussian moving average over a 12-point window (sigma = 2.2 nodes),
/// truncated and renormalized at the domain ends.
NodalVector gaussian_smooth(const NodalVector& v);

/// Frozen sources and CGW Lambda, refreshed once per n_gamma interval.
struct FdFrozen {
  std::int64_t epoch = -1;
  NodalVector S_g, S_l, lambda;
};

/// Time derivative of the four nodal vectors. With frozen == nullptr the
/// sources and drag are evaluated live at t.
FDState rhs(const FDState& state, const ScenarioConfig& config, double t,
            FdFrozen* frozen = nullptr);

/// Macroscopic fields in the same layout as the LBM state, for output and
/// comparison. eps_l is taken equal to eps_g.
TwoPhaseState fd_fields(const FDState& state, const ScenarioConfig& config, double t,
                        FdFrozen* frozen = nullptr);

using FdSnapshotHook = std::function<void(double t, const FDState&)>;

struct FdRunInfo {
  double t_end = 0.0;
  std::int64_t accepted = 0;
  std::int64_t rejected = 0;
  bool steady = false;
  double seconds = 0.0;
};

struct FdOptions {
  double abs_tol = 1e-9;
  double rel_tol = 1e-6;
  double min_dt = 1e-6;
  double initial_dt = 0.1;
  std::int64_t smooth_every = 100;
  // Smoothing stops after this model time; negative means the ramp length.
  double smooth_until = -1.0;
};

class FdSolver {
 public:
  explicit FdSolver(ScenarioConfig config, FdOptions options = {});

  /// Integrates from t = 0 to nt, or until steady. The hook fires on every
  /// multiple of snapshot_every (exactly hit) and on the final state.
  FdRunInfo run(std::int64_t snapshot_every = 0, const FdSnapshotHook& hook = {});

  /// Restarts from the given state at model time t.
  void reset(const FDState& state, double t);

  const FDState& state() const { return state_; }
  double time() const { return t_; }
  const ScenarioConfig& config() const { return config_; }
  TwoPhaseState fields() const;

 private:
  ScenarioConfig config_;
  FdOptions options_;
  FDState state_;
  double t_ = 0.0;
};

}  // namespace eelbm

#endif  // EELBM_FD_SOLVER_HPP_
