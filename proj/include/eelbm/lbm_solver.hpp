#ifndef EELBM_LBM_SOLVER_HPP_
#define EELBM_LBM_SOLVER_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "eelbm/closures.hpp"
#include "eelbm/config.hpp"
#include "eelbm/lattice.hpp"

namespace eelbm {

enum class SchemeId { Fg, Fl, FalphaG, FalphaL, FbetaG, FbetaL };

/// N_x x 3 populations of one scheme, node-major.
class DistributionField {
 public:
  DistributionField() = default;
  DistributionField(SchemeId id, int nx) : id_(id), nx_(nx), values_(3 * static_cast<size_t>(nx)) {}

  SchemeId scheme() const { return id_; }
  int nx() const { return nx_; }

  Dist3 at(int i) const { return {values_[3 * i], values_[3 * i + 1], values_[3 * i + 2]}; }
  void set(int i, const Dist3& f) {
    values_[3 * i] = f[0];
    values_[3 * i + 1] = f[1];
    values_[3 * i + 2] = f[2];
  }
  double* data() { return values_.data(); }
  void swap_values(DistributionField& other) { values_.swap(other.values_); }
  const double* data() const { return values_.data(); }

 private:
  SchemeId id_ = SchemeId::Fg;
  int nx_ = 0;
  std::vector<double> values_;
};

struct PhaseFields {
  std::vector<double> eps;        // zeroth moment of the hydro scheme
  std::vector<double> u;          // first moment of the hydro scheme
  std::vector<double> Pi;         // second moment of the hydro scheme
  std::vector<double> alpha;      // bounded volume fraction
  std::vector<double> upsilon;    // first moment of the alpha scheme over alpha
  std::vector<double> grad;       // symmetrized (1/alpha) d(alpha)/dx
  std::vector<double> S;          // raw continuity source
  std::vector<double> S_frozen;   // dashpot-corrected, frozen source
  std::vector<double> sigma;      // 1D viscous stress
  std::vector<double> G;          // total force

  void resize(int nx);
};

/// Macroscopic fields of both phases at one time level.
struct TwoPhaseState {
  int nx = 0;
  PhaseFields gas;
  PhaseFields liquid;
  std::vector<double> phi;
  std::vector<double> p_k;  // cs2 * eps_g

  void resize(int n);
  const PhaseFields& phase(Phase p) const { return p == Phase::Gas ? gas : liquid; }
};

/// One lattice kinetic step with beta = 1 and the given drift c (length nx).
/// Returns the streamed populations and fills S = 1 - sum f_beta.
DistributionField beta_source_step(const std::vector<double>& c, SchemeId id,
                                   std::vector<double>& S);

using LbmSnapshotHook = std::function<void(std::int64_t step, const TwoPhaseState&)>;

struct LbmRunInfo {
  std::int64_t steps = 0;
  bool steady = false;
  double seconds = 0.0;
};

class LbmSolver {
 public:
  explicit LbmSolver(ScenarioConfig config);

  /// Every scheme at its rest equilibrium with alpha_g = alpha_g.min.
  void initialize();

  /// Evaluates all closures for the current populations at time t without
  /// advancing. Repeated calls at a fixed t agree up to round-off.
  void prepare();

  /// prepare() followed by collision, forcing and streaming of all schemes.
  void step();

  /// Advances up to nt steps. The hook fires every snapshot_every steps and on
  /// the final state. Stops early once steady (if enabled in the config).
  LbmRunInfo run(std::int64_t snapshot_every = 0, const LbmSnapshotHook& hook = {});

  const TwoPhaseState& state() const { return state_; }
  const ScenarioConfig& config() const { return config_; }
  std::int64_t time() const { return t_; }

  const DistributionField& field(SchemeId id) const;
  DistributionField& field(SchemeId id);

  double omega(Phase p) const { return relax_[static_cast<int>(p)].omega; }
  double psi(Phase p) const { return relax_[static_cast<int>(p)].psi; }
  double omega_alpha() const { return omega_alpha_; }

 private:
  void collide_stream();
  void check_finite() const;

  ScenarioConfig config_;
  int nx_;
  double R_;
  Relaxation relax_[2];
  double omega_alpha_;
  std::int64_t t_ = 0;

  DistributionField fg_, fl_, fag_, fal_, fbg_, fbl_;
  DistributionField tmp_;
  TwoPhaseState state_;
  InletValues inlet_{};
  std::vector<SourceCache> source_cache_;
  std::vector<double> lambda_cache_;
  std::vector<double> c_g_, c_l_;
  std::vector<double> J_g_, J_l_;
};

}  // namespace eelbm

#endif  // EELBM_LBM_SOLVER_HPP_
