#ifndef EELBM_HARNESS_HPP_
#define EELBM_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eelbm/config.hpp"
#include "eelbm/fd_solver.hpp"
#include "eelbm/lbm_solver.hpp"

namespace eelbm {

enum class TestId { Test1 = 1, Test2 = 2, Test3 = 3, Test4 = 4 };
enum class Engine { Lbm, Fd, Both };

struct TestPreset {
  TestId id;
  ScenarioConfig config;
};

TestPreset preset(TestId id);
TestId test_id_from_int(int n);
Engine engine_from_string(const std::string& s);
std::string to_string(Engine e);

/// Diffusive rescaling of a scale-1 config by the mesh factor s.
ScenarioConfig apply_scale(const ScenarioConfig& base, double s);

struct FieldDiff {
  double linf = 0.0;
  double l2 = 0.0;
};

struct OutletValues {
  double u_g = 0.0;
  double u_l = 0.0;
  double alpha_g = 0.0;
  double flux = 0.0;
};

struct ComparisonReport {
  FieldDiff alpha_g, u_g, u_l, p_k;
  bool p_k_by_gradient = false;
  OutletValues lbm_outlet, fd_outlet;
  // (max - min) / |mean| of the mixture flux along x.
  double lbm_flux_deviation = 0.0;
  double fd_flux_deviation = 0.0;
  // Relative mismatch between the LBM outlet liquid velocity and the
  // flat-gradient steady relation.
  double analytic_residual = 0.0;
  double lbm_seconds = 0.0;
  double fd_seconds = 0.0;
};

class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Engine abort, tagged with the engine that failed.
class EngineError : public std::runtime_error {
 public:
  EngineError(Engine engine, const std::string& what)
      : std::runtime_error(to_string(engine) + ": " + what), engine_(engine) {}
  Engine engine() const { return engine_; }

 private:
  Engine engine_;
};

/// Relative norms use the FD max magnitude of each field. With
/// pressure_by_gradient the pressure is compared through its central
/// difference instead of its level.
ComparisonReport compare(const TwoPhaseState& lbm, const FDState& fd,
                         const ScenarioConfig& config, bool pressure_by_gradient = false);

OutletValues outlet_values(const TwoPhaseState& s);
double flux_deviation(const TwoPhaseState& s);
double analytic_residual(const TwoPhaseState& s, const ScenarioConfig& config);

struct RunOptions {
  Engine engine = Engine::Both;
  std::int64_t snapshot_every = 0;
  std::ostream* lbm_csv = nullptr;
  std::ostream* fd_csv = nullptr;
  bool pressure_by_gradient = false;
  FdOptions fd;
};

struct RunResult {
  std::optional<TwoPhaseState> lbm_final;
  std::optional<FDState> fd_final;
  std::optional<TwoPhaseState> fd_fields;
  LbmRunInfo lbm_info;
  FdRunInfo fd_info;
  std::optional<ComparisonReport> report;
};

/// Runs the requested engine(s) on a ready config. Throws EngineError.
RunResult run(const ScenarioConfig& config, const RunOptions& options);

struct OrderEstimate {
  std::string field;
  std::vector<double> errors_l2;     // successive-scale differences
  std::vector<double> errors_linf;
  std::vector<double> orders;        // one per consecutive error pair (L2)
  double order = 0.0;                // finest-pair L2 estimate, NaN if undefined
  double band_low = 0.0;             // min over L2/Linf estimates
  double band_high = 0.0;
  bool monotone = true;
  bool defined = true;
};

struct ConvergenceResult {
  std::vector<double> scales;
  std::vector<OrderEstimate> fields;
  std::vector<double> seconds;
};

/// Observed order from steady profiles of successive scales. Each pair is
/// compared at the cell centres of the coarser mesh. Velocity profiles must
/// already be in scale-1 units. Needs at least three scales with a constant
/// ratio.
ConvergenceResult convergence_study(const std::vector<std::vector<double>>& alpha_g,
                                    const std::vector<std::vector<double>>& u_g,
                                    const std::vector<std::vector<double>>& u_l,
                                    const std::vector<double>& scales);

/// Runs the LBM to steady state for every scale and evaluates the orders.
ConvergenceResult convergence_study(const ScenarioConfig& base, const std::vector<double>& scales);

OrderEstimate observed_order(const std::string& field,
                             const std::vector<std::vector<double>>& profiles,
                             const std::vector<double>& scales);

/// Value of a fine cell-centred profile at the cell centres of a mesh with
/// n_coarse nodes (linear interpolation).
std::vector<double> restrict_to(const std::vector<double>& fine, int n_coarse);

// Config files: `key = value` per line, `#` comments.
void write_config(std::ostream& os, const ScenarioConfig& c);
ScenarioConfig read_config(std::istream& is);
ScenarioConfig load_config(const std::string& path);

// Snapshot CSV.
void write_csv_header(std::ostream& os);
void write_csv_rows(std::ostream& os, double step, const TwoPhaseState& s);

void write_report(std::ostream& os, const ComparisonReport& r);

/// Overlay of LBM and FD profiles as a standalone SVG document.
void write_svg_plot(std::ostream& os, const std::string& title, const std::vector<double>& lbm,
                    const std::vector<double>& fd);

}  // namespace eelbm

#endif  // EELBM_HARNESS_HPP_
