#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eelbm/harness.hpp"

namespace fs = std::filesystem;
using namespace eelbm;

namespace {

struct Common {
  int test = 1;
  std::string engine = "both";
  std::string scale = "1/2";
  int nx = 0;
  std::int64_t nt = 0;
  std::int64_t snapshot_every = 0;
  std::string out = "out";
  std::string config;
  bool seedless = false;
  bool csv_only = false;
};

// Accepts "0.5", "1/2" or "2".
double parse_scale(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return std::stod(s);
    return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--scale", "expected a number or a ratio such as 1/2");
  }
}

ScenarioConfig build_config(const Common& o) {
  ScenarioConfig c = o.config.empty() ? apply_scale(preset(test_id_from_int(o.test)).config,
                                                    parse_scale(o.scale))
                                      : load_config(o.config);
  if (o.nx > 0) c.nx = o.nx;
  if (o.nt > 0) {
    c.nt = o.nt;
    if (c.n_ramp >= c.nt) c.n_ramp = std::max<std::int64_t>(1, c.nt / 12);
  }
  c.validate();
  return c;
}

void add_common(CLI::App* app, Common& o, bool with_engine) {
  app->add_option("--test", o.test, "Preset test case")->check(CLI::Range(1, 4));
  if (with_engine)
    app->add_option("--engine", o.engine, "Engine to run")
        ->check(CLI::IsMember({"lbm", "fd", "both"}));
  app->add_option("--scale", o.scale, "Mesh scale factor, e.g. 1/2 or 2");
  app->add_option("--nx", o.nx, "Override the node count");
  app->add_option("--nt", o.nt, "Override the step count");
  app->add_option("--snapshot-every", o.snapshot_every, "Snapshot interval in steps");
  app->add_option("--out", o.out, "Output directory");
  app->add_option("--config", o.config, "Config file (replaces --test/--scale)");
  app->add_flag("--seedless", o.seedless, "Deterministic run (always the case)");
  app->add_flag("--csv-only", o.csv_only, "Write only the snapshot CSV files");
}

void print_outlet(const char* tag, const OutletValues& v) {
  std::printf("%s outlet: u_g=%.6e u_l=%.6e alpha_g=%.6f flux=%.6e\n", tag, v.u_g, v.u_l,
              v.alpha_g, v.flux);
}

int do_run(const Common& o, Engine engine) {
  const ScenarioConfig c = build_config(o);
  fs::create_directories(o.out);
  if (!o.csv_only) {
    std::ofstream cfg(fs::path(o.out) / "config.txt");
    write_config(cfg, c);
  }
  std::ofstream lbm_csv, fd_csv;
  RunOptions opt;
  opt.engine = engine;
  opt.snapshot_every = o.snapshot_every;
  opt.pressure_by_gradient = c.density_ratio() > 100.0;
  if (engine != Engine::Fd) {
    lbm_csv.open(fs::path(o.out) / "lbm.csv", std::ios::binary);
    opt.lbm_csv = &lbm_csv;
  }
  if (engine != Engine::Lbm) {
    fd_csv.open(fs::path(o.out) / "fd.csv", std::ios::binary);
    opt.fd_csv = &fd_csv;
  }

  const RunResult r = run(c, opt);
  if (r.lbm_final) {
    std::printf("lbm: %lld steps, steady=%s, %.1f s\n", static_cast<long long>(r.lbm_info.steps),
                r.lbm_info.steady ? "yes" : "no", r.lbm_info.seconds);
    print_outlet("lbm", outlet_values(*r.lbm_final));
  }
  if (r.fd_final) {
    std::printf("fd: t=%.0f, %lld accepted / %lld rejected steps, steady=%s, %.1f s\n",
                r.fd_info.t_end, static_cast<long long>(r.fd_info.accepted),
                static_cast<long long>(r.fd_info.rejected), r.fd_info.steady ? "yes" : "no",
                r.fd_info.seconds);
    print_outlet("fd", outlet_values(*r.fd_fields));
  }
  if (r.report) {
    write_report(std::cout, *r.report);
    if (!o.csv_only) {
      std::ofstream rep(fs::path(o.out) / "report.txt");
      write_report(rep, *r.report);
      const TwoPhaseState& L = *r.lbm_final;
      const FDState& F = *r.fd_final;
      const std::pair<const char*, std::pair<const std::vector<double>*, const std::vector<double>*>>
          plots[] = {{"alpha_g", {&L.gas.alpha, &F.alpha_g}},
                     {"u_g", {&L.gas.u, &F.u_g}},
                     {"u_l", {&L.liquid.u, &F.u_l}},
                     {"p_k", {&L.p_k, &F.p_k}}};
      for (const auto& [name, v] : plots) {
        std::ofstream svg(fs::path(o.out) / (std::string(name) + ".svg"));
        write_svg_plot(svg, name, *v.first, *v.second);
      }
    }
  }
  return 0;
}

int do_converge(const Common& o, const std::vector<std::string>& scales) {
  ScenarioConfig base = o.config.empty() ? preset(test_id_from_int(o.test)).config
                                         : load_config(o.config);
  std::vector<double> s;
  for (const auto& v : scales) s.push_back(parse_scale(v));
  const ConvergenceResult r = convergence_study(base, s);
  std::ostringstream os;
  for (size_t k = 0; k < r.scales.size(); ++k)
    os << "scale_" << k << " = " << r.scales[k] << " (" << r.seconds[k] << " s)\n";
  for (const auto& f : r.fields) {
    os << f.field << "_order = " << f.order << '\n';
    os << f.field << "_band = [" << f.band_low << ", " << f.band_high << "]\n";
    os << f.field << "_monotone = " << (f.monotone ? "true" : "false") << '\n';
    if (!f.defined) os << f.field << "_note = order undefined (zero error)\n";
    for (size_t k = 0; k < f.errors_l2.size(); ++k)
      os << f.field << "_error_" << k << " = " << f.errors_l2[k] << " (linf " << f.errors_linf[k]
         << ")\n";
  }
  std::cout << os.str();
  if (!o.csv_only) {
    fs::create_directories(o.out);
    std::ofstream(fs::path(o.out) / "convergence.txt") << os.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-phase 1D column solver: lattice Boltzmann and finite-difference engines"};
  app.require_subcommand(1);

  Common run_opt, cmp_opt, conv_opt;
  auto* run_cmd = app.add_subcommand("run", "Run one or both engines");
  add_common(run_cmd, run_opt, true);
  auto* cmp_cmd = app.add_subcommand("compare", "Run both engines and report differences");
  add_common(cmp_cmd, cmp_opt, false);
  auto* conv_cmd = app.add_subcommand("converge", "Observed order across mesh scales");
  add_common(conv_cmd, conv_opt, false);
  std::vector<std::string> scales{"1/2", "1", "2"};
  conv_cmd->add_option("--scales", scales, "Scales, at least three");
  int preset_id = 0;
  auto* presets_cmd = app.add_subcommand("presets", "Print the preset configurations");
  presets_cmd->add_option("--test", preset_id, "Only this preset")->check(CLI::Range(1, 4));

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) return do_run(run_opt, engine_from_string(run_opt.engine));
    if (*cmp_cmd) return do_run(cmp_opt, Engine::Both);
    if (*conv_cmd) return do_converge(conv_opt, scales);
    if (*presets_cmd) {
      for (int id = 1; id <= 4; ++id) {
        if (preset_id != 0 && id != preset_id) continue;
        std::cout << "# test " << id << '\n';
        write_config(std::cout, preset(test_id_from_int(id)).config);
        std::cout << '\n';
      }
      return 0;
    }
  } catch (const EngineError& e) {
    std::cerr << "engine failure (" << to_string(e.engine()) << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
