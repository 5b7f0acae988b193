// lgt: torsional optomechanics with Laguerre-Gaussian cavity modes.
//
//   lgt coupling|fig2|fig3|fig4|fig5|report --scenario FILE [--out DIR] [--threads N] [--tolerance REL]
//   lgt optimize --scenario FILE [--l L] [--p-max P]
//
// Exit codes: 0 ok, 2 configuration error, 3 numeric failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "lgt/errors.hpp"
#include "lgt/products.hpp"
#include "lgt/scenario.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonArgs {
  std::string scenario;
  std::string out;
  std::optional<int> threads;
  std::optional<double> tolerance;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--scenario", args.scenario, "scenario file")->required();
  cmd->add_option("--out", args.out, "output directory (default: scenario output_dir)");
  cmd->add_option("--threads", args.threads, "worker threads (default: $LGT_THREADS or hardware concurrency)");
  cmd->add_option("--tolerance", args.tolerance, "relative quadrature tolerance");
}

int resolve_threads(const CommonArgs& args) {
  if (args.threads) {
    if (*args.threads < 1) throw lgt::ConfigError("--threads must be >= 1");
    return *args.threads;
  }
  if (const char* env = std::getenv("LGT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw lgt::ConfigError("LGT_THREADS must be a positive integer, got '" + std::string(env) + "'");
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

lgt::Scenario load(const CommonArgs& args) {
  auto sc = lgt::load_scenario(args.scenario);
  if (args.tolerance) {
    if (!(*args.tolerance > 0.0 && *args.tolerance < 1.0)) throw lgt::ConfigError("--tolerance must lie in (0, 1)");
    sc.coupling.quadrature.rel_tol = *args.tolerance;
  }
  return sc;
}

std::filesystem::path out_dir(const CommonArgs& args, const lgt::Scenario& sc) {
  return args.out.empty() ? std::filesystem::path(sc.output_dir) : std::filesystem::path(args.out);
}

void emit(const std::filesystem::path& path, const std::string& content) {
  lgt::write_atomic(path, content);
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optomechanical coupling of a windmill rotor to Laguerre-Gaussian cavity modes"};
  app.require_subcommand(1);

  CommonArgs args;
  auto* coupling = app.add_subcommand("coupling", "coupling for the scenario's (l, p); prints and writes coupling.csv");
  auto* fig2 = app.add_subcommand("fig2", "p = 0 coupling vs l, closed form and numeric (fig2.csv)");
  auto* fig3 = app.add_subcommand("fig3", "z = 0 intensity maps for (3,0) and (3,5) plus rotor outline");
  auto* fig4 = app.add_subcommand("fig4", "g/B over the (l, p) sweep (fig4.csv)");
  auto* fig5 = app.add_subcommand("fig5", "zeta and decoherence rate over the (l, p) sweep (fig5.csv)");
  auto* optimize = app.add_subcommand("optimize", "optimal radial index for one l");
  auto* report = app.add_subcommand("report", "human-readable design report");
  for (auto* cmd : {coupling, fig2, fig3, fig4, fig5, optimize, report}) add_common(cmd, args);
  std::optional<int> opt_l;
  std::optional<int> opt_pmax;
  optimize->add_option("--l", opt_l, "azimuthal index (default: scenario l)");
  optimize->add_option("--p-max", opt_pmax, "largest radial index scanned (default: scenario optimize_p_max)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    const auto sc = load(args);
    const int threads = resolve_threads(args);
    const auto dir = out_dir(args, sc);
    if (coupling->parsed()) {
      const auto csv = lgt::coupling_csv(sc);
      std::cout << csv;
      emit(dir / "coupling.csv", csv);
    } else if (fig2->parsed()) {
      emit(dir / "fig2.csv", lgt::fig2_csv(sc, threads));
    } else if (fig3->parsed()) {
      emit(dir / "fig3_l3_p0.csv", lgt::fig3_map_csv(sc, 3, 0));
      emit(dir / "fig3_l3_p5.csv", lgt::fig3_map_csv(sc, 3, 5));
      emit(dir / "fig3_rotor.csv", lgt::fig3_rotor_csv(sc));
    } else if (fig4->parsed()) {
      emit(dir / "fig4.csv", lgt::fig4_csv(sc, threads));
    } else if (fig5->parsed()) {
      emit(dir / "fig5.csv", lgt::fig5_csv(sc, threads));
    } else if (optimize->parsed()) {
      const int p_max = opt_pmax.value_or(sc.optimize_p_max);
      if (p_max < 0) throw lgt::ConfigError("--p-max must be >= 0");
      std::cout << lgt::optimize_text(sc, opt_l.value_or(sc.mode.l()), p_max, threads);
    } else if (report->parsed()) {
      std::cout << lgt::report_text(sc);
    }
  } catch (const lgt::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const lgt::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
