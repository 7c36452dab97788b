#include "winopt/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "winopt/config.hpp"
#include "winopt/error.hpp"
#include "winopt/outputs.hpp"

namespace winopt::cli {
namespace {

namespace fs = std::filesystem;

// A required input file that does not exist (exit code 2).
class MissingInput : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string weather;
  std::string config;
  std::string out;
  std::optional<std::size_t> workers;
  std::optional<std::uint64_t> seed;
  double orientation = 180.0;
  double width = 1.0;
  double depth = 0.0;
  std::string results_dir;
};

RunConfig load_config(const Options& opt) {
  RunConfig config;
  if (!opt.config.empty()) {
    if (!fs::exists(opt.config)) throw MissingInput("config file not found: " + opt.config);
    apply_config_file(opt.config, config);
  }
  if (!opt.weather.empty()) config.weather_path = opt.weather;
  if (!opt.out.empty()) config.out_dir = opt.out;
  if (opt.workers) config.study.workers = *opt.workers;
  if (opt.seed) config.seed = *opt.seed;
  config.validate();
  return config;
}

WeatherSeries load_weather(const RunConfig& config) {
  if (config.weather_path.empty()) throw MissingInput("no weather file given (use --weather or 'weather =')");
  if (!fs::is_regular_file(config.weather_path))
    throw MissingInput("weather file not found: " + config.weather_path);
  return read_epw_file(config.weather_path);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("cannot write " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingInput("missing results file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int cmd_simulate(const Options& opt, std::ostream& out) {
  const auto config = load_config(opt);
  const auto weather = load_weather(config);
  const ScenarioEvaluator evaluator(weather, config.study);

  SimulationResult result;
  result.scenario = evaluator.scenario(opt.orientation, opt.width, opt.depth);
  result.scenario.validate();
  const auto exposure = evaluator.exposure(opt.orientation);
  result.operative = evaluator.simulate(exposure, opt.width, opt.depth);
  result.score = degree_hours(result.operative, evaluator.comfort_band());
  result.monthly = monthly_degree_hours(result.operative, evaluator.comfort_band());

  fs::create_directories(config.out_dir);
  const auto path = fs::path(config.out_dir) / "simulation.json";
  write_file(path, simulation_json(config, weather, result));
  out << "HDH " << format_cell(result.score.hdh) << " Kh, CDH " << format_cell(result.score.cdh) << " Kh, TDH "
      << format_cell(result.score.tdh) << " Kh -> " << path.string() << "\n";
  return kExitOk;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  const auto config = load_config(opt);
  const auto weather = load_weather(config);
  const ScenarioEvaluator evaluator(weather, config.study);

  const auto rows = run_sweep(config.grid, evaluator);
  const auto optima = orientation_optima(rows);
  const auto report = relative_metrics(rows, optima, evaluator.windowless_score().tdh);

  fs::create_directories(config.out_dir);
  const fs::path dir(config.out_dir);
  write_file(dir / "sweep.csv", sweep_csv(report));
  write_file(dir / "optima.csv", optima_csv(report));
  write_file(dir / "figure2.json", figure2_json(report));
  out << rows.size() << " scenarios, " << optima.size() << " orientations -> " << dir.string() << "\n";
  return kExitOk;
}

int cmd_report(const Options& opt, std::ostream& out) {
  const fs::path dir = !opt.results_dir.empty() ? fs::path(opt.results_dir)
                                                : fs::path(opt.out.empty() ? std::string(".") : opt.out);
  if (!fs::is_directory(dir)) throw MissingInput("results directory not found: " + dir.string());
  const auto rows = parse_sweep_csv(read_file(dir / "sweep.csv"));
  const auto optima = parse_optima_csv(read_file(dir / "optima.csv"));
  out << summary_report(rows, optima);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Window size and overhang depth study for a free-floating reference room"};
  app.name("winopt");
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--weather", opt.weather, "EPW weather file");
    cmd->add_option("--config", opt.config, "key = value configuration file");
    cmd->add_option("--out", opt.out, "output directory");
    cmd->add_option("--workers", opt.workers, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "seed recorded with the outputs (the model itself is deterministic)");
  };

  auto* simulate = app.add_subcommand("simulate", "simulate one scenario for a year and write simulation.json");
  add_common(simulate);
  simulate->add_option("--orientation", opt.orientation, "facade azimuth, degrees clockwise from North")
      ->check(CLI::Range(0.0, 360.0));
  simulate->add_option("--width", opt.width, "window width [m]");
  simulate->add_option("--depth", opt.depth, "overhang depth [m]");

  auto* sweep = app.add_subcommand("sweep", "run the orientation x width sweep with optimal overhangs");
  add_common(sweep);

  auto* report = app.add_subcommand("report", "summarise the outputs of a sweep");
  add_common(report);
  report->add_option("results", opt.results_dir, "directory holding sweep.csv and optima.csv");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*simulate) return cmd_simulate(opt, out);
    if (*sweep) return cmd_sweep(opt, out);
    return cmd_report(opt, out);
  } catch (const MissingInput& e) {
    err << "winopt: " << e.what() << "\n";
    return kExitMissingInput;
  } catch (const std::exception& e) {
    err << "winopt: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace winopt::cli
