#include "winopt/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "winopt/error.hpp"

namespace winopt {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
    throw ParseError("'" + std::string(v) + "' is not a number");
  return out;
}

std::uint64_t to_count(std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError("'" + std::string(v) + "' is not a nonnegative integer");
  return out;
}

// Grid parameters are kept as (start, step, count/max) and expanded after parsing.
struct GridParams {
  double orientation_start = 0.0;
  double orientation_step = 2.0;
  std::uint64_t orientation_count = 180;
  double width_first = 0.01;
  double width_step = 0.10;
  double width_max = 7.00;
};

GridParams params_from(const ScenarioGrid& g) {
  GridParams s;
  if (!g.orientations.empty()) {
    s.orientation_start = g.orientations.front();
    s.orientation_count = g.orientations.size();
    if (g.orientations.size() > 1) s.orientation_step = g.orientations[1] - g.orientations[0];
  }
  if (!g.widths.empty()) {
    s.width_first = g.widths.front();
    s.width_max = g.widths.back();
    if (g.widths.size() > 2) s.width_step = g.widths[2] - g.widths[1];
  }
  return s;
}

double round_micro(double v) { return std::round(v * 1e6) / 1e6; }

void expand(const GridParams& s, ScenarioGrid& g) {
  if (s.orientation_count == 0) throw ParseError("orientation_count must be at least 1");
  if (!(s.orientation_step > 0.0)) throw ParseError("orientation_step must be positive");
  if (!(s.width_step > 0.0)) throw ParseError("width_step must be positive");
  g.orientations.clear();
  for (std::uint64_t k = 0; k < s.orientation_count; ++k)
    g.orientations.push_back(round_micro(std::fmod(s.orientation_start + k * s.orientation_step, 360.0)));
  // First width, then whole multiples of the step above it up to the maximum.
  g.widths.clear();
  g.widths.push_back(round_micro(s.width_first));
  for (std::uint64_t k = 1;; ++k) {
    const double w = round_micro(k * s.width_step);
    if (w > s.width_max + 1e-9) break;
    if (w > g.widths.back() + 1e-9) g.widths.push_back(w);
  }
}

}  // namespace

void RunConfig::validate() const {
  study.validate();
  grid.validate();
}

void apply_config_text(std::string_view text, RunConfig& config) {
  GridParams grid = params_from(config.grid);
  bool grid_touched = false;
  auto& room = config.study.room;
  auto& c = room.constructions;

  using Setter = std::function<void(std::string_view)>;
  const auto number = [](double& target) { return Setter([&target](std::string_view v) { target = to_double(v); }); };
  const auto grid_number = [&](double& target) {
    return Setter([&target, &grid_touched](std::string_view v) {
      target = to_double(v);
      grid_touched = true;
    });
  };
  const std::map<std::string, Setter, std::less<>> setters = {
      {"weather", [&](std::string_view v) { config.weather_path = std::string(v); }},
      {"out", [&](std::string_view v) { config.out_dir = std::string(v); }},
      {"floor_length", number(room.floor_length)},
      {"floor_depth", number(room.floor_depth)},
      {"ceiling_height", number(room.ceiling_height)},
      {"window_height", number(room.window_height)},
      {"sill_height", number(room.sill_height)},
      {"infiltration_ach", number(room.infiltration_ach)},
      {"u_wall", number(c.u_wall)},
      {"u_floor", number(c.u_floor)},
      {"u_roof", number(c.u_roof)},
      {"u_window", number(c.u_window)},
      {"shgc", number(c.shgc)},
      {"vt", number(c.vt)},
      {"capacity_class", [&](std::string_view v) { c.capacity = parse_capacity_class(v); }},
      {"wall_exposure", [&](std::string_view v) { room.wall_exposure = parse_wall_exposure(v); }},
      {"ground_coupling", [&](std::string_view v) { room.ground_coupling = parse_ground_coupling(v); }},
      {"albedo", number(config.study.albedo)},
      {"comfort_category", [&](std::string_view v) { config.study.category = parse_comfort_category(v); }},
      {"running_mean_alpha", number(config.study.running_mean_alpha)},
      {"relative_depth_basis", number(config.study.relative_depth_basis)},
      {"workers", [&](std::string_view v) { config.study.workers = to_count(v); }},
      {"seed", [&](std::string_view v) { config.seed = to_count(v); }},
      {"orientation_start", grid_number(grid.orientation_start)},
      {"orientation_step", grid_number(grid.orientation_step)},
      {"orientation_count",
       [&](std::string_view v) {
         grid.orientation_count = to_count(v);
         grid_touched = true;
       }},
      {"width_first", grid_number(grid.width_first)},
      {"width_step", grid_number(grid.width_step)},
      {"width_max", grid_number(grid.width_max)},
      {"d_max", number(config.grid.depth.d_max)},
      {"coarse_step", number(config.grid.depth.coarse_step)},
      {"refine_tolerance", number(config.grid.depth.refine_tolerance)},
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    try {
      it->second(value);
    } catch (const Error& e) {
      throw ParseError("config line " + std::to_string(line_no) + " (" + std::string(key) + "): " + e.what());
    }
  }
  if (grid_touched) expand(grid, config.grid);
}

void apply_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(buffer.str(), config);
}

std::string describe_config(const RunConfig& config) {
  const auto& room = config.study.room;
  const auto& c = room.constructions;
  const auto params = params_from(config.grid);
  std::ostringstream o;
  o << "weather = " << config.weather_path << "\n"
    << "out = " << config.out_dir << "\n"
    << "floor_length = " << room.floor_length << "\n"
    << "floor_depth = " << room.floor_depth << "\n"
    << "ceiling_height = " << room.ceiling_height << "\n"
    << "window_height = " << room.window_height << "\n"
    << "sill_height = " << room.sill_height << "\n"
    << "infiltration_ach = " << room.infiltration_ach << "\n"
    << "u_wall = " << c.u_wall << "\nu_floor = " << c.u_floor << "\nu_roof = " << c.u_roof
    << "\nu_window = " << c.u_window << "\nshgc = " << c.shgc << "\nvt = " << c.vt << "\n"
    << "capacity_class = " << to_string(c.capacity) << "\n"
    << "wall_exposure = " << to_string(room.wall_exposure) << "\n"
    << "ground_coupling = " << to_string(room.ground_coupling) << "\n"
    << "albedo = " << config.study.albedo << "\n"
    << "comfort_category = " << to_string(config.study.category) << "\n"
    << "running_mean_alpha = " << config.study.running_mean_alpha << "\n"
    << "relative_depth_basis = " << config.study.relative_depth_basis << "\n"
    << "workers = " << config.study.workers << "\n"
    << "seed = " << config.seed << "\n"
    << "orientation_start = " << params.orientation_start << "\n"
    << "orientation_step = " << params.orientation_step << "\n"
    << "orientation_count = " << params.orientation_count << "\n"
    << "width_first = " << params.width_first << "\n"
    << "width_step = " << params.width_step << "\n"
    << "width_max = " << params.width_max << "\n"
    << "d_max = " << config.grid.depth.d_max << "\n"
    << "coarse_step = " << config.grid.depth.coarse_step << "\n"
    << "refine_tolerance = " << config.grid.depth.refine_tolerance << "\n";
  return o.str();
}

}  // namespace winopt
