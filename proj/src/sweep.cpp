#include "winopt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "winopt/error.hpp"

namespace winopt {
namespace {

constexpr double kMaxWidth = 7.00;
constexpr double kMinWidth = 0.01;

// Strictly better, or equal and at a smaller depth.
bool better(const DepthSample& a, const DepthSample& b) {
  if (a.score.tdh != b.score.tdh) return a.score.tdh < b.score.tdh;
  return a.depth < b.depth;
}

std::string describe(double orientation, double width) {
  std::ostringstream s;
  s << "orientation " << orientation << " deg, width " << width << " m";
  return s.str();
}

}  // namespace

void DepthSearch::validate() const {
  if (!(d_max > 0.0)) throw RangeError("d_max must be positive");
  if (!(coarse_step > 0.0)) throw RangeError("coarse_step must be positive");
  if (!(refine_tolerance > 0.0)) throw RangeError("refine_tolerance must be positive");
}

std::vector<double> DepthSearch::coarse_grid() const {
  validate();
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    const double d = static_cast<double>(k) * coarse_step;
    if (d >= d_max - 1e-9 * coarse_step) break;
    grid.push_back(d);
  }
  grid.push_back(d_max);
  return grid;
}

ScenarioGrid ScenarioGrid::defaults() {
  ScenarioGrid g;
  for (int k = 0; k < 180; ++k) g.orientations.push_back(2.0 * k);
  g.widths.push_back(0.01);
  for (int k = 1; k <= 70; ++k) g.widths.push_back(k / 10.0);
  return g;
}

void ScenarioGrid::validate() const {
  if (orientations.empty() || widths.empty()) throw RangeError("scenario grid needs orientations and widths");
  for (const double o : orientations)
    if (!(o >= 0.0 && o < 360.0)) throw RangeError("grid orientation " + std::to_string(o) + " outside [0, 360)");
  for (const double w : widths)
    if (!(w >= kMinWidth - 1e-12 && w <= kMaxWidth + 1e-12))
      throw RangeError("grid width " + std::to_string(w) + " outside [0.01, 7.00] m");
  depth.validate();
}

void StudyConfig::validate() const {
  room.validate();
  if (!(albedo >= 0.0 && albedo <= 1.0)) throw RangeError("albedo must lie in [0, 1]");
  if (!(running_mean_alpha > 0.0 && running_mean_alpha < 1.0))
    throw RangeError("running_mean_alpha must lie in (0, 1)");
  if (!(relative_depth_basis >= 0.0)) throw RangeError("relative_depth_basis must be >= 0");
  if (workers == 0) throw RangeError("workers must be at least 1");
}

ScenarioEvaluator::ScenarioEvaluator(const WeatherSeries& weather, StudyConfig config)
    : weather_(weather), config_(std::move(config)) {
  config_.validate();
  track_ = solar_track(weather_.site());
  outdoor_.resize(weather_.size());
  for (std::size_t h = 0; h < weather_.size(); ++h) outdoor_[h] = weather_[h].dry_bulb;
  ground_ = weather_.annual_mean_dry_bulb();
  band_ = comfort_limits(running_mean(weather_, config_.running_mean_alpha), config_.category);
}

FacadeExposure ScenarioEvaluator::exposure(double orientation) const {
  return facade_exposure(weather_, track_, orientation, config_.albedo);
}

RoomScenario ScenarioEvaluator::scenario(double orientation, double width, double depth) const {
  RoomScenario s = config_.room;
  s.facade_azimuth = orientation;
  s.window_width = width;
  s.overhang_depth = depth;
  return s;
}

OperativeSeries ScenarioEvaluator::simulate(const FacadeExposure& exposure, double width, double depth) const {
  const auto s = scenario(exposure.facade_azimuth, width, depth);
  const auto model = build_zone(s);
  const auto gains = solar_gain_series(s, exposure);
  return winopt::simulate(model, outdoor_, ground_, gains);
}

DiscomfortScore ScenarioEvaluator::score(const FacadeExposure& exposure, double width, double depth) const {
  return degree_hours(simulate(exposure, width, depth), band_);
}

DiscomfortScore ScenarioEvaluator::windowless_score() const {
  const auto s = scenario(0.0, 0.0, 0.0);
  const std::vector<double> no_gain(outdoor_.size(), 0.0);
  return degree_hours(winopt::simulate(build_zone(s), outdoor_, ground_, no_gain), band_);
}

OverhangOptimum optimize_overhang(const ScenarioEvaluator& evaluator, const FacadeExposure& exposure, double width,
                                  const DepthSearch& search) {
  if (!(width >= kMinWidth - 1e-12)) throw RangeError("overhang search needs a window width of at least 0.01 m");
  const auto grid = search.coarse_grid();
  const auto eval = [&](double d) { return DepthSample{d, evaluator.score(exposure, width, d)}; };

  OverhangOptimum result;
  result.coarse.reserve(grid.size());
  for (const double d : grid) result.coarse.push_back(eval(d));

  std::size_t best_index = 0;
  for (std::size_t i = 1; i < result.coarse.size(); ++i)
    if (better(result.coarse[i], result.coarse[best_index])) best_index = i;
  DepthSample best = result.coarse[best_index];

  // TDH(d) need not be unimodal, so golden section only refines inside the
  // bracket of the best grid point.
  double a = grid[best_index == 0 ? 0 : best_index - 1];
  double b = grid[std::min(best_index + 1, grid.size() - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  if (b - a > search.refine_tolerance) {
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    DepthSample fc = eval(c);
    DepthSample fd = eval(d);
    for (const auto* s : {&fc, &fd})
      if (better(*s, best)) best = *s;
    while (b - a > search.refine_tolerance) {
      if (fc.score.tdh <= fd.score.tdh) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = eval(c);
        if (better(fc, best)) best = fc;
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = eval(d);
        if (better(fd, best)) best = fd;
      }
    }
  }
  result.depth = best.depth;
  result.score = best.score;
  return result;
}

OverhangOptimum optimize_overhang(double orientation, double width, const WeatherSeries& weather,
                                  const StudyConfig& config, const DepthSearch& search) {
  const ScenarioEvaluator evaluator(weather, config);
  return optimize_overhang(evaluator, evaluator.exposure(orientation), width, search);
}

std::vector<SweepRow> run_sweep(const ScenarioGrid& grid, const ScenarioEvaluator& evaluator) {
  grid.validate();
  const auto& config = evaluator.config();
  const std::size_t n_widths = grid.widths.size();
  std::vector<SweepRow> rows(grid.orientations.size() * n_widths);
  std::vector<std::optional<std::string>> failures(grid.orientations.size());

  const auto run_orientation = [&](std::size_t oi) {
    const double orientation = grid.orientations[oi];
    double width = 0.0;
    try {
      const auto exposure = evaluator.exposure(orientation);
      for (std::size_t wi = 0; wi < n_widths; ++wi) {
        width = grid.widths[wi];
        const auto opt = optimize_overhang(evaluator, exposure, width, grid.depth);
        const auto s = evaluator.scenario(orientation, width, opt.depth);
        SweepRow& row = rows[oi * n_widths + wi];
        row.orientation = orientation;
        row.width = width;
        row.wfr = s.wfr();
        row.wwr = s.wwr();
        row.d_opt = opt.depth;
        row.relative_depth = opt.depth / config.depth_basis();
        row.hdh = opt.score.hdh;
        row.cdh = opt.score.cdh;
        row.tdh = opt.score.tdh;
        row.tdh_no_overhang = opt.coarse.front().score.tdh;
      }
    } catch (const std::exception& e) {
      failures[oi] = describe(orientation, width) + ": " + e.what();
    }
  };

  const std::size_t workers = std::min(config.workers, grid.orientations.size());
  if (workers <= 1) {
    for (std::size_t oi = 0; oi < grid.orientations.size(); ++oi) run_orientation(oi);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t oi = next++; oi < grid.orientations.size(); oi = next++) run_orientation(oi);
      });
    }
  }

  for (const auto& f : failures)
    if (f) throw Error(*f);
  return rows;
}

std::vector<SweepRow> run_sweep(const ScenarioGrid& grid, const WeatherSeries& weather, const StudyConfig& config) {
  const ScenarioEvaluator evaluator(weather, config);
  return run_sweep(grid, evaluator);
}

std::vector<OrientationOptimum> orientation_optima(const std::vector<SweepRow>& rows) {
  if (rows.empty()) throw LengthError("no sweep rows to analyse");
  std::vector<double> order;
  std::map<double, std::vector<const SweepRow*>> by_orientation;
  std::vector<double> all_widths;
  for (const auto& r : rows) {
    auto& group = by_orientation[r.orientation];
    if (group.empty()) order.push_back(r.orientation);
    group.push_back(&r);
    all_widths.push_back(r.width);
  }
  std::sort(all_widths.begin(), all_widths.end());
  all_widths.erase(std::unique(all_widths.begin(), all_widths.end()), all_widths.end());
  const double largest = all_widths.back();

  std::vector<OrientationOptimum> optima;
  optima.reserve(order.size());
  for (const double orientation : order) {
    auto group = by_orientation[orientation];
    std::sort(group.begin(), group.end(), [](const SweepRow* a, const SweepRow* b) { return a->width < b->width; });
    std::vector<double> widths;
    for (const auto* r : group) widths.push_back(r->width);
    if (widths != all_widths)
      throw LengthError("orientation " + std::to_string(orientation) + " does not cover every grid width");

    const SweepRow* with = group.front();
    const SweepRow* without = group.front();
    for (const auto* r : group) {
      if (r->tdh < with->tdh) with = r;
      if (r->tdh_no_overhang < without->tdh_no_overhang) without = r;
    }
    OrientationOptimum o;
    o.orientation = orientation;
    o.width_with_overhang = with->width;
    o.wfr_with_overhang = with->wfr;
    o.d_opt = with->d_opt;
    o.relative_depth = with->relative_depth;
    o.tdh_with_overhang = with->tdh;
    o.cdh_over_tdh = with->tdh > 0.0 ? with->cdh / with->tdh : 0.0;
    o.width_without_overhang = without->width;
    o.wfr_without_overhang = without->wfr;
    o.tdh_without_overhang = without->tdh_no_overhang;
    o.with_at_boundary = with->width == largest;
    o.without_at_boundary = without->width == largest;
    optima.push_back(o);
  }
  return optima;
}

RelativeReport relative_metrics(const std::vector<SweepRow>& rows, const std::vector<OrientationOptimum>& optima,
                                double tdh_windowless) {
  if (rows.empty()) throw LengthError("no sweep rows to normalise");
  RelativeReport report;
  report.tdh_windowless = tdh_windowless;
  report.tdh_best = rows.front().tdh;
  for (const auto& r : rows) report.tdh_best = std::min(report.tdh_best, r.tdh);
  const double span = tdh_windowless - report.tdh_best;
  if (span == 0.0)
    throw RangeError("windowless and best TDH coincide; relative performance is undefined");
  const auto performance = [&](double tdh) { return (tdh_windowless - tdh) / span; };

  report.rows.reserve(rows.size());
  for (const auto& r : rows) {
    MetricsRow m;
    m.row = r;
    m.cdh_over_tdh = r.tdh > 0.0 ? r.cdh / r.tdh : 0.0;
    m.performance = performance(r.tdh);
    m.performance_no_overhang = performance(r.tdh_no_overhang);
    report.rows.push_back(m);
  }
  for (const auto& o : optima)
    report.optima.push_back({o, performance(o.tdh_with_overhang), performance(o.tdh_without_overhang)});
  return report;
}

}  // namespace winopt
