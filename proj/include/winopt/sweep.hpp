#pragma once

#include <cstddef>
#include <vector>

#include "winopt/comfort.hpp"
#include "winopt/solar.hpp"
#include "winopt/weather.hpp"
#include "winopt/zone.hpp"

namespace winopt {

struct DepthSearch {
  double d_max = 3.0;               // m
  double coarse_step = 0.10;        // m
  double refine_tolerance = 0.005;  // m

  void validate() const;
  /// 0, step, 2 step, ..., always ending exactly at d_max.
  std::vector<double> coarse_grid() const;
};

struct ScenarioGrid {
  std::vector<double> orientations;  // degrees in [0, 360)
  std::vector<double> widths;        // m in [0.01, 7.00]
  DepthSearch depth;

  /// 0..358 step 2 and widths 0.01, 0.10, 0.20, ..., 7.00.
  static ScenarioGrid defaults();
  void validate() const;
};

/// Everything about the experiment except the swept variables.
struct StudyConfig {
  RoomScenario room;  // orientation, width and depth are overwritten per scenario
  double albedo = kDefaultAlbedo;
  ComfortCategory category = ComfortCategory::II;
  double running_mean_alpha = 0.8;
  double relative_depth_basis = 0.0;  // m; 0 selects the window height
  std::size_t workers = 1;

  double depth_basis() const noexcept { return relative_depth_basis > 0.0 ? relative_depth_basis : room.window_height; }
  void validate() const;
};

/// Shared, read-only context for scoring scenarios against one weather year.
class ScenarioEvaluator {
 public:
  ScenarioEvaluator(const WeatherSeries& weather, StudyConfig config);

  const StudyConfig& config() const noexcept { return config_; }
  const WeatherSeries& weather() const noexcept { return weather_; }
  const ComfortBand& comfort_band() const noexcept { return band_; }

  FacadeExposure exposure(double orientation) const;
  RoomScenario scenario(double orientation, double width, double depth) const;

  /// Annual run of one scenario; `exposure` must belong to `orientation`.
  OperativeSeries simulate(const FacadeExposure& exposure, double width, double depth) const;
  DiscomfortScore score(const FacadeExposure& exposure, double width, double depth) const;
  /// Same room with the window removed.
  DiscomfortScore windowless_score() const;

 private:
  const WeatherSeries& weather_;
  StudyConfig config_;
  std::vector<SolarPosition> track_;
  std::vector<double> outdoor_;
  double ground_ = 0.0;
  ComfortBand band_;
};

struct DepthSample {
  double depth = 0.0;
  DiscomfortScore score;
};

struct OverhangOptimum {
  double depth = 0.0;
  DiscomfortScore score;
  std::vector<DepthSample> coarse;  // every coarse-grid evaluation, ascending depth
};

/// Minimises TDH over depth in [0, d_max]: coarse grid (including 0), then
/// golden-section refinement in the bracket around the best grid point. Ties
/// go to the smaller depth.
OverhangOptimum optimize_overhang(const ScenarioEvaluator& evaluator, const FacadeExposure& exposure, double width,
                                  const DepthSearch& search);
OverhangOptimum optimize_overhang(double orientation, double width, const WeatherSeries& weather,
                                  const StudyConfig& config, const DepthSearch& search = {});

struct SweepRow {
  double orientation = 0.0;
  double width = 0.0;
  double wfr = 0.0;
  double wwr = 0.0;
  double d_opt = 0.0;
  double relative_depth = 0.0;
  double hdh = 0.0;
  double cdh = 0.0;
  double tdh = 0.0;
  double tdh_no_overhang = 0.0;
};

/// One row per (orientation, width), orientation-major in grid order. Runs on
/// `config.workers` threads; results do not depend on the worker count.
std::vector<SweepRow> run_sweep(const ScenarioGrid& grid, const WeatherSeries& weather, const StudyConfig& config);
std::vector<SweepRow> run_sweep(const ScenarioGrid& grid, const ScenarioEvaluator& evaluator);

struct OrientationOptimum {
  double orientation = 0.0;
  double width_with_overhang = 0.0;
  double wfr_with_overhang = 0.0;
  double d_opt = 0.0;
  double relative_depth = 0.0;
  double tdh_with_overhang = 0.0;
  double cdh_over_tdh = 0.0;
  double width_without_overhang = 0.0;
  double wfr_without_overhang = 0.0;
  double tdh_without_overhang = 0.0;
  bool with_at_boundary = false;     // optimum is the largest width of the grid
  bool without_at_boundary = false;
};

/// Per orientation, the width minimising TDH with and without overhang (ties to
/// the smaller width). Every orientation must cover the same set of widths.
std::vector<OrientationOptimum> orientation_optima(const std::vector<SweepRow>& rows);

struct MetricsRow {
  SweepRow row;
  double cdh_over_tdh = 0.0;
  double performance = 0.0;             // with the optimal overhang
  double performance_no_overhang = 0.0;
};

struct OptimumMetrics {
  OrientationOptimum optimum;
  double performance_with_overhang = 0.0;
  double performance_without_overhang = 0.0;
};

/// Relative thermal performance (TDH0 - TDH) / (TDH0 - TDH*): 0 for the
/// windowless room, 1 for the best row of the whole table.
struct RelativeReport {
  double tdh_windowless = 0.0;
  double tdh_best = 0.0;
  std::vector<MetricsRow> rows;
  std::vector<OptimumMetrics> optima;
};

RelativeReport relative_metrics(const std::vector<SweepRow>& rows, const std::vector<OrientationOptimum>& optima,
                                double tdh_windowless);

}  // namespace winopt
