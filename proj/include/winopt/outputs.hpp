#pragma once

#include <array>
#include <string>
#include <vector>

#include "winopt/config.hpp"
#include "winopt/sweep.hpp"

namespace winopt {

/// Column header of sweep.csv.
inline constexpr const char* kSweepCsvHeader =
    "orientation_deg,width_m,wfr,wwr,d_opt_m,relative_depth,hdh,cdh,tdh,tdh_no_overhang,cdh_over_tdh,performance";
inline constexpr const char* kOptimaCsvHeader =
    "orientation_deg,width_with_overhang_m,wfr_with_overhang,d_opt_m,relative_depth,tdh_with_overhang,"
    "cdh_over_tdh,performance_with_overhang,width_without_overhang_m,wfr_without_overhang,tdh_without_overhang,"
    "performance_without_overhang,with_at_boundary,without_at_boundary";

/// Six significant digits, '.' decimal separator.
std::string format_cell(double value);

std::string sweep_csv(const RelativeReport& report);
std::string optima_csv(const RelativeReport& report);
/// Plot data: per orientation, the series of the annual assessment chart.
std::string figure2_json(const RelativeReport& report);

struct SimulationResult {
  RoomScenario scenario;
  DiscomfortScore score;
  std::array<DiscomfortScore, 12> monthly{};
  OperativeSeries operative;
};

std::string simulation_json(const RunConfig& config, const WeatherSeries& weather, const SimulationResult& result);

/// Rows as read back from the CSV files written by `sweep`.
struct SweepTableRow {
  double orientation, width, wfr, wwr, d_opt, relative_depth, hdh, cdh, tdh, tdh_no_overhang, cdh_over_tdh,
      performance;
};
struct OptimaTableRow {
  double orientation, width_with, wfr_with, d_opt, relative_depth, tdh_with, cdh_over_tdh, performance_with,
      width_without, wfr_without, tdh_without, performance_without;
  bool with_at_boundary, without_at_boundary;
};

std::vector<SweepTableRow> parse_sweep_csv(const std::string& text);
std::vector<OptimaTableRow> parse_optima_csv(const std::string& text);

/// Human-readable summary of a finished sweep.
std::string summary_report(const std::vector<SweepTableRow>& rows, const std::vector<OptimaTableRow>& optima);

}  // namespace winopt
