#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "winopt/weather.hpp"
#include "winopt/zone.hpp"

namespace winopt {

/// EN 15251 adaptive comfort categories for naturally ventilated spaces.
enum class ComfortCategory { I, II, III };

ComfortCategory parse_comfort_category(std::string_view name);
std::string_view to_string(ComfortCategory c);
/// Half-width of the band around the comfort temperature, K.
double band_half_width(ComfortCategory c);

struct DailyBand {
  double lower = 0.0;  // degC
  double upper = 0.0;  // degC
};

/// One band per calendar day.
struct ComfortBand {
  std::vector<DailyBand> days;
};

/// T_c = 0.33 T_rm + 18.8. The running mean is clamped to [10, 30] degC for the
/// upper limit and [15, 30] degC for the lower limit.
ComfortBand comfort_limits(const RunningMeanSeries& t_rm, ComfortCategory category = ComfortCategory::II);

/// Degree-hours of discomfort, K.h.
struct DiscomfortScore {
  double hdh = 0.0;
  double cdh = 0.0;
  double tdh = 0.0;

  double cdh_share() const noexcept { return tdh > 0.0 ? cdh / tdh : 0.0; }
};

/// Hour h is scored against the band of day h / 24. Throws LengthError when the
/// series and the bands do not cover the same days.
DiscomfortScore degree_hours(std::span<const double> t_op, const ComfortBand& bands);
DiscomfortScore degree_hours(const OperativeSeries& t_op, const ComfortBand& bands);

/// Scores per calendar month (12 entries) of a full 8760-hour year.
std::array<DiscomfortScore, 12> monthly_degree_hours(const OperativeSeries& t_op, const ComfortBand& bands);

}  // namespace winopt
