#include "winopt/comfort.hpp"

#include <algorithm>
#include <string>

#include "winopt/error.hpp"

namespace winopt {
namespace {

constexpr double kSlope = 0.33;
constexpr double kIntercept = 18.8;
constexpr double kUpperMinRunningMean = 10.0;
constexpr double kLowerMinRunningMean = 15.0;
constexpr double kMaxRunningMean = 30.0;

constexpr std::array<int, 12> kDaysInMonth = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

// Accumulates hours [first, last) in order.
DiscomfortScore accumulate(std::span<const double> t_op, const ComfortBand& bands, std::size_t first,
                           std::size_t last) {
  DiscomfortScore s;
  for (std::size_t h = first; h < last; ++h) {
    const auto& band = bands.days[h / 24];
    const double t = t_op[h];
    if (t < band.lower) s.hdh += band.lower - t;
    if (t > band.upper) s.cdh += t - band.upper;
  }
  s.tdh = s.hdh + s.cdh;
  return s;
}

void check_alignment(std::size_t hours, const ComfortBand& bands) {
  if (hours != bands.days.size() * 24)
    throw LengthError("operative series has " + std::to_string(hours) + " hours but the comfort band covers " +
                      std::to_string(bands.days.size()) + " days");
}

}  // namespace

ComfortCategory parse_comfort_category(std::string_view name) {
  if (name == "I" || name == "1") return ComfortCategory::I;
  if (name == "II" || name == "2") return ComfortCategory::II;
  if (name == "III" || name == "3") return ComfortCategory::III;
  throw ParseError("unknown comfort category '" + std::string(name) + "' (I, II, III)");
}

std::string_view to_string(ComfortCategory c) {
  switch (c) {
    case ComfortCategory::I:
      return "I";
    case ComfortCategory::II:
      return "II";
    case ComfortCategory::III:
      return "III";
  }
  return "II";
}

double band_half_width(ComfortCategory c) {
  switch (c) {
    case ComfortCategory::I:
      return 2.0;
    case ComfortCategory::II:
      return 3.0;
    case ComfortCategory::III:
      return 4.0;
  }
  return 3.0;
}

ComfortBand comfort_limits(const RunningMeanSeries& t_rm, ComfortCategory category) {
  const double half = band_half_width(category);
  ComfortBand band;
  band.days.reserve(t_rm.values.size());
  for (const double t : t_rm.values) {
    const double t_upper = std::clamp(t, kUpperMinRunningMean, kMaxRunningMean);
    const double t_lower = std::clamp(t, kLowerMinRunningMean, kMaxRunningMean);
    band.days.push_back({kSlope * t_lower + kIntercept - half, kSlope * t_upper + kIntercept + half});
  }
  return band;
}

DiscomfortScore degree_hours(std::span<const double> t_op, const ComfortBand& bands) {
  check_alignment(t_op.size(), bands);
  return accumulate(t_op, bands, 0, t_op.size());
}

DiscomfortScore degree_hours(const OperativeSeries& t_op, const ComfortBand& bands) {
  return degree_hours(std::span<const double>(t_op.values), bands);
}

std::array<DiscomfortScore, 12> monthly_degree_hours(const OperativeSeries& t_op, const ComfortBand& bands) {
  check_alignment(t_op.values.size(), bands);
  if (t_op.values.size() != kHoursPerYear) throw LengthError("monthly breakdown needs a full 8760-hour year");
  std::array<DiscomfortScore, 12> months{};
  std::size_t first = 0;
  for (std::size_t m = 0; m < 12; ++m) {
    const std::size_t last = first + static_cast<std::size_t>(kDaysInMonth[m]) * 24;
    months[m] = accumulate(t_op.values, bands, first, last);
    first = last;
  }
  return months;
}

}  // namespace winopt
