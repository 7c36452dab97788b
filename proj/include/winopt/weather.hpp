#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace winopt {

inline constexpr std::size_t kHoursPerYear = 8760;
inline constexpr std::size_t kDaysPerYear = 365;

/// Geographic metadata of a weather station.
struct Site {
  std::string name;
  double latitude = 0.0;    // degrees north
  double longitude = 0.0;   // degrees east
  double utc_offset = 0.0;  // hours
  double elevation = 0.0;   // m

  /// Throws RangeError when a field is outside its valid range.
  void validate() const;
};

/// One hour of the weather fields the model consumes.
struct HourlyRecord {
  double dry_bulb = 0.0;  // degC
  double dni = 0.0;       // W/m2, direct normal
  double dhi = 0.0;       // W/m2, diffuse horizontal
  double ghi = 0.0;       // W/m2, global horizontal
};

/// A full non-leap year of hourly weather. Record i covers the hour ending at
/// local standard time (i % 24) + 1 on day i / 24 (0-based). Immutable once
/// constructed, so a single instance can be shared between threads.
class WeatherSeries {
 public:
  /// Validates the record count and field ranges; throws LengthError or RangeError.
  WeatherSeries(Site site, std::vector<HourlyRecord> records);

  const Site& site() const noexcept { return site_; }
  const std::vector<HourlyRecord>& records() const noexcept { return records_; }
  const HourlyRecord& operator[](std::size_t hour) const { return records_[hour]; }
  std::size_t size() const noexcept { return records_.size(); }

  /// Number of irradiance values that were missing in the source and set to 0.
  std::size_t repaired_irradiance_count() const noexcept { return repaired_; }
  /// FNV-1a hash of the source header lines (0 for programmatic series).
  std::uint64_t header_checksum() const noexcept { return header_checksum_; }

  void set_provenance(std::size_t repaired, std::uint64_t header_checksum) noexcept {
    repaired_ = repaired;
    header_checksum_ = header_checksum;
  }

  /// Mean dry bulb of each calendar day (365 values).
  std::vector<double> daily_mean_dry_bulb() const;
  double annual_mean_dry_bulb() const;

 private:
  Site site_;
  std::vector<HourlyRecord> records_;
  std::size_t repaired_ = 0;
  std::uint64_t header_checksum_ = 0;
};

/// Daily running-mean outdoor temperature, 365 values.
struct RunningMeanSeries {
  std::vector<double> values;
};

/// Parses EPW text. Missing irradiance (>= 9999) is repaired to 0; more than
/// 5% repaired rows aborts with ParseError.
WeatherSeries parse_epw(std::string_view text);
WeatherSeries read_epw_file(const std::string& path);

/// Writes a minimal but valid EPW document. Unconsumed fields are filled with
/// EPW missing-value markers; the four consumed fields are printed with enough
/// digits to round-trip.
void write_epw(std::ostream& out, const WeatherSeries& series);
std::string to_epw_text(const WeatherSeries& series);

/// Exponentially weighted running mean of daily mean outdoor temperature,
/// T_rm[d] = (1 - alpha) * mean[d-1] + alpha * T_rm[d-1], seeded as the
/// periodic solution of the recursion over the year (December wraps into
/// January). Requires alpha in (0, 1).
RunningMeanSeries running_mean(const WeatherSeries& series, double alpha = 0.8);

/// Same recursion on an explicit list of daily means.
RunningMeanSeries running_mean(const std::vector<double>& daily_means, double alpha = 0.8);

}  // namespace winopt
