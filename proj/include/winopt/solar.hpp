#pragma once

#include <vector>

#include "winopt/weather.hpp"

namespace winopt {

struct SolarPosition {
  double altitude = 0.0;     // degrees above the horizon
  double azimuth = 0.0;      // degrees clockwise from North, [0, 360)
  double declination = 0.0;  // degrees
  double hour_angle = 0.0;   // degrees, negative before solar noon
};

/// Irradiance components on a vertical plane, W/m2.
struct FacadeIrradiance {
  double beam = 0.0;
  double sky_diffuse = 0.0;
  double ground_reflected = 0.0;

  double total() const noexcept { return beam + sky_diffuse + ground_reflected; }
};

/// Flush, full-width horizontal overhang at the window head.
struct OverhangGeometry {
  double depth = 0.0;          // m
  double window_width = 0.0;   // m
  double window_height = 0.0;  // m
};

inline constexpr double kMinShadingWidth = 0.01;  // m
inline constexpr double kDefaultAlbedo = 0.2;

/// Calendar year that day-of-year values refer to. Weather years carry no
/// year of their own, and the sun's declination on a given day drifts by up to
/// 0.2 degrees across the leap-year cycle.
inline constexpr int kNominalYear = 2019;

/// Equation of time in minutes at `utc_hour` on `day_of_year` (day 1 is
/// January 1st of `year`).
double equation_of_time_minutes(int day_of_year, double utc_hour, int year = kNominalYear);
/// Solar declination, degrees.
double declination_degrees(int day_of_year, double utc_hour, int year = kNominalYear);

/// Apparent solar time (hours) at a local standard clock time.
double solar_hour(const Site& site, int day_of_year, double local_standard_hour, int year = kNominalYear);

SolarPosition solar_position(const Site& site, int day_of_year, double solar_hour, int year = kNominalYear);

/// Sun position at the midpoint of the EPW interval ending at hour_index % 24 + 1.
SolarPosition solar_position_for_record(const Site& site, std::size_t hour_index);

/// Irradiance on a vertical surface facing `facade_azimuth` (isotropic sky).
FacadeIrradiance facade_irradiance(const HourlyRecord& record, const SolarPosition& pos, double facade_azimuth,
                                   double albedo = kDefaultAlbedo);

/// Sunlit fraction of the window under a flush full-width overhang, exact for
/// the parallelogram shadow cast by the overhang's front edge. Returns 1 when
/// the sun is below the horizon or behind the facade.
double overhang_beam_fraction(const OverhangGeometry& geom, const SolarPosition& pos, double facade_azimuth);

/// Same computation from the sun's direction in the facade frame: `tan_altitude`
/// and the sine/cosine of the sun azimuth relative to the facade normal.
double overhang_beam_fraction(const OverhangGeometry& geom, double tan_altitude, double sin_relative_azimuth,
                              double cos_relative_azimuth);

/// Isotropic sky-diffuse multiplier at the window centre for a finite
/// overhang, relative to the unobstructed facade. 1 at depth 0, nonincreasing
/// in depth.
double overhang_sky_view_factor(const OverhangGeometry& geom);

}  // namespace winopt

namespace winopt {

/// Sun position at the midpoint of every hour of a weather year.
std::vector<SolarPosition> solar_track(const Site& site);

/// Hourly irradiance on one facade plus the sun direction in the facade frame,
/// precomputed so overhang variants can be evaluated without trigonometry on
/// the sun position.
struct FacadeExposure {
  double facade_azimuth = 0.0;
  std::vector<FacadeIrradiance> irradiance;
  std::vector<double> tan_altitude;  // 0 when the sun is down
  std::vector<double> sin_relative_azimuth;
  std::vector<double> cos_relative_azimuth;
};

FacadeExposure facade_exposure(const WeatherSeries& weather, const std::vector<SolarPosition>& track,
                               double facade_azimuth, double albedo = kDefaultAlbedo);

}  // namespace winopt
