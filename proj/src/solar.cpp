#include "winopt/solar.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>

namespace winopt {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct SunCoordinates {
  double declination;  // degrees
  double eot;          // minutes
};

// Low-precision solar coordinates (Meeus, Astronomical Algorithms ch. 25),
// good to about 0.01 degrees over this century.
SunCoordinates sun_coordinates(int day_of_year, double utc_hour, int year) {
  using namespace std::chrono;
  const double unix_days = sys_days{std::chrono::year{year} / January / 1}.time_since_epoch().count();
  const double jd = 2440587.5 + unix_days + (day_of_year - 1) + utc_hour / 24.0;
  const double t = (jd - 2451545.0) / 36525.0;

  const double l0 = std::fmod(280.46646 + t * (36000.76983 + t * 0.0003032), 360.0) * kDeg;
  const double m = (357.52911 + t * (35999.05029 - 0.0001537 * t)) * kDeg;
  const double e = 0.016708634 - t * (0.000042037 + 0.0000001267 * t);
  const double centre = std::sin(m) * (1.914602 - t * (0.004817 + 0.000014 * t)) +
                        std::sin(2 * m) * (0.019993 - 0.000101 * t) + std::sin(3 * m) * 0.000289;
  const double omega = (125.04 - 1934.136 * t) * kDeg;
  const double apparent_longitude = (l0 / kDeg + centre - 0.00569 - 0.00478 * std::sin(omega)) * kDeg;
  const double mean_obliquity = 23.0 + (26.0 + (21.448 - t * (46.815 + t * (0.00059 - t * 0.001813))) / 60.0) / 60.0;
  const double obliquity = (mean_obliquity + 0.00256 * std::cos(omega)) * kDeg;

  SunCoordinates out;
  out.declination = std::asin(std::sin(obliquity) * std::sin(apparent_longitude)) / kDeg;
  const double y = std::pow(std::tan(0.5 * obliquity), 2);
  const double eot_rad = y * std::sin(2 * l0) - 2 * e * std::sin(m) + 4 * e * y * std::sin(m) * std::cos(2 * l0) -
                         0.5 * y * y * std::sin(4 * l0) - 1.25 * e * e * std::sin(2 * m);
  out.eot = 4.0 * eot_rad / kDeg;
  return out;
}

struct Vec3 {
  double x, y, z;
};

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// View factor from a differential element with unit normal `normal` at the
// origin to a planar polygon (Lambert's contour formula).
template <std::size_t N>
double polygon_view_factor(const Vec3& normal, const std::array<Vec3, N>& vertices) {
  double sum = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const Vec3& a = vertices[i];
    const Vec3& b = vertices[(i + 1) % N];
    const Vec3 c = cross(a, b);
    const double c_norm = norm(c);
    if (c_norm == 0.0) continue;
    const double angle = std::atan2(c_norm, dot(a, b));
    sum += angle * dot(normal, c) / c_norm;
  }
  return std::abs(sum) / (2.0 * std::numbers::pi);
}

}  // namespace

double equation_of_time_minutes(int day_of_year, double utc_hour, int year) {
  return sun_coordinates(day_of_year, utc_hour, year).eot;
}

double declination_degrees(int day_of_year, double utc_hour, int year) {
  return sun_coordinates(day_of_year, utc_hour, year).declination;
}

double solar_hour(const Site& site, int day_of_year, double local_standard_hour, int year) {
  const double eot = equation_of_time_minutes(day_of_year, local_standard_hour - site.utc_offset, year);
  return local_standard_hour + (4.0 * (site.longitude - 15.0 * site.utc_offset) + eot) / 60.0;
}

SolarPosition solar_position(const Site& site, int day_of_year, double solar_hour, int year) {
  SolarPosition pos;
  pos.declination = declination_degrees(day_of_year, solar_hour - site.longitude / 15.0, year);
  pos.hour_angle = 15.0 * (solar_hour - 12.0);

  const double lat = site.latitude * kDeg;
  const double dec = pos.declination * kDeg;
  const double ha = pos.hour_angle * kDeg;
  const double sin_alt = std::sin(lat) * std::sin(dec) + std::cos(lat) * std::cos(dec) * std::cos(ha);
  pos.altitude = std::asin(std::clamp(sin_alt, -1.0, 1.0)) / kDeg;

  const double east = -std::cos(dec) * std::sin(ha);
  const double north = std::sin(dec) * std::cos(lat) - std::cos(dec) * std::sin(lat) * std::cos(ha);
  double az = std::atan2(east, north) / kDeg;
  if (az < 0.0) az += 360.0;
  if (az >= 360.0) az -= 360.0;
  pos.azimuth = az;
  return pos;
}

SolarPosition solar_position_for_record(const Site& site, std::size_t hour_index) {
  const int day = static_cast<int>(hour_index / 24) + 1;
  const double local = static_cast<double>(hour_index % 24) + 0.5;
  return solar_position(site, day, solar_hour(site, day, local));
}

FacadeIrradiance facade_irradiance(const HourlyRecord& record, const SolarPosition& pos, double facade_azimuth,
                                   double albedo) {
  FacadeIrradiance out;
  if (pos.altitude > 0.0) {
    const double cos_incidence = std::cos(pos.altitude * kDeg) * std::cos((pos.azimuth - facade_azimuth) * kDeg);
    out.beam = record.dni * std::max(0.0, cos_incidence);
  }
  out.sky_diffuse = 0.5 * record.dhi;
  out.ground_reflected = 0.5 * albedo * record.ghi;
  return out;
}

double overhang_beam_fraction(const OverhangGeometry& geom, double tan_altitude, double sin_relative_azimuth,
                              double cos_relative_azimuth) {
  if (geom.depth <= 0.0 || tan_altitude <= 0.0 || cos_relative_azimuth <= 0.0) return 1.0;
  const double w = std::max(geom.window_width, kMinShadingWidth);
  const double h = geom.window_height;
  if (h <= 0.0) return 1.0;

  // Shadow of the overhang's front edge falls `drop` below the head; at depth v
  // below the head it is shifted sideways by v * lateral_rate.
  const double drop = geom.depth * tan_altitude / cos_relative_azimuth;
  const double shaded_depth = std::min(drop, h);
  const double lateral_rate = std::abs(sin_relative_azimuth) / tan_altitude;
  double shaded_area = 0.0;
  if (lateral_rate * shaded_depth <= w)
    shaded_area = w * shaded_depth - 0.5 * lateral_rate * shaded_depth * shaded_depth;
  else
    shaded_area = 0.5 * w * w / lateral_rate;
  return std::clamp(1.0 - shaded_area / (w * h), 0.0, 1.0);
}

double overhang_beam_fraction(const OverhangGeometry& geom, const SolarPosition& pos, double facade_azimuth) {
  if (pos.altitude <= 0.0) return 1.0;
  const double gamma = (pos.azimuth - facade_azimuth) * kDeg;
  return overhang_beam_fraction(geom, std::tan(pos.altitude * kDeg), std::sin(gamma), std::cos(gamma));
}

double overhang_sky_view_factor(const OverhangGeometry& geom) {
  if (geom.depth <= 0.0 || geom.window_height <= 0.0) return 1.0;
  const double half_w = 0.5 * std::max(geom.window_width, kMinShadingWidth);
  const double head = 0.5 * geom.window_height;
  // Window centre at the origin; x along the facade, y outward, z up.
  const std::array<Vec3, 4> overhang = {{{-half_w, 0.0, head},
                                         {half_w, 0.0, head},
                                         {half_w, geom.depth, head},
                                         {-half_w, geom.depth, head}}};
  const double blocked = polygon_view_factor({0.0, 1.0, 0.0}, overhang);
  // Unobstructed sky seen by a vertical surface is half of its hemisphere.
  return std::clamp(1.0 - blocked / 0.5, 0.0, 1.0);
}

}  // namespace winopt

namespace winopt {

std::vector<SolarPosition> solar_track(const Site& site) {
  std::vector<SolarPosition> track(kHoursPerYear);
  for (std::size_t h = 0; h < kHoursPerYear; ++h) track[h] = solar_position_for_record(site, h);
  return track;
}

FacadeExposure facade_exposure(const WeatherSeries& weather, const std::vector<SolarPosition>& track,
                               double facade_azimuth, double albedo) {
  FacadeExposure exposure;
  exposure.facade_azimuth = facade_azimuth;
  const std::size_t n = weather.size();
  exposure.irradiance.resize(n);
  exposure.tan_altitude.resize(n);
  exposure.sin_relative_azimuth.resize(n);
  exposure.cos_relative_azimuth.resize(n);
  for (std::size_t h = 0; h < n; ++h) {
    const auto& pos = track[h];
    exposure.irradiance[h] = facade_irradiance(weather[h], pos, facade_azimuth, albedo);
    const double gamma = (pos.azimuth - facade_azimuth) * std::numbers::pi / 180.0;
    exposure.tan_altitude[h] = pos.altitude > 0.0 ? std::tan(pos.altitude * std::numbers::pi / 180.0) : 0.0;
    exposure.sin_relative_azimuth[h] = std::sin(gamma);
    exposure.cos_relative_azimuth[h] = std::cos(gamma);
  }
  return exposure;
}

}  // namespace winopt
