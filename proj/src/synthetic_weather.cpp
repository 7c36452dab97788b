#include "winopt/synthetic_weather.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "winopt/solar.hpp"

namespace winopt {
namespace {

constexpr double kSolarConstant = 1367.0;
constexpr std::array<int, 12> kDaysInMonth = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

// Approximate Coimbra normals: mean dry bulb (degC), mean daily range (K) and
// mean daily clearness index per month.
constexpr std::array<double, 12> kMonthlyMean = {9.6, 10.9, 12.9, 14.0, 16.4, 19.7, 21.6, 21.6, 20.3, 16.9, 12.9, 10.9};
constexpr std::array<double, 12> kMonthlyRange = {9.0, 10.0, 11.0, 11.0, 11.5, 12.5, 14.0, 14.0, 13.0, 11.0, 9.0, 8.0};
constexpr std::array<double, 12> kMonthlyClearness = {0.45, 0.48, 0.52, 0.53, 0.56, 0.60,
                                                      0.66, 0.65, 0.58, 0.50, 0.45, 0.43};

double extraterrestrial_normal(int day_of_year) {
  return kSolarConstant * (1.0 + 0.033 * std::cos(2.0 * std::numbers::pi * day_of_year / 365.0));
}

// Erbs et al. (1982) hourly diffuse fraction.
double erbs_diffuse_fraction(double kt) {
  if (kt <= 0.22) return 1.0 - 0.09 * kt;
  if (kt <= 0.80)
    return 0.9511 - 0.1604 * kt + 4.388 * kt * kt - 16.638 * kt * kt * kt + 12.336 * kt * kt * kt * kt;
  return 0.165;
}

// Global horizontal split into DNI/DHI for a given clearness index.
HourlyRecord split_irradiance(double dry_bulb, double clearness, double sin_alt, int day_of_year) {
  HourlyRecord r;
  r.dry_bulb = dry_bulb;
  if (sin_alt <= 0.0) return r;
  const double horizontal_extra = extraterrestrial_normal(day_of_year) * sin_alt;
  r.ghi = clearness * horizontal_extra;
  r.dhi = erbs_diffuse_fraction(clearness) * r.ghi;
  // Keep DNI finite near sunrise/sunset.
  r.dni = std::min((r.ghi - r.dhi) / std::max(sin_alt, 0.05), 0.9 * extraterrestrial_normal(day_of_year));
  r.ghi = r.dhi + r.dni * sin_alt;
  return r;
}

// Month-mid interpolation of a cyclic monthly table to day-of-year (0-based).
double daily_value(const std::array<double, 12>& table, int day) {
  std::array<double, 12> mid{};
  int start = 0;
  for (int m = 0; m < 12; ++m) {
    mid[m] = start + 0.5 * kDaysInMonth[m];
    start += kDaysInMonth[m];
  }
  const double t = day + 0.5;
  for (int m = 0; m < 12; ++m) {
    const int next = (m + 1) % 12;
    const double a = mid[m];
    const double b = next == 0 ? mid[0] + 365.0 : mid[next];
    double tt = t;
    if (tt < mid[0]) tt += 365.0;
    if (tt >= a && tt < b) return table[m] + (table[next] - table[m]) * (tt - a) / (b - a);
  }
  return table[0];
}

// Standard normal deviates from mt19937_64 raw output (portable, unlike
// std::normal_distribution).
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : engine_(seed) {}
  double operator()() {
    const double u1 = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

// Diurnal profile in [-0.5, 0.5]: minimum at 06:00, maximum at 15:00.
double diurnal_shape(double hour) {
  constexpr double kMin = 6.0;
  constexpr double kMax = 15.0;
  double h = std::fmod(hour - kMin + 24.0, 24.0);
  if (h <= kMax - kMin) return -0.5 * std::cos(std::numbers::pi * h / (kMax - kMin));
  return 0.5 * std::cos(std::numbers::pi * (h - (kMax - kMin)) / (24.0 - (kMax - kMin)));
}

}  // namespace

WeatherSeries constant_weather(const Site& site, double dry_bulb, double dni, double dhi, double ghi) {
  return WeatherSeries(site, std::vector<HourlyRecord>(kHoursPerYear, HourlyRecord{dry_bulb, dni, dhi, ghi}));
}

WeatherSeries noon_symmetric_weather(const Site& site) {
  std::vector<HourlyRecord> records(kHoursPerYear);
  for (std::size_t h = 0; h < kHoursPerYear; ++h) {
    const int day = static_cast<int>(h / 24);
    auto& r = records[h];
    r.dry_bulb = 15.0 + 7.0 * std::sin(2.0 * std::numbers::pi * (day - 105) / 365.0);
    const auto pos = solar_position_for_record(site, h);
    if (pos.altitude <= 0.0) continue;
    // Kasten-Young air mass, Meinel beam attenuation, Haurwitz global.
    const double sin_alt = std::sin(pos.altitude * std::numbers::pi / 180.0);
    const double air_mass = 1.0 / (sin_alt + 0.50572 * std::pow(pos.altitude + 6.07995, -1.6364));
    r.dni = extraterrestrial_normal(day + 1) * std::pow(0.7, std::pow(air_mass, 0.678));
    r.ghi = std::max(1098.0 * sin_alt * std::exp(-0.057 / sin_alt), r.dni * sin_alt);
    r.dhi = r.ghi - r.dni * sin_alt;
  }
  return WeatherSeries(site, std::move(records));
}

Site coimbra_site() { return Site{"Coimbra (surrogate)", 40.20, -8.42, 0.0, 141.0}; }

WeatherSeries coimbra_surrogate_weather(std::uint64_t seed) {
  const Site site = coimbra_site();
  Gaussian noise(seed);
  std::vector<HourlyRecord> records(kHoursPerYear);
  double temperature_anomaly = 0.0;
  double clearness_anomaly = 0.0;
  int month = 0;
  int day_in_month = 0;
  for (int day = 0; day < static_cast<int>(kDaysPerYear); ++day) {
    temperature_anomaly = 0.75 * temperature_anomaly + 2.0 * std::sqrt(1.0 - 0.75 * 0.75) * noise();
    clearness_anomaly = 0.5 * clearness_anomaly + 0.17 * std::sqrt(1.0 - 0.5 * 0.5) * noise();
    const double mean_clearness = daily_value(kMonthlyClearness, day);
    const double clearness = std::clamp(mean_clearness + clearness_anomaly, 0.08, 0.76);
    const double range = daily_value(kMonthlyRange, day) *
                         std::clamp(0.4 + 0.6 * clearness / mean_clearness, 0.3, 1.4);
    // Clear days run warmer in summer and colder in winter.
    const double cloud_effect = (clearness - mean_clearness) * (month >= 4 && month <= 8 ? 6.0 : -4.0);
    const double daily_mean = daily_value(kMonthlyMean, day) + temperature_anomaly + cloud_effect;
    for (int hour = 0; hour < 24; ++hour) {
      const std::size_t h = static_cast<std::size_t>(day) * 24 + static_cast<std::size_t>(hour);
      const double dry_bulb = daily_mean + range * diurnal_shape(hour + 0.5);
      const auto pos = solar_position_for_record(site, h);
      const double sin_alt = std::sin(pos.altitude * std::numbers::pi / 180.0);
      records[h] = split_irradiance(dry_bulb, clearness, sin_alt, day + 1);
    }
    if (++day_in_month == kDaysInMonth[month]) {
      day_in_month = 0;
      ++month;
    }
  }
  return WeatherSeries(site, std::move(records));
}

}  // namespace winopt
