#pragma once

#include <cstdint>

#include "winopt/weather.hpp"

namespace winopt {

/// Same values at every hour.
WeatherSeries constant_weather(const Site& site, double dry_bulb, double dni = 0.0, double dhi = 0.0,
                               double ghi = 0.0);

/// Clear-sky irradiance that depends only on sun altitude and day, and a dry bulb that
/// is constant within each day. Every day is symmetric about solar noon.
WeatherSeries noon_symmetric_weather(const Site& site);

/// Coimbra station metadata (40.20 N, 8.42 W, UTC+0, 141 m).
Site coimbra_site();

/// Deterministic stand-in for a Coimbra typical year, generated from
/// approximate monthly climate normals: daily clearness index and mean
/// temperature follow seeded AR(1) anomalies around monthly means, irradiance
/// is split with the Erbs correlation. Intended for tests and demos when the
/// measured EPW file is not at hand.
WeatherSeries coimbra_surrogate_weather(std::uint64_t seed = 2015);

}  // namespace winopt
