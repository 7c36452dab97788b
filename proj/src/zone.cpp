#include "winopt/zone.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "winopt/error.hpp"

namespace winopt {
namespace {

constexpr double kAirHeatCapacity = 1200.0;   // J/m3K
constexpr double kSurfaceCoefficient = 3.45;  // W/m2K, air <-> surface node
constexpr double kMassCoefficient = 9.1;      // W/m2K, surface <-> mass node
constexpr double kInternalAreaRatio = 4.5;    // A_t / A_f
constexpr double kAirWeight = 0.3;            // operative = 0.3 air + 0.7 surface

struct CapacityData {
  double mass_area_ratio;     // A_m / A_f
  double specific_capacity;   // J/m2K of floor
};

CapacityData capacity_data(CapacityClass c) {
  switch (c) {
    case CapacityClass::light:
      return {2.5, 80'000.0};
    case CapacityClass::medium:
      return {2.5, 165'000.0};
    case CapacityClass::heavy:
      return {3.0, 260'000.0};
  }
  return {2.5, 165'000.0};
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw RangeError(std::string(name) + " must be positive");
}

}  // namespace

CapacityClass parse_capacity_class(std::string_view name) {
  if (name == "light") return CapacityClass::light;
  if (name == "medium") return CapacityClass::medium;
  if (name == "heavy") return CapacityClass::heavy;
  throw ParseError("unknown capacity class '" + std::string(name) + "' (light, medium, heavy)");
}

WallExposure parse_wall_exposure(std::string_view name) {
  if (name == "all_exterior") return WallExposure::all_exterior;
  if (name == "facade_only") return WallExposure::facade_only;
  throw ParseError("unknown wall exposure '" + std::string(name) + "' (all_exterior, facade_only)");
}

GroundCoupling parse_ground_coupling(std::string_view name) {
  if (name == "annual_mean_air") return GroundCoupling::annual_mean_air;
  if (name == "outdoor_air") return GroundCoupling::outdoor_air;
  throw ParseError("unknown ground coupling '" + std::string(name) + "' (annual_mean_air, outdoor_air)");
}

std::string_view to_string(CapacityClass c) {
  switch (c) {
    case CapacityClass::light:
      return "light";
    case CapacityClass::medium:
      return "medium";
    case CapacityClass::heavy:
      return "heavy";
  }
  return "medium";
}

std::string_view to_string(WallExposure e) {
  return e == WallExposure::all_exterior ? "all_exterior" : "facade_only";
}

std::string_view to_string(GroundCoupling g) {
  return g == GroundCoupling::annual_mean_air ? "annual_mean_air" : "outdoor_air";
}

void ConstructionSet::validate() const {
  require_positive(u_wall, "u_wall");
  require_positive(u_floor, "u_floor");
  require_positive(u_roof, "u_roof");
  require_positive(u_window, "u_window");
  if (!(shgc > 0.0 && shgc <= 1.0)) throw RangeError("shgc must lie in (0, 1]");
  if (!(vt > 0.0 && vt <= 1.0)) throw RangeError("vt must lie in (0, 1]");
}

void RoomScenario::validate() const {
  require_positive(floor_length, "floor_length");
  require_positive(floor_depth, "floor_depth");
  require_positive(ceiling_height, "ceiling_height");
  require_positive(window_height, "window_height");
  constructions.validate();
  if (!(window_width >= 0.0)) throw GeometryError("window width must be >= 0");
  if (!(overhang_depth >= 0.0)) throw GeometryError("overhang depth must be >= 0");
  if (!(infiltration_ach >= 0.0)) throw RangeError("infiltration_ach must be >= 0");
  if (!(sill_height >= 0.0)) throw GeometryError("sill height must be >= 0");
  if (window_width > floor_length)
    throw GeometryError("window width " + std::to_string(window_width) + " m exceeds the facade wall width " +
                        std::to_string(floor_length) + " m");
  if (sill_height + window_height > ceiling_height)
    throw GeometryError("window head (sill + height) is above the ceiling");
}

void ZoneModel::validate() const {
  if (h_ventilation < 0 || h_window < 0 || h_opaque < 0 || h_air_surface < 0 || h_mass_surface <= 0 ||
      h_mass_exterior < 0)
    throw RangeError("zone conductances must be nonnegative");
  if (!(capacitance > 0.0)) throw RangeError("zone capacitance must be positive");
  if (!(ground_share >= 0.0 && ground_share <= 1.0)) throw RangeError("ground share must lie in [0, 1]");
}

ZoneModel build_zone(const RoomScenario& s) {
  s.validate();
  const auto& c = s.constructions;
  const double floor_area = s.floor_area();
  const double window_area = s.window_area();

  double wall_area = s.facade_area() - window_area;
  if (s.wall_exposure == WallExposure::all_exterior)
    wall_area += s.facade_area() + 2.0 * s.floor_depth * s.ceiling_height;
  const double h_floor = c.u_floor * floor_area;
  const double h_above_ground = c.u_wall * wall_area + c.u_roof * floor_area;

  const auto cap = capacity_data(c.capacity);
  const double mass_area = cap.mass_area_ratio * floor_area;
  const double internal_area = kInternalAreaRatio * floor_area;

  ZoneModel m;
  m.h_ventilation = s.infiltration_ach * s.volume() * kAirHeatCapacity / 3600.0;
  m.h_window = c.u_window * window_area;
  m.h_opaque = h_above_ground + h_floor;
  m.ground_share = s.ground_coupling == GroundCoupling::annual_mean_air ? h_floor / m.h_opaque : 0.0;
  m.h_air_surface = kSurfaceCoefficient * internal_area;
  m.h_mass_surface = kMassCoefficient * mass_area;
  if (m.h_opaque >= m.h_mass_surface)
    throw GeometryError("opaque conductance exceeds the surface-to-mass coupling; envelope is not representable");
  m.h_mass_exterior = 1.0 / (1.0 / m.h_opaque - 1.0 / m.h_mass_surface);
  m.capacitance = cap.specific_capacity * floor_area;
  m.solar_aperture = window_area * c.shgc;

  m.gain_to_air = 0.0;
  m.gain_to_mass = mass_area / internal_area;
  // Negative only for glazing far larger than this room allows.
  m.gain_to_surface = std::max(0.0, 1.0 - mass_area / internal_area - m.h_window / (kMassCoefficient * internal_area));
  return m;
}

double solar_gain(const RoomScenario& scenario, const FacadeIrradiance& irr, double beam_fraction,
                  double sky_view_factor) {
  return scenario.window_area() * scenario.constructions.shgc *
         (irr.beam * beam_fraction + irr.sky_diffuse * sky_view_factor + irr.ground_reflected);
}

std::vector<double> solar_gain_series(const RoomScenario& scenario, const FacadeExposure& exposure) {
  const auto geom = scenario.overhang();
  const double sky_view = overhang_sky_view_factor(geom);
  const std::size_t n = exposure.irradiance.size();
  std::vector<double> gains(n);
  for (std::size_t h = 0; h < n; ++h) {
    const auto& irr = exposure.irradiance[h];
    const double beam_fraction =
        irr.beam > 0.0 ? overhang_beam_fraction(geom, exposure.tan_altitude[h], exposure.sin_relative_azimuth[h],
                                                exposure.cos_relative_azimuth[h])
                       : 1.0;
    gains[h] = solar_gain(scenario, irr, beam_fraction, sky_view);
  }
  return gains;
}

ZoneStepper::ZoneStepper(const ZoneModel& model, double initial_mass_temperature)
    : model_(model), mass_(initial_mass_temperature) {
  model_.validate();
  const double hve = model_.h_ventilation;
  const double his = model_.h_air_surface;
  h1_ = (hve > 0.0 && his > 0.0) ? 1.0 / (1.0 / hve + 1.0 / his) : 0.0;
  h2_ = h1_ + model_.h_window;
  h3_ = h2_ > 0.0 ? 1.0 / (1.0 / h2_ + 1.0 / model_.h_mass_surface) : 0.0;
}

NodeTemperatures ZoneStepper::step(double outdoor, double ground, double gain) {
  const auto& m = model_;
  const double phi_air = m.gain_to_air * gain;
  const double phi_surface = m.gain_to_surface * gain;
  const double phi_mass = m.gain_to_mass * gain;
  const double exterior_equivalent = (1.0 - m.ground_share) * outdoor + m.ground_share * ground;

  // Air-node gain reaching the surface node through H_tr,is.
  const double air_gain_share =
      (m.h_ventilation + m.h_air_surface) > 0.0 ? m.h_air_surface / (m.h_ventilation + m.h_air_surface) : 0.0;
  const double surface_drive = phi_surface + m.h_window * outdoor + h1_ * outdoor + phi_air * air_gain_share;

  const double phi_mass_total =
      phi_mass + m.h_mass_exterior * exterior_equivalent + (h2_ > 0.0 ? h3_ * surface_drive / h2_ : 0.0);
  const double c_rate = m.capacitance / 3600.0;
  const double coupling = 0.5 * (h3_ + m.h_mass_exterior);
  const double previous = mass_;
  mass_ = (previous * (c_rate - coupling) + phi_mass_total) / (c_rate + coupling);

  NodeTemperatures t;
  t.mass = 0.5 * (mass_ + previous);
  t.surface = (m.h_mass_surface * t.mass + surface_drive) / (m.h_mass_surface + m.h_window + h1_);
  t.air = (m.h_air_surface * t.surface + m.h_ventilation * outdoor + phi_air) /
          (m.h_air_surface + m.h_ventilation);
  t.operative = kAirWeight * t.air + (1.0 - kAirWeight) * t.surface;
  return t;
}

OperativeSeries simulate(const ZoneModel& model, std::span<const double> outdoor, double ground,
                         std::span<const double> gains, std::size_t spin_up_hours) {
  if (outdoor.size() != gains.size())
    throw LengthError("outdoor temperature and solar gain series differ in length");
  const std::size_t n = outdoor.size();
  spin_up_hours = std::min(spin_up_hours, n);

  double start = 0.0;
  if (spin_up_hours > 0) {
    for (std::size_t h = n - spin_up_hours; h < n; ++h) start += outdoor[h];
    start /= static_cast<double>(spin_up_hours);
  } else if (n > 0) {
    start = outdoor[0];
  }
  const double ground_or_outdoor = model.ground_share > 0.0 ? ground : 0.0;

  ZoneStepper stepper(model, start);
  for (std::size_t h = n - spin_up_hours; h < n; ++h) stepper.step(outdoor[h], ground_or_outdoor, gains[h]);

  OperativeSeries out;
  out.values.resize(n);
  for (std::size_t h = 0; h < n; ++h) {
    out.values[h] = stepper.step(outdoor[h], ground_or_outdoor, gains[h]).operative;
    if (!std::isfinite(out.values[h])) throw Error("zone simulation diverged at hour " + std::to_string(h));
  }
  return out;
}

namespace {

std::vector<double> dry_bulb_series(const WeatherSeries& weather) {
  std::vector<double> t(weather.size());
  for (std::size_t h = 0; h < weather.size(); ++h) t[h] = weather[h].dry_bulb;
  return t;
}

}  // namespace

OperativeSeries simulate_year(const RoomScenario& scenario, const WeatherSeries& weather,
                              const FacadeExposure& exposure) {
  const auto model = build_zone(scenario);
  const auto gains = solar_gain_series(scenario, exposure);
  const auto outdoor = dry_bulb_series(weather);
  return simulate(model, outdoor, weather.annual_mean_dry_bulb(), gains);
}

OperativeSeries simulate_year(const RoomScenario& scenario, const WeatherSeries& weather, double albedo) {
  const auto track = solar_track(weather.site());
  const auto exposure = facade_exposure(weather, track, scenario.facade_azimuth, albedo);
  return simulate_year(scenario, weather, exposure);
}

}  // namespace winopt
