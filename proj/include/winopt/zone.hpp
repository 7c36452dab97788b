#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "winopt/solar.hpp"
#include "winopt/weather.hpp"

namespace winopt {

enum class CapacityClass { light, medium, heavy };

/// Which vertical walls exchange heat with outdoor air. The others are adiabatic.
enum class WallExposure { all_exterior, facade_only };

/// Boundary temperature seen by the ground floor.
enum class GroundCoupling { annual_mean_air, outdoor_air };

CapacityClass parse_capacity_class(std::string_view name);
WallExposure parse_wall_exposure(std::string_view name);
GroundCoupling parse_ground_coupling(std::string_view name);
std::string_view to_string(CapacityClass c);
std::string_view to_string(WallExposure e);
std::string_view to_string(GroundCoupling g);

/// Envelope properties. Defaults are the reference values for Coimbra (zones I2/V2).
struct ConstructionSet {
  double u_wall = 0.43;    // W/m2K, double brick wall
  double u_floor = 0.45;   // W/m2K, ground floor
  double u_roof = 0.37;    // W/m2K, flat roof
  double u_window = 2.60;  // W/m2K, double glazing
  double shgc = 0.63;
  double vt = 0.56;  // kept for completeness, daylight is not modelled
  CapacityClass capacity = CapacityClass::medium;

  void validate() const;
};

/// Single-zone reference room with one window centred in the facade wall.
/// The facade runs along `floor_length`.
struct RoomScenario {
  double floor_length = 7.60;   // m
  double floor_depth = 3.00;    // m
  double ceiling_height = 2.70; // m
  double facade_azimuth = 0.0;  // degrees clockwise from North
  double window_width = 0.01;   // m; 0 means no window at all
  double window_height = 2.00;  // m
  double sill_height = 0.50;    // m
  double overhang_depth = 0.0;  // m
  double infiltration_ach = 0.4;
  ConstructionSet constructions;
  WallExposure wall_exposure = WallExposure::all_exterior;
  GroundCoupling ground_coupling = GroundCoupling::annual_mean_air;

  double floor_area() const noexcept { return floor_length * floor_depth; }
  double volume() const noexcept { return floor_area() * ceiling_height; }
  double facade_area() const noexcept { return floor_length * ceiling_height; }
  double window_area() const noexcept { return window_width * window_height; }
  double wfr() const noexcept { return window_area() / floor_area(); }
  double wwr() const noexcept { return window_area() / facade_area(); }
  OverhangGeometry overhang() const noexcept { return {overhang_depth, window_width, window_height}; }

  /// Throws GeometryError or RangeError.
  void validate() const;
};

/// Coefficients of the five-conductance, one-capacitance network
/// (EN ISO 13790 simple hourly method). Node temperatures: air, central
/// surface node, thermal mass.
struct ZoneModel {
  double h_ventilation = 0.0;  // air <-> outdoor, W/K
  double h_window = 0.0;       // surface <-> outdoor, W/K
  double h_opaque = 0.0;       // total opaque transmission, W/K
  double h_air_surface = 0.0;  // air <-> surface (H_tr,is)
  double h_mass_surface = 0.0; // surface <-> mass (H_tr,ms)
  double h_mass_exterior = 0.0; // mass <-> exterior equivalent (H_tr,em)
  double ground_share = 0.0;   // share of h_opaque whose boundary is the ground temperature
  double capacitance = 0.0;    // J/K
  double solar_aperture = 0.0; // window area * SHGC, m2

  // How absorbed solar gain is split between nodes (the remainder is
  // re-emitted through the glazing).
  double gain_to_air = 0.0;
  double gain_to_surface = 0.0;
  double gain_to_mass = 0.0;

  void validate() const;
};

ZoneModel build_zone(const RoomScenario& scenario);

/// Solar gain through the window for one hour, W. The ground-reflected part is
/// not shaded by the overhang.
double solar_gain(const RoomScenario& scenario, const FacadeIrradiance& irradiance, double beam_fraction,
                  double sky_view_factor);

/// Hourly solar gain for the scenario's overhang and window on a precomputed facade.
std::vector<double> solar_gain_series(const RoomScenario& scenario, const FacadeExposure& exposure);

struct NodeTemperatures {
  double air = 0.0;
  double surface = 0.0;
  double mass = 0.0;  // average over the step
  double operative = 0.0;
};

/// Crank-Nicolson stepping of the network, one hour per step.
class ZoneStepper {
 public:
  ZoneStepper(const ZoneModel& model, double initial_mass_temperature);

  NodeTemperatures step(double outdoor, double ground, double solar_gain);
  double mass_temperature() const noexcept { return mass_; }

 private:
  ZoneModel model_;
  double h1_, h2_, h3_;
  double mass_;
};

struct OperativeSeries {
  std::vector<double> values;  // degC, 8760 hours
};

/// Free-floating hourly run. The last `spin_up_hours` of the year are simulated
/// first and discarded, then the full year is returned.
OperativeSeries simulate(const ZoneModel& model, std::span<const double> outdoor, double ground,
                         std::span<const double> solar_gain, std::size_t spin_up_hours = 744);

/// Builds the zone, computes hourly gains from the weather and runs a full year.
OperativeSeries simulate_year(const RoomScenario& scenario, const WeatherSeries& weather,
                              double albedo = kDefaultAlbedo);

/// Same, reusing a precomputed facade exposure for scenario.facade_azimuth.
OperativeSeries simulate_year(const RoomScenario& scenario, const WeatherSeries& weather,
                              const FacadeExposure& exposure);

}  // namespace winopt
