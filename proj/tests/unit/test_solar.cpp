#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "test_support.hpp"
#include "winopt/solar.hpp"
#include "winopt/synthetic_weather.hpp"

using namespace winopt;

namespace {

SolarPosition sun(double altitude, double azimuth) {
  SolarPosition p;
  p.altitude = altitude;
  p.azimuth = azimuth;
  return p;
}

}  // namespace

TEST(SolarPosition, EquatorEquinoxNoonIsZenith) {
  const Site equator{"eq", 0.0, 0.0, 0.0, 0.0};
  // Day 80 (March 21st) is the day closest to the equinox.
  const auto p = solar_position(equator, 80, 12.0);
  EXPECT_NEAR(p.declination, 0.0, 0.5);
  EXPECT_NEAR(p.altitude, 90.0 - std::abs(p.declination), 1e-9);
  EXPECT_GT(p.altitude, 89.5);
  EXPECT_DOUBLE_EQ(p.hour_angle, 0.0);
}

TEST(SolarPosition, SummerSolsticeNoonAtCoimbra) {
  const auto p = solar_position(coimbra_site(), 172, 12.0);
  EXPECT_NEAR(p.altitude, 90.0 - 40.2 + 23.45, 0.3);
  EXPECT_NEAR(p.azimuth, 180.0, 1e-6);
}

TEST(SolarPosition, MorningSunIsEastAfternoonWest) {
  const auto site = coimbra_site();
  const auto am = solar_position(site, 172, 8.0);
  const auto pm = solar_position(site, 172, 16.0);
  EXPECT_LT(am.azimuth, 180.0);
  EXPECT_GT(pm.azimuth, 180.0);
  // Only the declination drift over the eight hours breaks the mirror image.
  EXPECT_NEAR(am.altitude, pm.altitude, 0.01);
  EXPECT_NEAR(am.azimuth, 360.0 - pm.azimuth, 0.01);
}

TEST(SolarPosition, RangesHold) {
  const auto site = coimbra_site();
  for (const auto& p : solar_track(site)) {
    EXPECT_GE(p.azimuth, 0.0);
    EXPECT_LT(p.azimuth, 360.0);
    EXPECT_LE(std::abs(p.altitude), 90.0);
    EXPECT_LE(std::abs(p.declination), 23.6);
  }
}

namespace {

void expect_matches_reference(const std::string& file) {
  const auto rows = oracle::load_solar_reference(std::string(WINOPT_TEST_DATA_DIR) + "/" + file);
  ASSERT_EQ(rows.size(), 200u);
  for (const auto& r : rows) {
    const Site site{"ref", r.latitude, r.longitude, r.utc_offset, 0.0};
    const auto p =
        solar_position(site, r.day_of_year, solar_hour(site, r.day_of_year, r.local_hour, r.year), r.year);
    EXPECT_LT(std::abs(p.altitude - r.altitude), 0.5) << r.latitude << " " << r.day_of_year << " " << r.local_hour;
    EXPECT_LT(oracle::angle_difference(p.azimuth, r.azimuth), 1.0)
        << r.latitude << " " << r.day_of_year << " " << r.local_hour;
  }
}

}  // namespace

TEST(SolarPosition, MatchesIndependentSpaReference) { expect_matches_reference("solar_oracle.csv"); }

TEST(SolarPosition, MatchesIndependentSpaReferenceInLeapYear) { expect_matches_reference("solar_oracle_2016.csv"); }

TEST(SolarPosition, NominalYearMatters) {
  // Same calendar day, different place in the leap cycle.
  EXPECT_GT(std::abs(declination_degrees(80, 12.0, 2019) - declination_degrees(80, 12.0, 2021)), 0.1);
  EXPECT_EQ(declination_degrees(80, 12.0), declination_degrees(80, 12.0, kNominalYear));
}

TEST(SolarTime, ShiftsByLongitudeAndEquationOfTime) {
  const Site meridian{"m", 40.0, 0.0, 0.0, 0.0};
  const Site west{"w", 40.0, -8.42, 0.0, 0.0};
  const double eot = equation_of_time_minutes(100, 12.0);
  EXPECT_NEAR(solar_hour(meridian, 100, 12.0), 12.0 + eot / 60.0, 1e-12);
  EXPECT_NEAR(solar_hour(meridian, 100, 12.0) - solar_hour(west, 100, 12.0), 4.0 * 8.42 / 60.0, 1e-3);
  // Early November peak of about +16 minutes, mid-February trough near -14.
  EXPECT_NEAR(equation_of_time_minutes(307, 12.0), 16.4, 0.5);
  EXPECT_NEAR(equation_of_time_minutes(42, 12.0), -14.2, 0.5);
}

TEST(FacadeIrradiance, NightHasNoBeam) {
  const HourlyRecord night{5.0, 0.0, 0.0, 0.0};
  const auto irr = facade_irradiance(night, sun(-10.0, 0.0), 0.0);
  EXPECT_EQ(irr.beam, 0.0);
  EXPECT_EQ(irr.sky_diffuse, 0.0);
  EXPECT_EQ(irr.ground_reflected, 0.0);
  const HourlyRecord twilight{5.0, 100.0, 30.0, 30.0};
  const auto t = facade_irradiance(twilight, sun(-1.0, 90.0), 90.0);
  EXPECT_EQ(t.beam, 0.0);
  EXPECT_DOUBLE_EQ(t.sky_diffuse, 15.0);
}

TEST(FacadeIrradiance, SunBehindFacadeGivesNoBeam) {
  const HourlyRecord rec{20.0, 800.0, 0.0, 0.0};
  EXPECT_EQ(facade_irradiance(rec, sun(1e-9, 0.0), 180.0).beam, 0.0);
  EXPECT_EQ(facade_irradiance(rec, sun(30.0, 0.0), 180.0).beam, 0.0);
}

TEST(FacadeIrradiance, SunDeadAhead) {
  const HourlyRecord rec{20.0, 800.0, 100.0, 500.0};
  const auto irr = facade_irradiance(rec, sun(30.0, 180.0), 180.0);
  EXPECT_NEAR(irr.beam, 692.820323, 1e-6);
  EXPECT_DOUBLE_EQ(irr.sky_diffuse, 50.0);
  EXPECT_DOUBLE_EQ(irr.ground_reflected, 50.0);
  EXPECT_DOUBLE_EQ(facade_irradiance(rec, sun(30.0, 180.0), 180.0, 0.5).ground_reflected, 125.0);
}

TEST(FacadeIrradiance, ComponentsNonnegativeAndBeamBoundedByDni) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> alt(-90.0, 90.0), az(0.0, 360.0), irr(0.0, 1000.0), alb(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const HourlyRecord rec{10.0, irr(rng), irr(rng), irr(rng)};
    const auto f = facade_irradiance(rec, sun(alt(rng), az(rng)), az(rng), alb(rng));
    EXPECT_GE(f.beam, 0.0);
    EXPECT_GE(f.sky_diffuse, 0.0);
    EXPECT_GE(f.ground_reflected, 0.0);
    EXPECT_LE(f.beam, rec.dni);
  }
}

TEST(OverhangBeamFraction, NoOverhangMeansFullySunlit) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> alt(0.1, 89.0), gam(-89.0, 89.0);
  for (int i = 0; i < 200; ++i)
    EXPECT_EQ(overhang_beam_fraction({0.0, 3.0, 2.0}, sun(alt(rng), 180.0 + gam(rng)), 180.0), 1.0);
}

TEST(OverhangBeamFraction, HalfShadedCase) {
  EXPECT_NEAR(overhang_beam_fraction({1.0, 4.0, 2.0}, sun(45.0, 180.0), 180.0), 0.5, 1e-12);
}

TEST(OverhangBeamFraction, ObliqueSunShadowIsAParallelogram) {
  // alt 45, gamma 45, d 1: shadow reaches 1/cos45 = 1.414 m down and slides
  // sideways by v*sin45/tan45 at depth v.
  const double drop = std::sqrt(2.0);
  const double area = 4.0 * drop - 0.5 * std::sin(oracle::rad(45.0)) * drop * drop;
  EXPECT_NEAR(overhang_beam_fraction({1.0, 4.0, 2.0}, sun(45.0, 225.0), 180.0), 1.0 - area / 8.0, 1e-12);
}

TEST(OverhangBeamFraction, SunOutOfFrontConventions) {
  EXPECT_EQ(overhang_beam_fraction({1.0, 4.0, 2.0}, sun(-5.0, 180.0), 180.0), 1.0);
  EXPECT_EQ(overhang_beam_fraction({1.0, 4.0, 2.0}, sun(40.0, 0.0), 180.0), 1.0);
}

TEST(OverhangBeamFraction, NarrowWindowIsClampedNotDegenerate) {
  const double f0 = overhang_beam_fraction({0.5, 0.0, 2.0}, sun(50.0, 190.0), 180.0);
  const double f1 = overhang_beam_fraction({0.5, kMinShadingWidth, 2.0}, sun(50.0, 190.0), 180.0);
  EXPECT_EQ(f0, f1);
  EXPECT_TRUE(std::isfinite(f0));
}

TEST(OverhangBeamFraction, MonotoneInDepthAndMirrorSymmetric) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> alt(0.5, 89.5), gam(-89.5, 89.5), width(0.01, 7.0);
  for (int i = 0; i < 300; ++i) {
    const double a = alt(rng), g = gam(rng), w = width(rng);
    double previous = 1.0;
    for (double d = 0.0; d <= 3.0; d += 0.05) {
      const double f = overhang_beam_fraction({d, w, 2.0}, sun(a, 180.0 + g), 180.0);
      EXPECT_LE(f, previous + 1e-15);
      EXPECT_GE(f, 0.0);
      EXPECT_NEAR(f, overhang_beam_fraction({d, w, 2.0}, sun(a, 180.0 - g), 180.0), 1e-12);
      previous = f;
    }
  }
}

TEST(OverhangBeamFraction, AgreesWithRayTracingOnSampledCases) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> alt(2.0, 85.0), gam(-85.0, 85.0), rel(0.0, 1.5), wrel(0.005, 3.5);
  for (int i = 0; i < 40; ++i) {
    const double a = alt(rng), g = gam(rng), h = 2.0, d = rel(rng) * h, w = wrel(rng) * h;
    const double expected = oracle::sunlit_fraction_mc(a, g, d, w, h, 100000, rng);
    EXPECT_NEAR(overhang_beam_fraction({d, w, h}, sun(a, 90.0 + g), 90.0), expected, 0.01)
        << "alt " << a << " gamma " << g << " d " << d << " w " << w;
  }
}

TEST(OverhangSkyViewFactor, Limits) {
  EXPECT_EQ(overhang_sky_view_factor({0.0, 4.0, 2.0}), 1.0);
  double previous = 1.0;
  for (double d : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0, 200.0, 2000.0}) {
    const double f = overhang_sky_view_factor({d, 4.0, 2.0});
    EXPECT_LE(f, previous);
    EXPECT_GE(f, 0.0);
    previous = f;
  }
  // For a window at least as wide as it is tall, a very deep overhang hides
  // at least half of the sky.
  EXPECT_LE(overhang_sky_view_factor({2000.0, 4.0, 2.0}), 0.5);
  EXPECT_NEAR(overhang_sky_view_factor({2000.0, 4.0, 2.0}), overhang_sky_view_factor({4000.0, 4.0, 2.0}), 1e-3);
}

TEST(OverhangSkyViewFactor, InfinitelyWideLimitIsCosineOfShadingAngle) {
  // For an infinitely wide overhang the unobstructed share is cos(atan(d / (h/2))).
  const double d = 1.0, h = 2.0;
  EXPECT_NEAR(overhang_sky_view_factor({d, 1e5, h}), std::cos(std::atan(d / (h / 2))), 1e-4);
}

TEST(OverhangSkyViewFactor, MatchesHemisphereSampling) {
  std::mt19937_64 rng(77);
  for (const double w : {0.01, 0.5, 2.0, 4.0, 7.0}) {
    for (const double d : {0.25, 1.0, 3.0}) {
      const double expected = oracle::sky_view_mc(d, w, 2.0, 200000, rng);
      EXPECT_NEAR(overhang_sky_view_factor({d, w, 2.0}), expected, 0.01) << "w " << w << " d " << d;
    }
  }
}

TEST(FacadeExposure, EastWestBeamTotalsOnSymmetricYear) {
  const Site site{"sym", 40.0, 0.0, 0.0, 0.0};
  const auto weather = noon_symmetric_weather(site);
  const auto track = solar_track(site);
  const auto east = facade_exposure(weather, track, 90.0);
  const auto west = facade_exposure(weather, track, 270.0);
  double e = 0.0, w = 0.0;
  for (std::size_t h = 0; h < weather.size(); ++h) {
    e += east.irradiance[h].beam;
    w += west.irradiance[h].beam;
  }
  EXPECT_GT(e, 0.0);
  EXPECT_LT(std::abs(e - w) / e, 1e-3);
}
