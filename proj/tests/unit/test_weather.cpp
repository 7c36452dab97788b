#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"
#include "winopt/error.hpp"
#include "winopt/synthetic_weather.hpp"
#include "winopt/weather.hpp"

using namespace winopt;
using winopt::fixture::epw_text;

TEST(ParseEpw, ConstantFile) {
  const auto series = parse_epw(epw_text(8760));
  EXPECT_EQ(series.size(), 8760u);
  EXPECT_DOUBLE_EQ(series.site().latitude, 40.20);
  EXPECT_DOUBLE_EQ(series.site().longitude, -8.42);
  EXPECT_DOUBLE_EQ(series.site().utc_offset, 0.0);
  EXPECT_DOUBLE_EQ(series.site().elevation, 141.0);
  EXPECT_EQ(series.site().name, "Testville");
  for (const auto& r : series.records()) {
    EXPECT_EQ(r.dry_bulb, 20.0);
    EXPECT_EQ(r.dni, 0.0);
    EXPECT_EQ(r.dhi, 0.0);
  }
  EXPECT_EQ(series.repaired_irradiance_count(), 0u);
}

TEST(ParseEpw, ReadsConsumedColumns) {
  const std::string row = "2001,1,1,1,60,A7A7,-3.5,10.0,50,101325,0,0,300,410.5,620.25,95.75,0,0,0,0";
  const auto series = parse_epw(epw_text(8760, row));
  EXPECT_EQ(series[17].dry_bulb, -3.5);
  EXPECT_EQ(series[17].ghi, 410.5);
  EXPECT_EQ(series[17].dni, 620.25);
  EXPECT_EQ(series[17].dhi, 95.75);
}

TEST(ParseEpw, ShortFileIsLengthError) {
  EXPECT_THROW(parse_epw(epw_text(8759)), LengthError);
  EXPECT_THROW(parse_epw(epw_text(8761)), LengthError);
}

TEST(ParseEpw, MalformedHeaderNamesTheLine) {
  auto text = epw_text(8760);
  text.replace(text.find("GROUND TEMPERATURES"), 6, "GRAUND");
  try {
    parse_epw(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("header line 4"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_epw("LOCATION,a,b\n"), ParseError);
  EXPECT_THROW(parse_epw("DESIGN CONDITIONS\n" + epw_text(8760)), ParseError);
}

TEST(ParseEpw, BadNumberNamesRowAndColumn) {
  auto text = epw_text(8760);
  const auto pos = text.find("A7A7,20.0", text.find("DATA PERIODS"));
  text.replace(pos + 5, 4, "2x.0");
  try {
    parse_epw(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("row 1 "), std::string::npos) << msg;
    EXPECT_NE(msg.find("column 7"), std::string::npos) << msg;
  }
}

TEST(ParseEpw, MissingIrradianceIsRepairedAndCounted) {
  const auto series = coimbra_surrogate_weather();
  auto text = to_epw_text(series);
  // Mark the DNI field of the first 100 rows as missing.
  std::size_t pos = text.find("DATA PERIODS");
  for (int i = 0; i < 100; ++i) {
    pos = text.find('\n', pos) + 1;
    std::size_t field = pos;
    for (int f = 0; f < 14; ++f) field = text.find(',', field) + 1;
    const auto end = text.find(',', field);
    text.replace(field, end - field, "9999");
  }
  const auto parsed = parse_epw(text);
  EXPECT_EQ(parsed.repaired_irradiance_count(), 100u);
  EXPECT_EQ(parsed[0].dni, 0.0);
  EXPECT_EQ(parsed[100].dni, series[100].dni);
}

TEST(ParseEpw, TooManyMissingValuesAbort) {
  const std::string missing = "2001,1,1,1,60,A7A7,20.0,10.0,50,101325,0,0,300,9999,9999,9999,0,0,0,0";
  const std::string ok = "2001,1,1,1,60,A7A7,20.0,10.0,50,101325,0,0,300,0,0,0,0,0,0,0";
  auto text = epw_text(0);
  for (int i = 0; i < 8760; ++i) text += (i < 439 ? missing : ok) + "\n";  // 439 > 5% of 8760
  EXPECT_THROW(parse_epw(text), ParseError);
  text = epw_text(0);
  for (int i = 0; i < 8760; ++i) text += (i < 438 ? missing : ok) + "\n";
  EXPECT_EQ(parse_epw(text).repaired_irradiance_count(), 438u);
}

TEST(ParseEpw, RejectsOutOfRangeSite) {
  auto text = epw_text(8760);
  text.replace(text.find("40.20"), 5, "95.00");
  EXPECT_THROW(parse_epw(text), RangeError);
}

TEST(ParseEpw, HeaderChecksumTracksHeaderOnly) {
  const auto a = parse_epw(epw_text(8760));
  auto text = epw_text(8760);
  text.replace(text.find("COMMENTS 1,test"), 15, "COMMENTS 1,TEST");
  const auto b = parse_epw(text);
  EXPECT_NE(a.header_checksum(), 0u);
  EXPECT_NE(a.header_checksum(), b.header_checksum());
  const auto c = parse_epw(epw_text(8760, "2001,1,1,1,60,A7A7,21.0,10.0,50,101325,0,0,300,0,0,0,0,0,0,0"));
  EXPECT_EQ(a.header_checksum(), c.header_checksum());
}

TEST(ParseEpw, WriteThenParseKeepsConsumedFields) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto original = winopt::fixture::random_weather(seed);
    const auto parsed = parse_epw(to_epw_text(original));
    ASSERT_EQ(parsed.size(), original.size());
    for (std::size_t h = 0; h < original.size(); ++h) {
      ASSERT_EQ(parsed[h].dry_bulb, original[h].dry_bulb);
      ASSERT_EQ(parsed[h].dni, original[h].dni);
      ASSERT_EQ(parsed[h].dhi, original[h].dhi);
      ASSERT_EQ(parsed[h].ghi, original[h].ghi);
    }
    EXPECT_DOUBLE_EQ(parsed.site().latitude, original.site().latitude);
  }
}

TEST(WeatherSeries, RejectsWrongLengthAndRanges) {
  const auto site = winopt::fixture::test_site();
  EXPECT_THROW(WeatherSeries(site, std::vector<HourlyRecord>(100)), LengthError);
  std::vector<HourlyRecord> records(8760);
  records[5].dry_bulb = 61.0;
  EXPECT_THROW(WeatherSeries(site, records), RangeError);
  records[5].dry_bulb = 20.0;
  records[6].dhi = -1.0;
  EXPECT_THROW(WeatherSeries(site, records), RangeError);
}

TEST(RunningMean, ConstantWeatherIsFixedPoint) {
  const auto series = constant_weather(winopt::fixture::test_site(), 15.0);
  const auto rm = running_mean(series, 0.8);
  ASSERT_EQ(rm.values.size(), 365u);
  for (const double v : rm.values) EXPECT_NEAR(v, 15.0, 1e-12);
}

TEST(RunningMean, AlternatingMeansMatchBruteForceConvergence) {
  std::vector<double> means(365);
  for (std::size_t d = 0; d < means.size(); ++d) means[d] = d % 2 == 0 ? 10.0 : 20.0;
  // Oracle: run the plain recursion around the cyclic year until it settles.
  std::vector<double> oracle(365, 0.0);
  double t = 0.0;
  for (int pass = 0; pass < 400; ++pass) {
    for (std::size_t d = 0; d < 365; ++d) {
      oracle[d] = t;
      t = 0.2 * means[d] + 0.8 * t;
    }
  }
  const auto rm = running_mean(means, 0.8);
  for (std::size_t d = 0; d < 365; ++d) EXPECT_NEAR(rm.values[d], oracle[d], 1e-9) << "day " << d;
  // Away from the wrap: days after a 20 degC day sit at 10 + 10/1.8, days
  // after a 10 degC day at 10 + 8/1.8.
  EXPECT_NEAR(rm.values[200], 10.0 + 10.0 / 1.8, 1e-9);
  EXPECT_NEAR(rm.values[201], 10.0 + 8.0 / 1.8, 1e-9);
}

TEST(RunningMean, AlphaNearOneApproachesAnnualMean) {
  const auto series = coimbra_surrogate_weather();
  const auto means = series.daily_mean_dry_bulb();
  double annual = 0.0;
  for (const double m : means) annual += m;
  annual /= 365.0;
  const auto rm = running_mean(series, 0.999999);
  for (const double v : rm.values) EXPECT_NEAR(v, annual, 0.01);
}

TEST(RunningMean, RejectsAlphaOutsideOpenInterval) {
  const auto series = constant_weather(winopt::fixture::test_site(), 15.0);
  EXPECT_THROW(running_mean(series, 0.0), RangeError);
  EXPECT_THROW(running_mean(series, 1.0), RangeError);
}

TEST(RunningMean, StaysWithinDailyMeanRange) {
  for (std::uint64_t seed = 10; seed < 20; ++seed) {
    const auto series = winopt::fixture::random_weather(seed);
    const auto means = series.daily_mean_dry_bulb();
    const auto [lo, hi] = std::minmax_element(means.begin(), means.end());
    std::mt19937_64 rng(seed);
    const double alpha = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    for (const double v : running_mean(series, alpha).values) {
      EXPECT_GE(v, *lo - 1e-12);
      EXPECT_LE(v, *hi + 1e-12);
    }
  }
}

TEST(RunningMean, IgnoresIrradiance) {
  const auto base = winopt::fixture::random_weather(7);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> noise(0.0, 200.0);
  auto records = base.records();
  for (auto& r : records) {
    r.dni += noise(rng);
    r.dhi += noise(rng);
    r.ghi += noise(rng);
  }
  const WeatherSeries noisy(base.site(), records);
  EXPECT_EQ(running_mean(base).values, running_mean(noisy).values);
}

TEST(SurrogateWeather, IsDeterministicAndPlausible) {
  const auto a = coimbra_surrogate_weather();
  const auto b = coimbra_surrogate_weather();
  EXPECT_EQ(to_epw_text(a), to_epw_text(b));
  EXPECT_NE(to_epw_text(a), to_epw_text(coimbra_surrogate_weather(7)));
  EXPECT_NEAR(a.annual_mean_dry_bulb(), 15.7, 1.0);
  double ghi = 0.0;
  for (const auto& r : a.records()) ghi += r.ghi;
  EXPECT_GT(ghi / 1000.0, 1400.0);
  EXPECT_LT(ghi / 1000.0, 1800.0);
}
