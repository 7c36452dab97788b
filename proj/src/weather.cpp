#include "winopt/weather.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "winopt/error.hpp"

namespace winopt {
namespace {

constexpr std::size_t kHeaderLines = 8;
constexpr double kMissingIrradiance = 9999.0;
constexpr double kMaxRepairedFraction = 0.05;

constexpr std::array<std::string_view, kHeaderLines> kHeaderKeywords = {
    "LOCATION",     "DESIGN CONDITIONS", "TYPICAL/EXTREME PERIODS", "GROUND TEMPERATURES",
    "HOLIDAYS/DAYLIGHT SAVINGS", "COMMENTS 1", "COMMENTS 2", "DATA PERIODS"};

constexpr std::array<int, 12> kDaysInMonth = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

bool parse_number(std::string_view field, double& value) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  return ec == std::errc() && ptr == end && std::isfinite(value);
}

std::uint64_t fnv1a(std::uint64_t hash, std::string_view bytes) {
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

// Splits on '\n' and keeps empty trailing lines out of the data section.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

void Site::validate() const {
  if (!(latitude >= -90.0 && latitude <= 90.0))
    throw RangeError("site latitude " + format_number(latitude) + " outside [-90, 90]");
  if (!(longitude >= -180.0 && longitude <= 180.0))
    throw RangeError("site longitude " + format_number(longitude) + " outside [-180, 180]");
  if (!(utc_offset >= -12.0 && utc_offset <= 14.0))
    throw RangeError("site utc offset " + format_number(utc_offset) + " outside [-12, 14]");
}

WeatherSeries::WeatherSeries(Site site, std::vector<HourlyRecord> records)
    : site_(std::move(site)), records_(std::move(records)) {
  site_.validate();
  if (records_.size() != kHoursPerYear)
    throw LengthError("weather series has " + std::to_string(records_.size()) + " hourly records, expected 8760");
  for (std::size_t h = 0; h < records_.size(); ++h) {
    const auto& r = records_[h];
    if (!(r.dry_bulb >= -60.0 && r.dry_bulb <= 60.0))
      throw RangeError("hour " + std::to_string(h) + ": dry bulb " + format_number(r.dry_bulb) +
                       " outside [-60, 60] degC");
    if (!(r.dni >= 0.0) || !(r.dhi >= 0.0) || !(r.ghi >= 0.0))
      throw RangeError("hour " + std::to_string(h) + ": negative irradiance");
  }
}

std::vector<double> WeatherSeries::daily_mean_dry_bulb() const {
  std::vector<double> means(kDaysPerYear);
  for (std::size_t d = 0; d < kDaysPerYear; ++d) {
    double sum = 0.0;
    for (std::size_t h = 0; h < 24; ++h) sum += records_[d * 24 + h].dry_bulb;
    means[d] = sum / 24.0;
  }
  return means;
}

double WeatherSeries::annual_mean_dry_bulb() const {
  double sum = 0.0;
  for (const auto& r : records_) sum += r.dry_bulb;
  return sum / static_cast<double>(records_.size());
}

WeatherSeries parse_epw(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < kHeaderLines)
    throw ParseError("EPW: expected 8 header lines, found " + std::to_string(lines.size()));

  std::uint64_t checksum = 14695981039346656037ULL;
  for (std::size_t i = 0; i < kHeaderLines; ++i) {
    const auto line = trim(lines[i]);
    const auto keyword = trim(line.substr(0, line.find(',')));
    if (keyword != kHeaderKeywords[i])
      throw ParseError("EPW: header line " + std::to_string(i + 1) + " should start with " +
                       std::string(kHeaderKeywords[i]));
    checksum = fnv1a(checksum, line);
    checksum = fnv1a(checksum, "\n");
  }

  const auto location = split_fields(lines[0]);
  if (location.size() < 10) throw ParseError("EPW: header line 1 (LOCATION) has fewer than 10 fields");
  Site site;
  site.name = std::string(location[1]);
  const std::array<std::pair<std::size_t, double*>, 4> site_fields = {
      {{7, &site.latitude}, {8, &site.longitude}, {9, &site.utc_offset}, {10, &site.elevation}}};
  for (const auto& [position, target] : site_fields) {
    if (!parse_number(location[position - 1], *target))
      throw ParseError("EPW: header line 1 (LOCATION) field " + std::to_string(position) + " is not a number");
  }
  site.validate();

  std::vector<std::string_view> rows;
  for (std::size_t i = kHeaderLines; i < lines.size(); ++i) {
    if (!trim(lines[i]).empty()) rows.push_back(lines[i]);
  }
  if (rows.size() != kHoursPerYear)
    throw LengthError("EPW: found " + std::to_string(rows.size()) + " data rows, expected 8760");

  std::vector<HourlyRecord> records(kHoursPerYear);
  std::size_t repaired_rows = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto fields = split_fields(rows[r]);
    const auto row_no = r + 1;
    if (fields.size() < 16)
      throw ParseError("EPW: data row " + std::to_string(row_no) + " has " + std::to_string(fields.size()) +
                       " fields, expected at least 16");
    const auto get = [&](std::size_t column) {
      double v = 0.0;
      if (!parse_number(fields[column - 1], v))
        throw ParseError("EPW: data row " + std::to_string(row_no) + " column " + std::to_string(column) +
                         ": cannot parse '" + std::string(fields[column - 1]) + "'");
      return v;
    };
    auto& rec = records[r];
    rec.dry_bulb = get(7);
    bool repaired = false;
    const auto irradiance = [&](std::size_t column) {
      const double v = get(column);
      if (v >= kMissingIrradiance) {
        repaired = true;
        return 0.0;
      }
      return v;
    };
    rec.ghi = irradiance(14);
    rec.dni = irradiance(15);
    rec.dhi = irradiance(16);
    if (repaired) ++repaired_rows;
  }
  if (static_cast<double>(repaired_rows) > kMaxRepairedFraction * static_cast<double>(kHoursPerYear))
    throw ParseError("EPW: " + std::to_string(repaired_rows) +
                     " rows have missing irradiance (more than 5% of the year)");

  WeatherSeries series(std::move(site), std::move(records));
  series.set_provenance(repaired_rows, checksum);
  return series;
}

WeatherSeries read_epw_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open weather file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_epw(buffer.str());
}

void write_epw(std::ostream& out, const WeatherSeries& series) {
  const auto& site = series.site();
  out << "LOCATION," << (site.name.empty() ? "Synthetic" : site.name) << ",-,-,winopt,000000,"
      << format_number(site.latitude) << ',' << format_number(site.longitude) << ','
      << format_number(site.utc_offset) << ',' << format_number(site.elevation) << '\n'
      << "DESIGN CONDITIONS,0\n"
      << "TYPICAL/EXTREME PERIODS,0\n"
      << "GROUND TEMPERATURES,0\n"
      << "HOLIDAYS/DAYLIGHT SAVINGS,No,0,0,0\n"
      << "COMMENTS 1,written by winopt\n"
      << "COMMENTS 2,only dry bulb and solar irradiance fields are populated\n"
      << "DATA PERIODS,1,1,Data,Sunday, 1/ 1,12/31\n";
  std::size_t hour = 0;
  for (int month = 0; month < 12; ++month) {
    for (int day = 1; day <= kDaysInMonth[month]; ++day) {
      for (int h = 1; h <= 24; ++h, ++hour) {
        const auto& r = series[hour];
        out << "2001," << (month + 1) << ',' << day << ',' << h << ",60,"
            << "?9?9?9?9E0?9?9?9?9?9?9?9?9?9?9?9?9?9?9?9*9*9?9?9?9,"
            << format_number(r.dry_bulb) << ",99.9,999,999999,9999,9999,9999," << format_number(r.ghi) << ','
            << format_number(r.dni) << ',' << format_number(r.dhi)
            << ",999999,999999,999999,9999,999,999.9,99,99,9999,99999,9,999999999,999,0.999,999,99,999,0,99\n";
      }
    }
  }
}

std::string to_epw_text(const WeatherSeries& series) {
  std::ostringstream out;
  write_epw(out, series);
  return out.str();
}

RunningMeanSeries running_mean(const std::vector<double>& daily_means, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw RangeError("running mean alpha must lie in (0, 1)");
  if (daily_means.empty()) throw LengthError("running mean needs at least one daily mean");
  const std::size_t n = daily_means.size();

  // Periodic seed: T_rm[0] = (1 - a) * sum_{k=1..n} a^(k-1) mean[-k mod n] / (1 - a^n).
  double weighted = 0.0;
  double weight = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    weighted += weight * daily_means[(n - k % n) % n];
    weight *= alpha;
  }
  RunningMeanSeries out;
  out.values.resize(n);
  out.values[0] = (1.0 - alpha) * weighted / (1.0 - weight);
  for (std::size_t d = 1; d < n; ++d)
    out.values[d] = (1.0 - alpha) * daily_means[d - 1] + alpha * out.values[d - 1];
  return out;
}

RunningMeanSeries running_mean(const WeatherSeries& series, double alpha) {
  return running_mean(series.daily_mean_dry_bulb(), alpha);
}

}  // namespace winopt
