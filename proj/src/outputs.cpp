#include "winopt/outputs.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "winopt/error.hpp"

namespace winopt {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<const char*, 12> kMonthNames = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                     "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

// Numeric table with an exact header; returns rows of numbers.
std::vector<std::vector<double>> parse_table(const std::string& text, std::string_view header, const char* name) {
  std::vector<std::string_view> lines;
  std::string_view all(text);
  for (auto line : split(all, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty() || lines.front() != header) throw ParseError(std::string(name) + ": missing or unexpected header");
  const std::size_t columns = split(header, ',').size();
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    if (cells.size() != columns)
      throw ParseError(std::string(name) + " line " + std::to_string(i + 1) + ": expected " +
                       std::to_string(columns) + " columns");
    std::vector<double> values(columns);
    for (std::size_t c = 0; c < columns; ++c) {
      const auto cell = cells[c];
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), values[c]);
      if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw ParseError(std::string(name) + " line " + std::to_string(i + 1) + " column " + std::to_string(c + 1) +
                         ": not a number");
    }
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw ParseError(std::string(name) + ": no data rows");
  return rows;
}

double circular_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 360.0);
  return std::min(d, 360.0 - d);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string format_cell(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string sweep_csv(const RelativeReport& report) {
  std::ostringstream o;
  o << kSweepCsvHeader << '\n';
  for (const auto& m : report.rows) {
    const auto& r = m.row;
    for (const double v : {r.orientation, r.width, r.wfr, r.wwr, r.d_opt, r.relative_depth, r.hdh, r.cdh, r.tdh,
                           r.tdh_no_overhang, m.cdh_over_tdh})
      o << format_cell(v) << ',';
    o << format_cell(m.performance) << '\n';
  }
  return o.str();
}

std::string optima_csv(const RelativeReport& report) {
  std::ostringstream o;
  o << kOptimaCsvHeader << '\n';
  for (const auto& m : report.optima) {
    const auto& p = m.optimum;
    for (const double v : {p.orientation, p.width_with_overhang, p.wfr_with_overhang, p.d_opt, p.relative_depth,
                           p.tdh_with_overhang, p.cdh_over_tdh, m.performance_with_overhang, p.width_without_overhang,
                           p.wfr_without_overhang, p.tdh_without_overhang, m.performance_without_overhang})
      o << format_cell(v) << ',';
    o << (p.with_at_boundary ? 1 : 0) << ',' << (p.without_at_boundary ? 1 : 0) << '\n';
  }
  return o.str();
}

std::string figure2_json(const RelativeReport& report) {
  ordered_json doc;
  doc["tdh_windowless"] = report.tdh_windowless;
  doc["tdh_best"] = report.tdh_best;
  ordered_json series = ordered_json::object();
  for (const auto& opt : report.optima) {
    const double orientation = opt.optimum.orientation;
    ordered_json entry;
    std::vector<double> wfr, wwr, perf, perf_no, cdh_share, rel_depth;
    for (const auto& m : report.rows) {
      if (m.row.orientation != orientation) continue;
      wfr.push_back(m.row.wfr);
      wwr.push_back(m.row.wwr);
      perf.push_back(m.performance);
      perf_no.push_back(m.performance_no_overhang);
      cdh_share.push_back(m.cdh_over_tdh);
      rel_depth.push_back(m.row.relative_depth);
    }
    entry["wfr"] = wfr;
    entry["wwr"] = wwr;
    entry["performance"] = perf;
    entry["performance_no_overhang"] = perf_no;
    entry["cdh_over_tdh"] = cdh_share;
    entry["relative_depth"] = rel_depth;
    entry["optimum_wfr_with_overhang"] = opt.optimum.wfr_with_overhang;
    entry["optimum_wfr_without_overhang"] = opt.optimum.wfr_without_overhang;
    entry["optimum_relative_depth"] = opt.optimum.relative_depth;
    entry["optimum_performance_with_overhang"] = opt.performance_with_overhang;
    entry["optimum_performance_without_overhang"] = opt.performance_without_overhang;
    series[format_cell(orientation)] = std::move(entry);
  }
  doc["orientations"] = std::move(series);
  return doc.dump(1) + "\n";
}

std::string simulation_json(const RunConfig& config, const WeatherSeries& weather, const SimulationResult& result) {
  const auto& s = result.scenario;
  ordered_json doc;
  ordered_json inputs;
  inputs["weather"] = config.weather_path;
  inputs["site"] = {{"name", weather.site().name},
                    {"latitude", weather.site().latitude},
                    {"longitude", weather.site().longitude},
                    {"utc_offset", weather.site().utc_offset},
                    {"elevation", weather.site().elevation}};
  inputs["weather_header_checksum"] = weather.header_checksum();
  inputs["orientation_deg"] = s.facade_azimuth;
  inputs["width_m"] = s.window_width;
  inputs["depth_m"] = s.overhang_depth;
  inputs["window_height_m"] = s.window_height;
  inputs["floor_length_m"] = s.floor_length;
  inputs["floor_depth_m"] = s.floor_depth;
  inputs["ceiling_height_m"] = s.ceiling_height;
  inputs["wfr"] = s.wfr();
  inputs["wwr"] = s.wwr();
  inputs["infiltration_ach"] = s.infiltration_ach;
  inputs["constructions"] = {{"u_wall", s.constructions.u_wall},     {"u_floor", s.constructions.u_floor},
                             {"u_roof", s.constructions.u_roof},     {"u_window", s.constructions.u_window},
                             {"shgc", s.constructions.shgc},         {"vt", s.constructions.vt},
                             {"capacity_class", to_string(s.constructions.capacity)}};
  inputs["wall_exposure"] = to_string(s.wall_exposure);
  inputs["ground_coupling"] = to_string(s.ground_coupling);
  inputs["albedo"] = config.study.albedo;
  inputs["comfort_category"] = to_string(config.study.category);
  inputs["running_mean_alpha"] = config.study.running_mean_alpha;
  inputs["seed"] = config.seed;
  doc["inputs"] = std::move(inputs);
  doc["hdh"] = result.score.hdh;
  doc["cdh"] = result.score.cdh;
  doc["tdh"] = result.score.tdh;
  ordered_json monthly = ordered_json::array();
  for (std::size_t m = 0; m < 12; ++m)
    monthly.push_back({{"month", kMonthNames[m]},
                       {"hdh", result.monthly[m].hdh},
                       {"cdh", result.monthly[m].cdh},
                       {"tdh", result.monthly[m].tdh}});
  doc["monthly"] = std::move(monthly);
  doc["operative_temperature"] = result.operative.values;
  return doc.dump(1) + "\n";
}

std::vector<SweepTableRow> parse_sweep_csv(const std::string& text) {
  std::vector<SweepTableRow> rows;
  for (const auto& v : parse_table(text, kSweepCsvHeader, "sweep.csv"))
    rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10], v[11]});
  return rows;
}

std::vector<OptimaTableRow> parse_optima_csv(const std::string& text) {
  std::vector<OptimaTableRow> rows;
  for (const auto& v : parse_table(text, kOptimaCsvHeader, "optima.csv"))
    rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10], v[11], v[12] != 0.0,
                    v[13] != 0.0});
  return rows;
}

std::string summary_report(const std::vector<SweepTableRow>& rows, const std::vector<OptimaTableRow>& optima) {
  if (rows.empty() || optima.empty()) throw LengthError("report needs sweep rows and orientation optima");
  std::ostringstream o;

  const auto best = std::min_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.tdh < b.tdh || (a.tdh == b.tdh && a.width < b.width);
  });
  o << "Best scenario: orientation " << format_cell(best->orientation) << " deg, width " << fixed(best->width, 2)
    << " m (WFR " << fixed(best->wfr, 3) << "), overhang " << fixed(best->d_opt, 3) << " m, TDH "
    << format_cell(best->tdh) << " Kh\n\n";

  o << "Optimum window size per cardinal orientation\n";
  o << "  dir  orient  WFR(no overhang)  WFR(overhang)  depth[m]  rel.depth  CDH/TDH\n";
  const std::array<std::pair<const char*, double>, 8> cardinals = {
      {{"N", 0.0}, {"NE", 45.0}, {"E", 90.0}, {"SE", 135.0}, {"S", 180.0}, {"SW", 225.0}, {"W", 270.0}, {"NW", 315.0}}};
  for (const auto& [label, azimuth] : cardinals) {
    const auto nearest = std::min_element(optima.begin(), optima.end(), [az = azimuth](const auto& a, const auto& b) {
      return circular_distance(a.orientation, az) < circular_distance(b.orientation, az);
    });
    char line[160];
    std::snprintf(line, sizeof line, "  %-3s  %6.1f  %16.3f%s  %13.3f%s  %8.3f  %9.3f  %7.3f\n", label,
                  nearest->orientation, nearest->wfr_without, nearest->without_at_boundary ? "*" : " ",
                  nearest->wfr_with, nearest->with_at_boundary ? "*" : " ", nearest->d_opt, nearest->relative_depth,
                  nearest->cdh_over_tdh);
    o << line;
  }
  o << "  (* optimum at the largest window of the grid)\n\n";

  std::vector<std::size_t> order(optima.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return optima[a].relative_depth > optima[b].relative_depth; });
  const auto& deepest = optima[order.front()];
  o << "Maximum relative overhang depth: " << fixed(deepest.relative_depth, 3) << " at orientation "
    << format_cell(deepest.orientation) << " deg\n";
  o << "Largest optimum overhangs:\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(5, order.size()); ++i) {
    const auto& p = optima[order[i]];
    o << "  orientation " << format_cell(p.orientation) << " deg: relative depth " << fixed(p.relative_depth, 3)
      << " (depth " << fixed(p.d_opt, 3) << " m, WFR " << fixed(p.wfr_with, 3) << ")\n";
  }
  return o.str();
}

}  // namespace winopt
