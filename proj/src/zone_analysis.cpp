#include "flopit/zone_analysis.hpp"

#include "flopit/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace flopit {

namespace {

constexpr const char* kCsvHeader = "zone_T,n_cells,min,q1,median,q3,max,mean_T,mean_p";

void put_fixed(std::string& line, double v) {
  std::array<char, 400> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 6);
  if (ec != std::errc()) throw DomainError("statistic cannot be formatted");
  line.append(buf.data(), ptr);
}

} // namespace

double quantile_inclusive(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw DomainError("quantile of an empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("quantile level must lie in [0, 1]");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0) return sorted[lo];
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::vector<ZoneStats> compare_zones(const Raster& probability, const Raster& zones) {
  if (!grids_aligned(probability.header(), zones.header())) {
    throw AlignmentError("probability and zone rasters are not aligned");
  }
  std::map<double, std::vector<double>> by_zone;
  for (std::size_t i = 0; i < probability.size(); ++i) {
    if (probability.is_nodata(i) || zones.is_nodata(i)) continue;
    const double p = probability[i];
    if (!(p > 0.0)) throw DomainError("probability raster holds a non-positive value");
    by_zone[zones[i]].push_back(p);
  }

  std::vector<ZoneStats> out;
  out.reserve(by_zone.size());
  for (auto& [zone, probs] : by_zone) {
    std::vector<double> periods(probs.size());
    std::transform(probs.begin(), probs.end(), periods.begin(), [](double p) { return 1.0 / p; });
    std::sort(periods.begin(), periods.end());

    ZoneStats s;
    s.zone_T = zone;
    s.n_cells = periods.size();
    s.min = periods.front();
    s.q1 = quantile_inclusive(periods, 0.25);
    s.median = quantile_inclusive(periods, 0.5);
    s.q3 = quantile_inclusive(periods, 0.75);
    s.max = periods.back();
    double sum_t = 0.0;
    for (double t : periods) sum_t += t;
    double sum_p = 0.0;
    for (double p : probs) sum_p += p;
    s.mean_return_period = sum_t / static_cast<double>(periods.size());
    s.mean_probability = sum_p / static_cast<double>(probs.size());
    out.push_back(s);
  }
  return out;
}

std::vector<ZoneStats> compare_zones(const ProbabilityMap& pm, const ZoneRaster& zr) {
  return compare_zones(pm.probability, zr.zones);
}

void write_stats_csv(std::span<const ZoneStats> stats, std::ostream& out) {
  out << kCsvHeader << '\n';
  std::string line;
  for (const ZoneStats& s : stats) {
    line.clear();
    put_fixed(line, s.zone_T);
    line += ',';
    line += std::to_string(s.n_cells);
    for (double v : {s.min, s.q1, s.median, s.q3, s.max, s.mean_return_period, s.mean_probability}) {
      line += ',';
      put_fixed(line, v);
    }
    line += '\n';
    out << line;
  }
}

void write_stats_csv(std::span<const ZoneStats> stats, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_stats_csv(stats, out);
  out.flush();
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

std::vector<ZoneStats> read_stats_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ParseError("zone statistics CSV: unexpected header");
  std::vector<ZoneStats> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 9) throw ParseError("zone statistics CSV line " + std::to_string(line_no) + ": expected 9 fields");

    auto num = [&](std::size_t k) {
      double v = 0.0;
      const auto& c = cells[k];
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc() || ptr != c.data() + c.size()) {
        throw ParseError("zone statistics CSV line " + std::to_string(line_no) + ": bad number '" + c + "'");
      }
      return v;
    };
    ZoneStats s;
    s.zone_T = num(0);
    s.n_cells = static_cast<std::size_t>(num(1));
    s.min = num(2);
    s.q1 = num(3);
    s.median = num(4);
    s.q3 = num(5);
    s.max = num(6);
    s.mean_return_period = num(7);
    s.mean_probability = num(8);
    out.push_back(s);
  }
  return out;
}

} // namespace flopit
