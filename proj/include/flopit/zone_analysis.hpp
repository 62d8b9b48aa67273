#pragma once

#include "flopit/probability_map.hpp"
#include "flopit/raster.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace flopit {

/// Distribution of interpolated return periods (years) inside one zone.
struct ZoneStats {
  double zone_T = 0.0;
  std::size_t n_cells = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean_return_period = 0.0;
  double mean_probability = 0.0; ///< mean of p, not 1 / mean(T)
};

/// Inclusive linear-interpolation quantile of ascending data:
/// position (n - 1) * q, interpolated between neighbouring order statistics.
double quantile_inclusive(std::span<const double> sorted, double q);

/// Groups cells holding both a probability and a zone code by zone, in
/// ascending zone order. Empty zones are omitted. Throws AlignmentError
/// on mismatched lattices.
std::vector<ZoneStats> compare_zones(const Raster& probability, const Raster& zones);
std::vector<ZoneStats> compare_zones(const ProbabilityMap& pm, const ZoneRaster& zr);

/// CSV with header zone_T,n_cells,min,q1,median,q3,max,mean_T,mean_p and
/// six fixed decimals per number.
void write_stats_csv(std::span<const ZoneStats> stats, std::ostream& out);
void write_stats_csv(std::span<const ZoneStats> stats, const std::filesystem::path& path);

std::vector<ZoneStats> read_stats_csv(std::istream& in);

} // namespace flopit
