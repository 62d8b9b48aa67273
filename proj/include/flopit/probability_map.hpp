/**
 * @file probability_map.hpp
 * @brief Continuous exceedance-probability maps and derived flood zones.
 *
 * Each DEM cell gets its own curve built from the water surfaces present at
 * that cell, evaluated at the ground elevation. Cells outside the rarest
 * flood's (filled) extent are nodata. Ground below every surface is clamped
 * to the most frequent input probability; ground above every surface but
 * still inside the extent is clamped to the rarest one.
 */
#pragma once

#include "flopit/curve.hpp"
#include "flopit/hazard.hpp"
#include "flopit/idw.hpp"
#include "flopit/raster.hpp"

#include <cstddef>
#include <vector>

namespace flopit {

/// A cell whose curve lost knots to the monotonicity repair.
struct KnotRepair {
  std::size_t row;
  std::size_t col;
  std::size_t dropped;

  bool operator==(const KnotRepair&) const = default;
};

struct InterpolationReport {
  std::size_t cells = 0;
  std::size_t interior = 0;
  std::size_t clamped_high = 0;
  std::size_t clamped_low = 0;
  std::size_t dem_nodata = 0;
  std::size_t outside_extent = 0;
  std::size_t degenerate = 0;
  std::vector<KnotRepair> repairs; ///< row-major order

  std::size_t with_probability() const noexcept { return interior + clamped_high + clamped_low; }
  bool operator==(const InterpolationReport&) const = default;
};

struct ProbabilityMap {
  Raster probability;  ///< annual exceedance probability
  Raster return_period; ///< 1 / probability
  Raster clamp_flags;  ///< 0 interior, 1 clamped high, 2 clamped low
  InterpolationReport report;
};

/// Zone code per cell: the return period of the most frequent flood whose
/// surface lies strictly above the ground; nodata outside every flood.
struct ZoneRaster {
  Raster zones;
};

/// Output header for every derived raster: the DEM lattice with the
/// default nodata sentinel.
GridHeader output_header(const GridHeader& dem);

/// Runs IDW (fill or smooth per params.mode) on every layer.
HazardStack prepare_surfaces(const HazardStack& stack, const IdwParams& params, int workers = 0);

/// Per-cell curve evaluation over already prepared surfaces.
ProbabilityMap interpolate_surfaces(const HazardStack& surfaces, InterpolationMethod method, int workers = 0);

/// prepare_surfaces followed by interpolate_surfaces.
ProbabilityMap interpolate_map(const HazardStack& stack, const IdwParams& params, InterpolationMethod method,
                               int workers = 0);

ZoneRaster derive_zones(const HazardStack& surfaces);

} // namespace flopit
