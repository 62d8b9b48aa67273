/**
 * @file idw.hpp
 * @brief Inverse-distance weighting over water-surface rasters.
 *
 * Distances are Euclidean between cell centres, in cell units. Candidates
 * come from the square window of half-width `radius_cells`; the nearest
 * `max_neighbors` data cells contribute, ties broken by row offset then
 * column offset. All reads come from the input raster, so the result does
 * not depend on visitation order or worker count.
 */
#pragma once

#include "flopit/raster.hpp"

namespace flopit {

enum class IdwMode { FillOnly, SmoothAll };

struct IdwParams {
  double power = 2.0;
  int radius_cells = 10;
  int max_neighbors = 16;
  int min_neighbors = 1;
  IdwMode mode = IdwMode::FillOnly;

  /// Throws DomainError on non-positive values or min > max neighbours.
  void validate() const;
};

/// Gives each nodata cell with enough data neighbours the weighted mean
/// sum(w_i v_i) / sum(w_i), w_i = dist_i^-power. Data cells are copied.
Raster idw_fill(const Raster& wse, const IdwParams& params, int workers = 0);

/// Fills nodata cells like idw_fill and replaces each data cell with
/// 0.5 * original + 0.5 * (IDW mean of its neighbours, itself excluded).
/// A data cell with too few neighbours keeps its value.
Raster idw_smooth(const Raster& wse, const IdwParams& params, int workers = 0);

/// idw_fill or idw_smooth according to params.mode.
Raster apply_idw(const Raster& wse, const IdwParams& params, int workers = 0);

} // namespace flopit

#include <cmath>

namespace flopit::detail {

/// Weight of a neighbour at squared cell distance `d2`.
inline double idw_weight(long d2, double power) {
  return 1.0 / std::pow(std::sqrt(static_cast<double>(d2)), power);
}

} // namespace flopit::detail
