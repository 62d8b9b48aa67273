#pragma once

#include "flopit/raster.hpp"

#include <string>
#include <vector>

namespace flopit {

enum class SurfaceKind { Depth, WSE };

/// One mapped flood: a depth or water-surface grid tagged with its return
/// period. The exceedance probability is always 1/T.
class ReturnPeriodLayer {
public:
  /// Throws DomainError unless T > 1 and finite.
  ReturnPeriodLayer(double return_period_years, SurfaceKind kind, Raster grid, std::string label = {});

  double return_period() const noexcept { return return_period_; }
  double exceedance_probability() const noexcept { return probability_; }
  SurfaceKind kind() const noexcept { return kind_; }
  const Raster& grid() const noexcept { return grid_; }
  /// Human-readable source (usually the input path) used in diagnostics.
  const std::string& label() const noexcept { return label_; }

private:
  double return_period_;
  double probability_;
  SurfaceKind kind_;
  Raster grid_;
  std::string label_;
};

/// DEM plus at least two water-surface layers on a common lattice, ordered
/// by ascending return period. Every layer is of kind WSE.
class HazardStack {
public:
  const Raster& dem() const noexcept { return dem_; }
  const std::vector<ReturnPeriodLayer>& layers() const noexcept { return layers_; }
  std::size_t layer_count() const noexcept { return layers_.size(); }

  /// Copy of this stack with each layer's grid replaced (same order).
  HazardStack with_surfaces(std::vector<Raster> surfaces) const;

private:
  friend HazardStack validate_stack(Raster dem, std::vector<ReturnPeriodLayer> layers);
  HazardStack(Raster dem, std::vector<ReturnPeriodLayer> layers)
      : dem_(std::move(dem)), layers_(std::move(layers)) {}

  Raster dem_;
  std::vector<ReturnPeriodLayer> layers_;
};

/// Depth layers become dem + depth where depth > 0 and both cells hold
/// data; everything else is nodata. WSE layers pass through unchanged.
Raster build_wse(const Raster& dem, const ReturnPeriodLayer& layer);

HazardStack validate_stack(Raster dem, std::vector<ReturnPeriodLayer> layers);

} // namespace flopit
