#include "flopit/hazard.hpp"

#include "flopit/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace flopit {

namespace {

std::string describe(const ReturnPeriodLayer& layer) {
  std::ostringstream os;
  os << "layer T=" << layer.return_period();
  if (!layer.label().empty()) os << " ('" << layer.label() << "')";
  return os.str();
}

} // namespace

ReturnPeriodLayer::ReturnPeriodLayer(double return_period_years, SurfaceKind kind, Raster grid, std::string label)
    : return_period_(return_period_years),
      probability_(1.0 / return_period_years),
      kind_(kind),
      grid_(std::move(grid)),
      label_(std::move(label)) {
  if (!std::isfinite(return_period_years) || !(return_period_years > 1.0)) {
    std::ostringstream os;
    os << "return period must be greater than 1 year, got " << return_period_years;
    throw DomainError(os.str());
  }
}

HazardStack HazardStack::with_surfaces(std::vector<Raster> surfaces) const {
  if (surfaces.size() != layers_.size()) throw ValidationError("surface count does not match layer count");
  std::vector<ReturnPeriodLayer> layers;
  layers.reserve(layers_.size());
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    if (!grids_aligned(dem_.header(), surfaces[k].header())) {
      throw AlignmentError("replacement surface for " + describe(layers_[k]) + " is not aligned with the DEM");
    }
    layers.emplace_back(layers_[k].return_period(), SurfaceKind::WSE, std::move(surfaces[k]), layers_[k].label());
  }
  return HazardStack(dem_, std::move(layers));
}

Raster build_wse(const Raster& dem, const ReturnPeriodLayer& layer) {
  const Raster& grid = layer.grid();
  if (!grids_aligned(dem.header(), grid.header())) {
    throw AlignmentError(describe(layer) + " is not aligned with the DEM");
  }
  if (layer.kind() == SurfaceKind::WSE) return grid;

  Raster wse(grid.header());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid.is_nodata(i) || dem.is_nodata(i)) continue;
    const double depth = grid[i];
    if (depth > 0.0) wse[i] = dem[i] + depth;
  }
  return wse;
}

HazardStack validate_stack(Raster dem, std::vector<ReturnPeriodLayer> layers) {
  if (layers.size() < 2) {
    throw ValidationError("at least two return periods required, got " + std::to_string(layers.size()));
  }
  std::stable_sort(layers.begin(), layers.end(),
                   [](const auto& a, const auto& b) { return a.return_period() < b.return_period(); });
  for (std::size_t k = 1; k < layers.size(); ++k) {
    if (layers[k].return_period() == layers[k - 1].return_period()) {
      throw ValidationError("duplicate return period: " + describe(layers[k - 1]) + " and " + describe(layers[k]));
    }
  }

  std::vector<ReturnPeriodLayer> surfaces;
  surfaces.reserve(layers.size());
  for (const auto& layer : layers) {
    surfaces.emplace_back(layer.return_period(), SurfaceKind::WSE, build_wse(dem, layer), layer.label());
  }
  return HazardStack(std::move(dem), std::move(surfaces));
}

} // namespace flopit
