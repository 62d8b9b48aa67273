#include "flopit/probability_map.hpp"

#include "flopit/parallel.hpp"

#include <algorithm>

namespace flopit {

GridHeader output_header(const GridHeader& dem) {
  GridHeader h = dem;
  h.nodata_value = kDefaultNodata;
  return h;
}

HazardStack prepare_surfaces(const HazardStack& stack, const IdwParams& params, int workers) {
  params.validate();
  std::vector<Raster> surfaces;
  surfaces.reserve(stack.layer_count());
  for (const auto& layer : stack.layers()) surfaces.push_back(apply_idw(layer.grid(), params, workers));
  return stack.with_surfaces(std::move(surfaces));
}

ProbabilityMap interpolate_surfaces(const HazardStack& surfaces, InterpolationMethod method, int workers) {
  const Raster& dem = surfaces.dem();
  const GridHeader header = output_header(dem.header());
  ProbabilityMap pm{Raster(header), Raster(header), Raster(header), {}};

  const auto& layers = surfaces.layers();
  const std::size_t nlayers = layers.size();
  const long nrows = static_cast<long>(dem.nrows());
  const std::size_t ncols = dem.ncols();
  const int nthreads = resolve_workers(workers);
  (void)nthreads;

  InterpolationReport& total = pm.report;
  total.cells = dem.size();

#pragma omp parallel num_threads(nthreads)
  {
    InterpolationReport local;
    std::vector<CurvePoint> points;
    std::vector<Knot> knots;
    std::vector<double> slopes;
    points.reserve(nlayers);
    knots.reserve(nlayers);
    slopes.reserve(nlayers);

#pragma omp for schedule(static)
    for (long row = 0; row < nrows; ++row) {
      for (std::size_t col = 0; col < ncols; ++col) {
        const std::size_t i = static_cast<std::size_t>(row) * ncols + col;
        if (dem.is_nodata(i)) {
          ++local.dem_nodata;
          continue;
        }
        if (layers.back().grid().is_nodata(i)) {
          ++local.outside_extent;
          continue;
        }
        points.clear();
        for (const auto& layer : layers) {
          if (layer.grid().has_data(i)) points.push_back({layer.grid()[i], layer.exceedance_probability()});
        }
        const std::size_t dropped = repair_knots(points, knots);
        if (dropped > 0) local.repairs.push_back({static_cast<std::size_t>(row), col, dropped});
        if (knots.size() < 2) {
          ++local.degenerate;
          continue;
        }
        slopes.resize(knots.size());
        if (method == InterpolationMethod::MonotoneCubic) fritsch_carlson_derivatives(knots, slopes);

        const ClampedResult r = evaluate(knots, slopes, method, dem[i]);
        pm.probability[i] = r.p;
        pm.return_period[i] = 1.0 / r.p;
        pm.clamp_flags[i] = static_cast<double>(static_cast<int>(r.clamped));
        switch (r.clamped) {
          case Clamp::No: ++local.interior; break;
          case Clamp::High: ++local.clamped_high; break;
          case Clamp::Low: ++local.clamped_low; break;
        }
      }
    }

#pragma omp critical(flopit_interpolate_report)
    {
      total.interior += local.interior;
      total.clamped_high += local.clamped_high;
      total.clamped_low += local.clamped_low;
      total.dem_nodata += local.dem_nodata;
      total.outside_extent += local.outside_extent;
      total.degenerate += local.degenerate;
      total.repairs.insert(total.repairs.end(), local.repairs.begin(), local.repairs.end());
    }
  }

  std::sort(total.repairs.begin(), total.repairs.end(), [](const KnotRepair& a, const KnotRepair& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return pm;
}

ProbabilityMap interpolate_map(const HazardStack& stack, const IdwParams& params, InterpolationMethod method,
                               int workers) {
  return interpolate_surfaces(prepare_surfaces(stack, params, workers), method, workers);
}

ZoneRaster derive_zones(const HazardStack& surfaces) {
  const Raster& dem = surfaces.dem();
  ZoneRaster zr{Raster(output_header(dem.header()))};
  for (std::size_t i = 0; i < dem.size(); ++i) {
    if (dem.is_nodata(i)) continue;
    for (const auto& layer : surfaces.layers()) {
      const Raster& wse = layer.grid();
      if (wse.has_data(i) && wse[i] > dem[i]) {
        zr.zones[i] = layer.return_period();
        break;
      }
    }
  }
  return zr;
}

} // namespace flopit
