#include "flopit/serial.hpp"

namespace flopit::serial {

ProbabilityMap interpolate_surfaces(const HazardStack& surfaces, InterpolationMethod method) {
  const Raster& dem = surfaces.dem();
  const GridHeader header = output_header(dem.header());
  ProbabilityMap pm{Raster(header), Raster(header), Raster(header), {}};
  InterpolationReport& rep = pm.report;
  rep.cells = dem.size();

  for (std::size_t row = 0; row < dem.nrows(); ++row) {
    for (std::size_t col = 0; col < dem.ncols(); ++col) {
      const std::size_t i = dem.index(row, col);
      if (dem.is_nodata(i)) {
        ++rep.dem_nodata;
        continue;
      }
      if (surfaces.layers().back().grid().is_nodata(i)) {
        ++rep.outside_extent;
        continue;
      }
      std::vector<CurvePoint> points;
      for (const auto& layer : surfaces.layers()) {
        if (layer.grid().has_data(i)) points.push_back({layer.grid()[i], layer.exceedance_probability()});
      }
      std::size_t dropped = 0;
      const auto curve = make_curve(points, &dropped);
      if (dropped > 0) rep.repairs.push_back({row, col, dropped});
      if (!curve) {
        ++rep.degenerate;
        continue;
      }
      const ClampedResult r = eval_curve(*curve, method, dem[i]);
      pm.probability[i] = r.p;
      pm.return_period[i] = 1.0 / r.p;
      pm.clamp_flags[i] = static_cast<int>(r.clamped);
      if (r.clamped == Clamp::No) ++rep.interior;
      if (r.clamped == Clamp::High) ++rep.clamped_high;
      if (r.clamped == Clamp::Low) ++rep.clamped_low;
    }
  }
  return pm;
}

} // namespace flopit::serial
