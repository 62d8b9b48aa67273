#pragma once

// Straightforward single-threaded versions of the parallel kernels. They
// are kept for testing: the parallel code must reproduce them bit for bit.

#include "flopit/curve.hpp"
#include "flopit/hazard.hpp"
#include "flopit/idw.hpp"
#include "flopit/probability_map.hpp"

namespace flopit::serial {

Raster idw_fill(const Raster& wse, const IdwParams& params);
Raster idw_smooth(const Raster& wse, const IdwParams& params);
ProbabilityMap interpolate_surfaces(const HazardStack& surfaces, InterpolationMethod method);

} // namespace flopit::serial
