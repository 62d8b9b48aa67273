#include "flopit/serial.hpp"

#include <algorithm>
#include <vector>

namespace flopit::serial {

namespace {

struct Candidate {
  long d2;
  int dy;
  int dx;
  double value;
};

// Brute force: collect every data cell in the window, sort, keep the nearest.
bool estimate(const Raster& in, const IdwParams& p, long row, long col, double& out) {
  const long nrows = static_cast<long>(in.nrows());
  const long ncols = static_cast<long>(in.ncols());
  std::vector<Candidate> found;
  for (int dy = -p.radius_cells; dy <= p.radius_cells; ++dy) {
    for (int dx = -p.radius_cells; dx <= p.radius_cells; ++dx) {
      if (dy == 0 && dx == 0) continue;
      const long rr = row + dy;
      const long cc = col + dx;
      if (rr < 0 || rr >= nrows || cc < 0 || cc >= ncols) continue;
      const double v = in.at(static_cast<std::size_t>(rr), static_cast<std::size_t>(cc));
      if (v == in.nodata()) continue;
      found.push_back({static_cast<long>(dy) * dy + static_cast<long>(dx) * dx, dy, dx, v});
    }
  }
  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.d2 != b.d2) return a.d2 < b.d2;
    if (a.dy != b.dy) return a.dy < b.dy;
    return a.dx < b.dx;
  });
  if (found.size() > static_cast<std::size_t>(p.max_neighbors)) found.resize(static_cast<std::size_t>(p.max_neighbors));
  if (found.empty() || found.size() < static_cast<std::size_t>(p.min_neighbors)) return false;

  double num = 0.0;
  double den = 0.0;
  double lo = found.front().value;
  double hi = lo;
  for (const Candidate& c : found) {
    const double w = detail::idw_weight(c.d2, p.power);
    num += w * c.value;
    den += w;
    lo = std::min(lo, c.value);
    hi = std::max(hi, c.value);
  }
  out = std::clamp(num / den, lo, hi);
  return true;
}

Raster run(const Raster& in, const IdwParams& params, bool smooth) {
  params.validate();
  Raster out = in;
  for (std::size_t row = 0; row < in.nrows(); ++row) {
    for (std::size_t col = 0; col < in.ncols(); ++col) {
      const std::size_t i = in.index(row, col);
      const bool data = in.has_data(i);
      if (data && !smooth) continue;
      double v = 0.0;
      if (!estimate(in, params, static_cast<long>(row), static_cast<long>(col), v)) continue;
      out[i] = data ? 0.5 * in[i] + 0.5 * v : v;
    }
  }
  return out;
}

} // namespace

Raster idw_fill(const Raster& wse, const IdwParams& params) { return run(wse, params, false); }

Raster idw_smooth(const Raster& wse, const IdwParams& params) { return run(wse, params, true); }

} // namespace flopit::serial
