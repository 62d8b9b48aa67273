#include "flopit/idw.hpp"

#include "flopit/error.hpp"
#include "flopit/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace flopit {

namespace {

struct Offset {
  int dy;
  int dx;
  double weight;
};

// Window offsets (centre excluded) ordered nearest first, then by dy, dx.
std::vector<Offset> ordered_offsets(const IdwParams& p) {
  struct Key {
    long d2;
    int dy;
    int dx;
  };
  std::vector<Key> keys;
  const int r = p.radius_cells;
  keys.reserve(static_cast<std::size_t>((2 * r + 1) * (2 * r + 1)));
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      if (dy == 0 && dx == 0) continue;
      keys.push_back({static_cast<long>(dy) * dy + static_cast<long>(dx) * dx, dy, dx});
    }
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.d2 != b.d2) return a.d2 < b.d2;
    if (a.dy != b.dy) return a.dy < b.dy;
    return a.dx < b.dx;
  });
  std::vector<Offset> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back({k.dy, k.dx, detail::idw_weight(k.d2, p.power)});
  return out;
}

// Summed-area table of data-cell counts, (nrows+1) x (ncols+1).
class DataCounts {
public:
  explicit DataCounts(const Raster& r) : stride_(r.ncols() + 1), sums_((r.nrows() + 1) * stride_, 0) {
    for (std::size_t row = 0; row < r.nrows(); ++row) {
      std::uint32_t run = 0;
      for (std::size_t col = 0; col < r.ncols(); ++col) {
        run += r.has_data(r.index(row, col)) ? 1u : 0u;
        sums_[(row + 1) * stride_ + col + 1] = sums_[row * stride_ + col + 1] + run;
      }
    }
  }

  // Data cells in rows [r0, r1) x cols [c0, c1).
  std::uint32_t count(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    return sums_[r1 * stride_ + c1] - sums_[r0 * stride_ + c1] - sums_[r1 * stride_ + c0] + sums_[r0 * stride_ + c0];
  }

private:
  std::size_t stride_;
  std::vector<std::uint32_t> sums_;
};

struct Estimate {
  int count = 0;
  double value = 0.0;
};

Estimate neighbourhood(const Raster& in, const std::vector<Offset>& offsets, int max_neighbors, long row, long col) {
  const long nrows = static_cast<long>(in.nrows());
  const long ncols = static_cast<long>(in.ncols());
  double num = 0.0;
  double den = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
  for (const Offset& o : offsets) {
    const long rr = row + o.dy;
    const long cc = col + o.dx;
    if (rr < 0 || rr >= nrows || cc < 0 || cc >= ncols) continue;
    const std::size_t j = static_cast<std::size_t>(rr * ncols + cc);
    if (in.is_nodata(j)) continue;
    const double v = in[j];
    if (count == 0) {
      lo = hi = v;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    num += o.weight * v;
    den += o.weight;
    if (++count == max_neighbors) break;
  }
  if (count == 0) return {};
  // A convex combination cannot leave [lo, hi]; clamp away rounding drift.
  return {count, std::clamp(num / den, lo, hi)};
}

Raster run(const Raster& in, const IdwParams& params, bool smooth, int workers) {
  params.validate();
  const auto offsets = ordered_offsets(params);
  const DataCounts counts(in);
  Raster out = in;

  const long nrows = static_cast<long>(in.nrows());
  const long ncols = static_cast<long>(in.ncols());
  const long radius = params.radius_cells;
  const auto min_needed = static_cast<std::uint32_t>(params.min_neighbors);
  const int nthreads = resolve_workers(workers);
  (void)nthreads;

#pragma omp parallel for schedule(static) num_threads(nthreads)
  for (long row = 0; row < nrows; ++row) {
    const auto r0 = static_cast<std::size_t>(std::max(0L, row - radius));
    const auto r1 = static_cast<std::size_t>(std::min(nrows, row + radius + 1));
    for (long col = 0; col < ncols; ++col) {
      const std::size_t i = static_cast<std::size_t>(row * ncols + col);
      const bool data = in.has_data(i);
      if (data && !smooth) continue;
      const auto c0 = static_cast<std::size_t>(std::max(0L, col - radius));
      const auto c1 = static_cast<std::size_t>(std::min(ncols, col + radius + 1));
      const std::uint32_t available = counts.count(r0, r1, c0, c1) - (data ? 1u : 0u);
      if (available < min_needed) continue;

      const Estimate e = neighbourhood(in, offsets, params.max_neighbors, row, col);
      if (e.count < params.min_neighbors) continue;
      out[i] = data ? 0.5 * in[i] + 0.5 * e.value : e.value;
    }
  }
  return out;
}

} // namespace

void IdwParams::validate() const {
  if (!(power > 0.0) || !std::isfinite(power)) throw DomainError("IDW power must be positive");
  if (radius_cells < 1) throw DomainError("IDW radius must be at least one cell");
  if (max_neighbors < 1 || min_neighbors < 1) throw DomainError("IDW neighbour counts must be positive");
  if (min_neighbors > max_neighbors) throw DomainError("IDW min_neighbors exceeds max_neighbors");
}

Raster idw_fill(const Raster& wse, const IdwParams& params, int workers) {
  return run(wse, params, false, workers);
}

Raster idw_smooth(const Raster& wse, const IdwParams& params, int workers) {
  return run(wse, params, true, workers);
}

Raster apply_idw(const Raster& wse, const IdwParams& params, int workers) {
  return params.mode == IdwMode::FillOnly ? idw_fill(wse, params, workers) : idw_smooth(wse, params, workers);
}

} // namespace flopit
