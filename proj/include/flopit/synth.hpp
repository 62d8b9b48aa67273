/**
 * @file synth.hpp
 * @brief Deterministic synthetic terrain and flood surfaces.
 *
 * Every surface is a constant water level masked to the cells it actually
 * floods (level > ground), the way mapped flood grids stop at their extent.
 * oracle_probability gives the closed-form answer for such fixtures through
 * a scalar code path that shares nothing with curve.hpp.
 */
#pragma once

#include "flopit/curve.hpp"
#include "flopit/hazard.hpp"
#include "flopit/raster.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace flopit {

enum class TerrainShape { Ramp, Valley, NoisyRamp };

struct WseLevel {
  double return_period;
  double wse;
};

struct FixtureSpec {
  TerrainShape shape = TerrainShape::Ramp;
  std::size_t ncols = 100;
  std::size_t nrows = 100;
  /// Elevation gained per cell: per row for ramps, per column away from the
  /// centre line for the valley.
  double slope = 0.1;
  std::vector<WseLevel> wse_levels = {{10.0, 5.0}, {100.0, 7.0}, {500.0, 8.0}};
  std::uint64_t seed = 1;
  /// NoisyRamp only: noise is uniform on [-noise_amplitude, noise_amplitude).
  double noise_amplitude = 0.5;
  double cellsize = 1.0;
  double xllcorner = 0.0;
  double yllcorner = 0.0;

  /// Throws DomainError on bad dimensions or levels that are not strictly
  /// increasing in both return period and elevation.
  void validate() const;
};

/// 64-bit linear congruential generator (Knuth's MMIX constants):
///   state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// uniform() returns the top 53 bits of the new state scaled to [0, 1).
class Lcg {
public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

struct Fixture {
  Raster dem;
  std::vector<ReturnPeriodLayer> layers;
};

/// Ground elevation of the unperturbed shape at (row, col).
double fixture_elevation(const FixtureSpec& spec, std::size_t row, std::size_t col);

Fixture generate_fixture(const FixtureSpec& spec);

/// Closed-form exceedance probability at ground elevation `z` for the
/// constant water levels of `spec`, including end clamping.
double oracle_probability(const FixtureSpec& spec, InterpolationMethod method, double z);

std::string shape_name(TerrainShape shape);
/// Accepts ramp, valley and noisy (or noisyramp); throws DomainError otherwise.
TerrainShape parse_shape(const std::string& name);

/// Writes dem.asc, wse_<T>.asc per layer and manifest.json into `dir`
/// (created if missing). Returns the manifest path.
std::filesystem::path write_fixture(const Fixture& fixture, const FixtureSpec& spec,
                                    const std::filesystem::path& dir, int decimals = 10);

} // namespace flopit
