#include "flopit/synth.hpp"

#include "flopit/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace flopit {

void FixtureSpec::validate() const {
  if (ncols < 1 || nrows < 1) throw DomainError("fixture dimensions must be positive");
  if (!std::isfinite(slope)) throw DomainError("fixture slope must be finite");
  if (!(cellsize > 0.0)) throw DomainError("fixture cellsize must be positive");
  if (!(noise_amplitude >= 0.0)) throw DomainError("noise amplitude must be non-negative");
  if (wse_levels.size() < 2) throw DomainError("fixture needs at least two water levels");
  for (std::size_t k = 0; k < wse_levels.size(); ++k) {
    if (!(wse_levels[k].return_period > 1.0) || !std::isfinite(wse_levels[k].wse)) {
      throw DomainError("water levels need T > 1 and a finite elevation");
    }
    if (k > 0 && !(wse_levels[k].return_period > wse_levels[k - 1].return_period &&
                   wse_levels[k].wse > wse_levels[k - 1].wse)) {
      throw DomainError("water levels must increase strictly in both return period and elevation");
    }
  }
}

double fixture_elevation(const FixtureSpec& spec, std::size_t row, std::size_t col) {
  if (spec.shape == TerrainShape::Valley) {
    return std::abs(static_cast<double>(col) - static_cast<double>(spec.ncols) / 2.0) * spec.slope;
  }
  return static_cast<double>(row) * spec.slope;
}

Fixture generate_fixture(const FixtureSpec& spec) {
  spec.validate();
  GridHeader h;
  h.ncols = spec.ncols;
  h.nrows = spec.nrows;
  h.xllcorner = spec.xllcorner;
  h.yllcorner = spec.yllcorner;
  h.cellsize = spec.cellsize;
  h.nodata_value = kDefaultNodata;

  Raster dem(h, 0.0);
  Lcg rng(spec.seed);
  for (std::size_t row = 0; row < h.nrows; ++row) {
    for (std::size_t col = 0; col < h.ncols; ++col) {
      double z = fixture_elevation(spec, row, col);
      if (spec.shape == TerrainShape::NoisyRamp) z += spec.noise_amplitude * (2.0 * rng.uniform() - 1.0);
      dem[dem.index(row, col)] = z;
    }
  }

  Fixture fx{dem, {}};
  for (const WseLevel& level : spec.wse_levels) {
    Raster wse(h);
    for (std::size_t i = 0; i < dem.size(); ++i) {
      if (level.wse > dem[i]) wse[i] = level.wse;
    }
    std::ostringstream label;
    label << "synthetic T=" << level.return_period;
    fx.layers.emplace_back(level.return_period, SurfaceKind::WSE, std::move(wse), label.str());
  }
  return fx;
}

double oracle_probability(const FixtureSpec& spec, InterpolationMethod method, double z) {
  const auto& lv = spec.wse_levels;
  const std::size_t n = lv.size();
  std::vector<double> x(n), y(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = lv[k].wse;
    y[k] = -std::log(lv[k].return_period); // ln p = -ln T
  }
  if (z <= x[0]) return 1.0 / lv[0].return_period;
  if (z >= x[n - 1]) return 1.0 / lv[n - 1].return_period;

  std::size_t j = 0;
  while (!(z < x[j + 1])) ++j;
  if (z == x[j]) return 1.0 / lv[j].return_period;
  const double s = z - x[j];
  const double h = x[j + 1] - x[j];

  if (method == InterpolationMethod::LogLinear) {
    return std::exp(y[j] + (y[j + 1] - y[j]) * (s / h));
  }

  // Monotone cubic: secants, harmonic interior slopes, shape-preserving
  // ends, then the circle limiter of radius 3.
  std::vector<double> sec(n - 1), w(n - 1), m(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    w[k] = x[k + 1] - x[k];
    sec[k] = (y[k + 1] - y[k]) / w[k];
  }
  if (n == 2) {
    m[0] = m[1] = sec[0];
  } else {
    for (std::size_t k = 1; k + 1 < n; ++k) {
      const double a = sec[k - 1], b = sec[k];
      const double h0 = w[k - 1], h1 = w[k];
      m[k] = (a * b > 0.0) ? 3.0 * (h0 + h1) / ((2.0 * h1 + h0) / a + (h1 + 2.0 * h0) / b) : 0.0;
    }
    auto edge = [](double ha, double hb, double da, double db) {
      double v = ((2.0 * ha + hb) * da - ha * db) / (ha + hb);
      if (v * da <= 0.0) return 0.0;
      if (da * db <= 0.0 && std::fabs(v) > 3.0 * std::fabs(da)) v = 3.0 * da;
      return v;
    };
    m[0] = edge(w[0], w[1], sec[0], sec[1]);
    m[n - 1] = edge(w[n - 2], w[n - 3], sec[n - 2], sec[n - 3]);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double a = m[k] / sec[k], b = m[k + 1] / sec[k];
      const double rad = std::hypot(a, b);
      if (rad > 3.0) {
        m[k] = 3.0 * a / rad * sec[k];
        m[k + 1] = 3.0 * b / rad * sec[k];
      }
    }
  }
  // Power form: y0 + s*(m0 + s*(c2 + s*c3)).
  const double c2 = (3.0 * sec[j] - 2.0 * m[j] - m[j + 1]) / h;
  const double c3 = (m[j] + m[j + 1] - 2.0 * sec[j]) / (h * h);
  return std::exp(y[j] + s * (m[j] + s * (c2 + s * c3)));
}

std::string shape_name(TerrainShape shape) {
  switch (shape) {
    case TerrainShape::Ramp: return "ramp";
    case TerrainShape::Valley: return "valley";
    case TerrainShape::NoisyRamp: return "noisy";
  }
  return "ramp";
}

TerrainShape parse_shape(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "ramp") return TerrainShape::Ramp;
  if (s == "valley") return TerrainShape::Valley;
  if (s == "noisy" || s == "noisyramp") return TerrainShape::NoisyRamp;
  throw DomainError("unknown terrain shape '" + name + "' (expected ramp, valley or noisy)");
}

std::filesystem::path write_fixture(const Fixture& fixture, const FixtureSpec& spec,
                                    const std::filesystem::path& dir, int decimals) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());

  write_ascii_grid(fixture.dem, dir / "dem.asc", decimals);
  nlohmann::ordered_json manifest;
  manifest["shape"] = shape_name(spec.shape);
  manifest["ncols"] = spec.ncols;
  manifest["nrows"] = spec.nrows;
  manifest["slope"] = spec.slope;
  manifest["seed"] = spec.seed;
  manifest["dem"] = "dem.asc";
  manifest["layers"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < fixture.layers.size(); ++k) {
    const auto& layer = fixture.layers[k];
    std::ostringstream name;
    name << "wse_" << layer.return_period() << ".asc";
    write_ascii_grid(layer.grid(), dir / name.str(), decimals);
    manifest["layers"].push_back({{"return_period", layer.return_period()},
                                  {"kind", "wse"},
                                  {"wse", spec.wse_levels[k].wse},
                                  {"path", name.str()}});
  }

  const auto path = dir / "manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << manifest.dump(2) << '\n';
  if (!out) throw IoError("write failure on '" + path.string() + "'");
  return path;
}

} // namespace flopit
