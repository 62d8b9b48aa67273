#pragma once

#include "flopit/raster.hpp"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

namespace testing {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
  explicit TempDir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() / ("flopit_" + tag + "_" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
  std::filesystem::path path_;
};

inline flopit::GridHeader header(std::size_t ncols, std::size_t nrows, double cellsize = 1.0) {
  flopit::GridHeader h;
  h.ncols = ncols;
  h.nrows = nrows;
  h.cellsize = cellsize;
  return h;
}

/// Random raster with roughly `nodata_share` of the cells missing.
inline flopit::Raster random_raster(std::mt19937_64& rng, std::size_t ncols, std::size_t nrows, double lo, double hi,
                                    double nodata_share) {
  flopit::Raster r(header(ncols, nrows));
  std::uniform_real_distribution<double> value(lo, hi);
  std::bernoulli_distribution missing(nodata_share);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!missing(rng)) r[i] = value(rng);
  }
  return r;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

} // namespace testing
