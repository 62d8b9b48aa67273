/**
 * @file raster.hpp
 * @brief Grid data model and ESRI ASCII grid reader/writer.
 *
 * Values are stored row-major with row 0 as the northernmost row. Missing
 * cells hold the header's nodata sentinel; NaN and Inf are never stored.
 */
#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flopit {

inline constexpr double kDefaultNodata = -9999.0;

struct GridHeader {
  std::size_t ncols = 1;
  std::size_t nrows = 1;
  double xllcorner = 0.0;
  double yllcorner = 0.0;
  double cellsize = 1.0;
  double nodata_value = kDefaultNodata;

  std::size_t cell_count() const noexcept { return ncols * nrows; }

  /// Throws DomainError when a dimension or the cell size is not positive.
  void validate() const;

  bool operator==(const GridHeader&) const = default;
};

class Raster {
public:
  Raster() = default;

  /// Grid filled with a single value (nodata when omitted).
  explicit Raster(const GridHeader& header, std::optional<double> fill = std::nullopt);

  /// Takes ownership of row-major values; throws DimensionError on a size
  /// mismatch and DomainError on NaN/Inf.
  Raster(const GridHeader& header, std::vector<double> values);

  const GridHeader& header() const noexcept { return header_; }
  std::size_t ncols() const noexcept { return header_.ncols; }
  std::size_t nrows() const noexcept { return header_.nrows; }
  std::size_t size() const noexcept { return values_.size(); }
  double nodata() const noexcept { return header_.nodata_value; }

  std::size_t index(std::size_t row, std::size_t col) const noexcept {
    return row * header_.ncols + col;
  }

  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double& operator[](std::size_t i) noexcept { return values_[i]; }
  double at(std::size_t row, std::size_t col) const noexcept { return values_[index(row, col)]; }

  bool is_nodata(std::size_t i) const noexcept { return values_[i] == header_.nodata_value; }
  bool has_data(std::size_t i) const noexcept { return values_[i] != header_.nodata_value; }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  std::size_t data_count() const noexcept;

  /// Same lattice, new sentinel: nodata cells are rewritten to `nodata`.
  Raster with_nodata(double nodata) const;

  /// Exact comparison of headers and every stored value.
  bool operator==(const Raster&) const = default;

private:
  GridHeader header_{};
  std::vector<double> values_ = std::vector<double>(1, kDefaultNodata);
};

/// True when both grids describe the same lattice. `tol` defaults to
/// 1e-6 times the first grid's cell size.
bool grids_aligned(const GridHeader& a, const GridHeader& b,
                   std::optional<double> tol = std::nullopt);

Raster read_ascii_grid(const std::filesystem::path& path);
Raster read_ascii_grid(std::istream& in, const std::string& source = "<stream>");

void write_ascii_grid(const Raster& r, const std::filesystem::path& path, int decimals);
void write_ascii_grid(const Raster& r, std::ostream& out, int decimals);

} // namespace flopit
