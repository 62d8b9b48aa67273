#include "flopit/raster.hpp"

#include "flopit/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>

namespace flopit {

namespace {

constexpr std::array<std::string_view, 6> kHeaderKeys = {
    "NCOLS", "NROWS", "XLLCORNER", "YLLCORNER", "CELLSIZE", "NODATA_VALUE"};

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

// from_chars rejects a leading '+', which some writers emit.
bool parse_double(std::string_view tok, double& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out, std::chars_format::general);
  return ec == std::errc() && ptr == end;
}

bool parse_count(std::string_view tok, std::size_t& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string shortest(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

// Splits `line` into whitespace-separated tokens.
std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

} // namespace

void GridHeader::validate() const {
  if (ncols < 1 || nrows < 1) throw DomainError("grid dimensions must be positive");
  if (!(cellsize > 0.0) || !std::isfinite(cellsize)) throw DomainError("cellsize must be positive");
  if (!std::isfinite(xllcorner) || !std::isfinite(yllcorner) || !std::isfinite(nodata_value))
    throw DomainError("grid header values must be finite");
}

Raster::Raster(const GridHeader& header, std::optional<double> fill)
    : header_(header) {
  header_.validate();
  values_.assign(header_.cell_count(), fill.value_or(header_.nodata_value));
  if (!std::isfinite(values_.front())) throw DomainError("raster fill value must be finite");
}

Raster::Raster(const GridHeader& header, std::vector<double> values)
    : header_(header), values_(std::move(values)) {
  header_.validate();
  if (values_.size() != header_.cell_count()) {
    throw DimensionError("raster has " + std::to_string(values_.size()) + " values, header expects " +
                         std::to_string(header_.cell_count()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("raster values must be finite or nodata");
  }
}

std::size_t Raster::data_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(),
                                                 [this](double v) { return v != header_.nodata_value; }));
}

Raster Raster::with_nodata(double nodata) const {
  GridHeader h = header_;
  h.nodata_value = nodata;
  std::vector<double> out(values_);
  for (double& v : out) {
    if (v == header_.nodata_value) v = nodata;
  }
  return Raster(h, std::move(out));
}

bool grids_aligned(const GridHeader& a, const GridHeader& b, std::optional<double> tol) {
  if (a.ncols != b.ncols || a.nrows != b.nrows) return false;
  const double t = tol.value_or(1e-6 * a.cellsize);
  return std::abs(a.xllcorner - b.xllcorner) <= t && std::abs(a.yllcorner - b.yllcorner) <= t &&
         std::abs(a.cellsize - b.cellsize) <= t;
}

Raster read_ascii_grid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_ascii_grid(in, path.string());
}

Raster read_ascii_grid(std::istream& in, const std::string& source) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure on '" + source + "'");

  GridHeader header;
  std::array<bool, kHeaderKeys.size()> seen{};
  std::size_t pos = 0;
  std::size_t line_no = 0;

  // Header: leading lines whose first token starts with a letter.
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line(text.data() + pos, eol - pos);
    const auto toks = tokens_of(line);
    if (!toks.empty() && !std::isalpha(static_cast<unsigned char>(toks.front().front()))) break;
    ++line_no;
    pos = std::min(eol + 1, text.size());
    if (toks.empty()) continue;

    const std::string key = upper(toks.front());
    const auto it = std::find(kHeaderKeys.begin(), kHeaderKeys.end(), key);
    const std::string where = source + ":" + std::to_string(line_no);
    if (it == kHeaderKeys.end()) throw ParseError(where + ": unknown header key '" + std::string(toks.front()) + "'");
    const auto slot = static_cast<std::size_t>(it - kHeaderKeys.begin());
    if (seen[slot]) throw ParseError(where + ": duplicate header key " + key);
    if (toks.size() != 2) throw ParseError(where + ": header key " + key + " expects exactly one value");
    seen[slot] = true;

    bool ok = false;
    double value = 0.0;
    switch (slot) {
      case 0: ok = parse_count(toks[1], header.ncols) && header.ncols > 0; break;
      case 1: ok = parse_count(toks[1], header.nrows) && header.nrows > 0; break;
      default:
        ok = parse_double(toks[1], value) && std::isfinite(value);
        if (slot == 2) header.xllcorner = value;
        if (slot == 3) header.yllcorner = value;
        if (slot == 4) { header.cellsize = value; ok = ok && value > 0.0; }
        if (slot == 5) header.nodata_value = value;
        break;
    }
    if (!ok) throw ParseError(where + ": invalid value '" + std::string(toks[1]) + "' for " + key);
  }
  for (std::size_t k = 0; k + 1 < kHeaderKeys.size(); ++k) {
    if (!seen[k]) throw ParseError(source + ": missing header key " + std::string(kHeaderKeys[k]));
  }

  std::vector<double> values;
  values.reserve(header.cell_count());
  ++line_no;
  std::size_t i = pos;
  while (i < text.size()) {
    if (text[i] == '\n') { ++line_no; ++i; continue; }
    if (is_space(text[i])) { ++i; continue; }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    const std::string_view tok(text.data() + i, j - i);
    double v = 0.0;
    if (!parse_double(tok, v) || !std::isfinite(v)) {
      throw ParseError(source + ":" + std::to_string(line_no) + ": invalid cell value '" + std::string(tok) + "'");
    }
    values.push_back(v);
    i = j;
  }
  if (values.size() != header.cell_count()) {
    throw DimensionError(source + ": expected " + std::to_string(header.cell_count()) + " values (" +
                         std::to_string(header.ncols) + "x" + std::to_string(header.nrows) + "), found " +
                         std::to_string(values.size()));
  }
  return Raster(header, std::move(values));
}

void write_ascii_grid(const Raster& r, const std::filesystem::path& path, int decimals) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_ascii_grid(r, out, decimals);
  out.flush();
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

void write_ascii_grid(const Raster& r, std::ostream& out, int decimals) {
  if (decimals < 0) throw DomainError("decimals must be non-negative");
  const GridHeader& h = r.header();
  out << "NCOLS " << h.ncols << '\n'
      << "NROWS " << h.nrows << '\n'
      << "XLLCORNER " << shortest(h.xllcorner) << '\n'
      << "YLLCORNER " << shortest(h.yllcorner) << '\n'
      << "CELLSIZE " << shortest(h.cellsize) << '\n'
      << "NODATA_VALUE " << shortest(h.nodata_value) << '\n';

  const std::string nodata_text = shortest(h.nodata_value);
  std::string line;
  std::array<char, 400> buf{};
  for (std::size_t row = 0; row < h.nrows; ++row) {
    line.clear();
    for (std::size_t col = 0; col < h.ncols; ++col) {
      if (col > 0) line.push_back(' ');
      const std::size_t i = r.index(row, col);
      if (r.is_nodata(i)) {
        line += nodata_text;
      } else {
        auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), r[i], std::chars_format::fixed, decimals);
        if (ec != std::errc()) throw DomainError("value " + shortest(r[i]) + " cannot be formatted");
        line.append(buf.data(), ptr);
      }
    }
    line.push_back('\n');
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

} // namespace flopit
