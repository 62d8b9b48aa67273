#include "flopit/error.hpp"
#include "flopit/raster.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

using namespace flopit;

namespace {

const std::filesystem::path kData = FLOPIT_TEST_DATA;

Raster parse(const std::string& text) {
  std::istringstream in(text);
  return read_ascii_grid(in);
}

std::string format(const Raster& r, int decimals) {
  std::ostringstream out;
  write_ascii_grid(r, out, decimals);
  return out.str();
}

} // namespace

TEST_CASE("2x2 grid parses row-major") {
  const Raster r = parse("NCOLS 2\nNROWS 2\nXLLCORNER 0\nYLLCORNER 0\nCELLSIZE 1\nNODATA_VALUE -9999\n1 2\n3 4\n");
  CHECK(r.ncols() == 2);
  CHECK(r.nrows() == 2);
  CHECK(r[0] == 1.0);
  CHECK(r[1] == 2.0);
  CHECK(r.at(1, 0) == 3.0);
  CHECK(r.at(1, 1) == 4.0);
}

TEST_CASE("nodata sentinel passes through") {
  const Raster r = parse("NCOLS 2\nNROWS 1\nXLLCORNER 0\nYLLCORNER 0\nCELLSIZE 1\nNODATA_VALUE -9999\n-9999 5\n");
  CHECK(r.is_nodata(0));
  CHECK(r.has_data(1));
  CHECK(r.data_count() == 1);
}

TEST_CASE("golden grids parse bit-exactly") {
  const Raster a = read_ascii_grid(kData / "golden_3x2.asc");
  CHECK(a.header().xllcorner == 412000.5);
  CHECK(a.header().yllcorner == 4450000.0);
  CHECK(a.header().cellsize == 3.048);
  CHECK(a.nodata() == -9999.0);
  const std::vector<double> expect = {101.25, -9999.0, 150.0, 0.1, -0.0001, 7.0};
  REQUIRE(a.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(a[i] == expect[i]);

  const Raster b = read_ascii_grid(kData / "golden_no_nodata.asc");
  CHECK(b.nodata() == kDefaultNodata);
  CHECK(b.header().cellsize == 0.0001);
  CHECK(b.header().xllcorner == -75.5);
  CHECK(b[3] == 4.0);
}

TEST_CASE("header errors name the key and line") {
  try {
    (void)read_ascii_grid(kData / "bad_key.asc");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("XLLCENTER") != std::string::npos);
    CHECK(msg.find(":3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("NCOLS 2\nNROWS x\nXLLCORNER 0\nYLLCORNER 0\nCELLSIZE 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("NCOLS 0\nNROWS 1\nXLLCORNER 0\nYLLCORNER 0\nCELLSIZE 1\n"), ParseError);
  CHECK_THROWS_AS(parse("NCOLS 1\nNROWS 1\nXLLCORNER 0\nYLLCORNER 0\nCELLSIZE -1\n1\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse("NCOLS 1\nNROWS 1\nXLLCORNER 0\nCELLSIZE 1\n1\n"), doctest::Contains("YLLCORNER"),
                       ParseError);
}

TEST_CASE("wrong value count is a dimension error") {
  CHECK_THROWS_AS(read_ascii_grid(kData / "short_body.asc"), DimensionError);
  CHECK_THROWS_AS(parse("NCOLS 1\nNROWS 1\nXLLCORNER 0\nYLLCORNER 0\nCELLSIZE 1\n1 2\n"), DimensionError);
}

TEST_CASE("NaN and Inf in the body are rejected") {
  CHECK_THROWS_AS(parse("NCOLS 2\nNROWS 1\nXLLCORNER 0\nYLLCORNER 0\nCELLSIZE 1\n1 nan\n"), ParseError);
  CHECK_THROWS_AS(parse("NCOLS 2\nNROWS 1\nXLLCORNER 0\nYLLCORNER 0\nCELLSIZE 1\ninf 1\n"), ParseError);
  CHECK_THROWS_AS(Raster(testing::header(1, 1), std::vector<double>{NAN}), DomainError);
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(read_ascii_grid("/nonexistent/dir/grid.asc"), IoError);
  CHECK_THROWS_AS(write_ascii_grid(Raster(testing::header(1, 1), 1.0), "/nonexistent/dir/out.asc", 2), IoError);
}

TEST_CASE("writer formatting") {
  const Raster one(testing::header(1, 1), 0.5);
  CHECK(format(one, 3) ==
        "NCOLS 1\nNROWS 1\nXLLCORNER 0\nYLLCORNER 0\nCELLSIZE 1\nNODATA_VALUE -9999\n0.500\n");

  Raster two(testing::header(2, 2), 1.0);
  two[1] = two.nodata();
  two[2] = -2.25;
  const std::string text = format(two, 1);
  CHECK(text.substr(text.find("NODATA_VALUE")) == "NODATA_VALUE -9999\n1.0 -9999\n-2.2 1.0\n");
  CHECK(format(two, 1) == text);
}

TEST_CASE("round trip over random rasters") {
  std::mt19937_64 rng(20201207);
  std::uniform_int_distribution<std::size_t> dim(1, 40);
  std::uniform_int_distribution<int> dec(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const Raster r = testing::random_raster(rng, dim(rng), dim(rng), -500.0, 3000.0, 0.2);
    const int d = dec(rng);
    const Raster back = parse(format(r, d));
    REQUIRE(back.header() == r.header());
    for (std::size_t i = 0; i < r.size(); ++i) {
      REQUIRE(back.is_nodata(i) == r.is_nodata(i));
      // Decimal rounding plus the binary rounding of the parsed text.
      const double tol = 0.5 * std::pow(10.0, -d) + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(r[i]);
      if (r.has_data(i)) REQUIRE(std::abs(back[i] - r[i]) <= tol);
    }
  }
}

TEST_CASE("grids_aligned") {
  const GridHeader a = testing::header(10, 5, 3.0);
  CHECK(grids_aligned(a, a));
  GridHeader b = a;
  b.ncols = 11;
  CHECK_FALSE(grids_aligned(a, b));
  b = a;
  b.xllcorner += 0.5 * a.cellsize;
  CHECK_FALSE(grids_aligned(a, b));
  b = a;
  b.yllcorner += 1e-9;
  CHECK(grids_aligned(a, b));
  CHECK_FALSE(grids_aligned(a, b, 1e-12));
}

TEST_CASE("with_nodata rewrites the sentinel only") {
  Raster r(testing::header(3, 1), 2.0);
  r[1] = r.nodata();
  const Raster s = r.with_nodata(-1.0);
  CHECK(s.nodata() == -1.0);
  CHECK(s[1] == -1.0);
  CHECK(s[0] == 2.0);
}
