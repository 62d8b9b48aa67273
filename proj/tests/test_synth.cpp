#include "flopit/error.hpp"
#include "flopit/synth.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>

using namespace flopit;

TEST_CASE("ramp elevations") {
  FixtureSpec spec;
  spec.slope = 0.1;
  spec.nrows = 100;
  const Fixture fx = generate_fixture(spec);
  CHECK(fx.dem.at(0, 0) == 0.0);
  CHECK(fx.dem.at(99, 5) == doctest::Approx(9.9));
  CHECK(fx.layers.size() == 3);
}

TEST_CASE("valley elevations") {
  FixtureSpec spec;
  spec.shape = TerrainShape::Valley;
  spec.ncols = 10;
  spec.nrows = 3;
  spec.slope = 2.0;
  const Fixture fx = generate_fixture(spec);
  CHECK(fx.dem.at(1, 5) == 0.0);
  CHECK(fx.dem.at(1, 0) == 10.0);
  CHECK(fx.dem.at(2, 9) == 8.0);
}

TEST_CASE("surfaces are masked to the flooded cells") {
  FixtureSpec spec;
  spec.slope = 0.1;
  spec.wse_levels = {{10, 5.0}, {100, 7.0}};
  const Fixture fx = generate_fixture(spec);
  const Raster& w = fx.layers[0].grid();
  for (std::size_t row = 0; row < fx.dem.nrows(); ++row) {
    const bool flooded = fx.dem.at(row, 0) < 5.0;
    CHECK(w.has_data(w.index(row, 0)) == flooded);
    if (flooded) CHECK(w.at(row, 0) == 5.0);
  }
}

TEST_CASE("generation is deterministic") {
  FixtureSpec spec;
  spec.shape = TerrainShape::NoisyRamp;
  spec.seed = 17;
  const Fixture a = generate_fixture(spec), b = generate_fixture(spec);
  CHECK(a.dem == b.dem);
  for (std::size_t k = 0; k < a.layers.size(); ++k) CHECK(a.layers[k].grid() == b.layers[k].grid());
  spec.seed = 18;
  CHECK_FALSE(generate_fixture(spec).dem == a.dem);
}

TEST_CASE("LCG sequence") {
  // state_1 = 1 * a + c, state_2 = state_1 * a + c (mod 2^64)
  Lcg rng(1);
  const std::uint64_t s1 = 6364136223846793005ULL + 1442695040888963407ULL;
  CHECK(rng.next() == s1);
  CHECK(rng.next() == s1 * 6364136223846793005ULL + 1442695040888963407ULL);
  Lcg u(5);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    REQUIRE(v >= 0.0);
    REQUIRE(v < 1.0);
  }
}

TEST_CASE("noise stays within its amplitude") {
  FixtureSpec spec;
  spec.shape = TerrainShape::NoisyRamp;
  spec.noise_amplitude = 0.25;
  const Fixture fx = generate_fixture(spec);
  for (std::size_t row = 0; row < fx.dem.nrows(); ++row)
    for (std::size_t col = 0; col < fx.dem.ncols(); ++col)
      REQUIRE(std::abs(fx.dem.at(row, col) - fixture_elevation(spec, row, col)) <= 0.25);
}

TEST_CASE("oracle values") {
  const FixtureSpec spec;
  CHECK(oracle_probability(spec, InterpolationMethod::LogLinear, 6.0) ==
        doctest::Approx(std::pow(10.0, -1.5)).epsilon(1e-14));
  CHECK(oracle_probability(spec, InterpolationMethod::LogLinear, 7.5) ==
        doctest::Approx(std::exp(std::log(0.01) + 0.5 * (std::log(0.002) - std::log(0.01)))).epsilon(1e-14));
  CHECK(oracle_probability(spec, InterpolationMethod::LogLinear, 7.5) == doctest::Approx(0.004472).epsilon(1e-4));
  CHECK(oracle_probability(spec, InterpolationMethod::LogLinear, 3.0) == 0.1);
  CHECK(oracle_probability(spec, InterpolationMethod::MonotoneCubic, 3.0) == 0.1);
  CHECK(oracle_probability(spec, InterpolationMethod::MonotoneCubic, 9.0) == 0.002);
  // tests/oracles/pchip_reference.py
  CHECK(oracle_probability(spec, InterpolationMethod::MonotoneCubic, 6.0) ==
        doctest::Approx(0.036028266364795794).epsilon(1e-12));
}

TEST_CASE("invalid specs") {
  FixtureSpec spec;
  spec.wse_levels = {{10, 5.0}, {100, 5.0}};
  CHECK_THROWS_AS(generate_fixture(spec), DomainError);
  spec.wse_levels = {{100, 5.0}, {10, 6.0}};
  CHECK_THROWS_AS(generate_fixture(spec), DomainError);
  spec.wse_levels = {{10, 5.0}};
  CHECK_THROWS_AS(generate_fixture(spec), DomainError);
  CHECK_THROWS_AS(parse_shape("hexagon"), DomainError);
  CHECK(parse_shape("Valley") == TerrainShape::Valley);
}

TEST_CASE("fixture files and manifest") {
  testing::TempDir dir("synth");
  FixtureSpec spec;
  const Fixture fx = generate_fixture(spec);
  const auto manifest_path = write_fixture(fx, spec, dir.path());
  const auto manifest = nlohmann::json::parse(testing::read_file(manifest_path));
  CHECK(manifest["shape"] == "ramp");
  REQUIRE(manifest["layers"].size() == 3);
  CHECK(manifest["layers"][1]["return_period"] == 100.0);
  const Raster dem = read_ascii_grid(dir / "dem.asc");
  CHECK(dem.at(37, 2) == doctest::Approx(3.7).epsilon(1e-12));
  const Raster w = read_ascii_grid(dir / manifest["layers"][2]["path"].get<std::string>());
  CHECK(w.data_count() == fx.layers[2].grid().data_count());
}
