#include "commands.hpp"

#include "flopit/error.hpp"
#include "flopit/parallel.hpp"
#include "flopit/probability_map.hpp"
#include "flopit/raster.hpp"
#include "flopit/synth.hpp"
#include "flopit/zone_analysis.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <ostream>

namespace flopit::cli {

namespace {

void ensure_parent(const std::filesystem::path& file) {
  const auto dir = file.parent_path();
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double parse_number(const std::string& text, const std::string& what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw UsageError("invalid " + what + " '" + text + "'");
  return v;
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err, const std::string& level) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
  auto logger = std::make_shared<spdlog::logger>("flopit", sink);
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::from_str(level));
  return logger;
}

int exit_code_for(ErrorKind kind) { return kind == ErrorKind::Io ? kIo : kData; }

int cmd_interpolate(const RunConfig& cfg, std::ostream& out, spdlog::logger& log) {
  if (cfg.layers.size() < 2) {
    throw UsageError("at least two return periods required (got " + std::to_string(cfg.layers.size()) +
                     " --layer option" + (cfg.layers.size() == 1 ? "" : "s") + ")");
  }
  try {
    cfg.idw.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (cfg.decimals < 0) throw UsageError("--decimals must be non-negative");

  log.info("reading DEM {}", cfg.dem_path);
  Raster dem = read_ascii_grid(cfg.dem_path);
  std::vector<ReturnPeriodLayer> layers;
  for (const LayerSpec& spec : cfg.layers) {
    log.info("reading T={} {} layer {}", spec.return_period, spec.kind == SurfaceKind::Depth ? "depth" : "wse",
             spec.path);
    layers.emplace_back(spec.return_period, spec.kind, read_ascii_grid(spec.path), spec.path);
  }
  const HazardStack stack = validate_stack(std::move(dem), std::move(layers));

  const int workers = resolve_workers(cfg.workers);
  const auto t0 = std::chrono::steady_clock::now();
  const HazardStack surfaces = prepare_surfaces(stack, cfg.idw, workers);
  const ProbabilityMap pm = interpolate_surfaces(surfaces, cfg.method, workers);
  const auto t1 = std::chrono::steady_clock::now();
  const ZoneRaster zr = derive_zones(surfaces);

  const double seconds = std::chrono::duration<double>(t1 - t0).count();
  const auto& rep = pm.report;
  log.info("interpolated {} cells in {:.3f} s ({:.0f} cells/s, {} worker{})", rep.cells, seconds,
           seconds > 0.0 ? static_cast<double>(rep.cells) / seconds : 0.0, workers, workers == 1 ? "" : "s");
  log.info("interior {}, clamped high {}, clamped low {}", rep.interior, rep.clamped_high, rep.clamped_low);
  log.info("NA: outside flood extent {}, DEM nodata {}, degenerate curve {}", rep.outside_extent, rep.dem_nodata,
           rep.degenerate);
  if (!rep.repairs.empty()) log.warn("{} cells had non-monotone water surfaces; knots dropped", rep.repairs.size());
  for (const KnotRepair& r : rep.repairs) log.debug("cell (row {}, col {}): dropped {} knot(s)", r.row, r.col, r.dropped);

  const std::string prefix = cfg.out_prefix;
  const std::vector<std::pair<std::string, std::pair<const Raster*, int>>> outputs = {
      {prefix + "_prob.asc", {&pm.probability, cfg.decimals}},
      {prefix + "_rp.asc", {&pm.return_period, cfg.decimals}},
      {prefix + "_clamp.asc", {&pm.clamp_flags, 0}},
      {prefix + "_zones.asc", {&zr.zones, 0}},
  };
  ensure_parent(prefix + "_prob.asc");
  for (const auto& [path, what] : outputs) {
    write_ascii_grid(*what.first, path, what.second);
    out << path << '\n';
  }
  return kOk;
}

int cmd_compare(const std::string& prob_path, const std::string& zones_path, const std::string& csv_path,
                std::ostream& out, spdlog::logger& log) {
  const Raster prob = read_ascii_grid(prob_path);
  const Raster zones = read_ascii_grid(zones_path);
  if (!grids_aligned(prob.header(), zones.header())) {
    throw AlignmentError("'" + zones_path + "' is not aligned with '" + prob_path + "'");
  }
  const auto stats = compare_zones(prob, zones);
  if (stats.empty()) throw ValidationError("no cells in any zone");
  ensure_parent(csv_path);
  write_stats_csv(stats, csv_path);
  log.info("wrote {} zone rows to {}", stats.size(), csv_path);
  for (const ZoneStats& s : stats) {
    out << "zone T=" << s.zone_T << ": n=" << s.n_cells << " mean return period " << s.mean_return_period
        << " y, mean probability " << s.mean_probability << '\n';
  }
  return kOk;
}

struct SynthOptions {
  std::string shape = "ramp";
  std::string out_dir = ".";
  std::vector<std::string> levels;
  int decimals = 10;
};

int cmd_synth(SynthOptions opts, FixtureSpec spec, std::ostream& out, spdlog::logger& log) {
  try {
    spec.shape = parse_shape(opts.shape);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (!opts.levels.empty()) {
    spec.wse_levels.clear();
    for (const std::string& text : opts.levels) {
      const auto colon = text.find(':');
      if (colon == std::string::npos) throw UsageError("--level expects T:WSE, got '" + text + "'");
      spec.wse_levels.push_back({parse_number(text.substr(0, colon), "return period"),
                                 parse_number(text.substr(colon + 1), "water level")});
    }
  }
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const Fixture fx = generate_fixture(spec);
  const auto manifest = write_fixture(fx, spec, opts.out_dir, opts.decimals);
  log.info("{} fixture {}x{} with {} layers", shape_name(spec.shape), spec.ncols, spec.nrows, fx.layers.size());
  out << manifest.string() << '\n';
  return kOk;
}

} // namespace

LayerSpec parse_layer_spec(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos || c2 + 1 >= text.size()) {
    throw UsageError("--layer expects T:KIND:PATH, got '" + text + "'");
  }
  LayerSpec spec;
  spec.return_period = parse_number(text.substr(0, c1), "return period");
  if (!(spec.return_period > 1.0)) throw UsageError("return period must exceed 1 year in '" + text + "'");
  const std::string kind = lower(text.substr(c1 + 1, c2 - c1 - 1));
  if (kind == "depth") {
    spec.kind = SurfaceKind::Depth;
  } else if (kind == "wse") {
    spec.kind = SurfaceKind::WSE;
  } else {
    throw UsageError("layer kind must be depth or wse, got '" + kind + "'");
  }
  spec.path = text.substr(c2 + 1);
  return spec;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous flood exceedance-probability maps from a DEM and return-period flood surfaces",
               "flopit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "critical", "off"}));

  RunConfig cfg;
  std::vector<std::string> layer_texts;
  const std::map<std::string, InterpolationMethod> methods = {{"spline", InterpolationMethod::MonotoneCubic},
                                                              {"loglinear", InterpolationMethod::LogLinear}};
  const std::map<std::string, IdwMode> modes = {{"fill", IdwMode::FillOnly}, {"smooth", IdwMode::SmoothAll}};

  auto* interp = app.add_subcommand("interpolate", "Interpolate a continuous probability map");
  interp->add_option("--dem", cfg.dem_path, "Ground elevation grid (ESRI ASCII)")->required();
  interp->add_option("--layer", layer_texts, "Flood surface as T:KIND:PATH, KIND is depth or wse (repeatable)")
      ->required();
  interp->add_option("--method", cfg.method, "spline (monotone cubic) or loglinear")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  interp->add_option("--out", cfg.out_prefix, "Output prefix")->required();
  interp->add_option("--idw-power", cfg.idw.power, "IDW distance exponent");
  interp->add_option("--idw-radius", cfg.idw.radius_cells, "IDW search radius in cells");
  interp->add_option("--idw-max-neighbors", cfg.idw.max_neighbors, "Nearest data cells used per estimate");
  interp->add_option("--idw-min-neighbors", cfg.idw.min_neighbors, "Minimum data cells for an estimate");
  interp->add_option("--idw-mode", cfg.idw.mode, "fill (gaps only) or smooth (every cell)")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  interp->add_option("--workers", cfg.workers, "Worker threads, 0 = all available");
  interp->add_option("--decimals", cfg.decimals, "Fixed decimals in probability and return-period grids");

  std::string prob_path, zones_path, csv_path;
  auto* compare = app.add_subcommand("compare", "Per-zone statistics of interpolated return periods");
  compare->add_option("--prob", prob_path, "Probability grid from interpolate")->required();
  compare->add_option("--zones", zones_path, "Zone grid from interpolate")->required();
  compare->add_option("--out", csv_path, "Output CSV")->required();

  SynthOptions synth_opts;
  FixtureSpec spec;
  auto* synth = app.add_subcommand("synth", "Write a synthetic DEM and flood surfaces");
  synth->add_option("--shape", synth_opts.shape, "ramp, valley or noisy");
  synth->add_option("--out", synth_opts.out_dir, "Output directory");
  synth->add_option("--ncols", spec.ncols);
  synth->add_option("--nrows", spec.nrows);
  synth->add_option("--slope", spec.slope, "Elevation change per cell");
  synth->add_option("--level", synth_opts.levels, "Water level as T:WSE (repeatable; default 10:5 100:7 500:8)");
  synth->add_option("--seed", spec.seed, "Noise seed (noisy shape)");
  synth->add_option("--noise", spec.noise_amplitude, "Noise half-range (noisy shape)");
  synth->add_option("--cellsize", spec.cellsize);
  synth->add_option("--decimals", synth_opts.decimals);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "flopit: error: " << e.what() << '\n';
    return kUsage;
  }

  auto log = make_logger(err, log_level);
  try {
    if (interp->parsed()) {
      for (const auto& t : layer_texts) cfg.layers.push_back(parse_layer_spec(t));
      return cmd_interpolate(cfg, out, *log);
    }
    if (compare->parsed()) return cmd_compare(prob_path, zones_path, csv_path, out, *log);
    return cmd_synth(synth_opts, spec, out, *log);
  } catch (const UsageError& e) {
    err << "flopit: error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "flopit: error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "flopit: error: " << e.what() << '\n';
    return kData;
  }
}

} // namespace flopit::cli
