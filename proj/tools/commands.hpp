#pragma once

#include "flopit/curve.hpp"
#include "flopit/hazard.hpp"
#include "flopit/idw.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace flopit::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kIo = 3 };

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct LayerSpec {
  double return_period = 0.0;
  SurfaceKind kind = SurfaceKind::WSE;
  std::string path;
};

/// Parses "T:KIND:PATH"; the path may itself contain ':'.
LayerSpec parse_layer_spec(const std::string& text);

struct RunConfig {
  std::string dem_path;
  std::vector<LayerSpec> layers;
  InterpolationMethod method = InterpolationMethod::MonotoneCubic;
  IdwParams idw;
  std::string out_prefix;
  int workers = 0;
  int decimals = 8;
};

/// Entry point shared by the executable and the tests. Diagnostics go to
/// `err`, summaries to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace flopit::cli
