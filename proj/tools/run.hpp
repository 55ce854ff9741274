#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace fresnelpr::cli {

enum class StrategyChoice { zero, constant, variable, all };

/// Throws fresnelpr::ConfigError for unknown names.
StrategyChoice parse_strategy(const std::string& name);

struct RunConfig {
  std::filesystem::path input_image;
  std::filesystem::path output_image;
  double wavelength = 0.633;  // um
  double distance = 1500.0;   // um
  double pitch = 1.0;         // um
  StrategyChoice strategy = StrategyChoice::all;
  double c_min = 0.1;
  double c_max = 1.0;
  double c_step = 0.1;
  std::size_t iterations = 100;
  std::uint64_t seed = 0;
  std::filesystem::path outdir = "out";
  bool intensity_input = true;
  unsigned threads = 1;
};

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfigError = 2,
  kDiverged = 3,
};

/// Loads both images, runs the selected strategy (or all three) and writes
/// per-strategy outputs under `outdir`:
///
///   phi1.raw/.png, phi2.raw/.png   recovered phase masks
///   recon_input.png, recon_output.png   cropped, min/max-rescaled reconstructions
///   recon_input_full.png, recon_output_full.png   whole computational domain
///   trace.csv    iteration,corr_input,corr_output
///   summary.txt
///
/// `all` writes each strategy into its own subdirectory plus a comparison
/// summary.txt at the top. The constant strategy also writes sweep.csv.
/// Progress and the summary go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fresnelpr::cli
