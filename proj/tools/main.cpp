#include <CLI11.hpp>

#include <iostream>

#include "run.hpp"

int main(int argc, char** argv) {
  using namespace fresnelpr::cli;

  RunConfig config;
  std::string strategy = "all";

  CLI::App app{"Fresnel-domain Gerchberg-Saxton phase retrieval between two grayscale images"};
  app.add_option("--input", config.input_image, "Input-plane image (P5 graymap or grayscale PNG)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--output", config.output_image, "Output-plane image (P5 graymap or grayscale PNG)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--wavelength", config.wavelength, "Wavelength in um")->capture_default_str();
  app.add_option("--distance", config.distance, "Propagation distance in um")->capture_default_str();
  app.add_option("--pitch", config.pitch, "Pixel pitch in um")->capture_default_str();
  app.add_option("--strategy", strategy, "Padding strategy")
      ->check(CLI::IsMember({"zero", "constant", "variable", "all"}))
      ->capture_default_str();
  app.add_option("--cmin", config.c_min, "Constant padding sweep start")->capture_default_str();
  app.add_option("--cmax", config.c_max, "Constant padding sweep end")->capture_default_str();
  app.add_option("--cstep", config.c_step, "Constant padding sweep step")->capture_default_str();
  app.add_option("--iterations", config.iterations, "Iterations per retrieval")->capture_default_str();
  app.add_option("--seed", config.seed, "Seed of the random start phase")->capture_default_str();
  app.add_option("--outdir", config.outdir, "Output directory")->capture_default_str();
  app.add_option("--intensity-input", config.intensity_input,
                 "Interpret pixels as intensity (amplitude = sqrt) rather than amplitude")
      ->capture_default_str();
  app.add_option("--threads", config.threads, "Concurrent sweep members")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    config.strategy = parse_strategy(strategy);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kConfigError;
  }
  return run(config, std::cout, std::cerr);
}
