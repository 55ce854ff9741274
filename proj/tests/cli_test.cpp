#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fresnelpr/errors.hpp"
#include "fresnelpr/image_io.hpp"
#include "run.hpp"
#include "test_support.hpp"

namespace fresnelpr::cli {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

GrayImage to_gray(const Image& img) {
  GrayImage g{img.side(), img.side(), std::vector<std::uint8_t>(img.size())};
  for (std::size_t i = 0; i < img.size(); ++i) g.pixels[i] = static_cast<std::uint8_t>(255.0 * img.values()[i]);
  return g;
}

// 16 x 16 images on a 32 x 32 domain (0.5 um * 64 um / 1 um^2 = 32).
RunConfig small_config(const std::string& name) {
  const fs::path dir = testing::fresh_temp_dir("cli_" + name);
  write_pgm(dir / "in.pgm", to_gray(testing::blob_image(16, 5, 6, 4)));
  write_png(dir / "out.png", to_gray(testing::blob_image(16, 10, 9, 3)));
  RunConfig c;
  c.input_image = dir / "in.pgm";
  c.output_image = dir / "out.png";
  c.wavelength = 0.5;
  c.distance = 64.0;
  c.pitch = 1.0;
  c.iterations = 15;
  c.c_min = 0.1;
  c.c_max = 0.3;
  c.c_step = 0.1;
  c.outdir = dir / "result";
  return c;
}

int run_quiet(const RunConfig& c, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  if (err_text != nullptr) *err_text = err.str();
  return code;
}

TEST(Cli, ParseStrategy) {
  EXPECT_EQ(parse_strategy("zero"), StrategyChoice::zero);
  EXPECT_EQ(parse_strategy("all"), StrategyChoice::all);
  EXPECT_THROW(parse_strategy("fienup"), ConfigError);
}

TEST(Cli, VariableRunWritesAllOutputs) {
  RunConfig c = small_config("variable");
  c.strategy = StrategyChoice::variable;
  ASSERT_EQ(run_quiet(c), kOk);
  for (const char* f : {"phi1.raw", "phi1.png", "phi2.raw", "phi2.png", "recon_input.png", "recon_output.png",
                        "recon_input_full.png", "recon_output_full.png", "trace.csv", "summary.txt"}) {
    EXPECT_TRUE(fs::exists(c.outdir / f)) << f;
  }
  const auto trace = lines(c.outdir / "trace.csv");
  ASSERT_EQ(trace.size(), 16u);
  EXPECT_EQ(trace[0], "iteration,corr_input,corr_output");
  EXPECT_EQ(read_phase_raw(c.outdir / "phi1.raw").side(), 32u);
  EXPECT_EQ(read_grayscale(c.outdir / "recon_input.png").width, 16u);
  EXPECT_EQ(read_grayscale(c.outdir / "recon_input_full.png").width, 32u);

  // Summary correlations equal the last trace row.
  std::istringstream last(trace.back());
  std::string it, ci, co;
  std::getline(last, it, ',');
  std::getline(last, ci, ',');
  std::getline(last, co, ',');
  const std::string summary = slurp(c.outdir / "summary.txt");
  EXPECT_NE(summary.find("corr_input: " + ci + "\n"), std::string::npos) << summary;
  EXPECT_NE(summary.find("corr_output: " + co + "\n"), std::string::npos) << summary;
  EXPECT_NE(summary.find("domain_side: 32\n"), std::string::npos);
}

TEST(Cli, ZeroIterationsWritesHeaderOnlyTrace) {
  RunConfig c = small_config("zero_iter");
  c.strategy = StrategyChoice::zero;
  c.iterations = 0;
  ASSERT_EQ(run_quiet(c), kOk);
  EXPECT_EQ(lines(c.outdir / "trace.csv"), std::vector<std::string>{"iteration,corr_input,corr_output"});
  EXPECT_NE(slurp(c.outdir / "summary.txt").find("corr_input: n/a"), std::string::npos);
}

TEST(Cli, ConstantWritesSweep) {
  RunConfig c = small_config("constant");
  c.strategy = StrategyChoice::constant;
  ASSERT_EQ(run_quiet(c), kOk);
  const auto sweep = lines(c.outdir / "sweep.csv");
  ASSERT_EQ(sweep.size(), 4u);
  EXPECT_EQ(sweep[0], "amplitude,corr_input");
  const std::string summary = slurp(c.outdir / "summary.txt");
  EXPECT_NE(summary.find("total_iterations: 45\n"), std::string::npos) << summary;
  EXPECT_NE(summary.find("best_amplitude: "), std::string::npos);
}

TEST(Cli, AllWritesComparisonTable) {
  RunConfig c = small_config("all");
  c.strategy = StrategyChoice::all;
  ASSERT_EQ(run_quiet(c), kOk);
  for (const char* sub : {"zero", "constant", "variable"}) EXPECT_TRUE(fs::exists(c.outdir / sub / "trace.csv"));
  const auto table = lines(c.outdir / "summary.txt");
  ASSERT_EQ(table.size(), 4u);
  EXPECT_EQ(table[1].rfind("zero", 0), 0u);
  EXPECT_EQ(table[2].rfind("constant(", 0), 0u);
  EXPECT_EQ(table[3].rfind("variable", 0), 0u);
}

TEST(Cli, DeterministicOutputs) {
  RunConfig a = small_config("det_a");
  RunConfig b = small_config("det_b");
  a.strategy = b.strategy = StrategyChoice::zero;
  ASSERT_EQ(run_quiet(a), kOk);
  ASSERT_EQ(run_quiet(b), kOk);
  EXPECT_EQ(slurp(a.outdir / "trace.csv"), slurp(b.outdir / "trace.csv"));
  EXPECT_EQ(slurp(a.outdir / "phi1.raw"), slurp(b.outdir / "phi1.raw"));
}

TEST(Cli, ConfigErrors) {
  RunConfig c = small_config("errors");
  write_pgm(c.input_image.parent_path() / "big.pgm", GrayImage{20, 20, std::vector<std::uint8_t>(400, 9)});
  RunConfig mismatch = c;
  mismatch.output_image = c.input_image.parent_path() / "big.pgm";
  std::string err;
  EXPECT_EQ(run_quiet(mismatch, &err), kConfigError);
  EXPECT_NE(err.find("differ in size"), std::string::npos) << err;

  RunConfig missing = c;
  missing.input_image = "/nonexistent/in.pgm";
  EXPECT_EQ(run_quiet(missing), kConfigError);

  RunConfig too_close = c;
  too_close.distance = 10.0;
  EXPECT_EQ(run_quiet(too_close, &err), kConfigError);
  EXPECT_NE(err.find("exceeds Fresnel computational domain"), std::string::npos) << err;

  RunConfig bad_sweep = c;
  bad_sweep.strategy = StrategyChoice::constant;
  bad_sweep.c_step = 0.0;
  EXPECT_EQ(run_quiet(bad_sweep), kConfigError);

  RunConfig flat = c;
  write_pgm(c.input_image.parent_path() / "flat.pgm", GrayImage{16, 16, std::vector<std::uint8_t>(256, 77)});
  flat.input_image = c.input_image.parent_path() / "flat.pgm";
  EXPECT_EQ(run_quiet(flat), kConfigError);
}

}  // namespace
}  // namespace fresnelpr::cli
