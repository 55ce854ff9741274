#include "run.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "fresnelpr/errors.hpp"
#include "fresnelpr/fresnel.hpp"
#include "fresnelpr/gsa.hpp"
#include "fresnelpr/image_io.hpp"
#include "fresnelpr/metrics.hpp"

namespace fresnelpr::cli {
namespace {

namespace fs = std::filesystem;

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(9) << v;
  return os.str();
}

struct StrategyOutcome {
  std::string label;
  RetrievalResult result;
  std::size_t total_iterations = 0;
  std::optional<double> best_amplitude;
  std::vector<SweepEntry> sweep;
};

void write_trace(const fs::path& path, const ConvergenceTrace& trace) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << "iteration,corr_input,corr_output\n";
  for (const TraceRecord& r : trace) out << r.iteration << ',' << num(r.corr_input) << ',' << num(r.corr_output) << '\n';
}

void write_sweep(const fs::path& path, const std::vector<SweepEntry>& entries) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << "amplitude,corr_input\n";
  for (const SweepEntry& e : entries) out << num(e.amplitude) << ',' << num(e.corr_input) << '\n';
}

std::string describe(const StrategyOutcome& o, const RetrievalProblem& p) {
  const OpticalSetup& s = p.setup;
  std::ostringstream os;
  os << "strategy: " << o.label << '\n'
     << "wavelength_um: " << num(s.wavelength()) << '\n'
     << "distance_um: " << num(s.distance()) << '\n'
     << "pitch_um: " << num(s.pitch()) << '\n'
     << "image_side: " << s.image_side() << '\n'
     << "domain_side: " << s.domain_side() << '\n'
     << "seed: " << p.seed << '\n'
     << "iterations: " << o.result.trace.size() << '\n'
     << "total_iterations: " << o.total_iterations << '\n';
  if (o.best_amplitude) os << "best_amplitude: " << num(*o.best_amplitude) << '\n';
  if (o.result.trace.empty()) {
    os << "corr_input: n/a\ncorr_output: n/a\n";
  } else {
    const TraceRecord& last = o.result.trace.back();
    os << "corr_input: " << num(last.corr_input) << '\n'
       << "corr_output: " << num(last.corr_output) << '\n'
       << "max_error_percent_input: "
       << num(max_error_percent(p.input_amplitude, o.result.reconstructed_input(s))) << '\n'
       << "max_error_percent_output: "
       << num(max_error_percent(p.output_amplitude, o.result.reconstructed_output(s))) << '\n';
  }
  return os.str();
}

void write_outputs(const fs::path& dir, const StrategyOutcome& o, const RetrievalProblem& p) {
  fs::create_directories(dir);
  export_phase(o.result.phi1, dir / "phi1");
  export_phase(o.result.phi2, dir / "phi2");
  write_png(dir / "recon_input.png", rescale_to_gray(o.result.reconstructed_input(p.setup)));
  write_png(dir / "recon_output.png", rescale_to_gray(o.result.reconstructed_output(p.setup)));
  write_png(dir / "recon_input_full.png", rescale_to_gray(modulus_of(o.result.u1_propagated)));
  write_png(dir / "recon_output_full.png", rescale_to_gray(modulus_of(o.result.u2_propagated)));
  write_trace(dir / "trace.csv", o.result.trace);
  if (!o.sweep.empty()) write_sweep(dir / "sweep.csv", o.sweep);
  std::ofstream summary(dir / "summary.txt");
  if (!summary) throw ConfigError("cannot write " + (dir / "summary.txt").string());
  summary << describe(o, p);
}

StrategyOutcome run_strategy(StrategyChoice choice, RetrievalProblem problem, const FresnelKernel& kernel,
                             const RunConfig& config) {
  StrategyOutcome o;
  if (choice == StrategyChoice::constant) {
    SweepResult sweep = sweep_constant(problem, config.c_min, config.c_max, config.c_step, config.threads);
    o.label = PaddingStrategy::constant(sweep.best_amplitude).name();
    o.best_amplitude = sweep.best_amplitude;
    o.total_iterations = sweep.total_iterations;
    o.sweep = std::move(sweep.entries);
    o.result = std::move(sweep.best);
    return o;
  }
  problem.strategy = choice == StrategyChoice::zero ? PaddingStrategy::zero() : PaddingStrategy::variable();
  o.label = problem.strategy.name();
  o.result = run_mgsa(problem, kernel);
  o.total_iterations = o.result.trace.size();
  return o;
}

std::string comparison_table(const std::vector<StrategyOutcome>& outcomes) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "strategy" << std::setw(16) << "corr_input" << std::setw(16)
     << "corr_output" << "total_iterations\n";
  for (const StrategyOutcome& o : outcomes) {
    os << std::setw(18) << o.label;
    if (o.result.trace.empty()) {
      os << std::setw(16) << "n/a" << std::setw(16) << "n/a";
    } else {
      os << std::setw(16) << num(o.result.trace.back().corr_input) << std::setw(16)
         << num(o.result.trace.back().corr_output);
    }
    os << o.total_iterations << '\n';
  }
  return os.str();
}

}  // namespace

StrategyChoice parse_strategy(const std::string& name) {
  if (name == "zero") return StrategyChoice::zero;
  if (name == "constant") return StrategyChoice::constant;
  if (name == "variable") return StrategyChoice::variable;
  if (name == "all") return StrategyChoice::all;
  throw ConfigError("unknown strategy '" + name + "' (expected zero, constant, variable or all)");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Image a1 = load_amplitude(config.input_image, config.intensity_input);
    Image a2 = load_amplitude(config.output_image, config.intensity_input);
    if (a1.side() != a2.side()) {
      throw ConfigError("input and output images differ in size: " + std::to_string(a1.side()) + " vs " +
                        std::to_string(a2.side()));
    }
    const std::size_t side = a1.side();
    RetrievalProblem problem{
        .input_amplitude = std::move(a1),
        .output_amplitude = std::move(a2),
        .setup = make_setup(config.wavelength, config.distance, config.pitch, side),
        .iterations = config.iterations,
        .seed = config.seed,
        .phase_tolerance = std::nullopt,
    };
    problem.validate();
    if (config.strategy == StrategyChoice::constant || config.strategy == StrategyChoice::all) {
      sweep_values(config.c_min, config.c_max, config.c_step);
    }

    const OpticalSetup& s = problem.setup;
    out << "image side " << s.image_side() << ", computational side " << s.domain_side() << " (P = "
        << num(s.domain_width()) << " um, p = " << num(s.image_width()) << " um)\n";
    const FresnelKernel kernel(s);

    if (config.strategy != StrategyChoice::all) {
      StrategyOutcome o = run_strategy(config.strategy, problem, kernel, config);
      write_outputs(config.outdir, o, problem);
      out << describe(o, problem);
      return kOk;
    }

    std::vector<StrategyOutcome> outcomes;
    const std::pair<StrategyChoice, const char*> order[] = {
        {StrategyChoice::zero, "zero"}, {StrategyChoice::constant, "constant"}, {StrategyChoice::variable, "variable"}};
    for (const auto& [choice, dir] : order) {
      out << "running " << dir << " padding...\n" << std::flush;
      outcomes.push_back(run_strategy(choice, problem, kernel, config));
      write_outputs(config.outdir / dir, outcomes.back(), problem);
    }
    const std::string table = comparison_table(outcomes);
    std::ofstream summary(config.outdir / "summary.txt");
    if (!summary) throw ConfigError("cannot write " + (config.outdir / "summary.txt").string());
    summary << table;
    out << table;
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DivergenceError& e) {
    err << "diverged: " << e.what() << '\n';
    return kDiverged;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace fresnelpr::cli
