#include "fresnelpr/gsa.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "fresnelpr/errors.hpp"
#include "fresnelpr/metrics.hpp"

namespace fresnelpr {
namespace {

void check_amplitude(const Image& a, const OpticalSetup& setup, const char* which) {
  if (a.side() != setup.image_side()) {
    throw ConfigError(std::string(which) + " side " + std::to_string(a.side()) + " != image side " +
                      std::to_string(setup.image_side()));
  }
  const auto v = a.values();
  for (double x : v) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw ConfigError(std::string(which) + " must be finite and non-negative");
    }
  }
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  if (*lo == *hi) throw ConfigError(std::string(which) + " is constant; correlation is undefined");
}

void check_finite(const FieldGrid& u, std::size_t iteration, const char* where) {
  if (!u.all_finite()) {
    throw DivergenceError("non-finite field after " + std::string(where) + " in iteration " +
                          std::to_string(iteration));
  }
}

double rms_phase_change(const Image& a, const Image& b) {
  double acc = 0.0;
  const auto va = a.values();
  const auto vb = b.values();
  for (std::size_t i = 0; i < va.size(); ++i) {
    const double d = wrap_phase(va[i] - vb[i]);
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(va.size()));
}

}  // namespace

void RetrievalProblem::validate() const {
  check_amplitude(input_amplitude, setup, "input amplitude");
  check_amplitude(output_amplitude, setup, "output amplitude");
  if (phase_tolerance && !(*phase_tolerance > 0.0)) throw ConfigError("phase tolerance must be positive");
}

RetrievalResult run_mgsa(const RetrievalProblem& problem) {
  problem.validate();
  const FresnelKernel kernel(problem.setup);
  return run_mgsa(problem, kernel);
}

RetrievalResult run_mgsa(const RetrievalProblem& problem, const FresnelKernel& kernel) {
  problem.validate();
  if (!(kernel.setup() == problem.setup)) throw ConfigError("run_mgsa: kernel was built for a different setup");

  const OpticalSetup& setup = problem.setup;
  const PaddingStrategy& strategy = problem.strategy;

  RetrievalResult result;
  FieldGrid u1 = initial_field(problem.input_amplitude, setup, strategy, problem.seed);
  result.trace.reserve(problem.iterations);

  if (problem.iterations == 0) {
    FieldGrid u2 = kernel.forward(u1);
    check_finite(u2, 0, "forward propagation");
    result.phi1 = phase_of(u1);
    result.phi2 = phase_of(u2);
    result.u1_propagated = u1;
    result.u2_propagated = u2;
    result.u1_final = std::move(u1);
    result.u2_final = std::move(u2);
    return result;
  }

  // One buffer alternates between the planes: u1 -> u2 -> u1.
  FieldGrid& u = u1;
  const bool track_phase = problem.phase_tolerance.has_value();
  for (std::size_t it = 1; it <= problem.iterations; ++it) {
    const bool last = it == problem.iterations;

    kernel.forward_in_place(u);
    check_finite(u, it, "forward propagation");
    const double corr_output = correlation(crop(u, setup), problem.output_amplitude);
    if (last || track_phase) result.u2_propagated = u;
    apply_constraint_in_place(u, problem.output_amplitude, setup, strategy);
    if (last || track_phase) result.u2_final = u;

    kernel.inverse_in_place(u);
    check_finite(u, it, "inverse propagation");
    const double corr_input = correlation(crop(u, setup), problem.input_amplitude);
    if (last || track_phase) result.u1_propagated = u;
    apply_constraint_in_place(u, problem.input_amplitude, setup, strategy);

    result.trace.push_back({it, corr_input, corr_output});

    if (track_phase) {
      Image phi1 = phase_of(result.u1_propagated);
      const bool settled = it > 1 && rms_phase_change(phi1, result.phi1) < *problem.phase_tolerance;
      result.phi1 = std::move(phi1);
      if (settled) break;
    }
  }
  if (!track_phase) result.phi1 = phase_of(result.u1_propagated);
  result.phi2 = phase_of(result.u2_propagated);
  result.u1_final = std::move(u);
  return result;
}

std::vector<double> sweep_values(double c_min, double c_max, double step) {
  if (!(c_min > 0.0) || !(c_max >= c_min) || !(step > 0.0)) {
    throw ConfigError("sweep: need 0 < c_min <= c_max and step > 0");
  }
  std::vector<double> out;
  const double slack = 1e-9 * step;
  for (std::size_t k = 0;; ++k) {
    const double c = c_min + static_cast<double>(k) * step;
    if (c > c_max + slack) break;
    out.push_back(c);
  }
  if (out.empty()) throw ConfigError("sweep: empty amplitude set");
  return out;
}

SweepResult sweep_constant(const RetrievalProblem& problem, double c_min, double c_max, double step,
                           unsigned threads) {
  const std::vector<double> values = sweep_values(c_min, c_max, step);
  problem.validate();
  const FresnelKernel kernel(problem.setup);

  std::vector<std::optional<RetrievalResult>> runs(values.size());
  std::vector<std::exception_ptr> errors(values.size());
  auto run_one = [&](std::size_t k) {
    try {
      RetrievalProblem member = problem;
      member.strategy = PaddingStrategy::constant(values[k]);
      runs[k] = run_mgsa(member, kernel);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };

  const unsigned workers = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(values.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < values.size(); ++k) run_one(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < values.size(); k = next++) run_one(k);
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepResult out;
  std::size_t best = 0;
  double best_corr = -2.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const ConvergenceTrace& trace = runs[k]->trace;
    const double corr = trace.empty() ? -2.0 : trace.back().corr_input;
    out.entries.push_back({values[k], corr});
    out.total_iterations += trace.size();
    if (corr > best_corr) {
      best_corr = corr;
      best = k;
    }
  }
  out.best_amplitude = values[best];
  out.best = std::move(*runs[best]);
  return out;
}

}  // namespace fresnelpr
