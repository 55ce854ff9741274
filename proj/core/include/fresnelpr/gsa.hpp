#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fresnelpr/field_grid.hpp"
#include "fresnelpr/fresnel.hpp"
#include "fresnelpr/padding.hpp"

namespace fresnelpr {

struct RetrievalProblem {
  Image input_amplitude;   // A1, n x n
  Image output_amplitude;  // A2, n x n
  OpticalSetup setup;
  PaddingStrategy strategy = PaddingStrategy::variable();
  std::size_t iterations = 100;
  std::uint64_t seed = 0;
  /// Optional early stop: end once the RMS wrapped change of phi1 between two
  /// iterations drops below this value (radians). Off by default.
  std::optional<double> phase_tolerance;

  /// Throws ConfigError on size mismatch, negative or non-finite amplitudes,
  /// or amplitudes without variance (correlation would be undefined).
  void validate() const;
};

struct TraceRecord {
  std::size_t iteration = 0;  // 1-based
  double corr_input = 0.0;
  double corr_output = 0.0;

  bool operator==(const TraceRecord&) const = default;
};

using ConvergenceTrace = std::vector<TraceRecord>;

struct RetrievalResult {
  Image phi1;  // N x N, [-pi, pi)
  Image phi2;  // N x N, [-pi, pi)
  FieldGrid u1_final;  // after the input constraint
  FieldGrid u2_final;  // after the output constraint
  // Last propagated fields, before their constraint. The cropped moduli are
  // the reconstructions the trace correlations were computed from.
  FieldGrid u1_propagated;
  FieldGrid u2_propagated;
  ConvergenceTrace trace;

  Image reconstructed_input(const OpticalSetup& setup) const { return crop(u1_propagated, setup); }
  Image reconstructed_output(const OpticalSetup& setup) const { return crop(u2_propagated, setup); }
};

/// Alternating projections between the two planes. Each iteration:
///
///   u2 = frt(u1)          -> phi2, corr_output = corr(crop|u2|, A2)
///   u2 = constraint(u2, A2)
///   u1 = ifrt(u2)         -> phi1, corr_input  = corr(crop|u1|, A1)
///   u1 = constraint(u1, A1)
///
/// corr_input therefore compares A1 with the input recovered from the
/// constrained output field, i.e. from A2 and the current phi2.
///
/// With zero iterations the result holds the start field (as u1_final and
/// u1_propagated) with its phase as phi1, and frt(start) as u2_final and
/// u2_propagated with its phase as phi2.
///
/// Throws DivergenceError if a propagation yields non-finite samples.
RetrievalResult run_mgsa(const RetrievalProblem& problem);
RetrievalResult run_mgsa(const RetrievalProblem& problem, const FresnelKernel& kernel);

struct SweepEntry {
  double amplitude = 0.0;
  double corr_input = 0.0;  // final
};

struct SweepResult {
  double best_amplitude = 0.0;
  RetrievalResult best;
  std::vector<SweepEntry> entries;
  std::size_t total_iterations = 0;
};

/// Amplitudes c_min + k * step, k = 0, 1, ... while <= c_max (with a relative
/// slack of 1e-9 * step against roundoff).
std::vector<double> sweep_values(double c_min, double c_max, double step);

/// Runs the constant strategy once per sweep value with the problem's seed
/// and keeps the run with the highest final corr_input (ties go to the smaller
/// amplitude). The problem's own strategy is ignored. `threads` > 1 runs
/// members concurrently with a shared kernel; results do not depend on it.
SweepResult sweep_constant(const RetrievalProblem& problem, double c_min, double c_max, double step,
                           unsigned threads = 1);

}  // namespace fresnelpr
