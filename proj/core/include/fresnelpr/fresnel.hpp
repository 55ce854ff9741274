#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "fresnelpr/field_grid.hpp"

namespace fresnelpr {

/// Fresnel sample count for equal input/output pitch: wavelength * distance /
/// pitch^2 rounded to the nearest even integer. Throws ConfigError when that
/// count is smaller than the image side.
std::size_t required_samples(double wavelength, double distance, double pitch, std::size_t image_side);

/// Distance at which forward and inverse discrete transforms both meet the
/// Nyquist criterion: P1 * P2 / (N * wavelength). `samples` is taken as a real
/// number so the ideal (non-integer) count can be evaluated.
double sampling_distance(double width_in, double width_out, double samples, double wavelength);

/// Setup with N from required_samples().
OpticalSetup make_setup(double wavelength, double distance, double pitch, std::size_t image_side);

/// Precomputed chirps, prefactor and FFT plans for one OpticalSetup.
///
/// Discrete convention. With r = coordinate() positions in both planes and
/// c = N/2, the transform is
///
///   u2[m] = prefactor * exp(i pi r2[m]^2 / (lambda z))
///           * sum_n u1[n] exp(i pi r1[n]^2 / (lambda z)) exp(-2 pi i (m - c)(n - c) / N)
///
/// per axis, with prefactor = exp(i 2 pi z / lambda) / (i N). When
/// N = lambda z / dx^2 exactly, 1/N equals the area element dx^2 / (lambda z)
/// and the kernel is the sampled continuous Fresnel integral. For the rounded
/// N it keeps the transform unitary.
///
/// Immutable after construction; forward()/inverse() may be called
/// concurrently from several threads.
class FresnelKernel {
 public:
  explicit FresnelKernel(const OpticalSetup& setup);

  const OpticalSetup& setup() const { return setup_; }
  std::size_t side() const { return setup_.domain_side(); }

  /// exp(i pi r1^2 / (lambda z)), row-major N x N.
  const std::vector<Complex>& input_chirp() const { return input_chirp_; }
  /// exp(i pi r2^2 / (lambda z)), row-major N x N.
  const std::vector<Complex>& output_chirp() const { return output_chirp_; }
  Complex prefactor() const { return prefactor_; }

  FieldGrid forward(const FieldGrid& u1) const;
  FieldGrid inverse(const FieldGrid& u2) const;

  /// In-place variants; `field` must have side N.
  void forward_in_place(FieldGrid& field) const;
  void inverse_in_place(FieldGrid& field) const;

 private:
  struct Plans;

  void check_side(const FieldGrid& field, const char* what) const;

  OpticalSetup setup_;
  std::vector<Complex> input_chirp_;
  std::vector<Complex> output_chirp_;
  Complex prefactor_;
  // Chirps folded with the index-centering modulation and the prefactor.
  std::vector<Complex> forward_pre_;
  std::vector<Complex> forward_post_;
  std::vector<Complex> inverse_pre_;
  std::vector<Complex> inverse_post_;
  std::shared_ptr<const Plans> plans_;
};

FresnelKernel build_kernel(const OpticalSetup& setup);

FieldGrid frt(const FieldGrid& u1, const FresnelKernel& kernel);
FieldGrid ifrt(const FieldGrid& u2, const FresnelKernel& kernel);

}  // namespace fresnelpr
