#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fresnelpr {

using Complex = std::complex<double>;

/// Square lattice of real values, row-major. Used for measured amplitudes,
/// reconstructions and phase maps.
class Image {
 public:
  Image() = default;
  explicit Image(std::size_t side, double fill = 0.0);
  Image(std::size_t side, std::vector<double> values);

  std::size_t side() const { return side_; }
  std::size_t size() const { return values_.size(); }

  double operator()(std::size_t row, std::size_t col) const { return values_[row * side_ + col]; }
  double& operator()(std::size_t row, std::size_t col) { return values_[row * side_ + col]; }

  std::span<const double> values() const& { return values_; }
  std::span<double> values() & { return values_; }
  std::span<const double> values() && = delete;

  bool operator==(const Image&) const = default;

 private:
  std::size_t side_ = 0;
  std::vector<double> values_;
};

/// Physical geometry of one retrieval: wavelength, distance and pitch in
/// micrometres, the real image side n and the computational side N.
///
/// Input and output planes share the pitch and the sample count, so both
/// computational widths equal P = N * pitch.
class OpticalSetup {
 public:
  /// Validates every invariant; throws ConfigError otherwise. The domain side
  /// must lie within one sample of wavelength * distance / pitch^2.
  static OpticalSetup create(double wavelength, double distance, double pitch,
                             std::size_t image_side, std::size_t domain_side);

  double wavelength() const { return wavelength_; }
  double distance() const { return distance_; }
  double pitch() const { return pitch_; }
  std::size_t image_side() const { return image_side_; }
  std::size_t domain_side() const { return domain_side_; }
  /// Samples from the domain edge to the image region, per axis.
  std::size_t offset() const { return (domain_side_ - image_side_) / 2; }

  double image_width() const { return static_cast<double>(image_side_) * pitch_; }
  double domain_width() const { return static_cast<double>(domain_side_) * pitch_; }
  double wavenumber() const;

  bool in_image_region(std::size_t row, std::size_t col) const {
    const std::size_t lo = offset();
    const std::size_t hi = lo + image_side_;
    return row >= lo && row < hi && col >= lo && col < hi;
  }

  bool operator==(const OpticalSetup&) const = default;

 private:
  OpticalSetup() = default;

  double wavelength_ = 0.0;
  double distance_ = 0.0;
  double pitch_ = 0.0;
  std::size_t image_side_ = 0;
  std::size_t domain_side_ = 0;
};

/// N x N complex field samples with a physical pixel pitch.
class FieldGrid {
 public:
  FieldGrid() = default;
  /// Zero-filled grid.
  FieldGrid(std::size_t side, double pitch);
  /// Throws ConfigError if the sample count is not side^2 or any sample is non-finite.
  FieldGrid(std::size_t side, double pitch, std::vector<Complex> samples);

  std::size_t side() const { return side_; }
  double pitch() const { return pitch_; }
  std::size_t size() const { return samples_.size(); }

  const Complex& operator()(std::size_t row, std::size_t col) const { return samples_[row * side_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return samples_[row * side_ + col]; }

  std::span<const Complex> samples() const& { return samples_; }
  std::span<Complex> samples() & { return samples_; }
  std::span<const Complex> samples() && = delete;

  bool all_finite() const;

  bool operator==(const FieldGrid&) const = default;

 private:
  std::size_t side_ = 0;
  double pitch_ = 0.0;
  std::vector<Complex> samples_;
};

/// Physical position of lattice index `index`: (index - N/2) * pitch, with
/// integer division, so index N/2 sits at the origin.
double coordinate(std::size_t index, const OpticalSetup& setup);

/// Places `image` at (offset, offset) of an N x N grid; every padding sample is `fill`.
FieldGrid embed(const Image& image, const OpticalSetup& setup, Complex fill);

/// Moduli of the n x n image region. crop(embed(a, s, c), s) == a for any
/// non-negative a and any fill c.
Image crop(const FieldGrid& grid, const OpticalSetup& setup);

/// Same block extraction for a real N x N map.
Image crop(const Image& map, const OpticalSetup& setup);

/// Element-wise phase in [-pi, pi); zero-modulus samples have phase 0.
Image phase_of(const FieldGrid& grid);

/// Element-wise modulus.
Image modulus_of(const FieldGrid& grid);

/// Wraps an angle into [-pi, pi).
double wrap_phase(double angle);

}  // namespace fresnelpr
