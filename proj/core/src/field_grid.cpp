#include "fresnelpr/field_grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fresnelpr/errors.hpp"

namespace fresnelpr {

Image::Image(std::size_t side, double fill) : side_(side), values_(side * side, fill) {}

Image::Image(std::size_t side, std::vector<double> values) : side_(side), values_(std::move(values)) {
  if (values_.size() != side_ * side_) {
    throw ConfigError("image: expected " + std::to_string(side_ * side_) + " values, got " +
                      std::to_string(values_.size()));
  }
}

OpticalSetup OpticalSetup::create(double wavelength, double distance, double pitch,
                                  std::size_t image_side, std::size_t domain_side) {
  if (!(wavelength > 0.0) || !std::isfinite(wavelength)) throw ConfigError("wavelength must be positive");
  if (!(distance > 0.0) || !std::isfinite(distance)) throw ConfigError("distance must be positive");
  if (!(pitch > 0.0) || !std::isfinite(pitch)) throw ConfigError("pitch must be positive");
  if (image_side < 1) throw ConfigError("image side must be at least 1");
  if (domain_side < image_side) {
    throw ConfigError("domain side " + std::to_string(domain_side) + " is smaller than image side " +
                      std::to_string(image_side));
  }
  const double ideal = wavelength * distance / (pitch * pitch);
  if (std::abs(static_cast<double>(domain_side) - ideal) > 1.0) {
    throw ConfigError("domain side " + std::to_string(domain_side) +
                      " violates the Fresnel sample count " + std::to_string(ideal));
  }
  OpticalSetup s;
  s.wavelength_ = wavelength;
  s.distance_ = distance;
  s.pitch_ = pitch;
  s.image_side_ = image_side;
  s.domain_side_ = domain_side;
  return s;
}

double OpticalSetup::wavenumber() const { return 2.0 * std::numbers::pi / wavelength_; }

FieldGrid::FieldGrid(std::size_t side, double pitch)
    : side_(side), pitch_(pitch), samples_(side * side, Complex{0.0, 0.0}) {
  if (side < 1) throw ConfigError("field side must be at least 1");
  if (!(pitch > 0.0)) throw ConfigError("field pitch must be positive");
}

FieldGrid::FieldGrid(std::size_t side, double pitch, std::vector<Complex> samples)
    : side_(side), pitch_(pitch), samples_(std::move(samples)) {
  if (side < 1) throw ConfigError("field side must be at least 1");
  if (!(pitch > 0.0)) throw ConfigError("field pitch must be positive");
  if (samples_.size() != side_ * side_) {
    throw ConfigError("field: expected " + std::to_string(side_ * side_) + " samples, got " +
                      std::to_string(samples_.size()));
  }
  if (!all_finite()) throw ConfigError("field contains non-finite samples");
}

bool FieldGrid::all_finite() const {
  for (const Complex& v : samples_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

double coordinate(std::size_t index, const OpticalSetup& setup) {
  const std::size_t n = setup.domain_side();
  if (index >= n) {
    throw ConfigError("coordinate index " + std::to_string(index) + " outside [0, " + std::to_string(n) + ")");
  }
  const auto centered = static_cast<long long>(index) - static_cast<long long>(n / 2);
  return static_cast<double>(centered) * setup.pitch();
}

FieldGrid embed(const Image& image, const OpticalSetup& setup, Complex fill) {
  const std::size_t n = setup.image_side();
  if (image.side() != n) {
    throw ConfigError("embed: image side " + std::to_string(image.side()) + " != setup image side " +
                      std::to_string(n));
  }
  for (double v : image.values()) {
    if (!std::isfinite(v)) throw ConfigError("embed: image contains non-finite values");
  }
  const std::size_t big = setup.domain_side();
  const std::size_t off = setup.offset();
  FieldGrid grid(big, setup.pitch());
  for (Complex& v : grid.samples()) v = fill;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) grid(r + off, c + off) = Complex{image(r, c), 0.0};
  }
  return grid;
}

Image crop(const FieldGrid& grid, const OpticalSetup& setup) {
  if (grid.side() != setup.domain_side()) {
    throw ConfigError("crop: grid side " + std::to_string(grid.side()) + " != domain side " +
                      std::to_string(setup.domain_side()));
  }
  const std::size_t n = setup.image_side();
  const std::size_t off = setup.offset();
  Image out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = std::abs(grid(r + off, c + off));
  }
  return out;
}

Image crop(const Image& map, const OpticalSetup& setup) {
  if (map.side() != setup.domain_side()) {
    throw ConfigError("crop: map side " + std::to_string(map.side()) + " != domain side " +
                      std::to_string(setup.domain_side()));
  }
  const std::size_t n = setup.image_side();
  const std::size_t off = setup.offset();
  Image out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = map(r + off, c + off);
  }
  return out;
}

double wrap_phase(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::remainder(angle, two_pi);
  if (w >= std::numbers::pi) w -= two_pi;
  if (w < -std::numbers::pi) w += two_pi;
  return w;
}

Image phase_of(const FieldGrid& grid) {
  Image out(grid.side());
  auto dst = out.values();
  auto src = grid.samples();
  for (std::size_t i = 0; i < src.size(); ++i) {
    // std::arg is in (-pi, pi]; fold +pi onto -pi.
    double a = src[i] == Complex{} ? 0.0 : std::arg(src[i]);
    if (a >= std::numbers::pi) a = -std::numbers::pi;
    dst[i] = a;
  }
  return out;
}

Image modulus_of(const FieldGrid& grid) {
  Image out(grid.side());
  auto dst = out.values();
  auto src = grid.samples();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = std::abs(src[i]);
  return out;
}

}  // namespace fresnelpr
