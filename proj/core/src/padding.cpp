#include "fresnelpr/padding.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fresnelpr/errors.hpp"

namespace fresnelpr {
namespace {

// z rescaled to modulus `target`; phase 0 where z == 0. Samples already at
// the target modulus are returned untouched.
Complex with_modulus(Complex z, double target) {
  const double m = std::abs(z);
  if (m == target) return z;
  if (m > 0.0) return (z / m) * target;
  return Complex{target, 0.0};
}

void check_measured(const Image& measured, const OpticalSetup& setup) {
  if (measured.side() != setup.image_side()) {
    throw ConfigError("constraint: measured side " + std::to_string(measured.side()) + " != image side " +
                      std::to_string(setup.image_side()));
  }
  for (double v : measured.values()) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("constraint: measured amplitudes must be finite and >= 0");
  }
}

}  // namespace

PaddingStrategy PaddingStrategy::constant(double amplitude) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) {
    throw ConfigError("constant padding amplitude must be positive");
  }
  return PaddingStrategy(ConstantPadding{amplitude});
}

std::string PaddingStrategy::name() const {
  if (is_zero()) return "zero";
  if (is_variable()) return "variable";
  std::ostringstream os;
  os << "constant(" << std::get<ConstantPadding>(variant_).amplitude << ")";
  return os.str();
}

void apply_constraint_in_place(FieldGrid& u, const Image& measured, const OpticalSetup& setup,
                               const PaddingStrategy& strategy) {
  if (u.side() != setup.domain_side()) {
    throw ConfigError("constraint: field side " + std::to_string(u.side()) + " != domain side " +
                      std::to_string(setup.domain_side()));
  }
  check_measured(measured, setup);

  const std::size_t big = setup.domain_side();
  const std::size_t n = setup.image_side();
  const std::size_t off = setup.offset();

  if (!strategy.is_variable()) {
    const bool zero = strategy.is_zero();
    const double fill = zero ? 0.0 : std::get<ConstantPadding>(strategy.variant()).amplitude;
    for (std::size_t r = 0; r < big; ++r) {
      const bool row_inside = r >= off && r < off + n;
      for (std::size_t c = 0; c < big; ++c) {
        if (row_inside && c >= off && c < off + n) continue;
        Complex& v = u(r, c);
        v = zero ? Complex{0.0, 0.0} : with_modulus(v, fill);
      }
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Complex& v = u(r + off, c + off);
      v = with_modulus(v, measured(r, c));
    }
  }
}

FieldGrid apply_constraint(const FieldGrid& u, const Image& measured, const OpticalSetup& setup,
                           const PaddingStrategy& strategy) {
  FieldGrid out = u;
  apply_constraint_in_place(out, measured, setup, strategy);
  return out;
}

FieldGrid initial_field(const Image& amplitude, const OpticalSetup& setup, const PaddingStrategy& strategy,
                        std::uint64_t seed) {
  if (amplitude.side() != setup.image_side()) {
    throw ConfigError("initial_field: amplitude side " + std::to_string(amplitude.side()) + " != image side " +
                      std::to_string(setup.image_side()));
  }
  if (strategy.is_variable()) return embed(amplitude, setup, Complex{0.0, 0.0});

  const double fill = strategy.is_zero() ? 0.0 : std::get<ConstantPadding>(strategy.variant()).amplitude;
  FieldGrid u = embed(amplitude, setup, Complex{fill, 0.0});
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (Complex& v : u.samples()) v *= std::polar(1.0, phase(rng));
  return u;
}

}  // namespace fresnelpr
