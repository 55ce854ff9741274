#pragma once

#include "fresnelpr/field_grid.hpp"

namespace fresnelpr {

/// Brute-force quadrature of the Fresnel integral, for checking the FFT path
/// on small grids. O(N^4); N is capped at 64.
class OracleConfig {
 public:
  static constexpr std::size_t kMaxSide = 64;

  /// Throws ConfigError when setup.domain_side() > kMaxSide.
  explicit OracleConfig(const OpticalSetup& setup);

  const OpticalSetup& setup() const { return setup_; }

 private:
  OpticalSetup setup_;
};

/// u2[m] = exp(i k z) / (i lambda z) * exp(i pi r2^2 / (lambda z))
///         * sum_n u1[n] exp(i pi r1^2 / (lambda z)) exp(-2 pi i f(m) . r1(n)) dx^2
/// with f(m) = r2(m) / (lambda z) and r from coordinate().
FieldGrid direct_fresnel(const FieldGrid& u1, const OracleConfig& config);

/// Quadrature of the inverse integral over output positions, with frequency
/// area element (dx / (lambda z))^2.
FieldGrid direct_inverse_fresnel(const FieldGrid& u2, const OracleConfig& config);

}  // namespace fresnelpr
