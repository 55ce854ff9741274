#include "fresnelpr/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fresnelpr/errors.hpp"

namespace fresnelpr {
namespace {

constexpr double kPi = std::numbers::pi;

FieldGrid direct_sum(const FieldGrid& in, const OpticalSetup& s, double sign) {
  const std::size_t n = s.domain_side();
  if (in.side() != n) {
    throw ConfigError("oracle: field side " + std::to_string(in.side()) + " != domain side " + std::to_string(n));
  }
  const double lz = s.wavelength() * s.distance();
  const double dx = s.pitch();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = coordinate(i, s);

  // Forward: area element dx^2 and 1/(i lambda z). Inverse: area element
  // (dx/(lambda z))^2 and i lambda z.
  const Complex axial = std::polar(1.0, sign * 2.0 * kPi * s.distance() / s.wavelength());
  const Complex scale = sign > 0 ? axial / Complex{0.0, lz} * (dx * dx)
                                 : axial * Complex{0.0, lz} * (dx * dx) / (lz * lz);

  FieldGrid out(n, dx);
  for (std::size_t my = 0; my < n; ++my) {
    for (std::size_t mx = 0; mx < n; ++mx) {
      const double fy = x[my] / lz;
      const double fx = x[mx] / lz;
      Complex acc{0.0, 0.0};
      for (std::size_t ny = 0; ny < n; ++ny) {
        for (std::size_t nx = 0; nx < n; ++nx) {
          const double r2 = x[nx] * x[nx] + x[ny] * x[ny];
          const double phase = sign * (kPi * r2 / lz - 2.0 * kPi * (fx * x[nx] + fy * x[ny]));
          acc += in(ny, nx) * std::polar(1.0, phase);
        }
      }
      const double r2out = x[mx] * x[mx] + x[my] * x[my];
      out(my, mx) = scale * std::polar(1.0, sign * kPi * r2out / lz) * acc;
    }
  }
  return out;
}

}  // namespace

OracleConfig::OracleConfig(const OpticalSetup& setup) : setup_(setup) {
  if (setup.domain_side() > kMaxSide) {
    throw ConfigError("oracle: domain side " + std::to_string(setup.domain_side()) + " exceeds " +
                      std::to_string(kMaxSide));
  }
}

FieldGrid direct_fresnel(const FieldGrid& u1, const OracleConfig& config) {
  return direct_sum(u1, config.setup(), +1.0);
}

FieldGrid direct_inverse_fresnel(const FieldGrid& u2, const OracleConfig& config) {
  return direct_sum(u2, config.setup(), -1.0);
}

}  // namespace fresnelpr
