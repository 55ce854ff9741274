#include <gtest/gtest.h>

#include "fresnelpr/errors.hpp"
#include "fresnelpr/fresnel.hpp"
#include "fresnelpr/oracle.hpp"
#include "test_support.hpp"

namespace fresnelpr {
namespace {

TEST(Oracle, RejectsLargeGrids) {
  EXPECT_THROW(OracleConfig(testing::exact_setup(66, 32)), ConfigError);
  EXPECT_NO_THROW(OracleConfig(testing::exact_setup(64, 32)));
}

TEST(Oracle, ZerosMapToZeros) {
  const OracleConfig cfg(testing::exact_setup(8, 4));
  const FieldGrid z(8, 1.0);
  EXPECT_EQ(direct_fresnel(z, cfg), z);
}

TEST(Oracle, CenteredImpulseHasFlatModulus) {
  const auto s = testing::exact_setup(16, 8);
  FieldGrid u(16, 1.0);
  u(8, 8) = Complex{1.0, 0.0};
  const FieldGrid out = direct_fresnel(u, OracleConfig(s));
  const double want = s.pitch() * s.pitch() / (s.wavelength() * s.distance());
  for (const Complex& v : out.samples()) EXPECT_NEAR(std::abs(v), want, 1e-15);
}

TEST(Oracle, ImpulseMatchesFrt) {
  const auto s = testing::exact_setup(16, 8);
  FieldGrid u(16, 1.0);
  u(8, 8) = Complex{1.0, 0.0};
  EXPECT_LT(testing::max_rel_error(frt(u, FresnelKernel(s)), direct_fresnel(u, OracleConfig(s))), 1e-8);
}

TEST(Oracle, Linear) {
  const auto s = testing::exact_setup(8, 4);
  const OracleConfig cfg(s);
  const FieldGrid u = testing::random_field(8, 1.0, 3);
  FieldGrid scaled = u;
  const Complex a{2.0, -0.5};
  for (Complex& v : scaled.samples()) v *= a;
  FieldGrid want = direct_fresnel(u, cfg);
  for (Complex& v : want.samples()) v *= a;
  EXPECT_LT(testing::max_rel_error(direct_fresnel(scaled, cfg), want), 1e-13);
}

class OracleAgreement : public ::testing::TestWithParam<std::size_t> {};

TEST_P(OracleAgreement, FrtMatchesQuadrature) {
  const std::size_t n = GetParam();
  const auto s = testing::exact_setup(n, n / 2);
  const FresnelKernel k(s);
  const OracleConfig cfg(s);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const FieldGrid u = testing::random_field(n, 1.0, 100 + seed);
    EXPECT_LT(testing::max_rel_error(frt(u, k), direct_fresnel(u, cfg)), 1e-8) << "seed " << seed;
  }
}

TEST_P(OracleAgreement, IfrtMatchesInverseQuadrature) {
  const std::size_t n = GetParam();
  const auto s = testing::exact_setup(n, n / 2);
  const FresnelKernel k(s);
  const OracleConfig cfg(s);
  const FieldGrid u = testing::random_field(n, 1.0, 7);
  EXPECT_LT(testing::max_rel_error(ifrt(u, k), direct_inverse_fresnel(u, cfg)), 1e-8);
  EXPECT_LT(testing::max_rel_error(direct_inverse_fresnel(direct_fresnel(u, cfg), cfg), u), 1e-8);
}

INSTANTIATE_TEST_SUITE_P(Sides, OracleAgreement, ::testing::Values(8, 16, 32));

}  // namespace
}  // namespace fresnelpr
