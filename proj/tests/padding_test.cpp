#include <gtest/gtest.h>

#include <cmath>

#include "fresnelpr/errors.hpp"
#include "fresnelpr/padding.hpp"
#include "test_support.hpp"

namespace fresnelpr {
namespace {

FieldGrid known_phase_grid(std::size_t side) {
  FieldGrid u(side, 1.0);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      u(r, c) = std::polar(static_cast<double>(r + 1), 0.1 * static_cast<double>(side * r + c) - 1.0);
    }
  }
  return u;
}

TEST(PaddingStrategy, Names) {
  EXPECT_EQ(PaddingStrategy::zero().name(), "zero");
  EXPECT_EQ(PaddingStrategy::variable().name(), "variable");
  EXPECT_EQ(PaddingStrategy::constant(0.1).name(), "constant(0.1)");
  EXPECT_THROW(PaddingStrategy::constant(0.0), ConfigError);
  EXPECT_THROW(PaddingStrategy::constant(-0.5), ConfigError);
}

TEST(ApplyConstraint, ConstantPaddingKeepsPhases) {
  const auto s = testing::exact_setup(4, 2);
  const FieldGrid u = known_phase_grid(4);
  const Image measured(2, {0.2, 0.4, 0.6, 0.8});
  const FieldGrid out = apply_constraint(u, measured, s, PaddingStrategy::constant(0.1));
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const double theta = 0.1 * static_cast<double>(4 * r + c) - 1.0;
      const double want = s.in_image_region(r, c) ? measured(r - 1, c - 1) : 0.1;
      EXPECT_NEAR(std::abs(out(r, c)), want, 1e-15);
      EXPECT_NEAR(std::arg(out(r, c)), theta, 1e-14);
    }
  }
}

TEST(ApplyConstraint, ZeroPaddingOfRealFieldIsEmbed) {
  const auto s = testing::exact_setup(8, 4);
  const Image measured = testing::random_image(4, 1);
  FieldGrid u(8, 1.0);
  for (Complex& v : u.samples()) v = Complex{0.5, 0.0};
  EXPECT_EQ(apply_constraint(u, measured, s, PaddingStrategy::zero()), embed(measured, s, {}));
}

TEST(ApplyConstraint, VariableFixedPoint) {
  const auto s = testing::exact_setup(16, 8);
  FieldGrid u = testing::random_field(16, 1.0, 4);
  const Image measured = crop(u, s);
  EXPECT_EQ(apply_constraint(u, measured, s, PaddingStrategy::variable()), u);
}

TEST(ApplyConstraint, VariableKeepsPadding) {
  const auto s = testing::exact_setup(16, 8);
  const FieldGrid u = testing::random_field(16, 1.0, 6);
  const FieldGrid out = apply_constraint(u, testing::random_image(8, 2), s, PaddingStrategy::variable());
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t c = 0; c < 16; ++c) {
      if (!s.in_image_region(r, c)) EXPECT_EQ(out(r, c), u(r, c));
    }
  }
}

TEST(ApplyConstraint, ZeroModulusSampleTakesPhaseZero) {
  const auto s = testing::exact_setup(4, 4);
  FieldGrid u(4, 1.0);
  const Image measured(4, 0.25);
  const FieldGrid out = apply_constraint(u, measured, s, PaddingStrategy::zero());
  for (const Complex& v : out.samples()) EXPECT_EQ(v, Complex(0.25, 0.0));
}

TEST(ApplyConstraint, Errors) {
  const auto s = testing::exact_setup(8, 4);
  const FieldGrid u(8, 1.0);
  EXPECT_THROW(apply_constraint(u, Image(5), s, PaddingStrategy::zero()), ConfigError);
  EXPECT_THROW(apply_constraint(FieldGrid(6, 1.0), Image(4), s, PaddingStrategy::zero()), ConfigError);
  Image negative(4, 0.5);
  negative(0, 0) = -0.1;
  EXPECT_THROW(apply_constraint(u, negative, s, PaddingStrategy::variable()), ConfigError);
}

// Property checks over random fields and all three strategies.
TEST(ApplyConstraint, Properties) {
  const auto s = testing::exact_setup(24, 13);
  const PaddingStrategy strategies[] = {PaddingStrategy::zero(), PaddingStrategy::constant(0.3),
                                        PaddingStrategy::variable()};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FieldGrid u = testing::random_field(24, 1.0, seed);
    const Image measured = testing::random_image(13, 1000 + seed);
    for (const PaddingStrategy& strategy : strategies) {
      const FieldGrid once = apply_constraint(u, measured, s, strategy);
      const Image region = crop(once, s);
      for (std::size_t i = 0; i < region.size(); ++i) {
        EXPECT_NEAR(region.values()[i], measured.values()[i], 4e-16 * std::max(1.0, measured.values()[i]));
      }
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (std::abs(once.samples()[i]) > 0.0) {
          EXPECT_NEAR(wrap_phase(std::arg(once.samples()[i]) - std::arg(u.samples()[i])), 0.0, 1e-14);
        }
      }
      const FieldGrid twice = apply_constraint(once, measured, s, strategy);
      EXPECT_LT(testing::max_abs_diff(twice, once), 1e-15) << strategy.name();
    }
  }
}

TEST(InitialField, VariableStartsReal) {
  const auto s = testing::exact_setup(16, 8);
  const Image a1 = testing::random_image(8, 2);
  EXPECT_EQ(initial_field(a1, s, PaddingStrategy::variable(), 99), embed(a1, s, {}));
}

TEST(InitialField, RandomPhaseIsDeterministicAndKeepsAmplitude) {
  const auto s = testing::exact_setup(16, 8);
  const Image a1 = testing::random_image(8, 2);
  const FieldGrid u = initial_field(a1, s, PaddingStrategy::zero(), 5);
  EXPECT_EQ(u, initial_field(a1, s, PaddingStrategy::zero(), 5));
  EXPECT_NE(u, initial_field(a1, s, PaddingStrategy::zero(), 6));
  const Image region = crop(u, s);
  for (std::size_t i = 0; i < region.size(); ++i) EXPECT_NEAR(region.values()[i], a1.values()[i], 1e-15);
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t c = 0; c < 16; ++c) {
      if (!s.in_image_region(r, c)) EXPECT_EQ(u(r, c), Complex(0.0, 0.0));
    }
  }
}

TEST(InitialField, ConstantFillsPaddingWithRandomPhase) {
  const auto s = testing::exact_setup(16, 8);
  const FieldGrid u = initial_field(Image(8, 0.5), s, PaddingStrategy::constant(0.2), 1);
  double spread = 0.0;
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t c = 0; c < 16; ++c) {
      EXPECT_NEAR(std::abs(u(r, c)), s.in_image_region(r, c) ? 0.5 : 0.2, 1e-15);
      spread += std::abs(std::arg(u(r, c)));
    }
  }
  EXPECT_GT(spread, 1.0);
  EXPECT_THROW(initial_field(Image(9), s, PaddingStrategy::zero(), 0), ConfigError);
}

}  // namespace
}  // namespace fresnelpr
