#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "fresnelpr/field_grid.hpp"

namespace fresnelpr {

struct ZeroPadding {
  bool operator==(const ZeroPadding&) const = default;
};

struct ConstantPadding {
  double amplitude = 0.0;
  bool operator==(const ConstantPadding&) const = default;
};

struct VariablePadding {
  bool operator==(const VariablePadding&) const = default;
};

/// How the amplitude constraint treats samples outside the measured image region.
///
///  - zero:      padding forced to 0.
///  - constant:  padding modulus forced to a fixed amplitude, phase kept.
///  - variable:  padding left as produced by the last propagation.
class PaddingStrategy {
 public:
  using Variant = std::variant<ZeroPadding, ConstantPadding, VariablePadding>;

  static PaddingStrategy zero() { return PaddingStrategy(ZeroPadding{}); }
  /// Throws ConfigError unless amplitude > 0.
  static PaddingStrategy constant(double amplitude);
  static PaddingStrategy variable() { return PaddingStrategy(VariablePadding{}); }

  const Variant& variant() const { return variant_; }
  bool is_zero() const { return std::holds_alternative<ZeroPadding>(variant_); }
  bool is_constant() const { return std::holds_alternative<ConstantPadding>(variant_); }
  bool is_variable() const { return std::holds_alternative<VariablePadding>(variant_); }

  /// "zero", "constant(0.1)" or "variable".
  std::string name() const;

  bool operator==(const PaddingStrategy&) const = default;

 private:
  explicit PaddingStrategy(Variant v) : variant_(v) {}
  Variant variant_;
};

/// Replaces the modulus of `u` with `measured` inside the image region while
/// keeping the phase, and treats the padding zone per `strategy`.
FieldGrid apply_constraint(const FieldGrid& u, const Image& measured, const OpticalSetup& setup,
                           const PaddingStrategy& strategy);

void apply_constraint_in_place(FieldGrid& u, const Image& measured, const OpticalSetup& setup,
                               const PaddingStrategy& strategy);

/// Start field of a retrieval. Zero and constant strategies embed `amplitude`
/// with their padding fill and multiply every sample by exp(i phi0), phi0
/// i.i.d. uniform on [0, 2 pi) drawn row-major from a generator seeded with
/// `seed`. The variable strategy starts from the real embed(amplitude, 0).
FieldGrid initial_field(const Image& amplitude, const OpticalSetup& setup, const PaddingStrategy& strategy,
                        std::uint64_t seed);

}  // namespace fresnelpr
