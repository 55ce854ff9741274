#pragma once

#include <span>

#include "fresnelpr/field_grid.hpp"

namespace fresnelpr {

/// Pearson product-moment correlation over all samples, two-pass
/// (mean first, then central moments). Result clamped to [-1, 1].
/// Throws ConfigError on size mismatch, empty input or zero variance.
double correlation(std::span<const double> a, std::span<const double> b);
double correlation(const Image& a, const Image& b);

/// 100 * max|a - b| / max|a|, with `a` the reference. Throws ConfigError on
/// size mismatch or an all-zero reference.
double max_error_percent(std::span<const double> a, std::span<const double> b);
double max_error_percent(const Image& a, const Image& b);

}  // namespace fresnelpr
