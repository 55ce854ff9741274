#include "fresnelpr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fresnelpr/errors.hpp"

namespace fresnelpr {
namespace {

void check_sizes(std::span<const double> a, std::span<const double> b, const char* what) {
  if (a.size() != b.size()) {
    throw ConfigError(std::string(what) + ": size mismatch " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  }
  if (a.empty()) throw ConfigError(std::string(what) + ": empty input");
}

double mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

double correlation(std::span<const double> a, std::span<const double> b) {
  check_sizes(a, b, "correlation");
  const double ma = mean(a);
  const double mb = mean(b);
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    cov += da * db;
    va += da * da;
    vb += db * db;
  }
  if (!(va > 0.0) || !(vb > 0.0)) throw ConfigError("correlation undefined: zero variance");
  const double r = cov / std::sqrt(va * vb);
  return std::clamp(r, -1.0, 1.0);
}

double correlation(const Image& a, const Image& b) { return correlation(a.values(), b.values()); }

double max_error_percent(std::span<const double> a, std::span<const double> b) {
  check_sizes(a, b, "max_error_percent");
  double ref = 0.0, err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ref = std::max(ref, std::abs(a[i]));
    err = std::max(err, std::abs(a[i] - b[i]));
  }
  if (!(ref > 0.0)) throw ConfigError("max_error_percent: reference is all zero");
  return 100.0 * err / ref;
}

double max_error_percent(const Image& a, const Image& b) { return max_error_percent(a.values(), b.values()); }

}  // namespace fresnelpr
