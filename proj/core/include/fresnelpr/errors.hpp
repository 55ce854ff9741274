#pragma once

#include <stdexcept>
#include <string>

namespace fresnelpr {

/// Invalid inputs: mismatched sizes, out-of-range parameters, bad files.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A retrieval produced non-finite samples.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fresnelpr
