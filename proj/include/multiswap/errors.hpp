#pragma once

#include <stdexcept>
#include <string>

namespace multiswap {

// Invalid user configuration: bad flag values, shot counts, qubit caps.
// The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or inconsistent input data: state files, counts files, layouts.
// The CLI maps this to exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace multiswap
