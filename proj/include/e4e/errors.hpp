#pragma once

#include <stdexcept>
#include <string>

namespace e4e {

// Thrown when a numeric computation produces a non-finite value.
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a sample matrix has lower rank than the request needs.
struct rank_error : std::runtime_error {
  explicit rank_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Configuration file / experiment spec problems. CLI maps this to exit code 2.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Training divergence or unmet training gates. CLI maps this to exit code 3.
struct training_error : std::runtime_error {
  explicit training_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace e4e
