#pragma once

#include <stdexcept>
#include <string>

namespace pdecomp {

// Invalid user-supplied value (bad shape, bad config field, out-of-range knob).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A numerical process blew up (non-finite state, step size underflow, ...).
// Carries enough context to locate the failure site in logs.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or unreadable on-disk artifact.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad top-level configuration (missing field, wrong type, unknown enum value).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pdecomp
