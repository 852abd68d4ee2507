#pragma once

#include <stdexcept>
#include <string>

namespace carryless {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (numbers, polynomials, b-files).
class parse_error : public error {
 public:
  using error::error;
};

/// Caller violated an API precondition (e.g. mixing moduli).
class usage_error : public error {
 public:
  using error::error;
};

/// Mathematically undefined request, such as factoring zero.
class domain_error : public error {
 public:
  using error::error;
};

/// Reference data could not be obtained (offline, HTTP failure, ...).
class unavailable_error : public error {
 public:
  using error::error;
};

}  // namespace carryless
