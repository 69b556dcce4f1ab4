#pragma once

#include <stdexcept>
#include <string>

namespace parind {

/// Input outside the mathematical domain of an operation (singular matrix,
/// element not in the requested subgroup, zero where a unit is required).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An enumeration would exceed its configured size guard.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A coset measure cannot be expressed at the requested congruence level.
class LevelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Requested case lies outside what is implemented (e.g. non-split tori).
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed run configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace parind
