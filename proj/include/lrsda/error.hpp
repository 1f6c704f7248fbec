#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrsda {

/// Invalid input parameters. The message names the violated constraint.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The co-array has no consecutive segment (U = 0) where one is required.
class DegenerateArrayError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// More sources requested than the smoothed co-array can identify.
class IdentifiabilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Fewer spectral peaks than requested sources.
class UnderResolvedError : public std::runtime_error {
public:
  UnderResolvedError(std::size_t found, std::size_t wanted)
      : std::runtime_error("found " + std::to_string(found) + " peaks, wanted " +
                           std::to_string(wanted)),
        found_(found), wanted_(wanted) {}

  std::size_t found() const noexcept { return found_; }
  std::size_t wanted() const noexcept { return wanted_; }

private:
  std::size_t found_;
  std::size_t wanted_;
};

}  // namespace lrsda
