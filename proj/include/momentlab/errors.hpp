#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace momentlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A canonical moment (or a q = 1 - p divisor) is within the interior
/// tolerance of 0 or 1. `index` is 1-based, matching p_1, p_2, ...
class BoundaryError : public Error {
 public:
  BoundaryError(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Moment data that is not strictly inside the moment space. `index` is the
/// first (1-based) coordinate at which interiority fails.
class NonInteriorError : public Error {
 public:
  NonInteriorError(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace momentlab
