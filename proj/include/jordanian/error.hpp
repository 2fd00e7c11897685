#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jordanian {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public Error {
 public:
  using Error::Error;
};

// A homogeneous sector exceeded the configured dimension cap.
class SectorTooLarge : public Error {
 public:
  SectorTooLarge(std::size_t required, std::size_t limit)
      : Error("sector dimension " + std::to_string(required) + " exceeds limit " +
              std::to_string(limit)),
        required_(required) {}
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

class InhomogeneousInput : public Error {
 public:
  using Error::Error;
};

}  // namespace jordanian
