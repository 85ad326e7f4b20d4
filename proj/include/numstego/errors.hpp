#pragma once

#include <stdexcept>
#include <string>

namespace numstego {

// Every failure raised by the library derives from StegoError so callers
// (the CLI in particular) can map categories to exit codes.
class StegoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter (bit-depth, pixel value, plane index, payload size) is outside
// its allowed domain.
class RangeError : public StegoError {
 public:
  using StegoError::StegoError;
};

// Malformed input bytes (bad PGM magic, unparsable header).
class FormatError : public StegoError {
 public:
  using StegoError::StegoError;
};

class UnsupportedDepthError : public FormatError {
 public:
  using FormatError::FormatError;
};

// Input ended before the announced amount of data was available.
class TruncationError : public StegoError {
 public:
  using StegoError::StegoError;
};

class CapacityError : public StegoError {
 public:
  CapacityError(std::size_t required_bits, std::size_t available_bits)
      : StegoError("insufficient capacity: payload requires " +
                   std::to_string(required_bits) + " bits, cover offers " +
                   std::to_string(available_bits) + " bits"),
        required_(required_bits),
        available_(available_bits) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

// Two images that must share dimensions do not.
class ShapeError : public StegoError {
 public:
  using StegoError::StegoError;
};

// A documented precondition was violated by the caller.
class ContractError : public StegoError {
 public:
  using StegoError::StegoError;
};

class IoError : public StegoError {
 public:
  using StegoError::StegoError;
};

}  // namespace numstego
