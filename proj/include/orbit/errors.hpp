#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArg : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidArg {
 public:
  using InvalidArg::InvalidArg;
};

class MissingImage : public Error {
 public:
  using Error::Error;
};

class NoUnitCoordinate : public Error {
 public:
  using Error::Error;
};

// Raised when a conjugation table does not describe an automorphism of the
// kernel free group (typically a transcription error in a relation).
class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

class WordSizeExceeded : public Error {
 public:
  WordSizeExceeded(std::size_t length, std::size_t cap)
      : Error("intermediate word of length " + std::to_string(length) +
              " exceeds cap " + std::to_string(cap)),
        length_(length),
        cap_(cap) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t length_;
  std::size_t cap_;
};

}  // namespace orbit
