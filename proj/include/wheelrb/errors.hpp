#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wheelrb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's parameter domain (d < 3, bad chords, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Unknown vertex, edge or color.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Pattern boundary arc does not fit on the host rim (t > d).
class InfeasibleArcError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// A counting lemma's hypotheses do not hold for the requested instance. The
// check is skipped, never counted as a pass or a failure.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A construction failed its own rainbow-freeness check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::size_t byte_offset, std::string pointer = {})
      : Error(what), byte_offset_(byte_offset), pointer_(std::move(pointer)) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::size_t byte_offset_;
  std::string pointer_;
};

}  // namespace wheelrb
