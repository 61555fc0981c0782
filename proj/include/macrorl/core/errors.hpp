#pragma once

#include <stdexcept>
#include <string>

namespace macrorl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutputIndexError : public Error {
 public:
  using Error::Error;
};

// Raised when a disabled macro slot is looked up. Selection is supposed to
// mask those slots, so seeing this means the masking upstream is broken.
class DisabledSlotError : public Error {
 public:
  using Error::Error;
};

class UnderfilledBufferError : public Error {
 public:
  using Error::Error;
};

class EnvironmentError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace macrorl
