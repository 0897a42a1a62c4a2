#pragma once

#include <stdexcept>
#include <string>

namespace fatpoints {

// Every failure raised by the library derives from Error; the CLI maps
// them onto exit code 2 (input) or 1 (verification).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDelta : public Error {
 public:
  InvalidDelta(char condition, std::size_t index, const std::string& what)
      : Error(what), condition_(condition), index_(index) {}

  /// 'a' or 'b' for the staircase / nonincreasing conditions, '0' for
  /// structural problems (empty input, negative entry).
  char condition() const noexcept { return condition_; }
  std::size_t index() const noexcept { return index_; }

 private:
  char condition_;
  std::size_t index_;
};

class NotNondecreasing : public Error {
 public:
  using Error::Error;
};

class ExceptionalT : public Error {
 public:
  using Error::Error;
};

class IdenticalLines : public Error {
 public:
  using Error::Error;
};

class GenerationExhausted : public Error {
 public:
  using Error::Error;
};

class InvalidScheme : public Error {
 public:
  using Error::Error;
};

class NotStrictlyDecreasing : public Error {
 public:
  using Error::Error;
};

class NotFullReduction : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class HypothesisViolation : public Error {
 public:
  HypothesisViolation(char hypothesis, const std::string& what)
      : Error(what), hypothesis_(hypothesis) {}

  /// Which merge hypothesis failed: 'a' through 'e', or 'i' for bad indices.
  char hypothesis() const noexcept { return hypothesis_; }

 private:
  char hypothesis_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fatpoints
