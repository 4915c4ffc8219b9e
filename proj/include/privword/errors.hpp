#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace privword {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument or malformed input (empty word, symbol outside the alphabet, N = 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would visit more than the configured number of words.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t budget)
      : Error(what + ": requires a budget of " + std::to_string(required) +
              " words, configured budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// 1 + (z - q) f(z) has no sign change on [1.7, q).
class NoDominantRoot : public Error {
 public:
  using Error::Error;
};

/// The denominator of R_Q is too close to zero (or not positive).
class DegenerateRQ : public Error {
 public:
  using Error::Error;
};

/// A count cache file or entry is inconsistent.
class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace privword
