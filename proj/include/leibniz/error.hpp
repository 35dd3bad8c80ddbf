#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: shape or dimension mismatch, bad parameters, mixed fields.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A structure tensor that violates the right Leibniz identity on a basis triple.
class NotLeibnizError : public InputError {
 public:
  NotLeibnizError(std::size_t i, std::size_t j, std::size_t k)
      : InputError("right Leibniz identity fails on basis triple (" + std::to_string(i) + ", " +
                   std::to_string(j) + ", " + std::to_string(k) + ")"),
        triple_{i, j, k} {}

  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

/// Operation needs an exhaustive scan, which only exists over finite prime fields.
class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured resource budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace leibniz
