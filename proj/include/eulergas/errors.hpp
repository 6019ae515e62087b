#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulergas {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// A series or product would need more terms (or bits) than the policy allows.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, std::size_t attempted_terms)
      : Error(what), attempted_terms_(attempted_terms) {}
  const char* kind() const noexcept override { return "precision"; }
  std::size_t attempted_terms() const noexcept { return attempted_terms_; }

 private:
  std::size_t attempted_terms_;
};

/// A truncated series failed to settle on an integer.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::size_t terms, double residual,
                   std::string convention)
      : Error(what), terms_(terms), residual_(residual),
        convention_(std::move(convention)) {}
  const char* kind() const noexcept override { return "convergence"; }
  std::size_t terms() const noexcept { return terms_; }
  double residual() const noexcept { return residual_; }
  const std::string& convention() const noexcept { return convention_; }

 private:
  std::size_t terms_;
  double residual_;
  std::string convention_;
};

}  // namespace eulergas
