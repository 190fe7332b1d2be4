#pragma once

#include <stdexcept>
#include <string>

namespace dfsbary {

/// Invalid sizes or mismatched array shapes.
class size_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coincident (or otherwise unusable) interpolation nodes.
class degeneracy_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation point outside the supported domain.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iteration failed to converge.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A time-stepped field produced NaN; carries the offending step index.
class divergence_error : public std::runtime_error {
 public:
  divergence_error(const std::string& what, int step)
      : std::runtime_error(what), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

}  // namespace dfsbary
