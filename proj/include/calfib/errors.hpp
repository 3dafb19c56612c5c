#pragma once

#include <stdexcept>
#include <string>

namespace calfib {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

/// Evaluation requested outside a chart's domain (or a stencil leaves it).
struct DomainError : Error {
  using Error::Error;
};

/// Rank deficiency detected in a Jacobian; callers interpret this as
/// proximity to the non-regular set of the torus action.
struct SingularJacobian : Error {
  SingularJacobian(const std::string& what, double smallest, double largest)
      : Error(what), smallest_sv(smallest), largest_sv(largest) {}
  double smallest_sv = 0.0;
  double largest_sv = 0.0;
};

struct MaxIterations : Error {
  MaxIterations(const std::string& what, double residual) : Error(what), final_residual(residual) {}
  double final_residual = 0.0;
};

struct PreconditionError : Error {
  using Error::Error;
};

/// Sheet clustering could not be decided unambiguously; reported, not guessed.
struct ClusteringAmbiguity : Error {
  using Error::Error;
};

}  // namespace calfib
