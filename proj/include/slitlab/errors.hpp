#pragma once

#include <stdexcept>
#include <string>

namespace slitlab {

/// Argument or evaluation point outside the model's domain of validity.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation ran into a node of the wave field (|psi|^2 below the floor).
class NodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature could not meet its error target within budget.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sampling grid too coarse for the requested analysis.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration rejected; carries the offending field path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field_path, const std::string& reason)
      : std::runtime_error(field_path + ": " + reason),
        field_path_(std::move(field_path)) {}

  const std::string& field_path() const noexcept { return field_path_; }

 private:
  std::string field_path_;
};

}  // namespace slitlab
