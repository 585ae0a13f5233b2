#pragma once

#include <stdexcept>
#include <string>

namespace recurlab {

// Incompatible operand shapes. Message names the offending operand.
class dimension_error : public std::invalid_argument {
 public:
  explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

// Iterative solve failed to reach tolerance; carries the last residual.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double last_residual)
      : std::runtime_error(what), last_residual_(last_residual) {}
  double last_residual() const { return last_residual_; }

 private:
  double last_residual_;
};

// A declared mathematical contract was violated at runtime
// (negative stage cost, infeasible certificate, empty feasible set, ...).
class contract_error : public std::runtime_error {
 public:
  explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation left the declared domain (grid hull, state constraint set).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid experiment configuration. Collects every validation failure.
class config_error : public std::runtime_error {
 public:
  explicit config_error(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}
  explicit config_error(const std::string& issue)
      : config_error(std::vector<std::string>{issue}) {}
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string all = "invalid config:";
    for (const auto& s : issues) {
      all += "\n  - " + s;
    }
    return all;
  }
  std::vector<std::string> issues_;
};

}  // namespace recurlab
