// Verification records shared by the identity checks and the CLI.
#pragma once

#include <string>
#include <vector>

#include "hermquant/exact.hpp"

namespace hermq {

struct IdentityCheck {
  std::string suite;
  std::string identity;     // short name of the identity
  std::string relation;     // what was compared
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string witness;      // parameters of the worst (or first failing) case
};

struct Report {
  std::vector<IdentityCheck> checks;

  bool all_pass() const;
  double max_residual() const;
  void append(const Report& other);
  const IdentityCheck* first_failure() const;
};

/// Accumulates residuals of one identity over a parameter sweep.
class CheckBuilder {
 public:
  CheckBuilder(std::string suite, std::string identity, std::string relation, double tolerance);

  /// Record one residual; keeps the worst one and its witness.
  void observe(double residual, const std::string& witness);
  /// Exact comparison: residual is 0 iff the difference is exactly zero.
  void observe_exact(const Surd& difference, const std::string& witness);
  /// A boolean property; a failure counts as residual +inf.
  void observe_true(bool ok, const std::string& witness);

  IdentityCheck finish() const;

 private:
  IdentityCheck check_;
  bool any_ = false;
};

}  // namespace hermq
