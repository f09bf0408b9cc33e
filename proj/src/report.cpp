#include "hermquant/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hermq {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

double Report::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.max_residual);
  return m;
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

const IdentityCheck* Report::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

CheckBuilder::CheckBuilder(std::string suite, std::string identity, std::string relation, double tolerance) {
  check_.suite = std::move(suite);
  check_.identity = std::move(identity);
  check_.relation = std::move(relation);
  check_.tolerance = tolerance;
}

void CheckBuilder::observe(double residual, const std::string& witness) {
  const bool bad = !(residual <= check_.tolerance);
  // Keep the first failing witness; otherwise track the worst residual.
  if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
  if (!any_ || (check_.pass && (bad || residual > check_.max_residual))) {
    check_.witness = witness;
  }
  check_.max_residual = any_ ? std::max(check_.max_residual, residual) : residual;
  if (bad) check_.pass = false;
  any_ = true;
}

void CheckBuilder::observe_exact(const Surd& difference, const std::string& witness) {
  double r = 0.0;
  if (!difference.is_zero()) r = std::max(abs_value(difference), std::numeric_limits<double>::denorm_min());
  observe(r, witness);
}

void CheckBuilder::observe_true(bool ok, const std::string& witness) {
  observe(ok ? 0.0 : std::numeric_limits<double>::infinity(), witness);
}

IdentityCheck CheckBuilder::finish() const { return check_; }

}  // namespace hermq
