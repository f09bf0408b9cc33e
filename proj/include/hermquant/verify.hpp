// Identity sweeps behind `hermquant verify`.  Each suite returns one
// IdentityCheck per identity with its worst residual and witness.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hermquant/report.hpp"

namespace hermq {

enum class Suite { All, Basis, Ladder, Nlpb, Quantize, Spectral, Physics };

std::optional<Suite> parse_suite(const std::string& name);
const char* suite_name(Suite s);

struct VerifyOptions {
  double tol_quadrature = 1e-10;
  double tol_exact = 0.0;
  double tol_reproduction = 1e-7;
  std::uint64_t seed = 20240917;
  unsigned threads = 1;  // suites of `all` run concurrently up to this many
};

Report verify_basis(const VerifyOptions& o);
Report verify_ladder(const VerifyOptions& o);
Report verify_nlpb(const VerifyOptions& o);
Report verify_quantize(const VerifyOptions& o);
Report verify_spectral(const VerifyOptions& o);
Report verify_physics(const VerifyOptions& o);

Report run_suite(Suite s, const VerifyOptions& o);

}  // namespace hermq
