// report.hpp
//
// Runs the four edge-count methods side by side and records agreement.
#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jaco/checked.hpp"

namespace jaco {

enum class Method { kOracle, kFisher, kZeckendorf, kReconstruction };

inline constexpr std::array<Method, 4> kAllMethods = {Method::kOracle, Method::kFisher,
                                                      Method::kZeckendorf,
                                                      Method::kReconstruction};

/// The brute-force oracle is quadratic; larger n need an explicit override.
inline constexpr Count kOracleBound = 100'000;

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// Edge count of J_n(1) by one method, no timing.
Count edges_by(Method m, Count n);

struct MethodResult {
  Method method = Method::kOracle;
  std::optional<Count> edges;  // empty when skipped
  std::chrono::nanoseconds elapsed{0};
  std::string skipped;  // reason, when edges is empty
};

struct EdgeCountReport {
  Count n = 0;
  std::vector<MethodResult> results;
  bool agree = true;

  const MethodResult* find(Method m) const;
};

/// Evaluates each requested method on n. The oracle is skipped above
/// kOracleBound unless `force`.
EdgeCountReport evaluate(Count n, std::span<const Method> methods, bool force = false);

/// True iff every non-skipped result is equal.
bool results_agree(std::span<const MethodResult> results);

struct Disagreement {
  Count n = 0;
  std::vector<MethodResult> results;
};

struct CrosscheckSummary {
  Count lo = 0;
  Count hi = 0;
  Count oracle_hi = 0;  // oracle ran for lo..oracle_hi; 0 when never
  std::optional<Disagreement> first_disagreement;

  bool ok() const noexcept { return !first_disagreement; }
};

/// Compares every method on each n in [lo, hi]. The oracle participates for
/// n <= oracle_max. Work is split across `threads` workers (0 = hardware
/// concurrency); the reported disagreement is always the smallest such n.
CrosscheckSummary crosscheck(Count lo, Count hi, Count oracle_max, unsigned threads = 0);

}  // namespace jaco
