// zeckendorf.hpp
//
// Fibonacci numbers (f_1 = f_2 = 1), Zeckendorf decomposition, and the
// index-shift rule giving the infinite-graph out-degree of v_n.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jaco/checked.hpp"

namespace jaco {

/// Largest k with fib(k) representable in 64 bits.
inline constexpr unsigned kMaxFibIndex = 93;

/// k-th Fibonacci number. Throws DomainError for k = 0 and OverflowError
/// past kMaxFibIndex.
Count fib(unsigned k);

/// Sum of non-consecutive Fibonacci numbers, stored as strictly decreasing
/// indices, each >= 2.
class Zeckendorf {
 public:
  /// Validates the index list; throws DomainError when it breaks the
  /// ordering, gap, or minimum-index rules.
  explicit Zeckendorf(std::vector<unsigned> indices);

  /// Greedy largest-first decomposition of n >= 1.
  static Zeckendorf decompose(Count n);

  std::span<const unsigned> indices() const noexcept { return indices_; }
  Count value() const;

  friend bool operator==(const Zeckendorf&, const Zeckendorf&) = default;

 private:
  struct Trusted {};
  Zeckendorf(std::vector<unsigned> indices, Trusted) : indices_(std::move(indices)) {}

  std::vector<unsigned> indices_;
};

inline Zeckendorf zeckendorf_decompose(Count n) { return Zeckendorf::decompose(n); }
inline Count zeckendorf_value(const Zeckendorf& z) { return z.value(); }

/// "12 = f_6 + f_4 + f_2"
std::string to_string(const Zeckendorf& z);

/// d^+(v_n) in the infinite graph: every Zeckendorf index of n shifted down
/// by one, i.e. sum of fib(k - 1).
Count bettina_out_degree(Count n);

/// d^-(v_n) = n - d^+(v_n).
Count in_degree_bettina(Count n);

/// Sum of bettina_out_degree(i) for i = 2..n.
Count out_degree_sum(Count n);

/// epsilon(J_n(1)) = n(n+1)/2 - 1 - sum_{i=2..n} d^+(v_i); 0 for n = 1.
Count edges_zeckendorf(Count n);

}  // namespace jaco
