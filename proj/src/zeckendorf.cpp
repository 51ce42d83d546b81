// zeckendorf.cpp
#include "jaco/zeckendorf.hpp"

#include <array>
#include <sstream>

namespace jaco {
namespace {

constexpr std::array<Count, kMaxFibIndex + 1> make_fib_table() {
  std::array<Count, kMaxFibIndex + 1> t{};
  t[1] = 1;
  t[2] = 1;
  for (unsigned k = 3; k <= kMaxFibIndex; ++k) t[k] = t[k - 1] + t[k - 2];
  return t;
}

constexpr auto kFib = make_fib_table();
static_assert(kFib[7] == 13 && kFib[9] == 34);
static_assert(kFib[kMaxFibIndex] == 12200160415121876738ULL);

// Largest k >= 2 with fib(k) <= n, for n >= 1.
unsigned largest_index_at_most(Count n) {
  unsigned k = 2;
  while (k < kMaxFibIndex && kFib[k + 1] <= n) ++k;
  return k;
}

// Walks the greedy decomposition of n, calling fn(k) per index, largest first.
template <class Fn>
void for_each_zeckendorf_index(Count n, Fn&& fn) {
  unsigned k = largest_index_at_most(n);
  while (n > 0) {
    while (kFib[k] > n) --k;
    fn(k);
    n -= kFib[k];
    k -= 2;  // the remainder is < fib(k - 1)
  }
}

}  // namespace

Count fib(unsigned k) {
  if (k == 0) throw DomainError("Fibonacci indices start at 1");
  if (k > kMaxFibIndex) throw OverflowError("fib(" + std::to_string(k) + ") exceeds 64 bits");
  return kFib[k];
}

Zeckendorf::Zeckendorf(std::vector<unsigned> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw DomainError("Zeckendorf representation needs at least one term");
  for (std::size_t t = 0; t < indices_.size(); ++t) {
    const unsigned k = indices_[t];
    if (k < 2 || k > kMaxFibIndex) {
      throw DomainError("Zeckendorf index " + std::to_string(k) + " out of range");
    }
    if (t > 0 && indices_[t - 1] < k + 2) {
      throw DomainError("Zeckendorf indices must be strictly decreasing and non-consecutive");
    }
  }
}

Zeckendorf Zeckendorf::decompose(Count n) {
  if (n == 0) throw DomainError("only positive integers have a Zeckendorf representation");
  std::vector<unsigned> indices;
  for_each_zeckendorf_index(n, [&indices](unsigned k) { indices.push_back(k); });
  return Zeckendorf(std::move(indices), Trusted{});
}

Count Zeckendorf::value() const {
  Count sum = 0;
  for (unsigned k : indices_) sum = checked_add(sum, kFib[k], "Zeckendorf value");
  return sum;
}

std::string to_string(const Zeckendorf& z) {
  std::ostringstream out;
  out << z.value() << " =";
  bool first = true;
  for (unsigned k : z.indices()) {
    out << (first ? " " : " + ") << "f_" << k;
    first = false;
  }
  return out.str();
}

Count bettina_out_degree(Count n) {
  if (n == 0) throw DomainError("vertices are indexed from 1");
  Count sum = 0;
  for_each_zeckendorf_index(n, [&sum](unsigned k) { sum += kFib[k - 1]; });
  return sum;
}

Count in_degree_bettina(Count n) { return n - bettina_out_degree(n); }

Count out_degree_sum(Count n) {
  if (n == 0) throw DomainError("vertices are indexed from 1");
  Count sum = 0;
  for (Count i = 2; i <= n; ++i) sum = checked_add(sum, bettina_out_degree(i), "out-degree sum");
  return sum;
}

Count edges_zeckendorf(Count n) {
  if (n == 0) throw DomainError("vertices are indexed from 1");
  if (n == 1) return 0;
  return checked_sub(triangular(n) - 1, out_degree_sum(n), "edge count");
}

}  // namespace jaco
