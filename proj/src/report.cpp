// report.cpp
#include "jaco/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "jaco/fisher_table.hpp"
#include "jaco/graph_oracle.hpp"
#include "jaco/reconstruction.hpp"
#include "jaco/zeckendorf.hpp"

namespace jaco {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kOracle:
      return "oracle";
    case Method::kFisher:
      return "fisher";
    case Method::kZeckendorf:
      return "zeckendorf";
    case Method::kReconstruction:
      return "reconstruction";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

Count edges_by(Method m, Count n) {
  switch (m) {
    case Method::kOracle:
      return build_jaco(n).edge_count();
    case Method::kFisher:
      return edges_recursive(n);
    case Method::kZeckendorf:
      return edges_zeckendorf(n);
    case Method::kReconstruction:
      return edges_reconstruction(n);
  }
  throw DomainError("unknown method");
}

const MethodResult* EdgeCountReport::find(Method m) const {
  for (const MethodResult& r : results) {
    if (r.method == m) return &r;
  }
  return nullptr;
}

bool results_agree(std::span<const MethodResult> results) {
  std::optional<Count> seen;
  for (const MethodResult& r : results) {
    if (!r.edges) continue;
    if (seen && *seen != *r.edges) return false;
    seen = r.edges;
  }
  return true;
}

EdgeCountReport evaluate(Count n, std::span<const Method> methods, bool force) {
  if (n == 0) throw DomainError("vertices are indexed from 1");
  EdgeCountReport report;
  report.n = n;
  for (Method m : methods) {
    MethodResult r;
    r.method = m;
    if (m == Method::kOracle && n > kOracleBound && !force) {
      r.skipped = "oracle is quadratic; n above " + std::to_string(kOracleBound) + " needs --force";
    } else {
      const auto t0 = std::chrono::steady_clock::now();
      r.edges = edges_by(m, n);
      r.elapsed = std::chrono::steady_clock::now() - t0;
    }
    report.results.push_back(std::move(r));
  }
  report.agree = results_agree(report.results);
  return report;
}

CrosscheckSummary crosscheck(Count lo, Count hi, Count oracle_max, unsigned threads) {
  if (lo == 0 || lo > hi) throw DomainError("crosscheck needs 1 <= lo <= hi");
  CrosscheckSummary summary;
  summary.lo = lo;
  summary.hi = hi;
  summary.oracle_hi = oracle_max >= lo ? std::min(oracle_max, hi) : 0;

  const std::vector<FisherRow> table = fisher_table(hi);
  const Count span = hi - lo + 1;
  std::vector<std::array<std::optional<Count>, 4>> values(span);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const Count block = std::max<Count>(16, span / (Count{threads} * 8));
  std::atomic<Count> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (Count start = next.fetch_add(block); start < span; start = next.fetch_add(block)) {
      const Count first = lo + start;
      const Count last = std::min(hi, first + block - 1);
      // Zeckendorf method evaluated as a running prefix of the same sum.
      Count out_sum = out_degree_sum(first);
      for (Count n = first; n <= last; ++n) {
        if (n > first) out_sum = checked_add(out_sum, bettina_out_degree(n), "out-degree sum");
        auto& row = values[n - lo];
        if (n <= summary.oracle_hi) row[0] = build_jaco(n).edge_count();
        row[1] = table[n - 1].eps;
        row[2] = n == 1 ? 0 : checked_sub(triangular(n) - 1, out_sum, "edge count");
        row[3] = edges_reconstruction(n);
      }
    }
  };
  auto worker = [&] {
    try {
      work();
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(span);
    }
  };

  {
    std::vector<std::jthread> pool;
    const Count useful = (span + block - 1) / block;
    const auto count = static_cast<unsigned>(std::min<Count>(threads, useful));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (Count n = lo; n <= hi; ++n) {
    std::vector<MethodResult> results;
    for (std::size_t k = 0; k < kAllMethods.size(); ++k) {
      MethodResult r;
      r.method = kAllMethods[k];
      r.edges = values[n - lo][k];
      if (!r.edges) r.skipped = "above oracle limit";
      results.push_back(std::move(r));
    }
    if (!results_agree(results)) {
      summary.first_disagreement = Disagreement{n, std::move(results)};
      break;
    }
  }
  return summary;
}

}  // namespace jaco
