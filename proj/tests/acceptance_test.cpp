// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
// Expected values for the table and the worked examples are transcribed by
// hand; every sweep compares independent methods against each other.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "jaco/fisher_table.hpp"
#include "jaco/graph_oracle.hpp"
#include "jaco/reconstruction.hpp"
#include "jaco/zeckendorf.hpp"

namespace {

using namespace jaco;
using Clock = std::chrono::steady_clock;

// Collects the first failure message; later failures are counted only.
class Check {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what();
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    return first_ + (failures_ > 1 ? " (+" + std::to_string(failures_ - 1) + " more)" : "");
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

template <class A, class B>
std::string mismatch(const std::string& label, const A& got, const B& want) {
  std::ostringstream s;
  s << label << ": got " << got << ", want " << want;
  return s.str();
}

struct Criterion {
  int id;
  std::string name;
  double budget_ms;  // 0 = no runtime bound
  std::function<void(Check&)> body;
};

// The degree table as printed: i, d-, d+, Delta, epsilon.
constexpr Count kPublishedTable[35][5] = {
    {1, 0, 1, 0, 0},       {2, 1, 1, 1, 1},       {3, 1, 2, 2, 2},       {4, 1, 3, 2, 3},
    {5, 2, 3, 3, 5},       {6, 2, 4, 3, 7},       {7, 3, 4, 4, 10},      {8, 3, 5, 5, 13},
    {9, 3, 6, 5, 16},      {10, 4, 6, 6, 20},     {11, 4, 7, 7, 24},     {12, 4, 8, 7, 28},
    {13, 5, 8, 8, 33},     {14, 5, 9, 8, 38},     {15, 6, 9, 9, 44},     {16, 6, 10, 10, 50},
    {17, 6, 11, 10, 56},   {18, 7, 11, 11, 63},   {19, 7, 12, 11, 70},   {20, 8, 12, 12, 78},
    {21, 8, 13, 13, 86},   {22, 8, 14, 13, 94},   {23, 9, 14, 14, 103},  {24, 9, 15, 15, 112},
    {25, 9, 16, 15, 121},  {26, 10, 16, 16, 131}, {27, 10, 17, 16, 141}, {28, 11, 17, 17, 152},
    {29, 11, 18, 18, 163}, {30, 11, 19, 18, 174}, {31, 12, 19, 19, 186}, {32, 12, 20, 20, 198},
    {33, 12, 21, 20, 210}, {34, 13, 21, 21, 223}, {35, 13, 22, 21, 236},
};

void golden_table(Check& c) {
  const auto rows = fisher_table(35);
  c.expect(rows.size() == 35, [&] { return mismatch("row count", rows.size(), 35); });
  for (std::size_t k = 0; k < rows.size() && k < 35; ++k) {
    const auto& p = kPublishedTable[k];
    const FisherRow want{p[0], p[1], p[2], p[3], p[4]};
    c.expect(rows[k] == want, [&] {
      std::ostringstream s;
      s << "row " << p[0] << " = (" << rows[k].i << ',' << rows[k].in_deg << ','
        << rows[k].out_deg_inf << ',' << rows[k].delta << ',' << rows[k].eps << ")";
      return s.str();
    });
  }
}

void worked_examples(Check& c) {
  struct Case {
    Count n;
    Count eps;
  };
  for (const Case k : {Case{15, 44}, Case{31, 186}, Case{17, 56}, Case{18, 63}}) {
    const std::string tag = "eps(J_" + std::to_string(k.n) + ")";
    const Count oracle = build_jaco(k.n).edge_count();
    const Count fisher = edges_recursive(k.n);
    const Count zeck = edges_zeckendorf(k.n);
    const Count recon = edges_reconstruction(k.n);
    c.expect(oracle == k.eps, [&] { return mismatch(tag + " oracle", oracle, k.eps); });
    c.expect(fisher == k.eps, [&] { return mismatch(tag + " fisher", fisher, k.eps); });
    c.expect(zeck == k.eps, [&] { return mismatch(tag + " zeckendorf", zeck, k.eps); });
    c.expect(recon == k.eps, [&] { return mismatch(tag + " reconstruction", recon, k.eps); });
  }
  const Count out_sum = out_degree_sum(15);
  c.expect(out_sum == 75, [&] { return mismatch("sum d+ 2..15", out_sum, 75); });
  const Count bridging = bridging_terms(19).total();
  c.expect(bridging == 50, [&] { return mismatch("bridging sum at m=19", bridging, 50); });
  const Count via = edges_prop22(18, 11) - bettina_out_degree(11);
  c.expect(via == 56, [&] { return mismatch("eps(J_18) - d+(v_11)", via, 56); });
}

void oracle_sweep(Check& c) {
  constexpr Count kN = 2000;
  const auto table = fisher_table(kN);
  for (Count n = 1; n <= kN; ++n) {
    const JacoGraph g = build_jaco(n);
    const Count oracle = g.edge_count();
    const Count fisher = edges_recursive(n);
    const Count zeck = edges_zeckendorf(n);
    const Count recon = edges_reconstruction(n);
    const std::string tag = "n=" + std::to_string(n);
    c.expect(fisher == oracle, [&] { return mismatch(tag + " fisher", fisher, oracle); });
    c.expect(zeck == oracle, [&] { return mismatch(tag + " zeckendorf", zeck, oracle); });
    c.expect(recon == oracle, [&] { return mismatch(tag + " reconstruction", recon, oracle); });

    for (const DegreeRecord& d : g.degree_profile()) {
      const FisherRow& row = table[d.index - 1];
      const std::string at = tag + " v" + std::to_string(d.index);
      c.expect(d.in_degree == row.in_deg,
               [&] { return mismatch(at + " d- vs table", d.in_degree, row.in_deg); });
      c.expect(d.out_degree_infinite == row.out_deg_inf, [&] {
        return mismatch(at + " d+ vs table", d.out_degree_infinite, row.out_deg_inf);
      });
    }
    const Count out_n = g.degree(n).out_degree_infinite;
    const Count bettina = bettina_out_degree(n);
    c.expect(out_n == bettina, [&] { return mismatch(tag + " d+ vs shift rule", out_n, bettina); });
  }
}

void scale_equivalence(Check& c) {
  for (const Count n : {Count{10'000}, Count{100'000}, Count{1'000'000}}) {
    const Count fisher = edges_recursive(n);
    const Count zeck = edges_zeckendorf(n);
    const Count recon = edges_reconstruction(n);
    const std::string tag = "n=" + std::to_string(n);
    c.expect(fisher == zeck, [&] { return mismatch(tag + " fisher vs zeckendorf", fisher, zeck); });
    c.expect(zeck == recon,
             [&] { return mismatch(tag + " zeckendorf vs reconstruction", zeck, recon); });
  }
}

void zeckendorf_properties(Check& c) {
  for (Count n = 1; n <= 1'000'000; ++n) {
    const Zeckendorf z = zeckendorf_decompose(n);
    const Count back = z.value();
    c.expect(back == n, [&] { return mismatch("round trip", back, n); });
    const auto idx = z.indices();
    for (std::size_t k = 1; k < idx.size(); ++k) {
      c.expect(idx[k - 1] >= idx[k] + 2,
               [&] { return "consecutive indices in decomposition of " + std::to_string(n); });
    }
  }
  for (unsigned k = 2; fib(k) <= 1'000'000; ++k) {
    const Count got = bettina_out_degree(fib(k));
    c.expect(got == fib(k - 1),
             [&] { return mismatch("d+(f_" + std::to_string(k) + ")", got, fib(k - 1)); });
  }
}

void expressibility(Check& c) {
  for (Count n = 2; n <= 100'000; ++n) {
    const bool ok = direct_anchor(n).has_value() || direct_anchor(n + 1).has_value();
    c.expect(ok, [&] {
      return "COUNTEREXAMPLE: neither " + std::to_string(n) + " nor " + std::to_string(n + 1) +
             " has a direct anchor";
    });
  }
}

void structural_invariants(Check& c) {
  constexpr Count kN = 2000;
  const JacoGraph big = build_jaco(kN + 1);
  for (Count i = 2; i <= kN + 1; ++i) {
    const Count step = big.in_degree(i) - big.in_degree(i - 1);
    c.expect(step <= 1 && big.in_degree(i) >= big.in_degree(i - 1),
             [&] { return "d- step at " + std::to_string(i); });
  }
  for (Count n = 1; n <= kN; ++n) {
    const JacoGraph g = build_jaco(n);
    const std::string tag = "n=" + std::to_string(n);
    if (n >= 2) {
      Count best = 0;
      for (Count m = 1; m <= n; ++m) {
        if (2 * m - g.in_degree(m) <= n) best = m;
      }
      const Jaconian j = g.jaconian();
      c.expect(j.delta == best, [&] { return mismatch(tag + " delta", j.delta, best); });
      c.expect(j.prime_index == best,
               [&] { return mismatch(tag + " prime Jaconian", j.prime_index, best); });
    }
    if (n >= 2) {
      const Count hope = g.hope_view().vertex_count;
      const Count next_in = big.in_degree(n + 1);
      c.expect(hope == next_in, [&] { return mismatch(tag + " Hope order", hope, next_in); });
      const Anchor a = expressible_anchor(n);
      const Count sum = prop22_degree_sum(*a.m);
      c.expect(sum % 2 == 0, [&] { return tag + " odd degree sum " + std::to_string(sum); });
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden table rows 1-35", 1.0, golden_table},
      {2, "worked examples 15/31/17/18, sums 75 and 50", 1.0, worked_examples},
      {3, "oracle equivalence sweep n<=2000", 30'000.0, oracle_sweep},
      {4, "scale equivalence n=1e4,1e5,1e6", 10'000.0, scale_equivalence},
      {5, "Zeckendorf properties n<=1e6", 10'000.0, zeckendorf_properties},
      {6, "expressibility 2<=n<=1e5", 5'000.0, expressibility},
      {7, "structural invariants n<=2000", 0.0, structural_invariants},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto t0 = Clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (cr.budget_ms > 0 && ms > cr.budget_ms) {
      check.expect(false, [&] {
        return "runtime " + std::to_string(ms) + " ms over budget " + std::to_string(cr.budget_ms);
      });
    }
    std::printf("[%s] AC%d %-46s %10.3f ms%s%s\n", check.ok() ? "PASS" : "FAIL", cr.id,
                cr.name.c_str(), ms, check.ok() ? "" : "  ", check.ok() ? "" : check.summary().c_str());
    failed += check.ok() ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
