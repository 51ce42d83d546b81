// fisher_table.cpp
#include "jaco/fisher_table.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

namespace jaco {

std::array<FisherRow, 3> seed_rows() {
  return {{
      {1, 0, 1, 0, 0},
      {2, 1, 1, 1, 1},
      {3, 1, 2, 2, 2},
  }};
}

void FisherEngine::record(const FisherRow& row) {
  if (row.in_deg > std::numeric_limits<std::uint32_t>::max()) {
    throw OverflowError("in-degree column exceeds 32 bits");
  }
  in_deg_.push_back(static_cast<std::uint32_t>(row.in_deg));
  delta_pointer_ = row.delta;
  last_ = row;
}

void FisherEngine::seed() {
  if (seeded()) throw StateError("table already seeded");
  for (const FisherRow& row : seed_rows()) record(row);
}

const FisherRow& FisherEngine::last() const {
  if (!last_) throw StateError("table has not been seeded");
  return *last_;
}

FisherRow FisherEngine::next_row() {
  if (!seeded()) throw StateError("next_row called before seed");
  const FisherRow& prev = *last_;

  FisherRow row;
  row.i = prev.i + 1;
  // d^-(v_i) is the order of the Hope graph of J_{i-1}: (i-1) - Delta(J_{i-1}).
  row.in_deg = (row.i - 1) - prev.delta;
  row.out_deg_inf = row.i - row.in_deg;
  row.eps = checked_add(prev.eps, row.in_deg, "edge count");

  // Delta(J_i) = max{m : 2m - d^-(v_m) <= i}. 2m - d^-(v_m) is strictly
  // increasing, so the pointer moves by at most one per row.
  const Count candidate = delta_pointer_ + 1;
  const Count candidate_reach = 2 * candidate - in_deg_[candidate - 1];
  row.delta = candidate_reach <= row.i ? candidate : delta_pointer_;

  record(row);
  return row;
}

std::vector<FisherRow> fisher_table(std::uint64_t n) {
  if (n == 0) throw DomainError("vertices are indexed from 1");
  const auto seeds = seed_rows();
  std::vector<FisherRow> rows(seeds.begin(), seeds.begin() + std::min<std::uint64_t>(n, 3));
  if (n <= 3) return rows;

  rows.reserve(n);
  FisherEngine engine;
  engine.seed();
  while (engine.rows_emitted() < n) rows.push_back(engine.next_row());
  return rows;
}

Count edges_recursive(std::uint64_t n) {
  if (n == 0) throw DomainError("vertices are indexed from 1");
  if (n <= 3) return seed_rows()[n - 1].eps;
  FisherEngine engine;
  engine.seed();
  while (engine.rows_emitted() < n) engine.next_row();
  return engine.last().eps;
}

void write_fisher_csv(const std::vector<FisherRow>& rows, std::ostream& out) {
  out << "i,in_degree,out_degree,delta,edges\n";
  for (const FisherRow& r : rows) {
    out << r.i << ',' << r.in_deg << ',' << r.out_deg_inf << ',' << r.delta << ',' << r.eps << '\n';
  }
}

void write_fisher_pretty(const std::vector<FisherRow>& rows, std::ostream& out) {
  static constexpr std::array<const char*, 5> kHeaders = {"i", "in_degree", "out_degree", "delta",
                                                          "edges"};
  std::array<std::size_t, 5> width{};
  for (std::size_t c = 0; c < kHeaders.size(); ++c) width[c] = std::string(kHeaders[c]).size();
  for (const FisherRow& r : rows) {
    const std::array<Count, 5> cells = {r.i, r.in_deg, r.out_deg_inf, r.delta, r.eps};
    for (std::size_t c = 0; c < cells.size(); ++c) {
      width[c] = std::max(width[c], std::to_string(cells[c]).size());
    }
  }

  auto emit = [&](const auto& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c != 0) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << cells[c];
    }
    out << '\n';
  };
  emit(kHeaders);
  for (const FisherRow& r : rows) emit(std::array<Count, 5>{r.i, r.in_deg, r.out_deg_inf, r.delta, r.eps});
}

}  // namespace jaco
