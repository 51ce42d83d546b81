// fisher_table.hpp
//
// Incremental row engine for the degree table of J_n(1). Row i carries
// d^-(v_i), the infinite-graph d^+(v_i), Delta(J_i(1)) and epsilon(J_i(1)); each
// row is derived from the previous one in amortised O(1).
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "jaco/checked.hpp"

namespace jaco {

struct FisherRow {
  std::uint64_t i = 0;
  Count in_deg = 0;
  Count out_deg_inf = 0;
  Count delta = 0;
  Count eps = 0;

  friend bool operator==(const FisherRow&, const FisherRow&) = default;
};

/// Rows 1, 2 and 3, which the recurrence cannot produce on its own.
std::array<FisherRow, 3> seed_rows();

/// Single-writer iterator over the table.
///
/// The Delta update needs d^- of the row just past the current Delta, so the
/// engine keeps the d^- column of every emitted row (4 bytes per row).
class FisherEngine {
 public:
  FisherEngine() = default;

  /// Emits rows 1..3. Must be called exactly once before next_row().
  void seed();
  bool seeded() const noexcept { return last_.has_value(); }

  /// Computes and records row i = rows_emitted() + 1 (i >= 4).
  FisherRow next_row();

  const FisherRow& last() const;
  std::uint64_t rows_emitted() const noexcept { return in_deg_.size(); }
  /// Current candidate m for the Delta update; equals last().delta.
  Count delta_pointer() const noexcept { return delta_pointer_; }

 private:
  void record(const FisherRow& row);

  std::vector<std::uint32_t> in_deg_;
  std::optional<FisherRow> last_;
  Count delta_pointer_ = 0;
};

/// Rows 1..n.
std::vector<FisherRow> fisher_table(std::uint64_t n);

/// epsilon(J_n(1)) via eps_n = eps_{n-1} + d^-(v_n), eps_1 = 0.
Count edges_recursive(std::uint64_t n);

/// "i,in_degree,out_degree,delta,edges" header then one line per row.
void write_fisher_csv(const std::vector<FisherRow>& rows, std::ostream& out);
/// Right-aligned columns under the same headers.
void write_fisher_pretty(const std::vector<FisherRow>& rows, std::ostream& out);

}  // namespace jaco
