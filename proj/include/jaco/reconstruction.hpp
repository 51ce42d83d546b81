// reconstruction.hpp
//
// Edge count of J_n(1) from a degree-sum reconstruction around the Jaconian
// vertex v_m, where n = m + d^+(v_m). Sizes that admit no such m are reached
// from n + 1 by removing the in-arcs of v_{n+1}.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jaco/checked.hpp"

namespace jaco {

/// Anchor vertex for a target size.
///
/// Direct anchors satisfy m + d^+(v_m) = n and m = d^+(v_n). Successor anchors
/// (via_successor) satisfy the same relations for n + 1.
struct Anchor {
  Count n = 0;
  std::optional<Count> m;
  bool via_successor = false;

  /// The size the anchor actually reconstructs.
  Count anchored_size() const noexcept { return via_successor ? n + 1 : n; }
};

struct BridgingTerm {
  Count offset = 0;
  Count value = 0;  // d^+(v_{m - offset}) - offset, always >= 1
};

/// Arcs contributed by v_m, v_{m-1}, ... into the tail beyond v_m.
struct BridgingSum {
  std::vector<BridgingTerm> terms;
  Count j_max = 0;

  Count total() const;
};

/// m + d^+(v_m) == n with m = d^+(v_n), or nullopt.
std::optional<Count> direct_anchor(Count n);

/// Direct anchor for n if one exists, else the direct anchor for n + 1.
/// Throws InvariantViolation if neither exists.
Anchor expressible_anchor(Count n);

BridgingSum bridging_terms(Count m);

/// epsilon(J_n(1)) = (m(m+1)/2 + bridging(m) + d^+(v_m)(d^+(v_m) - 1)) / 2
/// for a direct anchor (n, m).
Count edges_prop22(Count n, Count m);

/// The degree sum inside edges_prop22 before halving.
Count prop22_degree_sum(Count m);

Count edges_reconstruction(Count n);

}  // namespace jaco
