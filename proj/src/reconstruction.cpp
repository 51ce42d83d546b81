// reconstruction.cpp
#include "jaco/reconstruction.hpp"

#include <string>

#include "jaco/zeckendorf.hpp"

namespace jaco {

Count BridgingSum::total() const {
  Count sum = 0;
  for (const BridgingTerm& t : terms) sum = checked_add(sum, t.value, "bridging sum");
  return sum;
}

std::optional<Count> direct_anchor(Count n) {
  if (n == 0) throw DomainError("vertices are indexed from 1");
  const Count m = bettina_out_degree(n);
  if (m + bettina_out_degree(m) == n) return m;
  return std::nullopt;
}

Anchor expressible_anchor(Count n) {
  if (n < 2) throw DomainError("anchors are defined for n >= 2");
  Anchor a;
  a.n = n;
  if (auto m = direct_anchor(n)) {
    a.m = *m;
    return a;
  }
  if (auto m = direct_anchor(n + 1)) {
    a.m = *m;
    a.via_successor = true;
    return a;
  }
  throw InvariantViolation("neither " + std::to_string(n) + " nor " + std::to_string(n + 1) +
                           " is of the form m + d+(v_m) with m = d+(v_n)");
}

BridgingSum bridging_terms(Count m) {
  if (m == 0) throw DomainError("vertices are indexed from 1");
  BridgingSum b;
  for (Count i = 0; i < m; ++i) {
    const Count out = bettina_out_degree(m - i);
    if (out <= i) break;
    b.terms.push_back({i, out - i});
  }
  if (!b.terms.empty()) b.j_max = b.terms.back().offset;
  return b;
}

Count prop22_degree_sum(Count m) {
  const Count out = bettina_out_degree(m);
  Count sum = triangular(m);
  sum = checked_add(sum, bridging_terms(m).total(), "degree sum");
  sum = checked_add(sum, checked_mul(out, out - 1, "Hope graph arcs"), "degree sum");
  return sum;
}

Count edges_prop22(Count n, Count m) {
  if (m == 0 || m + bettina_out_degree(m) != n) {
    throw DomainError("edges_prop22 requires n = m + d+(v_m); got n=" + std::to_string(n) +
                      ", m=" + std::to_string(m));
  }
  const Count sum = prop22_degree_sum(m);
  if (sum % 2 != 0) {
    throw InvariantViolation("odd degree sum " + std::to_string(sum) + " at m=" + std::to_string(m));
  }
  return sum / 2;
}

Count edges_reconstruction(Count n) {
  if (n == 0) throw DomainError("vertices are indexed from 1");
  if (n == 1) return 0;
  const Anchor a = expressible_anchor(n);
  const Count m = *a.m;
  if (!a.via_successor) return edges_prop22(n, m);
  // d^-(v_{n+1}) = d^+(v_m): drop the in-arcs of the extra vertex.
  return checked_sub(edges_prop22(n + 1, m), bettina_out_degree(m), "edge count");
}

}  // namespace jaco
