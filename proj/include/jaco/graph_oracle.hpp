// graph_oracle.hpp
//
// Brute-force construction of the finite Jaco graph J_n(1) straight from its
// arc rule: (v_i, v_j) is an arc iff i < j and 2i - d^-(v_i) >= j. Every
// faster method in this library is checked against the graph built here.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "jaco/checked.hpp"

namespace jaco {

using Vertex = std::uint64_t;

/// One vertex's degrees in J_n(1). `out_degree_infinite` is the out-degree the
/// vertex has in the infinite graph, before the tail beyond v_n is cut off.
struct DegreeRecord {
  Vertex index = 0;
  Count in_degree = 0;
  Count out_degree_finite = 0;
  Count out_degree_infinite = 0;
  Count total_degree = 0;

  friend bool operator==(const DegreeRecord&, const DegreeRecord&) = default;
};

/// Result of a maximum-degree query. `prime_index` is the smallest vertex
/// attaining `delta`; by convention J_1 has delta 0 and prime_index 1.
struct Jaconian {
  Count delta = 0;
  Vertex prime_index = 0;
  std::vector<Vertex> vertices;
};

/// The subgraph induced by the vertices after the prime Jaconian vertex.
struct HopeView {
  Vertex start = 0;
  Count vertex_count = 0;
  Count induced_edge_count = 0;
};

/// Finite Jaco graph J_n(1).
///
/// Out-neighbours of v_i always form the contiguous run v_{i+1}..v_{out_hi(i)},
/// so the arc set is held in O(n) space. Vertices are 1-indexed; index 0 is
/// rejected everywhere.
class JacoGraph {
 public:
  /// Builds J_n(1) by counting, for each vertex, the earlier vertices whose
  /// reach covers it. Quadratic in n.
  static JacoGraph build(Vertex n);

  Vertex order() const noexcept { return n_; }

  Count in_degree(Vertex i) const;
  /// Last head reachable from v_i in J_n; <= i means no out-arcs.
  Vertex out_hi(Vertex i) const;
  /// 2i - d^-(v_i): last head v_i reaches in the infinite graph.
  Vertex reach(Vertex i) const;

  bool arc_exists(Vertex i, Vertex j) const;

  DegreeRecord degree(Vertex i) const;
  std::vector<DegreeRecord> degree_profile() const;

  Count edge_count() const;

  Jaconian jaconian() const;
  HopeView hope_view() const;

  /// Calls fn(i, j) for every arc in ascending (i, j) order.
  template <class Fn>
  void for_each_arc(Fn&& fn) const {
    for (Vertex i = 1; i <= n_; ++i) {
      for (Vertex j = i + 1; j <= out_hi_[i - 1]; ++j) fn(i, j);
    }
  }

 private:
  JacoGraph(Vertex n, std::vector<Count> in_deg, std::vector<Vertex> out_hi)
      : n_(n), in_deg_(std::move(in_deg)), out_hi_(std::move(out_hi)) {}

  void check_vertex(Vertex i) const;

  Vertex n_;
  std::vector<Count> in_deg_;
  std::vector<Vertex> out_hi_;
};

inline JacoGraph build_jaco(Vertex n) { return JacoGraph::build(n); }

/// "i j" per arc, one per line, ascending.
void write_edge_list(const JacoGraph& g, std::ostream& out);
/// Directed DOT graph with vertices named v1..vn.
void write_dot(const JacoGraph& g, std::ostream& out);

}  // namespace jaco
