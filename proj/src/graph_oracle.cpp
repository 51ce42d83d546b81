// graph_oracle.cpp
#include "jaco/graph_oracle.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace jaco {

JacoGraph JacoGraph::build(Vertex n) {
  if (n == 0) throw DomainError("vertices are indexed from 1");

  std::vector<Count> in_deg(n, 0);
  std::vector<Vertex> reach(n, 0);
  std::vector<Vertex> out_hi(n, 0);

  for (Vertex i = 1; i <= n; ++i) {
    // Earlier vertex k sends an arc to v_i iff its reach covers i.
    const auto first = reach.begin();
    const auto last = first + static_cast<std::ptrdiff_t>(i - 1);
    const auto covering = std::count_if(first, last, [i](Vertex r) { return r >= i; });
    in_deg[i - 1] = static_cast<Count>(covering);
    reach[i - 1] = 2 * i - in_deg[i - 1];
    out_hi[i - 1] = std::min(reach[i - 1], n);
  }
  return JacoGraph(n, std::move(in_deg), std::move(out_hi));
}

void JacoGraph::check_vertex(Vertex i) const {
  if (i == 0 || i > n_) {
    throw DomainError("vertex " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
}

Count JacoGraph::in_degree(Vertex i) const {
  check_vertex(i);
  return in_deg_[i - 1];
}

Vertex JacoGraph::out_hi(Vertex i) const {
  check_vertex(i);
  return out_hi_[i - 1];
}

Vertex JacoGraph::reach(Vertex i) const {
  check_vertex(i);
  return 2 * i - in_deg_[i - 1];
}

bool JacoGraph::arc_exists(Vertex i, Vertex j) const {
  check_vertex(i);
  check_vertex(j);
  return i < j && j <= out_hi_[i - 1];
}

DegreeRecord JacoGraph::degree(Vertex i) const {
  check_vertex(i);
  DegreeRecord r;
  r.index = i;
  r.in_degree = in_deg_[i - 1];
  const Vertex hi = out_hi_[i - 1];
  r.out_degree_finite = hi > i ? hi - i : 0;
  r.out_degree_infinite = i - r.in_degree;
  r.total_degree = r.in_degree + r.out_degree_finite;
  return r;
}

std::vector<DegreeRecord> JacoGraph::degree_profile() const {
  std::vector<DegreeRecord> out;
  out.reserve(n_);
  for (Vertex i = 1; i <= n_; ++i) out.push_back(degree(i));
  return out;
}

Count JacoGraph::edge_count() const {
  Count sum = 0;
  for (Count d : in_deg_) sum = checked_add(sum, d, "edge count");
  return sum;
}

Jaconian JacoGraph::jaconian() const {
  Jaconian j;
  for (Vertex i = 1; i <= n_; ++i) {
    const Count d = degree(i).total_degree;
    if (j.vertices.empty() || d > j.delta) {
      j.delta = d;
      j.vertices.assign(1, i);
    } else if (d == j.delta) {
      j.vertices.push_back(i);
    }
  }
  j.prime_index = j.vertices.front();
  return j;
}

HopeView JacoGraph::hope_view() const {
  HopeView h;
  const Vertex prime = jaconian().prime_index;
  h.start = prime + 1;
  h.vertex_count = n_ - prime;
  for (Vertex i = h.start; i <= n_; ++i) {
    const Vertex hi = out_hi_[i - 1];
    if (hi > i) h.induced_edge_count += hi - i;
  }
  return h;
}

void write_edge_list(const JacoGraph& g, std::ostream& out) {
  g.for_each_arc([&out](Vertex i, Vertex j) { out << i << ' ' << j << '\n'; });
}

void write_dot(const JacoGraph& g, std::ostream& out) {
  out << "digraph J" << g.order() << " {\n";
  for (Vertex i = 1; i <= g.order(); ++i) out << "  v" << i << ";\n";
  g.for_each_arc([&out](Vertex i, Vertex j) { out << "  v" << i << " -> v" << j << ";\n"; });
  out << "}\n";
}

}  // namespace jaco
