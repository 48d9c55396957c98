#include "fkb/graph.hpp"

namespace fkb {

BraidGraph realize(const FreeKBraidWord& w) {
  BraidGraph g;
  g.n = w.n;
  g.strand_edges.assign(w.n, {});
  int next_edge = 0;
  for (int s = 0; s < w.n; ++s) g.strand_edges[s].push_back(next_edge++);

  for (const auto& m : w.letters) {
    BraidGraph::Vertex v;
    v.letter = m;
    for (int strand : m.elems) {
      int in = g.strand_edges[strand - 1].back();
      int out = next_edge++;
      g.strand_edges[strand - 1].push_back(out);
      v.in_out.emplace_back(in, out);
    }
    g.vertices.push_back(std::move(v));
  }
  g.edge_count = next_edge;
  return g;
}

}  // namespace fkb
