#pragma once

#include <utility>
#include <vector>

#include "fkb/word.hpp"

namespace fkb {

/// The oriented strand graph of a word: n strands running left to right,
/// one degree-2k vertex per letter. A strand passing through a vertex is
/// split there, and the vertex records the (incoming, outgoing) edge pair
/// per strand in its letter, which is the opposite-edge structure.
struct BraidGraph {
  struct Vertex {
    KSubset letter;
    // One (incoming edge, opposite outgoing edge) pair per strand in the
    // letter, ordered by ascending strand index.
    std::vector<std::pair<int, int>> in_out;
  };

  int n = 0;
  int edge_count = 0;
  std::vector<std::vector<int>> strand_edges;  // edge ids per strand, in order
  std::vector<Vertex> vertices;                // in word order

  int source_edge(int strand) const { return strand_edges[strand - 1].front(); }
  int sink_edge(int strand) const { return strand_edges[strand - 1].back(); }
};

BraidGraph realize(const FreeKBraidWord& w);

}  // namespace fkb
