#pragma once

#include <vector>

#include "fkb/biquandle.hpp"
#include "fkb/graph.hpp"
#include "fkb/word.hpp"

namespace fkb {

/// A good coloring of the strand graph of a word: one carrier element per
/// edge, satisfying the biquandle rule at every vertex.
struct Coloring {
  BraidGraph graph;
  std::vector<int> edge_colors;  // indexed by edge id
  Tuple chi_in;                  // source edge colors, by strand
  Tuple chi_out;                 // sink edge colors, by strand
};

/// Extends the source colors chi_in to the unique good coloring.
/// Incoming colors at a vertex are fed to B in ascending strand order.
Coloring propagate(const FreeKBraidWord& w, const FiniteKBiquandle& B,
                   const Tuple& chi_in);

/// 1 iff the good coloring with sources chi1 has sinks chi2.
int binding_number(const FreeKBraidWord& w, const FiniteKBiquandle& B,
                   const Tuple& chi1, const Tuple& chi2);

/// The number of good colorings, computed by enumerating source
/// assignments; always m^n by unique extension (asserted).
long count_colorings(const FreeKBraidWord& w, const FiniteKBiquandle& B);

/// The fundamental presentation of a word: edge generators and, per
/// vertex, k equations giving the outgoing generators as the components
/// of B applied to the incoming ones.
struct FundamentalPresentation {
  struct Relation {
    std::vector<int> in_edges;   // ascending strand order
    std::vector<int> out_edges;  // matching opposite edges
  };
  int n = 0;
  int k = 0;
  int generator_count = 0;  // = number of edges
  std::vector<int> source_edges;
  std::vector<Relation> relations;  // one group of k equations per vertex
};

FundamentalPresentation fundamental_presentation(const FreeKBraidWord& w);

/// Counts assignments of carrier elements to the generators satisfying
/// every relation, by backtracking over the relation system.
long hom_count(const FundamentalPresentation& P, const FiniteKBiquandle& B);

}  // namespace fkb
