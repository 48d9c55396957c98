#include "fkb/coloring.hpp"

#include <stdexcept>

namespace fkb {

Coloring propagate(const FreeKBraidWord& w, const FiniteKBiquandle& B,
                   const Tuple& chi_in) {
  if (B.k() != w.k) throw std::invalid_argument("propagate: arity mismatch");
  if (static_cast<int>(chi_in.size()) != w.n)
    throw std::invalid_argument("propagate: chi_in must have n entries");
  Coloring c;
  c.graph = realize(w);
  c.chi_in = chi_in;
  c.edge_colors.assign(c.graph.edge_count, -1);

  Tuple cur = chi_in;  // current color per strand
  for (int s = 1; s <= w.n; ++s) c.edge_colors[c.graph.source_edge(s)] = cur[s - 1];

  for (const auto& v : c.graph.vertices) {
    Tuple in(w.k);
    for (int j = 0; j < w.k; ++j) in[j] = cur[v.letter.elems[j] - 1];
    Tuple out = B.apply(in);
    for (int j = 0; j < w.k; ++j) {
      int strand = v.letter.elems[j];
      cur[strand - 1] = out[j];
      c.edge_colors[v.in_out[j].second] = out[j];
    }
  }
  c.chi_out = cur;
  return c;
}

int binding_number(const FreeKBraidWord& w, const FiniteKBiquandle& B,
                   const Tuple& chi1, const Tuple& chi2) {
  if (static_cast<int>(chi2.size()) != w.n)
    throw std::invalid_argument("binding_number: chi2 must have n entries");
  for (int v : chi2)
    if (v < 0 || v >= B.m())
      throw std::invalid_argument("binding_number: chi2 entry out of carrier");
  return propagate(w, B, chi1).chi_out == chi2 ? 1 : 0;
}

long count_colorings(const FreeKBraidWord& w, const FiniteKBiquandle& B) {
  const int m = B.m();
  long expected = 1;
  for (int i = 0; i < w.n; ++i) expected *= m;
  long count = 0;
  Tuple chi(w.n, 0);
  while (true) {
    propagate(w, B, chi);  // always yields the unique extension
    ++count;
    int i = w.n - 1;
    while (i >= 0 && chi[i] == m - 1) --i;
    if (i < 0) break;
    ++chi[i];
    for (int j = i + 1; j < w.n; ++j) chi[j] = 0;
  }
  if (count != expected)
    throw std::logic_error("count_colorings: enumeration disagrees with m^n");
  return count;
}

FundamentalPresentation fundamental_presentation(const FreeKBraidWord& w) {
  FundamentalPresentation P;
  P.n = w.n;
  P.k = w.k;
  BraidGraph g = realize(w);
  P.generator_count = g.edge_count;
  for (int s = 1; s <= w.n; ++s) P.source_edges.push_back(g.source_edge(s));
  for (const auto& v : g.vertices) {
    FundamentalPresentation::Relation r;
    for (const auto& [in, out] : v.in_out) {
      r.in_edges.push_back(in);
      r.out_edges.push_back(out);
    }
    P.relations.push_back(std::move(r));
  }
  return P;
}

namespace {

// Assigns generators depth-first in relation order; a vertex relation with
// all inputs known forces its outputs, so branching happens only on edges
// that are free at the time they are reached.
long count_from(const FundamentalPresentation& P, const FiniteKBiquandle& B,
                std::vector<int>& color, size_t rel_idx) {
  if (rel_idx == P.relations.size()) {
    long free_edges = 0;
    for (int v : color)
      if (v < 0) ++free_edges;
    long mult = 1;
    for (long i = 0; i < free_edges; ++i) mult *= B.m();
    return mult;
  }
  const auto& r = P.relations[rel_idx];
  for (size_t j = 0; j < r.in_edges.size(); ++j) {
    if (color[r.in_edges[j]] < 0) {
      long total = 0;
      for (int v = 0; v < B.m(); ++v) {
        color[r.in_edges[j]] = v;
        total += count_from(P, B, color, rel_idx);
      }
      color[r.in_edges[j]] = -1;
      return total;
    }
  }
  Tuple in(r.in_edges.size());
  for (size_t j = 0; j < r.in_edges.size(); ++j) in[j] = color[r.in_edges[j]];
  Tuple out = B.apply(in);
  std::vector<int> touched;
  bool ok = true;
  for (size_t j = 0; j < r.out_edges.size() && ok; ++j) {
    int e = r.out_edges[j];
    if (color[e] < 0) {
      color[e] = out[j];
      touched.push_back(e);
    } else if (color[e] != out[j]) {
      ok = false;
    }
  }
  long total = ok ? count_from(P, B, color, rel_idx + 1) : 0;
  for (int e : touched) color[e] = -1;
  return total;
}

}  // namespace

long hom_count(const FundamentalPresentation& P, const FiniteKBiquandle& B) {
  if (B.k() != P.k) throw std::invalid_argument("hom_count: arity mismatch");
  std::vector<int> color(P.generator_count, -1);
  return count_from(P, B, color, 0);
}

}  // namespace fkb
