#pragma once

#include <string>
#include <vector>

#include "fkb/biquandle.hpp"

namespace fkb {

enum class BiquandleTag {
  Trivial,
  ComponentwiseInvolution,
  ConditionalInvolution,
  FlatDerived,
  Other,
};

std::string tag_name(BiquandleTag tag);

struct EnumerationStats {
  long long candidates_visited = 0;  // partial assignments explored
  long long leaves = 0;              // complete equivariant involutions
  long long far_commutativity_failures = 0;
  long long tetrahedron_failures = 0;
};

struct EnumerationResult {
  int m = 0;
  int k = 0;
  bool nontrivial_only = false;
  std::vector<FiniteKBiquandle> entries;  // canonical, pairwise non-isomorphic
  std::vector<BiquandleTag> tags;
  EnumerationStats stats;
};

struct EnumerateOptions {
  bool nontrivial_only = false;
  long long budget = 100000000;  // partial-assignment guard
  int jobs = 1;
};

/// Complete enumeration of k-biquandles on a carrier of size m, up to
/// isomorphism. Images are assigned orbit-representative-wise, so
/// equivariance is built in; the involution axiom is enforced as a pairing
/// constraint during assignment; the remaining axioms filter the leaves.
EnumerationResult enumerate_kbiquandles(int m, int k, const EnumerateOptions& opts = {});

/// Most specific family tag, searching over all involutions of the
/// carrier and all multiplicity subsets (and, for k = 3 and m <= 3, all
/// admissible flat operation tables).
BiquandleTag classify(const FiniteKBiquandle& B);

}  // namespace fkb
