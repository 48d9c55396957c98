#pragma once

#include <string>
#include <vector>

#include "fkb/word.hpp"

namespace fkb {

/// All words one relation move away: deleting an adjacent equal pair,
/// inserting a_m a_m anywhere, swapping adjacent far-commuting letters,
/// and reversing a tetrahedron block (a length-(k+1) window of distinct
/// letters whose index sets are exactly the k-subsets of one (k+1)-set).
std::vector<FreeKBraidWord> neighbors(const FreeKBraidWord& w);

struct EqOptions {
  int depth = 8;        // max total move-path length explored by the search
  long nodes = 200000;  // max words visited
  bool use_coloring = true;  // try coloring invariants as Distinct witnesses
};

enum class Verdict { Equal, Distinct, Unknown };

struct EqResult {
  Verdict verdict = Verdict::Unknown;
  /// For Equal: the move path from w1 to w2 (both endpoints included).
  std::vector<FreeKBraidWord> path;
  /// For Distinct: which invariant separated the words.
  std::string witness;
  long nodes_visited = 0;
};

/// Bounded bidirectional search over relation moves, with sound
/// certificates in both directions: Equal comes with an explicit move
/// path, Distinct with a move-invariant that differs.
EqResult equal_bounded(const FreeKBraidWord& w1, const FreeKBraidWord& w2,
                       const EqOptions& opts = {});

}  // namespace fkb
