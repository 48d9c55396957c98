#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fkb/subset.hpp"

namespace fkb {

/// A word in the generators a_m of the free k-braid group G_n^k.
/// The empty word is the group identity.
struct FreeKBraidWord {
  int n = 0;
  int k = 0;
  std::vector<KSubset> letters;

  FreeKBraidWord() = default;
  FreeKBraidWord(int n_, int k_, std::vector<KSubset> letters_ = {});

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  void push(const KSubset& m);

  /// Concatenation (the group product of the represented elements).
  FreeKBraidWord concat(const FreeKBraidWord& other) const;

  /// Compact integer encoding (letter ranks), usable as a hash/map key.
  std::vector<int> encode() const;

  bool operator==(const FreeKBraidWord& o) const;
  bool operator!=(const FreeKBraidWord& o) const { return !(*this == o); }

  std::string str() const;  // "a{1,2} a{2,3}" or "e"
};

/// Deletes adjacent equal letters until none remain.
FreeKBraidWord free_reduce(const FreeKBraidWord& w);

/// Like free_reduce, but records every intermediate word (the move path,
/// starting at w and ending at the reduced word).
FreeKBraidWord free_reduce_path(const FreeKBraidWord& w,
                                std::vector<FreeKBraidWord>* path);

/// Per-generator letter counts mod 2; invariant under all relation moves.
using ParityVector = std::vector<std::uint8_t>;

ParityVector parity_vector(const FreeKBraidWord& w);

/// Parses the word grammar: whitespace-separated letters "a{i1,...,ik}",
/// the empty word spelled "e". Indices must be strictly increasing;
/// unsorted input is rejected.
FreeKBraidWord parse_word(const std::string& text, int n, int k);

/// File form with a leading "n=<int> k=<int>" header.
FreeKBraidWord parse_word_file(const std::string& text);

}  // namespace fkb
