#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fkb {

/// A sorted k-element subset of the strand indices {1,...,n}.
/// This is the subscript of a generator a_m of the free k-braid group.
struct KSubset {
  int n = 0;
  std::vector<int> elems;  // strictly increasing, each in 1..n

  KSubset() = default;
  KSubset(int n_, std::vector<int> elems_);

  int k() const { return static_cast<int>(elems.size()); }
  bool contains(int strand) const;

  /// Lexicographic rank among all k-subsets of {1..n} (combinatorial
  /// number system), used to index parity vectors.
  int rank() const;

  bool operator==(const KSubset& o) const { return elems == o.elems; }
  bool operator!=(const KSubset& o) const { return !(*this == o); }
  bool operator<(const KSubset& o) const { return elems < o.elems; }

  std::string str() const;  // "a{1,2}" form
};

long long binomial(int n, int k);

int intersection_size(const KSubset& a, const KSubset& b);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<KSubset> all_subsets(int n, int k);

}  // namespace fkb
