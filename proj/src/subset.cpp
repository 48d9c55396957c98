#include "fkb/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace fkb {

KSubset::KSubset(int n_, std::vector<int> elems_) : n(n_), elems(std::move(elems_)) {
  if (elems.empty()) throw std::invalid_argument("KSubset: empty element list");
  if (static_cast<int>(elems.size()) > n)
    throw std::invalid_argument("KSubset: need k <= n");
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > n)
      throw std::invalid_argument("KSubset: element out of range 1..n");
    if (i > 0 && elems[i] <= elems[i - 1])
      throw std::invalid_argument("KSubset: elements must be strictly increasing");
  }
}

bool KSubset::contains(int strand) const {
  return std::binary_search(elems.begin(), elems.end(), strand);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int KSubset::rank() const {
  // Combinatorial number system, lexicographic order on sorted tuples.
  long long r = 0;
  int prev = 0;
  int k_ = k();
  for (int i = 0; i < k_; ++i) {
    for (int v = prev + 1; v < elems[i]; ++v)
      r += binomial(n - v, k_ - i - 1);
    prev = elems[i];
  }
  return static_cast<int>(r);
}

std::string KSubset::str() const {
  std::string s = "a{";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elems[i]);
  }
  s += '}';
  return s;
}

int intersection_size(const KSubset& a, const KSubset& b) {
  int count = 0;
  size_t i = 0, j = 0;
  while (i < a.elems.size() && j < b.elems.size()) {
    if (a.elems[i] == b.elems[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a.elems[i] < b.elems[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

std::vector<KSubset> all_subsets(int n, int k) {
  std::vector<KSubset> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(n, cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace fkb
