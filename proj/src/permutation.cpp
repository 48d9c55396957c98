#include "fkb/permutation.hpp"

#include <stdexcept>

namespace fkb {

Permutation::Permutation(int n) : img_(n) {
  for (int i = 0; i < n; ++i) img_[i] = i;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("Permutation: image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("Permutation::transposition: bad points");
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& q) const {
  if (size() != q.size()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> r(img_.size());
  for (int i = 0; i < size(); ++i) r[i] = img_[q.img_[i]];
  return Permutation(std::move(r));
}

std::string Permutation::str() const {
  std::vector<bool> done(img_.size(), false);
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (done[i] || img_[i] == i) continue;
    s += '(';
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) s += ' ';
      s += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    s += ')';
  }
  return s.empty() ? "id" : s;
}

}  // namespace fkb
