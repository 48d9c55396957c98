#pragma once

#include <string>
#include <vector>

namespace fkb {

/// A permutation of {1..n}, stored 0-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);                    // identity
  explicit Permutation(std::vector<int> images);  // 0-based image list

  static Permutation transposition(int n, int i, int j);  // 1-based i, j

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x]; }        // 0-based
  int apply1(int x) const { return img_[x - 1] + 1; }  // 1-based

  bool is_identity() const;
  Permutation inverse() const;

  /// Function composition: (p.after(q))(x) = p(q(x)).
  Permutation after(const Permutation& q) const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

  /// Cycle notation on 1-based points, e.g. "(1 2)(3 4)"; identity is "id".
  std::string str() const;

 private:
  std::vector<int> img_;
};

}  // namespace fkb
