#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fkb {

using Tuple = std::vector<int>;

/// An involution of the carrier {0..m-1}, given by its disjoint
/// transpositions; everything else is fixed.
struct Involution {
  int m = 0;
  std::vector<std::pair<int, int>> transpositions;

  Involution() = default;
  Involution(int m_, std::vector<std::pair<int, int>> transpositions_);

  static Involution identity(int m) { return Involution(m, {}); }

  int t() const { return static_cast<int>(transpositions.size()); }
  int apply(int x) const;
  Tuple apply(const Tuple& x) const;
};

/// Multiplicity vector of a tuple with respect to an involution: the i-th
/// entry counts components equal to p_i or q_i.
std::vector<int> multiplicity_vector(const Involution& tau, const Tuple& x);

/// A subset of M_k, the nonzero multiplicity vectors (m_1,...,m_t) with
/// 1 <= sum <= k.
struct MultiplicitySet {
  int k = 0;
  int t = 0;
  std::set<std::vector<int>> members;

  MultiplicitySet() = default;
  MultiplicitySet(int k_, int t_, std::set<std::vector<int>> members_);

  static MultiplicitySet full(int k, int t);  // all of M_k
  bool contains(const std::vector<int>& v) const { return members.count(v) > 0; }
};

struct AxiomReport {
  struct Entry {
    bool pass = true;
    std::string counterexample;  // empty when pass
  };
  Entry equivariance;
  Entry involution;
  Entry far_commutativity;
  Entry tetrahedron;

  bool all_pass() const {
    return equivariance.pass && involution.pass && far_commutativity.pass &&
           tetrahedron.pass;
  }
};

/// A finite k-biquandle candidate: a map B: X^k -> X^k on X = {0..m-1}.
/// The map is stored on sorted orbit representatives and extended
/// equivariantly; whether it satisfies the four axioms is reported by
/// check_axioms.
class FiniteKBiquandle {
 public:
  FiniteKBiquandle() = default;

  /// From a table on sorted representatives. Validates completeness and
  /// stabilizer compatibility (positions holding equal input values must
  /// receive equal image values).
  static FiniteKBiquandle from_orbit_table(int k, int m,
                                           const std::map<Tuple, Tuple>& table);

  /// From the full map, given as image codes indexed by tuple code.
  /// Range-checked only; axiom conformance is reported by check_axioms.
  static FiniteKBiquandle from_full_table(int k, int m, std::vector<int> table);

  /// Identity map on X^k.
  static FiniteKBiquandle trivial(int k, int m);

  int k() const { return k_; }
  int m() const { return m_; }
  long table_size() const { return static_cast<long>(full_.size()); }

  Tuple apply(const Tuple& x) const;
  int apply_code(int code) const { return full_[code]; }

  /// B applied to the coordinates of x selected by the sorted 1-based
  /// index set idx (in ascending order), identity elsewhere.
  Tuple apply_on_subset(const Tuple& x, const std::vector<int>& idx) const;

  bool is_trivial() const;

  /// The stored-orbit view: images of sorted representatives.
  std::map<Tuple, Tuple> orbit_table() const;

  /// Conjugation by a carrier relabeling sigma (image list on 0..m-1):
  /// B'(x) = sigma(B(sigma^{-1} x)).
  FiniteKBiquandle relabel(const std::vector<int>& sigma) const;

  /// Lexicographically minimal full table over all m! relabelings;
  /// an exact isomorphism invariant.
  std::vector<int> canonical_form() const;

  int encode(const Tuple& x) const;
  Tuple decode(int code) const;

  bool operator==(const FiniteKBiquandle& o) const {
    return k_ == o.k_ && m_ == o.m_ && full_ == o.full_;
  }

 private:
  int k_ = 0;
  int m_ = 0;
  std::vector<int> full_;  // image code per tuple code
};

/// Exhaustive check of the four k-biquandle axioms on the finite carrier.
AxiomReport check_axioms(const FiniteKBiquandle& B);

/// Carrier Z_2, componentwise +1.
FiniteKBiquandle gaussian(int k);

/// Componentwise involution tau.
FiniteKBiquandle involution_kbiquandle(const Involution& tau, int k);

/// B_{tau,mu}: applies componentwise tau exactly when the multiplicity
/// vector of the tuple lies in mu.
FiniteKBiquandle conditional_involution(const Involution& tau,
                                        const MultiplicitySet& mu, int k);

/// True iff some carrier bijection conjugates one table into the other.
bool is_isomorphic(const FiniteKBiquandle& a, const FiniteKBiquandle& b);

/// A carrier with two binary operations, written b*a and a o b.
struct FlatBiquandle {
  int m = 0;
  std::vector<int> star;  // star[x*m+y] = x * y
  std::vector<int> circ;  // circ[x*m+y] = x o y

  FlatBiquandle() = default;
  FlatBiquandle(int m_, std::vector<int> star_, std::vector<int> circ_);

  int s(int x, int y) const { return star[x * m + y]; }
  int c(int x, int y) const { return circ[x * m + y]; }
};

struct FlatReport {
  struct Entry {
    std::string identity;
    bool pass = true;
    std::string counterexample;
  };
  std::vector<Entry> entries;
  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

/// Checks the identities the flat operations must satisfy for the derived
/// k-biquandle construction at the given arity.
FlatReport flat_check(const FlatBiquandle& F, int k);

/// The 3-biquandle obtained by splitting a triple crossing into double
/// crossings. Requires flat_check(F, 3) to pass; the result is verified
/// against the alternative splitting order.
FiniteKBiquandle flat_derived3(const FlatBiquandle& F);

/// JSON file format: {"k":..., "m":..., "table": {"x1,...,xk": "y1,...,yk"}}
/// with sorted representative tuples as keys.
std::string biquandle_to_json(const FiniteKBiquandle& B);
FiniteKBiquandle biquandle_from_json(const std::string& text, bool skip_axioms = false);

}  // namespace fkb
