#pragma once

#include <string>
#include <vector>

#include "fkb/biquandle.hpp"
#include "fkb/moves.hpp"
#include "fkb/permutation.hpp"
#include "fkb/word.hpp"

namespace fkb {

/// Generators of the virtual surface singular braid monoid on n strands:
/// a_i, b_i (marked singular crossings), c_i and its inverse, and the
/// virtual crossing v_i, for i in 1..n-1.
enum class VSSBKind { A, B, C, CInv, V };

struct VSSBGen {
  VSSBKind kind;
  int index;  // 1..n-1

  bool operator==(const VSSBGen& o) const { return kind == o.kind && index == o.index; }
  std::string str() const;
};

struct VSSBWord {
  int n = 0;
  std::vector<VSSBGen> letters;

  VSSBWord() = default;
  VSSBWord(int n_, std::vector<VSSBGen> letters_);

  VSSBWord concat(const VSSBWord& other) const;
  bool operator==(const VSSBWord& o) const { return n == o.n && letters == o.letters; }
  std::string str() const;
};

/// Grammar: whitespace-separated tokens a<i> b<i> c<i> v<i>, with C<i> for
/// the inverse crossing; the empty word may be written "" or "e".
VSSBWord parse_vssb(const std::string& text, int n);

/// State acted on by the monoid: a word in G_n^2 and a permutation.
struct ActionState {
  FreeKBraidWord g;
  Permutation sigma;

  ActionState() = default;
  ActionState(FreeKBraidWord g_, Permutation sigma_);
  static ActionState initial(int n);  // (empty word, identity)

  bool operator==(const ActionState& o) const { return g == o.g && sigma == o.sigma; }
};

/// One generator acting on a state: crossings prepend a_{sigma(i),sigma(i+1)}
/// and right-multiply sigma by (i i+1); a_i and b_i act trivially; v_i only
/// permutes.
ActionState act(const VSSBGen& gen, const ActionState& s);

/// A word acts with its rightmost letter first, so (uw)·s = u·(w·s).
ActionState act_word(const VSSBWord& w, const ActionState& s);

/// The permutation image of a word; equals the sigma-component of the word
/// acting on the identity state. Composition is diagrammatic: the first
/// letter's transposition is applied first.
Permutation rho(const VSSBWord& w);

bool is_pure(const VSSBWord& w);

/// phi_n: the g-component of w acting on (1, 1).
FreeKBraidWord phi(const VSSBWord& w);

struct RelationPair {
  std::string label;
  VSSBWord left;
  VSSBWord right;
};

enum class RelationFamily { A, R, V, AV };

/// All instances of the chosen defining-relation family for strand count n,
/// with metavariables and index ranges fully expanded.
std::vector<RelationPair> relations(int n, RelationFamily family);

struct RhoReport {
  int total = 0;
  std::vector<std::string> failures;  // labels of violated relations
  bool pass() const { return failures.empty(); }
};

/// Verifies rho(left) = rho(right) for every relation instance.
RhoReport check_rho_respects(int n, RelationFamily family);

struct PhiRelationVerdict {
  std::string label;
  Verdict verdict = Verdict::Unknown;  // aggregated over sampled states
  size_t max_g_length = 0;             // longest g-component compared
  std::string detail;                  // set when not Equal
};

struct PhiReport {
  std::vector<PhiRelationVerdict> relations;
  int states_per_relation = 0;
  bool multiplicativity_pass = false;  // exact, on pure-word samples
  int failures = 0;
  int unknowns = 0;
  bool pass() const { return failures == 0 && multiplicativity_pass; }
};

/// For every relation (L, R) and sampled state s (always including the
/// initial state): the sigma-components of L·s and R·s must agree exactly
/// and the g-components must be certified equal by bounded search.
/// Additionally checks phi(u·w) = phi(u)·phi(w) exactly on pure samples.
PhiReport check_phi_well_defined(int n, RelationFamily family,
                                 int extra_states = 4, const EqOptions& eq = {});

/// The coloring binding number of phi(w): an invariant of virtual surface
/// singular braids.
int vssb_invariant(const VSSBWord& w, const FiniteKBiquandle& B,
                   const Tuple& chi1, const Tuple& chi2);

}  // namespace fkb
