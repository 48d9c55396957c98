// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Every numeric expectation here was fixed in advance by an
// independent oracle (hand propagation, finite quotients, or exhaustive
// scans) and is asserted exactly, with no tolerance.

#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fkb/biquandle.hpp"
#include "fkb/coloring.hpp"
#include "fkb/enumerate.hpp"
#include "fkb/moves.hpp"
#include "fkb/subset.hpp"
#include "fkb/vssb.hpp"
#include "fkb/word.hpp"

using namespace fkb;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!pass) ++failures;
}

std::vector<Involution> all_involutions(int m) {
  std::vector<Involution> out = {Involution::identity(m)};
  // Grow by pairing: recursively match the smallest unmatched element.
  struct Rec {
    int m;
    std::vector<Involution>& out;
    void go(std::vector<std::pair<int, int>>& acc, std::vector<bool>& used) {
      int first = -1;
      for (int i = 0; i < m; ++i)
        if (!used[i]) {
          first = i;
          break;
        }
      if (first < 0) return;
      used[first] = true;
      // Leave first fixed.
      go(acc, used);
      // Or pair it with any later unused element.
      for (int j = first + 1; j < m; ++j) {
        if (used[j]) continue;
        used[j] = true;
        acc.emplace_back(first, j);
        out.emplace_back(m, acc);
        go(acc, used);
        acc.pop_back();
        used[j] = false;
      }
      used[first] = false;
    }
  } rec{m, out};
  std::vector<std::pair<int, int>> acc;
  std::vector<bool> used(m, false);
  rec.go(acc, used);
  return out;
}

std::vector<MultiplicitySet> all_multiplicity_subsets(int k, int t, bool nonempty_only) {
  auto full = MultiplicitySet::full(k, t);
  std::vector<std::vector<int>> vecs(full.members.begin(), full.members.end());
  std::vector<MultiplicitySet> out;
  for (size_t mask = 0; mask < (size_t{1} << vecs.size()); ++mask) {
    if (nonempty_only && mask == 0) continue;
    std::set<std::vector<int>> members;
    for (size_t i = 0; i < vecs.size(); ++i)
      if (mask & (size_t{1} << i)) members.insert(vecs[i]);
    out.emplace_back(k, t, members);
  }
  return out;
}

FreeKBraidWord random_word(std::mt19937& rng, int n, int k, int maxlen) {
  auto subs = all_subsets(n, k);
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<size_t> pick(0, subs.size() - 1);
  FreeKBraidWord w(n, k);
  int l = len(rng);
  for (int i = 0; i < l; ++i) w.push(subs[pick(rng)]);
  return w;
}

FiniteKBiquandle random_constructed(std::mt19937& rng, int k) {
  switch (rng() % 3) {
    case 0:
      return gaussian(k);
    case 1: {
      Involution tau(3, {{static_cast<int>(rng() % 2), 2}});
      return involution_kbiquandle(tau, k);
    }
    default: {
      Involution tau(3, {{0, 1}});
      int v = 1 + static_cast<int>(rng() % k);
      return conditional_involution(tau, MultiplicitySet(k, 1, {{v}}), k);
    }
  }
}

std::set<std::vector<int>> enum33_canonicals;

void criterion1() {
  EnumerateOptions opts;
  opts.nontrivial_only = true;

  auto r2 = enumerate_kbiquandles(2, 3, opts);
  bool ok2 = r2.entries.size() == 1 && is_isomorphic(r2.entries[0], gaussian(3));

  auto r3 = enumerate_kbiquandles(3, 3, opts);
  bool ok3 = r3.entries.size() == 7;
  // "Conditional involution" includes the full-multiplicity-set case, which
  // classify reports under its more specific componentwise tag; verify the
  // family membership directly by matching each entry against a constructed
  // conditional involution up to isomorphism.
  auto taus = all_involutions(3);
  int matched = 0;
  for (const auto& B : r3.entries) {
    enum33_canonicals.insert(B.canonical_form());
    bool found = false;
    for (const auto& tau : taus) {
      if (found) break;
      if (tau.t() == 0) continue;
      for (const auto& mu : all_multiplicity_subsets(3, tau.t(), true)) {
        auto C = conditional_involution(tau, mu, 3);
        if (is_isomorphic(B, C)) {
          found = true;
          break;
        }
      }
    }
    if (found) ++matched;
  }
  report(1, ok2 && ok3 && matched == 7,
         "enumeration: (m=2,k=3) -> " + std::to_string(r2.entries.size()) +
             " class (gaussian), (m=3,k=3) -> " + std::to_string(r3.entries.size()) +
             " classes, " + std::to_string(matched) + "/7 conditional involutions");
}

void criterion2() {
  auto beta = parse_vssb("c1 a2 v3 C2 b1 C2", 4);
  auto g = phi(beta);
  bool ok = g.str() == "a{1,2} a{2,3} a{2,3}" && free_reduce(g).str() == "a{1,2}" &&
            rho(beta).str() == "(1 2)(3 4)";
  report(2, ok,
         "sample 4-strand braid: phi = " + g.str() + " = " + free_reduce(g).str() +
             ", rho = " + rho(beta).str());
}

void criterion3() {
  // Oracle: hand propagation of chi_in = (0,1,0,1) through a{1,2} under the
  // gaussian rule gives chi_out = (1,0,0,1) != (0,0,1,1), so the binding
  // number is 0. The previously reported value for this instance is 1; it
  // does not follow from propagating the sources, and the pinned value is
  // the oracle's 0.
  auto w = parse_word("a{1,2}", 4, 2);
  auto B = gaussian(2);
  int bind = binding_number(w, B, {0, 1, 0, 1}, {0, 0, 1, 1});
  auto out = propagate(w, B, {0, 1, 0, 1}).chi_out;
  bool ok = bind == 0 && out == Tuple{1, 0, 0, 1};
  std::string outs;
  for (size_t i = 0; i < out.size(); ++i) outs += (i ? "," : "") + std::to_string(out[i]);
  report(3, ok,
         "binding number pinned to oracle value " + std::to_string(bind) +
             " (chi_out = (" + outs + ")); differs from the previously reported 1");
}

void criterion4() {
  long checked = 0, failed = 0;
  for (int k = 1; k <= 4; ++k) {
    ++checked;
    if (!check_axioms(gaussian(k)).all_pass()) ++failed;
  }
  for (int m = 1; m <= 4; ++m)
    for (const auto& tau : all_involutions(m))
      for (int k = 1; k <= 3; ++k) {
        ++checked;
        if (!check_axioms(involution_kbiquandle(tau, k)).all_pass()) ++failed;
      }
  for (int m = 1; m <= 3; ++m)
    for (const auto& tau : all_involutions(m))
      for (const auto& mu : all_multiplicity_subsets(3, tau.t(), false)) {
        ++checked;
        // conditional_involution itself re-verifies the axioms and throws on
        // violation; check once more from the table.
        if (!check_axioms(conditional_involution(tau, mu, 3)).all_pass()) ++failed;
      }
  // Flat tables: the required identity x*y = x o y forces the two operation
  // tables to coincide, so scanning equal pairs is exhaustive.
  long flat_pass = 0;
  for (int m = 1; m <= 3; ++m) {
    long total = 1;
    for (int i = 0; i < m * m; ++i) total *= m;
    for (long code = 0; code < total; ++code) {
      std::vector<int> table(m * m);
      long c = code;
      for (int i = 0; i < m * m; ++i) {
        table[i] = static_cast<int>(c % m);
        c /= m;
      }
      FlatBiquandle F(m, table, table);
      if (!flat_check(F, 3).all_pass()) continue;
      ++flat_pass;
      ++checked;
      if (!check_axioms(flat_derived3(F)).all_pass()) ++failed;
    }
  }
  report(4, failed == 0,
         "axiom suites: " + std::to_string(checked) + " constructed biquandles (" +
             std::to_string(flat_pass) + " admissible flat tables), " +
             std::to_string(failed) + " failures");
}

void criterion5() {
  std::mt19937 rng(424242);
  long counterexamples = 0;
  for (int it = 0; it < 1000; ++it) {
    int k = 2 + static_cast<int>(rng() % 2);
    int n = k + 1 + static_cast<int>(rng() % (5 - k));
    auto w = random_word(rng, n, k, 8);
    auto moves = neighbors(w);
    auto v = moves[rng() % moves.size()];
    auto B = random_constructed(rng, k);
    std::uniform_int_distribution<int> pick(0, B.m() - 1);
    for (int s = 0; s < 32; ++s) {
      Tuple chi(n);
      for (auto& c : chi) c = pick(rng);
      if (propagate(w, B, chi).chi_out != propagate(v, B, chi).chi_out) ++counterexamples;
    }
  }
  report(5, counterexamples == 0,
         "coloring move-invariance: 1000 random (word, move, biquandle) cases x 32 "
         "inputs, " +
             std::to_string(counterexamples) + " counterexamples");
}

void criterion6() {
  auto sq = [](const FreeKBraidWord& w) { return w.concat(w); };
  int unknowns = 0, distinct = 0;
  auto verify = [&](int n, int k, const std::string& text) {
    auto r = equal_bounded(sq(parse_word(text, n, k)), FreeKBraidWord(n, k));
    if (r.verdict == Verdict::Unknown) ++unknowns;
    if (r.verdict == Verdict::Distinct) ++distinct;
  };
  verify(3, 2, "a{1,2} a{1,3} a{2,3}");
  verify(4, 3, "a{1,2,3} a{1,2,4} a{1,3,4} a{2,3,4}");
  verify(4, 3, "a{1,2,3} a{1,3,4} a{2,3,4} a{1,2,4}");
  verify(4, 3, "a{1,2,3} a{2,3,4} a{1,2,4} a{1,3,4}");
  report(6, unknowns == 0 && distinct == 0,
         "presentation checks: 4 squared products certified Equal, " +
             std::to_string(unknowns) + " Unknown");
}

void criterion7() {
  bool ok = true;
  std::string detail = "phi sweep n=5:";
  for (auto fam : {RelationFamily::A, RelationFamily::V}) {
    auto rep = check_phi_well_defined(5, fam);
    if (rep.failures > 0 || !rep.multiplicativity_pass) ok = false;
    int long_unknowns = 0;
    for (const auto& v : rep.relations)
      if (v.verdict == Verdict::Unknown) {
        if (v.max_g_length <= 12) ok = false;
        ++long_unknowns;
        std::printf("  unknown (g-length %zu): %s\n", v.max_g_length, v.label.c_str());
      }
    detail += (fam == RelationFamily::A ? " A(" : " V(") +
              std::to_string(rep.failures) + " failures, " +
              std::to_string(long_unknowns) + " unknowns)";
  }
  detail += "; rho n<=6:";
  int rho_failures = 0;
  for (int n = 2; n <= 6; ++n)
    for (auto fam : {RelationFamily::A, RelationFamily::R, RelationFamily::V})
      rho_failures += static_cast<int>(check_rho_respects(n, fam).failures.size());
  if (rho_failures > 0) ok = false;
  detail += " " + std::to_string(rho_failures) + " failures";
  report(7, ok, detail);
}

void criterion8() {
  std::mt19937 rng(8080);
  long checked = 0, mismatches = 0;
  while (checked < 200) {
    int k = 2 + static_cast<int>(rng() % 2);
    int n = k + 1 + static_cast<int>(rng() % 2);
    auto B = random_constructed(rng, k);
    long mn = 1;
    for (int i = 0; i < n; ++i) mn *= B.m();
    if (mn > 4096) continue;
    auto w = random_word(rng, n, k, 6);
    long homs = hom_count(fundamental_presentation(w), B);
    long colorings = count_colorings(w, B);
    if (homs != colorings || colorings != mn) ++mismatches;
    ++checked;
  }
  report(8, mismatches == 0,
         "fundamental presentation: hom_count = coloring count = m^n on 200 random "
         "pairs, " +
             std::to_string(mismatches) + " mismatches");
}

void criterion9() {
  std::set<std::vector<int>> canonicals;
  for (const auto& tau : all_involutions(3)) {
    if (tau.t() != 1) continue;
    for (const auto& mu : all_multiplicity_subsets(3, 1, true)) {
      auto B = conditional_involution(tau, mu, 3);
      if (B.is_trivial()) continue;
      canonicals.insert(B.canonical_form());
    }
  }
  bool ok = canonicals.size() == 7 && canonicals == enum33_canonicals;
  report(9, ok,
         "constructed conditional involutions on a 3-element carrier give " +
             std::to_string(canonicals.size()) +
             " classes, matching the enumerated set: " +
             (canonicals == enum33_canonicals ? "yes" : "no"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return failures == 0 ? 0 : 1;
}
