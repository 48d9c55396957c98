#include "fkb/vssb.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fkb/coloring.hpp"

namespace fkb {

namespace {

char kind_char(VSSBKind k) {
  switch (k) {
    case VSSBKind::A: return 'a';
    case VSSBKind::B: return 'b';
    case VSSBKind::C: return 'c';
    case VSSBKind::CInv: return 'C';
    case VSSBKind::V: return 'v';
  }
  return '?';
}

}  // namespace

std::string VSSBGen::str() const { return kind_char(kind) + std::to_string(index); }

VSSBWord::VSSBWord(int n_, std::vector<VSSBGen> letters_)
    : n(n_), letters(std::move(letters_)) {
  if (n < 2) throw std::invalid_argument("VSSBWord: need n >= 2");
  for (const auto& g : letters)
    if (g.index < 1 || g.index >= n)
      throw std::invalid_argument("VSSBWord: generator index out of range 1..n-1");
}

VSSBWord VSSBWord::concat(const VSSBWord& other) const {
  if (other.n != n) throw std::invalid_argument("concat: mismatched n");
  VSSBWord out = *this;
  out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
  return out;
}

std::string VSSBWord::str() const {
  if (letters.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += letters[i].str();
  }
  return s;
}

VSSBWord parse_vssb(const std::string& text, int n) {
  std::vector<VSSBGen> letters;
  std::stringstream ss(text);
  std::string tok;
  std::vector<std::string> toks;
  while (ss >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "e") return VSSBWord(n, {});
  for (size_t p = 0; p < toks.size(); ++p) {
    const std::string& t = toks[p];
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("vssb syntax error at token " + std::to_string(p) +
                                  " ('" + t + "'): " + why);
    };
    if (t.size() < 2) fail("expected a<i>, b<i>, c<i>, C<i> or v<i>");
    VSSBKind kind;
    switch (t[0]) {
      case 'a': kind = VSSBKind::A; break;
      case 'b': kind = VSSBKind::B; break;
      case 'c': kind = VSSBKind::C; break;
      case 'C': kind = VSSBKind::CInv; break;
      case 'v': kind = VSSBKind::V; break;
      default: fail("unknown generator kind"); return VSSBWord(n, {});
    }
    size_t used = 0;
    int idx = 0;
    try {
      idx = std::stoi(t.substr(1), &used);
    } catch (const std::exception&) {
      fail("bad index");
    }
    if (used != t.size() - 1) fail("bad index");
    if (idx < 1 || idx >= n)
      fail("index out of range 1.." + std::to_string(n - 1));
    letters.push_back({kind, idx});
  }
  return VSSBWord(n, std::move(letters));
}

ActionState::ActionState(FreeKBraidWord g_, Permutation sigma_)
    : g(std::move(g_)), sigma(std::move(sigma_)) {
  if (g.k != 2) throw std::invalid_argument("ActionState: g must live in G_n^2");
  if (g.n != sigma.size()) throw std::invalid_argument("ActionState: mismatched n");
}

ActionState ActionState::initial(int n) {
  return ActionState(FreeKBraidWord(n, 2), Permutation(n));
}

ActionState act(const VSSBGen& gen, const ActionState& s) {
  const int n = s.g.n;
  switch (gen.kind) {
    case VSSBKind::A:
    case VSSBKind::B:
      return s;
    case VSSBKind::V:
      return ActionState(s.g,
                         s.sigma.after(Permutation::transposition(n, gen.index, gen.index + 1)));
    case VSSBKind::C:
    case VSSBKind::CInv: {
      int p = s.sigma.apply1(gen.index);
      int q = s.sigma.apply1(gen.index + 1);
      if (p > q) std::swap(p, q);
      FreeKBraidWord g(n, 2);
      g.push(KSubset(n, {p, q}));
      g.letters.insert(g.letters.end(), s.g.letters.begin(), s.g.letters.end());
      return ActionState(std::move(g),
                         s.sigma.after(Permutation::transposition(n, gen.index, gen.index + 1)));
    }
  }
  throw std::logic_error("act: unreachable");
}

ActionState act_word(const VSSBWord& w, const ActionState& s) {
  ActionState cur = s;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = act(*it, cur);
  return cur;
}

Permutation rho(const VSSBWord& w) {
  Permutation f(w.n);
  for (const auto& g : w.letters) {
    if (g.kind == VSSBKind::A || g.kind == VSSBKind::B) continue;
    f = Permutation::transposition(w.n, g.index, g.index + 1).after(f);
  }
  return f;
}

bool is_pure(const VSSBWord& w) { return rho(w).is_identity(); }

FreeKBraidWord phi(const VSSBWord& w) {
  return act_word(w, ActionState::initial(w.n)).g;
}

namespace {

VSSBGen G(VSSBKind k, int i) { return {k, i}; }

const std::vector<VSSBKind> kFourKinds = {VSSBKind::A, VSSBKind::B, VSSBKind::C,
                                          VSSBKind::CInv};
const std::vector<VSSBKind> kFiveKinds = {VSSBKind::A, VSSBKind::B, VSSBKind::C,
                                          VSSBKind::CInv, VSSBKind::V};

void add(std::vector<RelationPair>& out, int n, const std::string& label,
         std::vector<VSSBGen> l, std::vector<VSSBGen> r) {
  out.push_back({label, VSSBWord(n, std::move(l)), VSSBWord(n, std::move(r))});
}

std::string idx(int i) { return std::to_string(i); }

void a_relations(int n, std::vector<RelationPair>& out) {
  using K = VSSBKind;
  for (int i = 1; i < n; ++i) {
    add(out, n, "A1[i=" + idx(i) + ",cC]", {G(K::C, i), G(K::CInv, i)}, {});
    add(out, n, "A1[i=" + idx(i) + ",Cc]", {G(K::CInv, i), G(K::C, i)}, {});
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) <= 1) continue;
      for (K x : kFourKinds)
        for (K y : kFourKinds)
          add(out, n,
              "A2[i=" + idx(i) + ",j=" + idx(j) + ",x=" + kind_char(x) +
                  ",y=" + kind_char(y) + "]",
              {G(x, i), G(y, j)}, {G(y, j), G(x, i)});
    }
  for (int i = 1; i < n; ++i)
    for (int k : {i - 1, i + 1}) {
      if (k < 1 || k >= n) continue;
      for (K x : kFourKinds) {
        add(out, n, "A3[i=" + idx(i) + ",k=" + idx(k) + ",x=" + kind_char(x) + "]",
            {G(x, i), G(K::C, k), G(K::C, i)}, {G(K::C, k), G(K::C, i), G(x, k)});
        add(out, n, "A4[i=" + idx(i) + ",k=" + idx(k) + ",x=" + kind_char(x) + "]",
            {G(x, i), G(K::CInv, k), G(K::CInv, i)},
            {G(K::CInv, k), G(K::CInv, i), G(x, k)});
      }
      add(out, n, "A5[i=" + idx(i) + ",k=" + idx(k) + "]", {G(K::A, i), G(K::B, k)},
          {G(K::B, k), G(K::A, i)});
      add(out, n, "A11[i=" + idx(i) + ",k=" + idx(k) + "]",
          {G(K::A, i), G(K::B, k), G(K::C, i), G(K::C, k), G(K::C, i), G(K::C, i),
           G(K::C, k), G(K::C, i)},
          {G(K::A, i), G(K::B, k)});
    }
  for (int i = 3; i < n; ++i) {
    std::vector<VSSBGen> twist = {G(K::C, i - 1), G(K::C, i - 2), G(K::C, i),
                                  G(K::C, i - 1)};
    std::vector<VSSBGen> l6 = {G(K::A, i), G(K::B, i - 2)};
    l6.insert(l6.end(), twist.begin(), twist.end());
    l6.insert(l6.end(), twist.begin(), twist.end());
    add(out, n, "A6[i=" + idx(i) + "]", l6, {G(K::A, i), G(K::B, i - 2)});
    std::vector<VSSBGen> l7 = {G(K::B, i), G(K::A, i - 2)};
    l7.insert(l7.end(), twist.begin(), twist.end());
    l7.insert(l7.end(), twist.begin(), twist.end());
    add(out, n, "A7[i=" + idx(i) + "]", l7, {G(K::B, i), G(K::A, i - 2)});
  }
  for (int i = 1; i < n; ++i) {
    add(out, n, "A8[i=" + idx(i) + "]", {G(K::A, i), G(K::A, i)}, {G(K::A, i)});
    add(out, n, "A9[i=" + idx(i) + "]", {G(K::B, i), G(K::B, i)}, {G(K::B, i)});
    add(out, n, "A10[i=" + idx(i) + "]",
        {G(K::A, i), G(K::B, i), G(K::C, i), G(K::C, i)}, {G(K::A, i), G(K::B, i)});
  }
}

void r_relations(int n, std::vector<RelationPair>& out) {
  using K = VSSBKind;
  for (int i = 1; i < n; ++i) {
    add(out, n, "R1[i=" + idx(i) + ",cC]", {G(K::C, i), G(K::CInv, i)}, {});
    add(out, n, "R1[i=" + idx(i) + ",Cc]", {G(K::CInv, i), G(K::C, i)}, {});
    add(out, n, "R3[i=" + idx(i) + "]", {G(K::A, i), G(K::C, i)}, {G(K::C, i), G(K::A, i)});
    add(out, n, "R4[i=" + idx(i) + "]", {G(K::B, i), G(K::C, i)}, {G(K::C, i), G(K::B, i)});
    add(out, n, "R11[i=" + idx(i) + "]", {G(K::A, i), G(K::B, i)}, {G(K::B, i), G(K::A, i)});
    add(out, n, "R12[i=" + idx(i) + "]", {G(K::A, i), G(K::A, i)}, {G(K::A, i)});
    add(out, n, "R13[i=" + idx(i) + "]", {G(K::B, i), G(K::B, i)}, {G(K::B, i)});
    add(out, n, "R14[i=" + idx(i) + "]",
        {G(K::A, i), G(K::B, i), G(K::C, i), G(K::C, i)}, {G(K::A, i), G(K::B, i)});
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) <= 1) continue;
      for (K x : kFourKinds)
        for (K y : kFourKinds)
          add(out, n,
              "R2[i=" + idx(i) + ",j=" + idx(j) + ",x=" + kind_char(x) +
                  ",y=" + kind_char(y) + "]",
              {G(x, i), G(y, j)}, {G(y, j), G(x, i)});
    }
  for (int i = 1; i + 1 < n; ++i) {
    add(out, n, "R5[i=" + idx(i) + "]",
        {G(K::C, i + 1), G(K::C, i), G(K::C, i + 1)},
        {G(K::C, i), G(K::C, i + 1), G(K::C, i)});
    add(out, n, "R6[i=" + idx(i) + "]",
        {G(K::A, i + 1), G(K::C, i), G(K::C, i + 1)},
        {G(K::C, i), G(K::C, i + 1), G(K::A, i)});
    add(out, n, "R7[i=" + idx(i) + "]",
        {G(K::B, i + 1), G(K::C, i), G(K::C, i + 1)},
        {G(K::C, i), G(K::C, i + 1), G(K::B, i)});
    add(out, n, "R8[i=" + idx(i) + "]",
        {G(K::A, i), G(K::C, i + 1), G(K::C, i)},
        {G(K::C, i + 1), G(K::C, i), G(K::A, i + 1)});
    add(out, n, "R9[i=" + idx(i) + "]",
        {G(K::B, i), G(K::C, i + 1), G(K::C, i)},
        {G(K::C, i + 1), G(K::C, i), G(K::B, i + 1)});
    add(out, n, "R10[i=" + idx(i) + "]", {G(K::A, i), G(K::B, i + 1)},
        {G(K::B, i + 1), G(K::A, i)});
    std::vector<VSSBGen> twist = {G(K::C, i), G(K::C, i + 1), G(K::C, i)};
    std::vector<VSSBGen> l15 = {G(K::A, i), G(K::B, i + 1)};
    l15.insert(l15.end(), twist.begin(), twist.end());
    l15.insert(l15.end(), twist.begin(), twist.end());
    add(out, n, "R15[i=" + idx(i) + "]", l15, {G(K::A, i), G(K::B, i + 1)});
  }
  for (int i = 1; i + 2 < n; ++i) {
    std::vector<VSSBGen> twist = {G(K::C, i + 1), G(K::C, i), G(K::C, i + 2),
                                  G(K::C, i + 1)};
    std::vector<VSSBGen> l16 = {G(K::A, i), G(K::B, i + 2)};
    l16.insert(l16.end(), twist.begin(), twist.end());
    l16.insert(l16.end(), twist.begin(), twist.end());
    add(out, n, "R16[i=" + idx(i) + "]", l16, {G(K::A, i), G(K::B, i + 2)});
  }
}

void v_relations(int n, std::vector<RelationPair>& out) {
  using K = VSSBKind;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) <= 1) continue;
      for (K x : kFiveKinds)
        add(out, n, "V1[i=" + idx(i) + ",j=" + idx(j) + ",x=" + kind_char(x) + "]",
            {G(K::V, i), G(x, j)}, {G(x, j), G(K::V, i)});
    }
  for (int i = 1; i < n; ++i)
    add(out, n, "V2[i=" + idx(i) + "]", {G(K::V, i), G(K::V, i)}, {});
  for (int i = 1; i < n; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= n) continue;
      for (K x : kFiveKinds)
        add(out, n, "V3[i=" + idx(i) + ",j=" + idx(j) + ",x=" + kind_char(x) + "]",
            {G(x, i), G(K::V, j), G(K::V, i)}, {G(K::V, j), G(K::V, i), G(x, j)});
    }
  for (int i = 1; i < n; ++i)
    for (K x : {K::A, K::B})
      add(out, n, "V4[i=" + idx(i) + ",x=" + kind_char(x) + "]",
          {G(x, i), G(K::V, i)}, {G(K::V, i), G(x, i)});
}

}  // namespace

std::vector<RelationPair> relations(int n, RelationFamily family) {
  if (n < 2) throw std::invalid_argument("relations: need n >= 2");
  std::vector<RelationPair> out;
  switch (family) {
    case RelationFamily::A: a_relations(n, out); break;
    case RelationFamily::R: r_relations(n, out); break;
    case RelationFamily::V: v_relations(n, out); break;
    case RelationFamily::AV:
      a_relations(n, out);
      v_relations(n, out);
      break;
  }
  std::sort(out.begin(), out.end(),
            [](const RelationPair& a, const RelationPair& b) { return a.label < b.label; });
  return out;
}

RhoReport check_rho_respects(int n, RelationFamily family) {
  RhoReport rep;
  for (const auto& r : relations(n, family)) {
    ++rep.total;
    if (rho(r.left) != rho(r.right)) rep.failures.push_back(r.label);
  }
  return rep;
}

namespace {

std::vector<ActionState> sample_states(int n, int extra) {
  std::vector<ActionState> states;
  states.push_back(ActionState::initial(n));
  if (extra <= 0) return states;

  FreeKBraidWord g1(n, 2);
  g1.push(KSubset(n, {1, 2}));
  states.emplace_back(g1, Permutation(n));

  states.emplace_back(FreeKBraidWord(n, 2), Permutation::transposition(n, 1, 2));

  if (n >= 3) {
    FreeKBraidWord g2(n, 2);
    g2.push(KSubset(n, {1, 2}));
    g2.push(KSubset(n, {2, 3}));
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    states.emplace_back(g2, Permutation(cyc));
  }

  FreeKBraidWord g3(n, 2);
  g3.push(KSubset(n, {1, n}));
  std::vector<int> rev(n);
  for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
  states.emplace_back(g3, Permutation(rev));

  if (static_cast<int>(states.size()) > extra + 1) states.resize(extra + 1);
  return states;
}

std::vector<VSSBWord> pure_samples(int n) {
  using K = VSSBKind;
  std::vector<VSSBWord> base;
  base.emplace_back(n, std::vector<VSSBGen>{});
  base.emplace_back(n, std::vector<VSSBGen>{G(K::V, 1), G(K::V, 1)});
  base.emplace_back(n, std::vector<VSSBGen>{G(K::C, 1), G(K::CInv, 1)});
  base.emplace_back(n, std::vector<VSSBGen>{G(K::A, 1), G(K::B, 1)});
  if (n >= 3)
    base.emplace_back(n, std::vector<VSSBGen>{G(K::C, 1), G(K::V, 2), G(K::V, 2),
                                              G(K::CInv, 1), G(K::A, 2)});
  std::vector<VSSBWord> out = base;
  for (const auto& u : base)
    for (const auto& w : base) out.push_back(u.concat(w));
  return out;
}

}  // namespace

PhiReport check_phi_well_defined(int n, RelationFamily family, int extra_states,
                                 const EqOptions& eq) {
  PhiReport rep;
  auto states = sample_states(n, extra_states);
  rep.states_per_relation = static_cast<int>(states.size());

  for (const auto& r : relations(n, family)) {
    PhiRelationVerdict v;
    v.label = r.label;
    v.verdict = Verdict::Equal;
    for (const auto& s : states) {
      ActionState ls = act_word(r.left, s);
      ActionState rs = act_word(r.right, s);
      v.max_g_length = std::max({v.max_g_length, ls.g.size(), rs.g.size()});
      if (ls.sigma != rs.sigma) {
        v.verdict = Verdict::Distinct;
        v.detail = "sigma-components differ";
        break;
      }
      EqResult er = equal_bounded(ls.g, rs.g, eq);
      if (er.verdict == Verdict::Distinct) {
        v.verdict = Verdict::Distinct;
        v.detail = "g-components separated: " + er.witness;
        break;
      }
      if (er.verdict == Verdict::Unknown && v.verdict == Verdict::Equal) {
        v.verdict = Verdict::Unknown;
        v.detail = "bounded search exhausted";
      }
    }
    if (v.verdict == Verdict::Distinct) ++rep.failures;
    if (v.verdict == Verdict::Unknown) ++rep.unknowns;
    rep.relations.push_back(std::move(v));
  }

  rep.multiplicativity_pass = true;
  for (const auto& u : pure_samples(n)) {
    if (!is_pure(u)) continue;
    for (const auto& w : pure_samples(n)) {
      if (!is_pure(w)) continue;
      if (phi(u.concat(w)) != phi(u).concat(phi(w))) {
        rep.multiplicativity_pass = false;
        break;
      }
    }
    if (!rep.multiplicativity_pass) break;
  }
  return rep;
}

int vssb_invariant(const VSSBWord& w, const FiniteKBiquandle& B, const Tuple& chi1,
                   const Tuple& chi2) {
  if (B.k() != 2) throw std::invalid_argument("vssb_invariant: biquandle must have k = 2");
  if (static_cast<int>(chi1.size()) != w.n || static_cast<int>(chi2.size()) != w.n)
    throw std::invalid_argument("vssb_invariant: color tuples must have n entries");
  return binding_number(phi(w), B, chi1, chi2);
}

}  // namespace fkb
