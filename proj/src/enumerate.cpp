#include "fkb/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fkb/subset.hpp"

namespace fkb {

namespace {

long ipow(int b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<Tuple> sorted_reps(int k, int m) {
  std::vector<Tuple> reps;
  Tuple cur(k, 0);
  while (true) {
    reps.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == m - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[i];
  }
  return reps;
}

int encode(const Tuple& x, int m) {
  int c = 0;
  for (int v : x) c = c * m + v;
  return c;
}

Tuple decode(int code, int k, int m) {
  Tuple x(k);
  for (int i = k - 1; i >= 0; --i) {
    x[i] = code % m;
    code /= m;
  }
  return x;
}

bool block_constant(const Tuple& rep, const Tuple& img) {
  for (size_t i = 0; i + 1 < rep.size(); ++i)
    if (rep[i] == rep[i + 1] && img[i] != img[i + 1]) return false;
  return true;
}

struct Searcher {
  int k, m;
  std::vector<Tuple> reps;
  std::map<int, int> rep_index;  // sorted-tuple code -> rep position
  std::vector<int> img;          // image code per rep, -1 unassigned
  EnumerationStats stats;
  std::map<std::vector<int>, FiniteKBiquandle> found;  // canonical form -> entry
  std::atomic<long long>* budget_left = nullptr;

  Searcher(int k_, int m_) : k(k_), m(m_), reps(sorted_reps(k_, m_)) {
    for (size_t i = 0; i < reps.size(); ++i) rep_index[encode(reps[i], m)] = static_cast<int>(i);
    img.assign(reps.size(), -1);
  }

  // Assigns rep -> y and the image forced on sorted(y) by the involution
  // axiom. Returns the rep positions assigned (for undo), or nullopt-style
  // failure via the ok flag.
  bool assign(int rep_pos, const Tuple& y, std::vector<int>* touched) {
    const Tuple& rep = reps[rep_pos];
    if (!block_constant(rep, y)) return false;

    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return y[a] < y[b]; });
    Tuple s(k), z(k);
    for (int j = 0; j < k; ++j) {
      s[j] = y[idx[j]];
      z[j] = rep[idx[j]];
    }
    int s_pos = rep_index.at(encode(s, m));
    int y_code = encode(y, m);
    int z_code = encode(z, m);

    if (s_pos == rep_pos) {
      if (z != y) return false;
      img[rep_pos] = y_code;
      touched->push_back(rep_pos);
      return true;
    }
    if (img[s_pos] >= 0 && img[s_pos] != z_code) return false;
    if (img[s_pos] < 0 && !block_constant(s, z)) return false;
    img[rep_pos] = y_code;
    touched->push_back(rep_pos);
    if (img[s_pos] < 0) {
      img[s_pos] = z_code;
      touched->push_back(s_pos);
    }
    return true;
  }

  // Equivariance and involution hold by construction; only the
  // tetrahedron and far-commutativity axioms are filtered here, cheapest
  // first.
  bool passes_tetrahedron(const FiniteKBiquandle& B) const {
    const int N = k + 1;
    std::vector<std::vector<int>> hats(N);
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        if (j != i) hats[i - 1].push_back(j);
    const long tuples = ipow(m, N);
    for (long t = 0; t < tuples; ++t) {
      Tuple x(N);
      long c = t;
      for (int i = N - 1; i >= 0; --i) {
        x[i] = static_cast<int>(c % m);
        c /= m;
      }
      Tuple lhs = x, rhs = x;
      for (int i = 0; i < N; ++i) lhs = B.apply_on_subset(lhs, hats[i]);
      for (int i = N - 1; i >= 0; --i) rhs = B.apply_on_subset(rhs, hats[i]);
      if (lhs != rhs) return false;
    }
    return true;
  }

  bool passes_far_commutativity(const FiniteKBiquandle& B) const {
    if (k < 2) return true;
    const int N = 2 * k;
    auto windows = all_subsets(N, k);
    const long tuples = ipow(m, N);
    for (size_t a = 0; a < windows.size(); ++a)
      for (size_t b = a + 1; b < windows.size(); ++b) {
        if (intersection_size(windows[a], windows[b]) > k - 2) continue;
        for (long t = 0; t < tuples; ++t) {
          Tuple x(N);
          long c = t;
          for (int i = N - 1; i >= 0; --i) {
            x[i] = static_cast<int>(c % m);
            c /= m;
          }
          if (B.apply_on_subset(B.apply_on_subset(x, windows[a].elems), windows[b].elems) !=
              B.apply_on_subset(B.apply_on_subset(x, windows[b].elems), windows[a].elems))
            return false;
        }
      }
    return true;
  }

  void leaf() {
    ++stats.leaves;
    std::map<Tuple, Tuple> table;
    for (size_t i = 0; i < reps.size(); ++i) table[reps[i]] = decode(img[i], k, m);
    FiniteKBiquandle B = FiniteKBiquandle::from_orbit_table(k, m, table);
    if (!passes_tetrahedron(B)) {
      ++stats.tetrahedron_failures;
      return;
    }
    if (!passes_far_commutativity(B)) {
      ++stats.far_commutativity_failures;
      return;
    }
    auto canon = B.canonical_form();
    found.emplace(canon, FiniteKBiquandle::from_full_table(k, m, canon));
  }

  void dfs(size_t pos) {
    while (pos < reps.size() && img[pos] >= 0) ++pos;
    if (pos == reps.size()) {
      leaf();
      return;
    }
    const long total = ipow(m, k);
    for (int y_code = 0; y_code < total; ++y_code) {
      if (budget_left->fetch_sub(1) <= 0)
        throw std::runtime_error("enumerate_kbiquandles: budget exceeded");
      ++stats.candidates_visited;
      std::vector<int> touched;
      if (assign(static_cast<int>(pos), decode(y_code, k, m), &touched)) {
        dfs(pos + 1);
      }
      for (int t : touched) img[t] = -1;
    }
  }
};

std::vector<std::vector<std::pair<int, int>>> all_involution_pairings(int m) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self, int from) -> void {
    int i = from;
    while (i < m && used[i]) ++i;
    if (i == m) {
      out.push_back(cur);
      return;
    }
    used[i] = true;
    self(self, i + 1);  // i fixed
    for (int j = i + 1; j < m; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.emplace_back(i, j);
      self(self, i + 1);
      cur.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(rec, 0);
  return out;
}

// Raw B_{tau,mu} table without the construction-time axiom sweep; used for
// family-membership search where the target already passed check_axioms.
FiniteKBiquandle conditional_table(const Involution& tau,
                                   const std::set<std::vector<int>>& mu, int k) {
  long total = ipow(tau.m, k);
  std::vector<int> table(total);
  for (long code = 0; code < total; ++code) {
    Tuple x = decode(static_cast<int>(code), k, tau.m);
    if (mu.count(multiplicity_vector(tau, x)))
      table[code] = encode(tau.apply(x), tau.m);
    else
      table[code] = static_cast<int>(code);
  }
  return FiniteKBiquandle::from_full_table(k, tau.m, std::move(table));
}

}  // namespace

std::string tag_name(BiquandleTag tag) {
  switch (tag) {
    case BiquandleTag::Trivial: return "trivial";
    case BiquandleTag::ComponentwiseInvolution: return "componentwise-involution";
    case BiquandleTag::ConditionalInvolution: return "conditional-involution";
    case BiquandleTag::FlatDerived: return "flat-derived";
    case BiquandleTag::Other: return "other";
  }
  return "other";
}

BiquandleTag classify(const FiniteKBiquandle& B) {
  if (B.is_trivial()) return BiquandleTag::Trivial;
  const int k = B.k();
  const int m = B.m();

  // Every relabeling of a family member is again a family member (with
  // conjugated tau, mu), so exact-match search over all parameters is an
  // up-to-isomorphism test.
  auto pairings = all_involution_pairings(m);
  for (const auto& p : pairings) {
    if (p.empty()) continue;
    Involution tau(m, p);
    if (involution_kbiquandle(tau, k) == B) return BiquandleTag::ComponentwiseInvolution;
  }
  for (const auto& p : pairings) {
    if (p.empty()) continue;
    Involution tau(m, p);
    auto full = MultiplicitySet::full(k, tau.t());
    std::vector<std::vector<int>> vecs(full.members.begin(), full.members.end());
    if (vecs.size() > 20) continue;
    for (unsigned long sub = 1; sub < (1ul << vecs.size()); ++sub) {
      std::set<std::vector<int>> mu;
      for (size_t i = 0; i < vecs.size(); ++i)
        if (sub & (1ul << i)) mu.insert(vecs[i]);
      if (conditional_table(tau, mu, k) == B) return BiquandleTag::ConditionalInvolution;
    }
  }
  if (k == 3 && m <= 3) {
    // The k>=2 identity x*y = x o y forces star = circ on any admissible
    // flat table, so scanning single-operation tables is exhaustive.
    long tables = ipow(m, m * m);
    for (long t = 0; t < tables; ++t) {
      std::vector<int> op(m * m);
      long c = t;
      for (int i = m * m - 1; i >= 0; --i) {
        op[i] = static_cast<int>(c % m);
        c /= m;
      }
      FlatBiquandle F(m, op, op);
      if (!flat_check(F, 3).all_pass()) continue;
      if (flat_derived3(F) == B) return BiquandleTag::FlatDerived;
    }
  }
  return BiquandleTag::Other;
}

EnumerationResult enumerate_kbiquandles(int m, int k, const EnumerateOptions& opts) {
  if (m < 1 || k < 1) throw std::invalid_argument("enumerate_kbiquandles: need m,k >= 1");
  EnumerationResult result;
  result.m = m;
  result.k = k;
  result.nontrivial_only = opts.nontrivial_only;

  std::atomic<long long> budget_left{opts.budget};

  // Root branches: candidate images of the first representative (0,...,0),
  // which must be constant tuples.
  std::vector<int> root_candidates;
  for (int c = 0; c < m; ++c) root_candidates.push_back(encode(Tuple(k, c), m));

  int jobs = std::max(1, opts.jobs);
  jobs = std::min<int>(jobs, static_cast<int>(root_candidates.size()));

  auto run_branches = [&](const std::vector<int>& branches) {
    Searcher s(k, m);
    s.budget_left = &budget_left;
    for (int y_code : branches) {
      ++s.stats.candidates_visited;
      std::vector<int> touched;
      if (s.assign(0, decode(y_code, k, m), &touched)) s.dfs(1);
      for (int t : touched) s.img[t] = -1;
    }
    return std::pair(std::move(s.found), s.stats);
  };

  std::map<std::vector<int>, FiniteKBiquandle> found;
  EnumerationStats stats;
  if (jobs == 1) {
    auto [f, st] = run_branches(root_candidates);
    found = std::move(f);
    stats = st;
  } else {
    std::vector<std::vector<int>> parts(jobs);
    for (size_t i = 0; i < root_candidates.size(); ++i)
      parts[i % jobs].push_back(root_candidates[i]);
    std::vector<std::future<std::pair<std::map<std::vector<int>, FiniteKBiquandle>,
                                      EnumerationStats>>> futs;
    for (int j = 0; j < jobs; ++j)
      futs.push_back(std::async(std::launch::async, run_branches, parts[j]));
    for (auto& f : futs) {
      auto [fo, st] = f.get();
      found.insert(fo.begin(), fo.end());
      stats.candidates_visited += st.candidates_visited;
      stats.leaves += st.leaves;
      stats.far_commutativity_failures += st.far_commutativity_failures;
      stats.tetrahedron_failures += st.tetrahedron_failures;
    }
  }

  for (auto& [canon, B] : found) {
    if (opts.nontrivial_only && B.is_trivial()) continue;
    result.entries.push_back(B);
    result.tags.push_back(classify(B));
  }
  result.stats = stats;
  return result;
}

}  // namespace fkb
