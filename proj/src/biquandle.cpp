#include "fkb/biquandle.hpp"

#include <algorithm>
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

std::string tuple_str(const Tuple& x) {
  std::string s = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  return s + ")";
}

std::vector<int> stable_argsort(const Tuple& x) {
  std::vector<int> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return x[a] < x[b]; });
  return idx;
}

// Positions holding equal values in the sorted tuple rep must hold equal
// values in img; this is exactly invariance of img under the stabilizer
// of rep in the symmetric group.
bool stabilizer_compatible(const Tuple& rep, const Tuple& img) {
  for (size_t i = 0; i + 1 < rep.size(); ++i)
    if (rep[i] == rep[i + 1] && img[i] != img[i + 1]) return false;
  return true;
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

}  // namespace

Involution::Involution(int m_, std::vector<std::pair<int, int>> transpositions_)
    : m(m_), transpositions(std::move(transpositions_)) {
  std::vector<bool> used(m, false);
  for (auto [p, q] : transpositions) {
    if (p < 0 || q < 0 || p >= m || q >= m || p == q)
      throw std::invalid_argument("Involution: bad transposition");
    if (used[p] || used[q])
      throw std::invalid_argument("Involution: transpositions must be disjoint");
    used[p] = used[q] = true;
  }
}

int Involution::apply(int x) const {
  for (auto [p, q] : transpositions) {
    if (x == p) return q;
    if (x == q) return p;
  }
  return x;
}

Tuple Involution::apply(const Tuple& x) const {
  Tuple y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = apply(x[i]);
  return y;
}

std::vector<int> multiplicity_vector(const Involution& tau, const Tuple& x) {
  std::vector<int> mv(tau.t(), 0);
  for (int v : x) {
    for (int i = 0; i < tau.t(); ++i) {
      if (v == tau.transpositions[i].first || v == tau.transpositions[i].second) {
        ++mv[i];
        break;
      }
    }
  }
  return mv;
}

MultiplicitySet::MultiplicitySet(int k_, int t_, std::set<std::vector<int>> members_)
    : k(k_), t(t_), members(std::move(members_)) {
  for (const auto& v : members) {
    if (static_cast<int>(v.size()) != t)
      throw std::invalid_argument("MultiplicitySet: vector has wrong length");
    int sum = 0;
    for (int e : v) {
      if (e < 0) throw std::invalid_argument("MultiplicitySet: negative entry");
      sum += e;
    }
    if (sum < 1 || sum > k)
      throw std::invalid_argument("MultiplicitySet: vector outside M_k (sum must be in 1..k)");
  }
}

MultiplicitySet MultiplicitySet::full(int k, int t) {
  std::set<std::vector<int>> out;
  std::vector<int> cur(t, 0);
  // Enumerate all nonnegative vectors with entries <= k, keep sums in 1..k.
  while (true) {
    int sum = std::accumulate(cur.begin(), cur.end(), 0);
    if (sum >= 1 && sum <= k) out.insert(cur);
    int i = t - 1;
    while (i >= 0 && cur[i] == k) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < t; ++j) cur[j] = 0;
  }
  return MultiplicitySet(k, t, std::move(out));
}

int FiniteKBiquandle::encode(const Tuple& x) const {
  int code = 0;
  for (int v : x) {
    if (v < 0 || v >= m_) throw std::invalid_argument("tuple entry out of carrier");
    code = code * m_ + v;
  }
  return code;
}

Tuple FiniteKBiquandle::decode(int code) const {
  Tuple x(k_);
  for (int i = k_ - 1; i >= 0; --i) {
    x[i] = code % m_;
    code /= m_;
  }
  return x;
}

FiniteKBiquandle FiniteKBiquandle::from_orbit_table(int k, int m,
                                                    const std::map<Tuple, Tuple>& table) {
  if (k < 1 || m < 1) throw std::invalid_argument("from_orbit_table: need k,m >= 1");
  auto reps = sorted_reps(k, m);
  if (table.size() != reps.size())
    throw std::invalid_argument("from_orbit_table: table must cover every sorted tuple exactly once");
  FiniteKBiquandle B;
  B.k_ = k;
  B.m_ = m;
  B.full_.assign(ipow(m, k), -1);
  for (const auto& rep : reps) {
    auto it = table.find(rep);
    if (it == table.end())
      throw std::invalid_argument("from_orbit_table: missing representative " + tuple_str(rep));
    const Tuple& img = it->second;
    if (static_cast<int>(img.size()) != k)
      throw std::invalid_argument("from_orbit_table: image has wrong arity");
    if (!stabilizer_compatible(rep, img))
      throw std::invalid_argument("from_orbit_table: image of " + tuple_str(rep) +
                                  " violates stabilizer compatibility");
    B.full_[B.encode(rep)] = B.encode(img);
  }
  // Equivariant extension to all tuples.
  for (int code = 0; code < static_cast<int>(B.full_.size()); ++code) {
    Tuple x = B.decode(code);
    auto idx = stable_argsort(x);
    Tuple s(k);
    for (int j = 0; j < k; ++j) s[j] = x[idx[j]];
    Tuple img_s = B.decode(B.full_[B.encode(s)]);
    Tuple y(k);
    for (int j = 0; j < k; ++j) y[idx[j]] = img_s[j];
    B.full_[code] = B.encode(y);
  }
  return B;
}

FiniteKBiquandle FiniteKBiquandle::from_full_table(int k, int m, std::vector<int> table) {
  if (static_cast<long>(table.size()) != ipow(m, k))
    throw std::invalid_argument("from_full_table: wrong table size");
  FiniteKBiquandle B;
  B.k_ = k;
  B.m_ = m;
  B.full_ = std::move(table);
  for (int code : B.full_)
    if (code < 0 || code >= static_cast<int>(B.full_.size()))
      throw std::invalid_argument("from_full_table: image code out of range");
  return B;
}

FiniteKBiquandle FiniteKBiquandle::trivial(int k, int m) {
  std::vector<int> t(ipow(m, k));
  std::iota(t.begin(), t.end(), 0);
  return from_full_table(k, m, std::move(t));
}

Tuple FiniteKBiquandle::apply(const Tuple& x) const {
  if (static_cast<int>(x.size()) != k_)
    throw std::invalid_argument("apply: tuple has wrong arity");
  return decode(full_[encode(x)]);
}

Tuple FiniteKBiquandle::apply_on_subset(const Tuple& x, const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != k_)
    throw std::invalid_argument("apply_on_subset: index set must have k elements");
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > static_cast<int>(x.size()))
      throw std::invalid_argument("apply_on_subset: index out of range");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw std::invalid_argument("apply_on_subset: indices must be strictly increasing");
  }
  Tuple sel(k_);
  for (int j = 0; j < k_; ++j) sel[j] = x[idx[j] - 1];
  Tuple img = apply(sel);
  Tuple y = x;
  for (int j = 0; j < k_; ++j) y[idx[j] - 1] = img[j];
  return y;
}

bool FiniteKBiquandle::is_trivial() const {
  for (int code = 0; code < static_cast<int>(full_.size()); ++code)
    if (full_[code] != code) return false;
  return true;
}

std::map<Tuple, Tuple> FiniteKBiquandle::orbit_table() const {
  std::map<Tuple, Tuple> out;
  for (const auto& rep : sorted_reps(k_, m_)) out[rep] = apply(rep);
  return out;
}

FiniteKBiquandle FiniteKBiquandle::relabel(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != m_)
    throw std::invalid_argument("relabel: bijection has wrong size");
  std::vector<int> inv(m_);
  for (int i = 0; i < m_; ++i) inv[sigma[i]] = i;
  std::vector<int> table(full_.size());
  for (int code = 0; code < static_cast<int>(full_.size()); ++code) {
    Tuple x = decode(code);
    Tuple xi(k_);
    for (int j = 0; j < k_; ++j) xi[j] = inv[x[j]];
    Tuple y = apply(xi);
    Tuple ys(k_);
    for (int j = 0; j < k_; ++j) ys[j] = sigma[y[j]];
    table[code] = encode(ys);
  }
  return from_full_table(k_, m_, std::move(table));
}

std::vector<int> FiniteKBiquandle::canonical_form() const {
  std::vector<int> sigma(m_);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> cand = relabel(sigma).full_;
    if (best.empty() || cand < best) best = std::move(cand);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

AxiomReport check_axioms(const FiniteKBiquandle& B) {
  AxiomReport rep;
  const int k = B.k();
  const int m = B.m();
  const long total = B.table_size();

  // (1) equivariance: pi o B = B o pi for every pi in Sigma_k.
  {
    std::vector<int> pi(k);
    std::iota(pi.begin(), pi.end(), 0);
    bool done = false;
    do {
      for (int code = 0; code < total && !done; ++code) {
        Tuple x = B.decode(code);
        Tuple px(k);
        for (int i = 0; i < k; ++i) px[i] = x[pi[i]];
        Tuple lhs = B.apply(px);
        Tuple y = B.apply(x);
        Tuple rhs(k);
        for (int i = 0; i < k; ++i) rhs[i] = y[pi[i]];
        if (lhs != rhs) {
          rep.equivariance.pass = false;
          rep.equivariance.counterexample = "x=" + tuple_str(x);
          done = true;
        }
      }
    } while (!done && std::next_permutation(pi.begin(), pi.end()));
  }

  // (2) B o B = id.
  for (int code = 0; code < total; ++code) {
    if (B.apply_code(B.apply_code(code)) != code) {
      rep.involution.pass = false;
      rep.involution.counterexample = "x=" + tuple_str(B.decode(code));
      break;
    }
  }

  // (3) far commutativity: windowed operators with overlap <= k-2 commute,
  // checked on tuples of length 2k over every such pair of windows.
  if (k >= 1) {
    const int N = 2 * k;
    auto windows = all_subsets(N, k);
    const long tuples = ipow(m, N);
    bool done = false;
    for (size_t a = 0; a < windows.size() && !done; ++a) {
      for (size_t b = a + 1; b < windows.size() && !done; ++b) {
        if (intersection_size(windows[a], windows[b]) > k - 2) continue;
        for (long t = 0; t < tuples && !done; ++t) {
          Tuple x(N);
          long c = t;
          for (int i = N - 1; i >= 0; --i) {
            x[i] = static_cast<int>(c % m);
            c /= m;
          }
          Tuple ab = B.apply_on_subset(B.apply_on_subset(x, windows[a].elems),
                                       windows[b].elems);
          Tuple ba = B.apply_on_subset(B.apply_on_subset(x, windows[b].elems),
                                       windows[a].elems);
          if (ab != ba) {
            rep.far_commutativity.pass = false;
            rep.far_commutativity.counterexample =
                "windows " + windows[a].str() + "," + windows[b].str() +
                " x=" + tuple_str(x);
            done = true;
          }
        }
      }
    }
  }

  // (4) tetrahedron on X^{k+1}: hats applied in order 1..k+1 vs k+1..1.
  {
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
      if (lhs != rhs) {
        rep.tetrahedron.pass = false;
        rep.tetrahedron.counterexample = "x=" + tuple_str(x);
        break;
      }
    }
  }

  return rep;
}

FiniteKBiquandle gaussian(int k) {
  if (k < 1) throw std::invalid_argument("gaussian: need k >= 1");
  long total = ipow(2, k);
  std::vector<int> table(total);
  for (long code = 0; code < total; ++code)
    table[code] = static_cast<int>((total - 1) ^ code);  // flip every bit
  return FiniteKBiquandle::from_full_table(k, 2, std::move(table));
}

FiniteKBiquandle involution_kbiquandle(const Involution& tau, int k) {
  if (k < 1) throw std::invalid_argument("involution_kbiquandle: need k >= 1");
  FiniteKBiquandle base = FiniteKBiquandle::trivial(k, tau.m);
  long total = base.table_size();
  std::vector<int> table(total);
  for (long code = 0; code < total; ++code)
    table[code] = base.encode(tau.apply(base.decode(static_cast<int>(code))));
  return FiniteKBiquandle::from_full_table(k, tau.m, std::move(table));
}

FiniteKBiquandle conditional_involution(const Involution& tau,
                                        const MultiplicitySet& mu, int k) {
  if (mu.k != k || mu.t != tau.t())
    throw std::invalid_argument("conditional_involution: mu does not match (tau, k)");
  FiniteKBiquandle base = FiniteKBiquandle::trivial(k, tau.m);
  long total = base.table_size();
  std::vector<int> table(total);
  for (long code = 0; code < total; ++code) {
    Tuple x = base.decode(static_cast<int>(code));
    if (mu.contains(multiplicity_vector(tau, x)))
      table[code] = base.encode(tau.apply(x));
    else
      table[code] = static_cast<int>(code);
  }
  auto B = FiniteKBiquandle::from_full_table(k, tau.m, std::move(table));
  // Desk-scale constructions are re-verified against the axioms outright.
  if (ipow(tau.m, 2 * k) <= 70000 && !check_axioms(B).all_pass())
    throw std::logic_error("conditional_involution: axiom verification failed");
  return B;
}

bool is_isomorphic(const FiniteKBiquandle& a, const FiniteKBiquandle& b) {
  if (a.k() != b.k()) throw std::invalid_argument("is_isomorphic: arity mismatch");
  if (a.m() != b.m()) return false;
  std::vector<int> sigma(a.m());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    if (a.relabel(sigma) == b) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

FlatBiquandle::FlatBiquandle(int m_, std::vector<int> star_, std::vector<int> circ_)
    : m(m_), star(std::move(star_)), circ(std::move(circ_)) {
  if (static_cast<int>(star.size()) != m * m || static_cast<int>(circ.size()) != m * m)
    throw std::invalid_argument("FlatBiquandle: wrong table size");
  for (int v : star)
    if (v < 0 || v >= m) throw std::invalid_argument("FlatBiquandle: entry out of carrier");
  for (int v : circ)
    if (v < 0 || v >= m) throw std::invalid_argument("FlatBiquandle: entry out of carrier");
}

FlatReport flat_check(const FlatBiquandle& F, int k) {
  FlatReport rep;
  auto check2 = [&](const std::string& name, auto pred) {
    FlatReport::Entry e;
    e.identity = name;
    for (int x = 0; x < F.m && e.pass; ++x)
      for (int y = 0; y < F.m && e.pass; ++y)
        if (!pred(x, y)) {
          e.pass = false;
          e.counterexample = "x=" + std::to_string(x) + ",y=" + std::to_string(y);
        }
    rep.entries.push_back(std::move(e));
  };
  auto check3 = [&](const std::string& name, auto pred) {
    FlatReport::Entry e;
    e.identity = name;
    for (int x = 0; x < F.m && e.pass; ++x)
      for (int y = 0; y < F.m && e.pass; ++y)
        for (int z = 0; z < F.m && e.pass; ++z)
          if (!pred(x, y, z)) {
            e.pass = false;
            e.counterexample = "x=" + std::to_string(x) + ",y=" + std::to_string(y) +
                               ",z=" + std::to_string(z);
          }
    rep.entries.push_back(std::move(e));
  };
  if (k >= 2) {
    check2("x = (x o y) * (y * x)",
           [&](int x, int y) { return F.s(F.c(x, y), F.s(y, x)) == x; });
    check2("x * y = x o y", [&](int x, int y) { return F.s(x, y) == F.c(x, y); });
  }
  if (k >= 3) {
    check3("x * (y o z) = x * y",
           [&](int x, int y, int z) { return F.s(x, F.c(y, z)) == F.s(x, y); });
    check3("(x o y) * z = (x o z) * y",
           [&](int x, int y, int z) { return F.s(F.c(x, y), z) == F.s(F.c(x, z), y); });
  }
  return rep;
}

FiniteKBiquandle flat_derived3(const FlatBiquandle& F) {
  if (!flat_check(F, 3).all_pass())
    throw std::invalid_argument("flat_derived3: flat operations fail the required identities");
  const int m = F.m;
  std::vector<int> table(ipow(m, 3));
  for (int x1 = 0; x1 < m; ++x1)
    for (int x2 = 0; x2 < m; ++x2)
      for (int x3 = 0; x3 < m; ++x3) {
        // Splitting order (1,2), (1,3), (2,3).
        int y1 = F.c(F.c(x1, x2), x3);
        int y2 = F.c(F.s(x2, x1), F.s(x3, F.c(x1, x2)));
        int y3 = F.s(F.s(x3, F.c(x1, x2)), F.s(x2, x1));
        // Alternative splitting order (2,3), (1,3), (1,2).
        int a2 = F.c(x2, x3), a3 = F.s(x3, x2);
        int b1 = F.c(x1, a3), b3 = F.s(a3, x1);
        int d1 = F.c(b1, a2), d2 = F.s(a2, b1);
        if (y1 != d1 || y2 != d2 || y3 != b3)
          throw std::logic_error("flat_derived3: splitting orders disagree at (" +
                                 std::to_string(x1) + "," + std::to_string(x2) + "," +
                                 std::to_string(x3) + ")");
        table[(x1 * m + x2) * m + x3] = (y1 * m + y2) * m + y3;
      }
  return FiniteKBiquandle::from_full_table(3, m, std::move(table));
}

}  // namespace fkb
