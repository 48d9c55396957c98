#include "fkb/moves.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fkb/biquandle.hpp"
#include "fkb/coloring.hpp"
#include "fkb/subset.hpp"

namespace fkb {

namespace {

std::string word_key(const FreeKBraidWord& w) {
  std::string key;
  for (int r : w.encode()) {
    key += std::to_string(r);
    key += ';';
  }
  return key;
}

bool is_tetrahedron_block(const std::vector<KSubset>& letters, size_t from, int k) {
  // k+1 distinct letters whose union has k+1 elements: then each letter is
  // a k-subset of the union and all k+1 such subsets occur exactly once.
  std::vector<int> uni;
  for (size_t i = from; i < from + static_cast<size_t>(k) + 1; ++i) {
    for (size_t j = from; j < i; ++j)
      if (letters[i] == letters[j]) return false;
    uni.insert(uni.end(), letters[i].elems.begin(), letters[i].elems.end());
  }
  std::sort(uni.begin(), uni.end());
  uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
  if (static_cast<int>(uni.size()) != k + 1) return false;
  for (size_t i = from; i < from + static_cast<size_t>(k) + 1; ++i)
    if (!std::includes(uni.begin(), uni.end(), letters[i].elems.begin(),
                       letters[i].elems.end()))
      return false;
  return true;
}

}  // namespace

std::vector<FreeKBraidWord> neighbors(const FreeKBraidWord& w) {
  std::vector<FreeKBraidWord> out;

  // Deletions of adjacent equal pairs.
  for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
    if (w.letters[i] == w.letters[i + 1]) {
      FreeKBraidWord v = w;
      v.letters.erase(v.letters.begin() + i, v.letters.begin() + i + 2);
      out.push_back(std::move(v));
    }
  }

  // Insertions of a_m a_m at every position.
  static thread_local std::vector<KSubset> subset_cache;
  static thread_local int cache_n = 0, cache_k = 0;
  if (cache_n != w.n || cache_k != w.k) {
    subset_cache = all_subsets(w.n, w.k);
    cache_n = w.n;
    cache_k = w.k;
  }
  for (size_t pos = 0; pos <= w.letters.size(); ++pos) {
    for (const auto& m : subset_cache) {
      FreeKBraidWord v = w;
      v.letters.insert(v.letters.begin() + pos, 2, m);
      out.push_back(std::move(v));
    }
  }

  // Far-commutativity swaps.
  for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
    if (intersection_size(w.letters[i], w.letters[i + 1]) < w.k - 1) {
      FreeKBraidWord v = w;
      std::swap(v.letters[i], v.letters[i + 1]);
      out.push_back(std::move(v));
    }
  }

  // Tetrahedron blocks: reverse any window of k+1 distinct letters carried
  // by a common (k+1)-set.
  if (w.letters.size() >= static_cast<size_t>(w.k) + 1) {
    for (size_t i = 0; i + w.k + 1 <= w.letters.size(); ++i) {
      if (is_tetrahedron_block(w.letters, i, w.k)) {
        FreeKBraidWord v = w;
        std::reverse(v.letters.begin() + i, v.letters.begin() + i + w.k + 1);
        if (v != w) out.push_back(std::move(v));
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const FreeKBraidWord& a, const FreeKBraidWord& b) {
    return a.encode() < b.encode();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Move-invariant separation by propagating colors through a few biquandles
// from the constructed families. All of them have pairwise commuting
// windowed operators, so the chi_out map is invariant under every move,
// including arbitrary-order tetrahedron reversals.
bool coloring_separates(const FreeKBraidWord& a, const FreeKBraidWord& b,
                        std::string* witness) {
  static thread_local std::map<int, std::vector<std::pair<std::string, FiniteKBiquandle>>>
      cache;
  auto& bqs = cache[a.k];
  if (bqs.empty()) {
    bqs.emplace_back("gaussian", gaussian(a.k));
    Involution tau(3, {{0, 1}});
    for (int j = 1; j <= a.k; ++j) {
      MultiplicitySet mu(a.k, 1, {{j}});
      bqs.emplace_back("conditional Z_3 mu={(" + std::to_string(j) + ")}",
                       conditional_involution(tau, mu, a.k));
    }
  }
  for (const auto& [name, B] : bqs) {
    long total = 1;
    bool exhaustive = true;
    for (int i = 0; i < a.n; ++i) {
      total *= B.m();
      if (total > 729) {
        exhaustive = false;
        break;
      }
    }
    long samples = exhaustive ? total : 64;
    for (long s = 0; s < samples; ++s) {
      Tuple chi(a.n);
      if (exhaustive) {
        long c = s;
        for (int i = a.n - 1; i >= 0; --i) {
          chi[i] = static_cast<int>(c % B.m());
          c /= B.m();
        }
      } else {
        for (int i = 0; i < a.n; ++i)
          chi[i] = static_cast<int>((s * 31 + i * 17 + (s >> 3)) % B.m());
      }
      if (propagate(a, B, chi).chi_out != propagate(b, B, chi).chi_out) {
        if (witness) {
          std::string cs;
          for (size_t i = 0; i < chi.size(); ++i) {
            if (i) cs += ',';
            cs += std::to_string(chi[i]);
          }
          *witness = "coloring through " + name + " separates at chi_in=(" + cs + ")";
        }
        return true;
      }
    }
  }
  return false;
}

struct SearchNode {
  FreeKBraidWord word;
  int parent = -1;
  int side = 0;  // 0: from w1, 1: from w2
};

std::vector<FreeKBraidWord> chain_to_root(const std::vector<SearchNode>& arena, int idx) {
  std::vector<FreeKBraidWord> chain;
  for (int i = idx; i >= 0; i = arena[i].parent) chain.push_back(arena[i].word);
  std::reverse(chain.begin(), chain.end());  // root .. idx
  return chain;
}

}  // namespace

EqResult equal_bounded(const FreeKBraidWord& w1, const FreeKBraidWord& w2,
                       const EqOptions& opts) {
  if (w1.n != w2.n || w1.k != w2.k)
    throw std::invalid_argument("equal_bounded: words must share (n, k)");

  EqResult res;

  std::vector<FreeKBraidWord> path1, path2;
  FreeKBraidWord r1 = free_reduce_path(w1, &path1);
  FreeKBraidWord r2 = free_reduce_path(w2, &path2);

  auto assemble = [&](const std::vector<FreeKBraidWord>& middle) {
    // middle runs from r1 to r2.
    std::vector<FreeKBraidWord> full = path1;
    full.insert(full.end(), middle.begin() + 1, middle.end());
    for (auto it = path2.rbegin() + 1; it != path2.rend(); ++it) full.push_back(*it);
    return full;
  };

  if (r1 == r2) {
    res.verdict = Verdict::Equal;
    res.path = path1;
    for (auto it = path2.rbegin() + 1; it != path2.rend(); ++it) res.path.push_back(*it);
    return res;
  }

  if (parity_vector(r1) != parity_vector(r2)) {
    res.verdict = Verdict::Distinct;
    res.witness = "parity vectors differ";
    return res;
  }

  if (opts.use_coloring && coloring_separates(r1, r2, &res.witness)) {
    res.verdict = Verdict::Distinct;
    return res;
  }

  const size_t maxlen =
      std::max(r1.size(), r2.size()) + static_cast<size_t>(std::max(opts.depth, 0));

  std::vector<SearchNode> arena;
  std::unordered_map<std::string, int> visited;
  arena.push_back({r1, -1, 0});
  visited[word_key(r1)] = 0;
  arena.push_back({r2, -1, 1});
  visited[word_key(r2)] = 1;
  std::vector<int> frontier[2] = {{0}, {1}};
  int depth[2] = {0, 0};
  res.nodes_visited = 2;

  while (depth[0] + depth[1] < opts.depth && res.nodes_visited < opts.nodes) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) side = 1 - side;
    if (frontier[side].empty()) break;

    std::vector<int> next;
    for (int idx : frontier[side]) {
      for (auto& nb : neighbors(arena[idx].word)) {
        if (nb.size() > maxlen) continue;
        std::string key = word_key(nb);
        auto it = visited.find(key);
        if (it != visited.end()) {
          if (arena[it->second].side != side) {
            // Paths meet: idx (this side) is adjacent to it->second (other).
            auto c1 = chain_to_root(arena, side == 0 ? idx : it->second);
            auto c2 = chain_to_root(arena, side == 0 ? it->second : idx);
            std::vector<FreeKBraidWord> middle = c1;
            middle.insert(middle.end(), c2.rbegin(), c2.rend());
            res.verdict = Verdict::Equal;
            res.path = assemble(middle);
            return res;
          }
          continue;
        }
        if (res.nodes_visited >= opts.nodes) break;
        int nidx = static_cast<int>(arena.size());
        visited.emplace(std::move(key), nidx);
        arena.push_back({std::move(nb), idx, side});
        next.push_back(nidx);
        ++res.nodes_visited;
      }
      if (res.nodes_visited >= opts.nodes) break;
    }
    frontier[side] = std::move(next);
    ++depth[side];
  }

  res.verdict = Verdict::Unknown;
  return res;
}

}  // namespace fkb
