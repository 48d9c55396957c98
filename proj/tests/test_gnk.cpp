#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "fkb/graph.hpp"
#include "fkb/moves.hpp"
#include "fkb/subset.hpp"
#include "fkb/word.hpp"

using namespace fkb;

namespace {

FreeKBraidWord W(int n, int k, const std::string& text) { return parse_word(text, n, k); }

FreeKBraidWord random_word(std::mt19937& rng, int n, int k, int maxlen) {
  auto subs = all_subsets(n, k);
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<size_t> pick(0, subs.size() - 1);
  FreeKBraidWord w(n, k);
  int l = len(rng);
  for (int i = 0; i < l; ++i) w.push(subs[pick(rng)]);
  return w;
}

bool contains(const std::vector<FreeKBraidWord>& ws, const FreeKBraidWord& w) {
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

}  // namespace

TEST_CASE("word parsing round-trips and rejects bad input") {
  auto w = W(4, 2, "a{1,2} a{2,3}");
  CHECK(w.str() == "a{1,2} a{2,3}");
  CHECK(parse_word(w.str(), 4, 2) == w);
  CHECK(W(3, 2, "e").empty());
  CHECK_THROWS_AS(W(3, 2, "a{2,1}"), std::invalid_argument);
  CHECK_THROWS_AS(W(3, 2, "a{1,5}"), std::invalid_argument);
  CHECK_THROWS_AS(W(3, 2, "a{1,2,3}"), std::invalid_argument);
  auto f = parse_word_file("n=3 k=2\na{1,2} a{1,3}");
  CHECK(f.n == 3);
  CHECK(f.k == 2);
  CHECK(f.size() == 2);
}

TEST_CASE("free reduction cancels adjacent equal letters") {
  CHECK(free_reduce(W(2, 2, "a{1,2} a{1,2}")).empty());
  CHECK(free_reduce(W(3, 2, "a{1,2} a{1,3} a{1,3} a{2,3}")) == W(3, 2, "a{1,2} a{2,3}"));
  CHECK(free_reduce(W(3, 2, "e")).empty());
}

TEST_CASE("free reduction is idempotent on random words") {
  std::mt19937 rng(20260823);
  for (int i = 0; i < 200; ++i) {
    auto w = random_word(rng, 4, 2, 10);
    auto r = free_reduce(w);
    CHECK(free_reduce(r) == r);
  }
}

TEST_CASE("parity vector counts letters mod 2") {
  CHECK(parity_vector(W(2, 2, "a{1,2} a{1,2}")) == ParityVector{0});
  auto pv = parity_vector(W(3, 2, "a{1,2} a{2,3} a{2,3}"));
  ParityVector want(3, 0);
  want[KSubset(3, {1, 2}).rank()] = 1;
  CHECK(pv == want);
}

TEST_CASE("neighbors contains the expected moves") {
  CHECK(contains(neighbors(W(4, 2, "a{1,2} a{3,4}")), W(4, 2, "a{3,4} a{1,2}")));
  CHECK(contains(neighbors(W(3, 2, "a{1,2} a{1,3} a{2,3}")),
                 W(3, 2, "a{2,3} a{1,3} a{1,2}")));
  CHECK(contains(neighbors(W(2, 2, "e")), W(2, 2, "a{1,2} a{1,2}")));
}

TEST_CASE("neighbors is symmetric and preserves parity") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    auto w = random_word(rng, 4, 2, 6);
    for (const auto& v : neighbors(w)) {
      CHECK(parity_vector(v) == parity_vector(w));
      CHECK(contains(neighbors(v), w));
    }
  }
}

TEST_CASE("strand graphs have the right shape") {
  auto g0 = realize(W(3, 2, "e"));
  CHECK(g0.edge_count == 3);
  CHECK(g0.vertices.empty());

  auto g1 = realize(W(3, 3, "a{1,2,3}"));
  CHECK(g1.edge_count == 6);
  CHECK(g1.vertices.size() == 1);
  for (int s = 1; s <= 3; ++s) CHECK(g1.strand_edges[s - 1].size() == 2);

  auto g2 = realize(W(2, 2, "a{1,2} a{1,2}"));
  CHECK(g2.edge_count == 6);
  CHECK(g2.vertices.size() == 2);
  for (int s = 1; s <= 2; ++s) CHECK(g2.strand_edges[s - 1].size() == 3);
}

TEST_CASE("bounded equality certifies the tetrahedron pair") {
  auto r = equal_bounded(W(3, 2, "a{1,2} a{1,3} a{2,3}"), W(3, 2, "a{2,3} a{1,3} a{1,2}"));
  CHECK(r.verdict == Verdict::Equal);
  REQUIRE(!r.path.empty());
  CHECK(r.path.front() == W(3, 2, "a{1,2} a{1,3} a{2,3}"));
  CHECK(r.path.back() == W(3, 2, "a{2,3} a{1,3} a{1,2}"));
  for (size_t i = 0; i + 1 < r.path.size(); ++i)
    CHECK(contains(neighbors(r.path[i]), r.path[i + 1]));
}

TEST_CASE("bounded equality separates words with different parity") {
  auto r = equal_bounded(W(3, 2, "a{1,2}"), W(3, 2, "a{1,3}"));
  CHECK(r.verdict == Verdict::Distinct);
  CHECK(!r.witness.empty());
}

TEST_CASE("bounded equality on identical words needs no moves") {
  auto w = W(3, 2, "a{1,2} a{2,3}");
  auto r = equal_bounded(w, w);
  CHECK(r.verdict == Verdict::Equal);
  CHECK(r.path == std::vector<FreeKBraidWord>{w});
}

TEST_CASE("squares of ascending products over a full index set vanish") {
  // In G_3^2, (a{1,2} a{1,3} a{2,3})^2 = 1.
  auto abc = W(3, 2, "a{1,2} a{1,3} a{2,3}");
  CHECK(equal_bounded(abc.concat(abc), FreeKBraidWord(3, 2)).verdict == Verdict::Equal);
  // In G_4^3, (a{1,2,3} a{1,2,4} a{1,3,4} a{2,3,4})^2 = 1.
  auto abcd = W(4, 3, "a{1,2,3} a{1,2,4} a{1,3,4} a{2,3,4}");
  CHECK(equal_bounded(abcd.concat(abcd), FreeKBraidWord(4, 3)).verdict == Verdict::Equal);
}

TEST_CASE("equality and distinctness certificates never disagree") {
  std::mt19937 rng(99);
  EqOptions small;
  small.depth = 4;
  small.nodes = 5000;
  for (int i = 0; i < 80; ++i) {
    auto a = random_word(rng, 4, 2, 5);
    auto b = random_word(rng, 4, 2, 5);
    auto r = equal_bounded(a, b, small);
    if (r.verdict == Verdict::Equal) {
      REQUIRE(!r.path.empty());
      CHECK(r.path.front() == a);
      CHECK(r.path.back() == b);
      for (size_t j = 0; j + 1 < r.path.size(); ++j)
        CHECK(contains(neighbors(r.path[j]), r.path[j + 1]));
    }
    if (r.verdict == Verdict::Distinct) CHECK(!r.witness.empty());
  }
}
