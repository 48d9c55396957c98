#include <doctest.h>

#include <stdexcept>

#include <random>

#include "fkb/biquandle.hpp"
#include "fkb/vssb.hpp"
#include "fkb/word.hpp"

using namespace fkb;

namespace {

VSSBWord random_vssb(std::mt19937& rng, int n, int maxlen) {
  static const VSSBKind kinds[] = {VSSBKind::A, VSSBKind::B, VSSBKind::C, VSSBKind::CInv,
                                   VSSBKind::V};
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::vector<VSSBGen> letters;
  int l = len(rng);
  for (int i = 0; i < l; ++i) letters.push_back({kinds[kind(rng)], idx(rng)});
  return VSSBWord(n, letters);
}

ActionState random_state(std::mt19937& rng, int n) {
  FreeKBraidWord g(n, 2);
  std::uniform_int_distribution<int> len(0, 3);
  std::uniform_int_distribution<int> strand(1, n);
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    int a = strand(rng), b = strand(rng);
    if (a == b) b = (a % n) + 1;
    g.push(KSubset(n, {std::min(a, b), std::max(a, b)}));
  }
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return ActionState(g, Permutation(img));
}

bool has_label(const std::vector<RelationPair>& rels, const std::string& label) {
  for (const auto& r : rels)
    if (r.label == label) return true;
  return false;
}

}  // namespace

TEST_CASE("braid word parsing") {
  auto beta = parse_vssb("c1 a2 v3 C2 b1 C2", 4);
  CHECK(beta.str() == "c1 a2 v3 C2 b1 C2");
  CHECK(parse_vssb("", 4).letters.empty());
  CHECK(parse_vssb("e", 4).letters.empty());
  CHECK_THROWS_AS(parse_vssb("v9", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_vssb("x1", 4), std::invalid_argument);
}

TEST_CASE("permutation image of a braid word") {
  CHECK(rho(parse_vssb("c2", 4)).str() == "(2 3)");
  CHECK(rho(parse_vssb("v1 v1", 4)).is_identity());
  CHECK(rho(parse_vssb("c1 a2 v3 C2 b1 C2", 4)).str() == "(1 2)(3 4)");
  CHECK_FALSE(is_pure(parse_vssb("c1", 4)));
  CHECK(is_pure(parse_vssb("v1 v1", 4)));
  CHECK_FALSE(is_pure(parse_vssb("c1 a2 v3 C2 b1 C2", 4)));
}

TEST_CASE("single generators acting on a state") {
  auto s0 = ActionState::initial(4);
  auto s1 = act({VSSBKind::C, 1}, s0);
  CHECK(s1.g.str() == "a{1,2}");
  CHECK(s1.sigma.str() == "(1 2)");
  CHECK(act({VSSBKind::A, 2}, s1) == s1);
  CHECK(act({VSSBKind::B, 3}, s1) == s1);
  auto s2 = act({VSSBKind::V, 3}, s1);
  CHECK(s2.g == s1.g);
  CHECK(s2.sigma.str() == "(1 2)(3 4)");
}

TEST_CASE("the image in the free 2-braid group") {
  auto beta = parse_vssb("c1 a2 v3 C2 b1 C2", 4);
  CHECK(phi(beta).str() == "a{1,2} a{2,3} a{2,3}");
  CHECK(free_reduce(phi(beta)).str() == "a{1,2}");
  CHECK(phi(parse_vssb("a1 b2 v3 v1 a2", 4)).empty());
  CHECK(free_reduce(phi(parse_vssb("c2 C2", 4))).empty());
  CHECK(free_reduce(phi(parse_vssb("v1 c2 C2 v1", 5))).empty());
}

TEST_CASE("a word acts through its letters right to left") {
  std::mt19937 rng(31);
  for (int it = 0; it < 60; ++it) {
    int n = 3 + (it % 3);
    auto u = random_vssb(rng, n, 5);
    auto w = random_vssb(rng, n, 5);
    auto s = random_state(rng, n);
    CHECK(act_word(u.concat(w), s) == act_word(u, act_word(w, s)));
  }
}

TEST_CASE("acting on the initial state yields the two projections") {
  std::mt19937 rng(53);
  for (int it = 0; it < 60; ++it) {
    int n = 3 + (it % 3);
    auto w = random_vssb(rng, n, 6);
    auto s = act_word(w, ActionState::initial(n));
    CHECK(s.g == phi(w));
    CHECK(s.sigma == rho(w));
  }
}

TEST_CASE("rho turns concatenation into composition") {
  std::mt19937 rng(67);
  for (int it = 0; it < 60; ++it) {
    int n = 3 + (it % 3);
    auto u = random_vssb(rng, n, 6);
    auto w = random_vssb(rng, n, 6);
    CHECK(rho(u.concat(w)) == rho(w).after(rho(u)));
  }
}

TEST_CASE("relation instances expand the stated index ranges") {
  auto a2 = relations(2, RelationFamily::A);
  CHECK(has_label(a2, "A8[i=1]"));
  CHECK(has_label(a2, "A1[i=1,cC]"));
  for (const auto& r : a2) CHECK(r.label.substr(0, 2) != "A2");

  auto a3 = relations(3, RelationFamily::A);
  int a3_count = 0;
  for (const auto& r : a3)
    if (r.label.substr(0, 2) == "A3") ++a3_count;
  CHECK(a3_count == 8);  // (i,k) in {(1,2),(2,1)} x 4 kinds

  auto v4 = relations(4, RelationFamily::V);
  CHECK(has_label(v4, "V2[i=1]"));
  for (int i = 1; i <= 3; ++i)
    for (char x : {'a', 'b', 'c', 'C', 'v'}) {
      int j = i == 1 ? 2 : i - 1;
      CHECK(has_label(v4, "V3[i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                              ",x=" + x + "]"));
    }
  // V4 only for x in {a, b}.
  for (const auto& r : v4)
    if (r.label.substr(0, 2) == "V4") {
      CHECK(r.left.letters[0].kind != VSSBKind::C);
      CHECK(r.left.letters[0].kind != VSSBKind::CInv);
      CHECK(r.left.letters[0].kind != VSSBKind::V);
    }
}

TEST_CASE("the permutation image respects every defining relation") {
  for (int n = 2; n <= 6; ++n)
    for (auto fam : {RelationFamily::A, RelationFamily::R, RelationFamily::V}) {
      auto rep = check_rho_respects(n, fam);
      CHECK(rep.total > 0);
      CHECK(rep.pass());
    }
}

TEST_CASE("the free 2-braid image respects the relations at n = 4") {
  for (auto fam : {RelationFamily::A, RelationFamily::V}) {
    auto rep = check_phi_well_defined(4, fam);
    CHECK(rep.failures == 0);
    CHECK(rep.unknowns == 0);
    CHECK(rep.multiplicativity_pass);
    CHECK(rep.pass());
  }
}

TEST_CASE("binding number of the image word is an invariant value") {
  auto B = gaussian(2);
  CHECK(vssb_invariant(parse_vssb("e", 4), B, {0, 1, 0, 1}, {0, 1, 0, 1}) == 1);
  CHECK(vssb_invariant(parse_vssb("a1 b2 a3", 4), B, {0, 1, 0, 1}, {0, 1, 0, 1}) == 1);
}

TEST_CASE(
    "invariant of the 4-strand sample braid from (0,1,0,1) to (0,0,1,1) is 0; "
    "the previously reported value 1 does not follow from propagation") {
  auto beta = parse_vssb("c1 a2 v3 C2 b1 C2", 4);
  CHECK(vssb_invariant(beta, gaussian(2), {0, 1, 0, 1}, {0, 0, 1, 1}) == 0);
  // The propagated sinks are (1,0,0,1), so that target binds instead.
  CHECK(vssb_invariant(beta, gaussian(2), {0, 1, 0, 1}, {1, 0, 0, 1}) == 1);
}
