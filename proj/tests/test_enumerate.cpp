#include <doctest.h>

#include <stdexcept>

#include "fkb/biquandle.hpp"
#include "fkb/enumerate.hpp"

using namespace fkb;

TEST_CASE("carrier of size 1 admits no nontrivial structure") {
  EnumerateOptions opts;
  opts.nontrivial_only = true;
  CHECK(enumerate_kbiquandles(1, 2, opts).entries.empty());
  CHECK(enumerate_kbiquandles(1, 3, opts).entries.empty());
}

TEST_CASE("the unique nontrivial 3-biquandle on two elements is gaussian") {
  EnumerateOptions opts;
  opts.nontrivial_only = true;
  auto res = enumerate_kbiquandles(2, 3, opts);
  REQUIRE(res.entries.size() == 1);
  CHECK(is_isomorphic(res.entries[0], gaussian(3)));
  CHECK(check_axioms(res.entries[0]).all_pass());
}

TEST_CASE("enumeration entries pass axioms and are pairwise non-isomorphic") {
  auto res = enumerate_kbiquandles(2, 2);
  for (const auto& B : res.entries) CHECK(check_axioms(B).all_pass());
  for (size_t i = 0; i < res.entries.size(); ++i)
    for (size_t j = i + 1; j < res.entries.size(); ++j)
      CHECK_FALSE(is_isomorphic(res.entries[i], res.entries[j]));
}

TEST_CASE("enumeration output is independent of the worker count") {
  EnumerateOptions one, four;
  one.nontrivial_only = four.nontrivial_only = true;
  one.jobs = 1;
  four.jobs = 4;
  auto a = enumerate_kbiquandles(3, 2, one);
  auto b = enumerate_kbiquandles(3, 2, four);
  REQUIRE(a.entries.size() == b.entries.size());
  for (size_t i = 0; i < a.entries.size(); ++i)
    CHECK(a.entries[i].canonical_form() == b.entries[i].canonical_form());
}

TEST_CASE("enumeration stops when the budget is exhausted") {
  EnumerateOptions opts;
  opts.budget = 3;
  CHECK_THROWS_AS(enumerate_kbiquandles(3, 3, opts), std::runtime_error);
}

TEST_CASE("family classification") {
  CHECK(classify(FiniteKBiquandle::trivial(3, 3)) == BiquandleTag::Trivial);
  CHECK(classify(gaussian(3)) == BiquandleTag::ComponentwiseInvolution);
  auto B = conditional_involution(Involution(3, {{0, 1}}), MultiplicitySet(3, 1, {{1}}), 3);
  CHECK(classify(B) == BiquandleTag::ConditionalInvolution);
  CHECK(tag_name(BiquandleTag::ConditionalInvolution) == "conditional-involution");
}
