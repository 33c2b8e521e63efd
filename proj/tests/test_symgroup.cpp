#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dflag/error.hpp"
#include "dflag/symgroup.hpp"
#include "oracles.hpp"

using namespace dflag;

namespace {
Permutation P(const char* text) { return Permutation::parse(text); }
}  // namespace

TEST_CASE("permutation construction and parsing") {
  CHECK(P("2 1 6 5 4 3").degree() == 6);
  CHECK(P("  3 1 2 ").to_string() == "3 1 2");
  CHECK(P("3 1 2")(1) == 3);
  CHECK_THROWS_AS(P("1 1 2"), InvalidArgument);
  CHECK_THROWS_AS(P("0 1"), InvalidArgument);
  CHECK_THROWS_AS(P("1 x"), InvalidArgument);
  CHECK_THROWS_AS(P(""), InvalidArgument);
  CHECK_THROWS_AS(Permutation::simple_reflection(3, 3), InvalidArgument);
  CHECK(Permutation::identity(4).is_identity());
  CHECK(Permutation::simple_reflection(4, 2) == P("1 3 2 4"));
}

TEST_CASE("length") {
  CHECK(length(Permutation::identity(4)) == 0);
  CHECK(length(P("4 3 2 1")) == 6);
  CHECK(length(P("2 1 6 5 4 3")) == 7);
  for (int d = 1; d <= 6; ++d) {
    for (const auto& w : enumerate(d)) {
      REQUIRE(length(w) == oracle::length(oracle::word_of(w)));
      REQUIRE(length(w) == length(inverse(w)));
    }
  }
}

TEST_CASE("longest element") {
  CHECK(longest_element(2) == P("2 1"));
  CHECK(longest_element(4) == P("4 3 2 1"));
  CHECK(length(longest_element(6)) == 15);
  CHECK_THROWS_AS(longest_element(0), InvalidArgument);
}

TEST_CASE("compose and inverse") {
  const auto s1 = Permutation::simple_reflection(3, 1);
  const auto s2 = Permutation::simple_reflection(3, 2);
  CHECK(compose(s1, s1).is_identity());
  CHECK(inverse(P("2 3 1")) == P("3 1 2"));
  CHECK(compose(s1, s2) == P("2 3 1"));
  CHECK_THROWS_AS(compose(s1, Permutation::identity(4)), InvalidArgument);
  for (int trial = 0; trial < 500; ++trial) {
    const auto u = oracle::random_word(6);
    const auto v = oracle::random_word(6);
    const Permutation pu(u);
    const Permutation pv(v);
    REQUIRE(oracle::word_of(compose(pu, pv)) == oracle::compose(u, v));
    REQUIRE(compose(pu, inverse(pu)).is_identity());
    REQUIRE(inverse(inverse(pu)) == pu);
  }
}

TEST_CASE("descent and ascent sets") {
  CHECK(right_descents(Permutation::identity(4)).empty());
  CHECK(right_descents(P("4 3 2 1")) == GenSet(3, {1, 2, 3}));
  CHECK(right_ascents(P("2 1 6 5 4 3")) == GenSet(5, {2}));
  CHECK(left_ascents(P("3 1 2")) == right_ascents(inverse(P("3 1 2"))));
  for (int d = 1; d <= 6; ++d) {
    const int n = d - 1;
    for (const auto& w : enumerate(d)) {
      const auto asc = right_ascents(w);
      const auto des = right_descents(w);
      REQUIRE(asc.bits() + des.bits() == GenSet::full(n).bits());
      REQUIRE((asc.bits() & des.bits()) == 0u);
      REQUIRE(des.empty() == w.is_identity());
      REQUIRE(asc.empty() == (w == longest_element(d)));
      REQUIRE(left_ascents(w) == right_ascents(inverse(w)));
      REQUIRE(left_descents(w) == right_descents(inverse(w)));
      for (int i = 1; i <= n; ++i) {
        const auto ws = compose(w, Permutation::simple_reflection(d, i));
        const int diff = length(ws) - length(w);
        REQUIRE((diff == 1 || diff == -1));
        REQUIRE((diff == 1) == asc.contains(i));
      }
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate(1) == std::vector<Permutation>{P("1")});
  const auto s3 = enumerate(3);
  CHECK(s3.size() == 6);
  CHECK(s3.front() == P("1 2 3"));
  CHECK(s3.back() == P("3 2 1"));
  CHECK(enumerate(6).size() == 720);
  CHECK_THROWS_AS(enumerate(9), ResourceLimit);
  CHECK(enumerate(5, 5).size() == 120);
  CHECK_THROWS_AS(enumerate(6, 5), ResourceLimit);
  const auto s5 = enumerate(5);
  for (std::size_t k = 0; k < s5.size(); ++k) {
    REQUIRE(lex_rank(s5[k]) == k);
    REQUIRE(lex_unrank(5, k) == s5[k]);
    if (k > 0) REQUIRE(s5[k - 1] < s5[k]);
  }
}

TEST_CASE("generator sets") {
  const auto s = GenSet::parse(5, "{2,4}");
  CHECK(s.members() == std::vector<int>{2, 4});
  CHECK(s.to_string() == "{2,4}");
  CHECK(GenSet::parse(5, "2,4") == s);
  CHECK(GenSet::parse(5, "{}").empty());
  CHECK(GenSet::parse(5, "").empty());
  CHECK(s.complement() == GenSet(5, {1, 3, 5}));
  CHECK(s.complement().complement() == s);
  CHECK(GenSet(5, {2}).is_subset_of(s));
  CHECK_THROWS_AS(GenSet::parse(5, "{6}"), InvalidArgument);
  CHECK_THROWS_AS(GenSet::parse(5, "{0}"), InvalidArgument);
  CHECK_THROWS_AS(GenSet::parse(5, "{a}"), InvalidArgument);
  for (std::uint32_t bits = 0; bits < 32; ++bits) {
    GenSet g(5);
    for (int k = 1; k <= 5; ++k) {
      if ((bits >> (k - 1)) & 1u) g.insert(k);
    }
    REQUIRE(g.complement().complement() == g);
    REQUIRE(GenSet::parse(5, g.to_string()) == g);
  }
}
