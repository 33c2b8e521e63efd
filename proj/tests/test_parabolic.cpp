#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "dflag/bruhat.hpp"
#include "dflag/parabolic.hpp"
#include "oracles.hpp"

using namespace dflag;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

std::vector<GenSet> all_subsets(int rank) {
  std::vector<GenSet> out;
  for (std::uint32_t bits = 0; bits < (1u << rank); ++bits) {
    GenSet s(rank);
    for (int k = 1; k <= rank; ++k) {
      if ((bits >> (k - 1)) & 1u) s.insert(k);
    }
    out.push_back(s);
  }
  return out;
}

std::vector<Permutation> as_perms(const std::vector<oracle::Word>& words) {
  std::vector<Permutation> out;
  for (const auto& w : words) out.emplace_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("simple multiplication") {
  const auto w = P("3 1 4 2");
  CHECK(left_multiply_simple(w, 1) == compose(Permutation::simple_reflection(4, 1), w));
  CHECK(right_multiply_simple(w, 1) == compose(w, Permutation::simple_reflection(4, 1)));
  CHECK(right_multiply_simple(w, 2) == P("3 4 1 2"));
  CHECK(left_multiply_simple(w, 2) == P("2 1 4 3"));
}

TEST_CASE("parabolic subgroups match block stabilizers") {
  for (int d = 1; d <= 5; ++d) {
    for (const auto& s : all_subsets(d - 1)) {
      REQUIRE(parabolic_elements(d, s) == as_perms(oracle::parabolic(d, s)));
    }
  }
}

TEST_CASE("decompose matches brute-force double cosets") {
  for (int d = 2; d <= 5; ++d) {
    const int n = d - 1;
    for (const auto& left : all_subsets(n)) {
      for (const auto& right : all_subsets(n)) {
        const auto table = decompose(d, left, right);
        const auto brute = oracle::double_cosets(d, left, right);
        REQUIRE(table.cosets.size() == brute.size());
        std::map<oracle::Word, std::pair<oracle::Word, std::size_t>> by_max;
        for (const auto& c : brute) by_max[oracle::max_by_length(c)] = {oracle::min_by_length(c), c.size()};
        std::uint64_t total = 0;
        for (const auto& entry : table.cosets) {
          const auto it = by_max.find(oracle::word_of(entry.max_rep));
          REQUIRE(it != by_max.end());
          REQUIRE(oracle::word_of(entry.min_rep) == it->second.first);
          REQUIRE(entry.size == it->second.second);
          total += entry.size;
        }
        REQUIRE(total == factorial(d));

        const auto minus = min_representatives(d, left, right);
        const auto plus = max_representatives(d, left, right);
        REQUIRE(minus.size() == brute.size());
        REQUIRE(plus.size() == brute.size());
        std::vector<Permutation> max_of_cosets;
        for (const auto& c : brute) max_of_cosets.emplace_back(oracle::max_by_length(c));
        std::sort(max_of_cosets.begin(), max_of_cosets.end());
        REQUIRE(plus == max_of_cosets);
      }
    }
  }
}

TEST_CASE("trivial decompositions") {
  const auto singletons = decompose(4, GenSet(3), GenSet(3));
  CHECK(singletons.cosets.size() == 24);
  CHECK(are_isomorphic(singletons.order, bruhat_poset(enumerate(4))));
  const auto whole = decompose(6, GenSet::full(5), GenSet::full(5));
  REQUIRE(whole.cosets.size() == 1);
  CHECK(whole.cosets.front().min_rep.is_identity());
  CHECK(whole.cosets.front().max_rep == longest_element(6));
  CHECK(whole.cosets.front().size == 720);
}

TEST_CASE("coset table for Ic={2}, Jc={2,4}") {
  const auto left = GenSet(5, {2}).complement();
  const auto right = GenSet(5, {2, 4}).complement();
  const auto table = decompose(6, left, right);
  REQUIRE(table.cosets.size() == 6);
  CHECK(table.cosets.front().max_rep == P("2 1 6 5 4 3"));
  CHECK(table.cosets.back().max_rep == longest_element(6));
  CHECK(classify_shape(table.order) == ShapeClass{ShapeKind::StretchedDiamond, 0});
  const auto json = to_json(table);
  CHECK(json.find("\"I_complement\": [\n    2\n  ]") != std::string::npos);
  CHECK(json.find("\"covers\"") != std::string::npos);
  CHECK(check_interval_property(6, left, right));
}

TEST_CASE("coset_of") {
  const auto left = GenSet(5, {2}).complement();
  const auto right = GenSet(5, {2, 4}).complement();
  const auto [lo_e, hi_e] = coset_of(Permutation::identity(6), left, right);
  CHECK(lo_e.is_identity());
  CHECK(hi_e == P("2 1 6 5 4 3"));
  const auto [lo_w0, hi_w0] = coset_of(longest_element(6), left, right);
  CHECK(hi_w0 == longest_element(6));
  CHECK(lo_w0 == P("3 4 5 6 1 2"));
  const auto tau2 = P("6 5 2 1 4 3");
  CHECK(coset_of(tau2, left, right).second == tau2);

  for (int trial = 0; trial < 100; ++trial) {
    const Permutation x(oracle::random_word(5));
    const GenSet l(4, {1, 3});
    const GenSet r(4, {2});
    for (const auto& c : oracle::double_cosets(5, l, r)) {
      if (!c.count(oracle::word_of(x))) continue;
      const auto [lo, hi] = coset_of(x, l, r);
      REQUIRE(oracle::word_of(lo) == oracle::min_by_length(c));
      REQUIRE(oracle::word_of(hi) == oracle::max_by_length(c));
    }
  }
}

TEST_CASE("factorize agrees with brute-force search") {
  SUBCASE("representatives factor trivially") {
    const GenSet l = GenSet(4, {1}).complement();
    const GenSet r = GenSet(4, {3}).complement();
    for (const auto& x : min_representatives(5, l, r)) {
      const auto f = factorize(x, l, r);
      CHECK(f.u.is_identity());
      CHECK(f.w == x);
      CHECK(f.v.is_identity());
    }
  }
  SUBCASE("longest element with full parabolics") {
    const auto w0 = longest_element(5);
    const auto f = factorize(w0, GenSet::full(4), GenSet::full(4));
    CHECK(f.w.is_identity());
    CHECK(length(f.u) + length(f.v) == length(w0));
    const auto brute = oracle::factorizations(oracle::word_of(w0), GenSet::full(4), GenSet::full(4));
    REQUIRE(brute.size() == 1);
    CHECK(oracle::word_of(f.u) == brute.front().u);
    CHECK(oracle::word_of(f.v) == brute.front().v);
  }
  SUBCASE("random elements") {
    const std::vector<std::pair<GenSet, GenSet>> pairs{
        {GenSet(4, {1}).complement(), GenSet(4, {3}).complement()},
        {GenSet(4, {2}).complement(), GenSet(4, {1, 3}).complement()},
        {GenSet(4, {1, 2, 3, 4}).complement(), GenSet(4, {2}).complement()},
        {GenSet(4, {4}).complement(), GenSet(4, {}).complement()}};
    for (const auto& [l, r] : pairs) {
      for (int trial = 0; trial < 25; ++trial) {
        const auto word = oracle::random_word(5);
        const Permutation x(word);
        const auto f = factorize(x, l, r);
        REQUIRE(compose(f.u, compose(f.w, f.v)) == x);
        REQUIRE(length(f.u) + length(f.w) + length(f.v) == length(x));
        const auto brute = oracle::factorizations(word, l, r);
        REQUIRE(brute.size() == 1);
        REQUIRE(oracle::word_of(f.u) == brute.front().u);
        REQUIRE(oracle::word_of(f.w) == brute.front().w);
        REQUIRE(oracle::word_of(f.v) == brute.front().v);
      }
    }
  }
}

TEST_CASE("intersection subgroup") {
  const GenSet l = GenSet(4, {2}).complement();
  const GenSet r = GenSet(4, {2}).complement();
  CHECK(intersection_subgroup(Permutation::identity(5), l, r) == l);
}

TEST_CASE("interval property and order consistency, degree <= 4") {
  for (int d = 2; d <= 4; ++d) {
    for (const auto& l : all_subsets(d - 1)) {
      for (const auto& r : all_subsets(d - 1)) {
        REQUIRE(check_interval_property(d, l, r));
        const auto table = decompose(d, l, r);
        for (const auto& a : table.cosets) {
          for (const auto& b : table.cosets) {
            REQUIRE(leq(a.min_rep, b.min_rep) == leq(a.max_rep, b.max_rep));
          }
        }
      }
    }
  }
}
