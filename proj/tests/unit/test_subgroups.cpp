#include <doctest.h>

#include <queue>

#include "exotica/errors.hpp"
#include "exotica/subgroups.hpp"

using namespace exotica;

TEST_CASE("membership") {
  Group f2 = Group::free(2);
  CHECK(contains(FreeFactor{1}, parse_element("aaA", f2)));
  CHECK_FALSE(contains(FreeFactor{1}, parse_element("ab", f2)));
  CHECK(contains(CyclicGen{parse_word("ab", 2)}, parse_element("abab", f2)));
  CHECK(contains(CyclicGen{parse_word("bab", 2).inverse() * parse_word("a", 2) * parse_word("bab", 2)},
                 GroupElement(parse_word("BAB", 2) * parse_word("aaa", 2) * parse_word("bab", 2))));
  CHECK_FALSE(contains(CyclicGen{parse_word("aa", 2)}, parse_element("a", f2)));
  CHECK(contains(Sanov{}, GroupElement(IntMatrix2{5, 2, 2, 1})));
  CHECK_FALSE(contains(Sanov{}, Group::sl2z().generator(1)));
  CHECK(contains(Congruence{6}, GroupElement(IntMatrix2{1, 6, 0, 1})));
  CHECK_FALSE(contains(Congruence{5}, GroupElement(IntMatrix2{1, 6, 0, 1})));
  CHECK_THROWS_AS(contains(Sanov{}, parse_element("a", f2)), Error);
}

TEST_CASE("cyclic exponents") {
  Word w = parse_word("abA", 2);
  CHECK(cyclic_exponent(w, w.pow(5)) == 5);
  CHECK(cyclic_exponent(w, w.pow(-3)) == -3);
  CHECK(cyclic_exponent(w, Word(2)) == 0);
  CHECK_FALSE(cyclic_exponent(w, parse_word("b", 2)));
}

TEST_CASE("coordinates round trip") {
  Group f3 = Group::free(3);
  GroupElement s = parse_element("abAB", f3);
  auto c = to_subgroup(FreeFactor{2}, s);
  REQUIRE(c);
  CHECK(c->group() == Group::free(2));
  CHECK(from_subgroup(FreeFactor{2}, f3, *c) == s);
  auto n = to_subgroup(CyclicGen{parse_word("ab", 3)}, parse_element("BABA", f3));
  REQUIRE(n);
  CHECK(to_string(*n) == "AA");
  CHECK(intrinsic_group(Sanov{}) == Group::free(2));
}

TEST_CASE("trivial coset table for the whole group") {
  auto t = coset_table(Group::free(2), FreeFactor{2}, 100);
  REQUIRE(t.index);
  CHECK(*t.index == 1);
  CHECK(t.section.size() == 1);
  CHECK(t.section.front().is_identity());
}

TEST_CASE("Sanov coset table: finite, closed, transitive") {
  auto t = coset_table(Group::sl2z(), Sanov{}, 10000);
  REQUIRE(t.index);
  CHECK(*t.index == 12);
  CHECK(t.section.front().is_identity());
  // section elements pairwise in distinct cosets
  for (std::size_t i = 0; i < t.section.size(); ++i)
    for (std::size_t j = i + 1; j < t.section.size(); ++j)
      CHECK_FALSE(contains(Sanov{}, t.section[i].inverse() * t.section[j]));
  // permutation per generator, orbit of coset 0 is everything
  for (const auto& row : t.action) {
    std::vector<int> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == static_cast<int>(i));
  }
  std::vector<bool> seen(t.section.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (const auto& row : t.action) {
      int j = row[static_cast<std::size_t>(i)];
      if (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        q.push(j);
      }
    }
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  // action is consistent with find
  for (std::size_t g = 0; g < t.action.size(); ++g)
    for (std::size_t i = 0; i < t.section.size(); ++i)
      CHECK(t.find(Group::sl2z().generator(static_cast<int>(g)) * t.section[i]) == t.action[g][i]);
}

TEST_CASE("congruence subgroup index equals the quotient order") {
  auto t = coset_table(Group::sl2z(), Congruence{3}, 1000);
  REQUIRE(t.index);
  CHECK(*t.index == 24);
}

TEST_CASE("cyclic subgroup of F_2 has infinite index") {
  auto t = coset_table(Group::free(2), CyclicGen{parse_word("a", 2)}, 100);
  CHECK_FALSE(t.index);
  CHECK_FALSE(t.infinite_certificate.empty());
  REQUIRE(t.section.size() >= 4);
  CHECK(to_string(t.section[0]) == "");
  CHECK(to_string(t.section[1]) == "b");
  CHECK(to_string(t.section[2]) == "B");
  CHECK(to_string(t.section[3]) == "ab");
  for (std::size_t i = 0; i < t.section.size(); ++i)
    for (std::size_t j = i + 1; j < t.section.size(); ++j)
      CHECK_FALSE(contains(CyclicGen{parse_word("a", 2)}, t.section[i].inverse() * t.section[j]));
}

TEST_CASE("exploration without closure or certificate is inconclusive") {
  try {
    coset_table(Group::sl2z(), Congruence{13}, 50);
    FAIL("expected Inconclusive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Inconclusive);
  }
}
