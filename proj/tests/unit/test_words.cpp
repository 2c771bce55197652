#include <doctest.h>

#include "exotica/errors.hpp"
#include "exotica/words.hpp"
#include "oracles.hpp"

using namespace exotica;

namespace {
std::vector<Letter> as_vec(const Word& w) { return {w.letters().begin(), w.letters().end()}; }
}  // namespace

TEST_CASE("reduce_word examples") {
  CHECK(reduce_word({1, -1, 2}, 2) == reduce_word({2}, 2));
  CHECK(reduce_word({}, 2).length() == 0);
  Word w = reduce_word({1, 2, -2, 1, -1, 1}, 2);
  CHECK(to_string(w) == "aa");
  CHECK(w.length() == 2);
}

TEST_CASE("reduce_word rejects letters outside the alphabet") {
  CHECK_THROWS_AS(reduce_word({3}, 2), Error);
  CHECK_THROWS_AS(reduce_word({0}, 2), Error);
  try {
    reduce_word({-5}, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidLetter);
  }
}

TEST_CASE("reduction agrees with the repeated-scan reducer and is confluent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto x = oracle::random_letters(rng, 3, 16);
    auto y = oracle::random_letters(rng, 3, 16);
    Word wx = reduce_word(x, 3), wy = reduce_word(y, 3);
    CHECK(as_vec(wx) == oracle::slow_reduce(x));
    auto xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    CHECK(wx * wy == reduce_word(xy, 3));
    CHECK(reduce_word(wx.letters(), 3) == wx);  // idempotent
    CHECK(wx * wx.inverse() == Word(3));
  }
}

TEST_CASE("sphere counts match brute force") {
  for (int d : {2, 3}) {
    for (int k = 1; k <= (d == 2 ? 8 : 6); ++k) {
      auto sp = sphere(d, k);
      auto brute = oracle::brute_sphere(d, k);
      CHECK(sp.count == sphere_count(d, k));
      REQUIRE(sp.words.size() == brute.size());
      std::set<std::vector<Letter>> listed;
      for (const auto& w : sp.words) {
        CHECK(w.length() == static_cast<std::size_t>(k));
        listed.insert(as_vec(w));
      }
      CHECK(listed == brute);
      CHECK(std::is_sorted(sp.words.begin(), sp.words.end()));
    }
  }
  CHECK(sphere(2, 1).words.size() == 4);
  CHECK(sphere(2, 3).words.size() == 36);
  CHECK(sphere(3, 2).words.size() == 30);
  CHECK(sphere(2, 0).count == 1);
}

TEST_CASE("sphere enumeration cap reports the closed-form count") {
  try {
    sphere(2, 20, 1000);
    FAIL("expected EnumerationTooLarge");
  } catch (const EnumerationTooLarge& e) {
    CHECK(e.code() == ErrorCode::EnumerationTooLarge);
    CHECK(e.count() == sphere_count(2, 20).str());
  }
}

TEST_CASE("shortlex order puts inverses after their generator") {
  auto s1 = sphere(2, 1).words;
  REQUIRE(s1.size() == 4);
  CHECK(to_string(s1[0]) == "a");
  CHECK(to_string(s1[1]) == "A");
  CHECK(to_string(s1[2]) == "b");
  CHECK(to_string(s1[3]) == "B");
  CHECK(parse_word("a", 2) < parse_word("ab", 2));
}

TEST_CASE("string round trip and powers") {
  Word w = parse_word("abA", 2);
  CHECK(to_string(w) == "abA");
  CHECK(to_string(parse_word("", 2)) == "");
  CHECK(w.pow(3) == w * w * w);
  CHECK(w.pow(-2) == w.inverse() * w.inverse());
  CHECK(to_string(w.pow(3)) == "abbbA");
  CHECK_THROWS(parse_word("a1", 2));
  CHECK_THROWS(parse_word("c", 2));
}

TEST_CASE("ball is the union of spheres") {
  auto b = ball(2, 4);
  CHECK(BigInt(b.size()) == ball_count(2, 4));
  CHECK(b.front().length() == 0);
}
