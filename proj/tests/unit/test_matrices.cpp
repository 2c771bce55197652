#include <doctest.h>

#include <limits>

#include "exotica/matrices.hpp"
#include "oracles.hpp"

using namespace exotica;

namespace {
oracle::M2 to_m2(const IntMatrix2& m) {
  return {static_cast<long long>(m.a), static_cast<long long>(m.b), static_cast<long long>(m.c),
          static_cast<long long>(m.d)};
}
// Sanov image evaluated with 64-bit arithmetic, valid for short words.
oracle::M2 oracle_embed(const std::vector<int>& w) {
  oracle::M2 out{1, 0, 0, 1};
  const oracle::M2 a{1, 2, 0, 1}, ai{1, -2, 0, 1}, b{1, 0, 2, 1}, bi{1, 0, -2, 1};
  for (int l : w) out = oracle::mul(out, l == 1 ? a : l == -1 ? ai : l == 2 ? b : bi);
  return out;
}
}  // namespace

TEST_CASE("Sanov embedding examples") {
  CHECK(sanov_embed(Word(2)) == IntMatrix2::identity());
  CHECK(sanov_embed(parse_word("a", 2)) == IntMatrix2{1, 2, 0, 1});
  CHECK(sanov_embed(parse_word("ab", 2)) == IntMatrix2{5, 2, 2, 1});
  CHECK(to_string(sanov_embed(parse_word("ab", 2))) == "[5,2,2,1]");
}

TEST_CASE("Sanov embedding agrees with an independent 64-bit product") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    auto letters = oracle::random_letters(rng, 2, 12);
    auto reduced = oracle::slow_reduce(letters);
    CHECK(to_m2(sanov_embed(reduce_word(letters, 2))) == oracle_embed(reduced));
  }
}

TEST_CASE("Sanov embedding is a homomorphism on long words (exact integers)") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    Word u = reduce_word(oracle::random_letters(rng, 2, 12), 2);
    Word v = reduce_word(oracle::random_letters(rng, 2, 12), 2);
    CHECK(sanov_embed(u * v) == sanov_embed(u) * sanov_embed(v));
  }
  // entries outgrow 64 bits
  IntMatrix2 big = sanov_embed(parse_word("ab", 2).pow(30));
  CHECK(big.det() == 1);
  CHECK(big.a > BigInt(std::numeric_limits<long long>::max()));
}

TEST_CASE("no short nontrivial word maps to plus or minus identity") {
  const IntMatrix2 minus{-1, 0, 0, -1};
  for (int k = 1; k <= 8; ++k) {
    for_each_word_of_length(2, k, [&](std::span<const Letter> l) {
      IntMatrix2 m = sanov_embed(reduce_word(l, 2));
      CHECK(m != IntMatrix2::identity());
      CHECK(m != minus);
    });
  }
}

TEST_CASE("sanov_word inverts the embedding and rejects other matrices") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    Word w = reduce_word(oracle::random_letters(rng, 2, 15), 2);
    auto back = sanov_word(sanov_embed(w));
    REQUIRE(back);
    CHECK(*back == w);
  }
  CHECK_FALSE(sanov_word(standard_s()));
  CHECK_FALSE(sanov_word(standard_t()));
  CHECK_FALSE(sanov_word(IntMatrix2{-1, 0, 0, -1}));
}

TEST_CASE("standard normal form evaluates back") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    Word w = reduce_word(oracle::random_letters(rng, 2, 14), 2);
    IntMatrix2 m = evaluate_standard_word(w);
    CHECK(evaluate_standard_word(standard_word(m)) == m);
  }
  CHECK(evaluate_standard_word(standard_word(IntMatrix2{-1, 0, 0, -1})) == IntMatrix2{-1, 0, 0, -1});
}

TEST_CASE("residue matrices") {
  ModMatrix2 s = ModMatrix2::reduce(standard_s(), 5);
  CHECK(s.e == std::array<std::int64_t, 4>{0, 4, 1, 0});
  CHECK(s.det() == 1);
  CHECK(s * s.inverse() == ModMatrix2::identity(5));
}
