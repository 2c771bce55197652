#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "exotica/errors.hpp"
#include "exotica/posdef.hpp"
#include "oracles.hpp"

using namespace exotica;

namespace {

GroupElement w(const char* s, int rank) { return GroupElement(parse_word(s, rank)); }

// sum over the F_d ball of radius R of |phi(s)|^p, by brute enumeration
double ball_sum(const PosDefFamily& phi, double p, int rank, int radius) {
  double total = 0.0;
  for (int k = 0; k <= radius; ++k) {
    for_each_word_of_length(rank, k, [&](std::span<const Letter> letters) {
      total += std::pow(std::abs(eval_posdef(phi, GroupElement(reduce_word(letters, rank)))), p);
    });
  }
  return total;
}

std::vector<GroupElement> random_sample(std::mt19937_64& rng, int rank, std::size_t n) {
  std::set<Word> seen;
  while (seen.size() < n) seen.insert(reduce_word(oracle::random_letters(rng, rank, 5), rank));
  return {seen.begin(), seen.end()};
}

}  // namespace

TEST_CASE("evaluation examples") {
  auto phi = PosDefFamily::haagerup(0.5, 2);
  CHECK(eval_posdef(phi, w("abA", 2)).real() == doctest::Approx(0.125));
  CHECK(eval_posdef(phi, w("", 2)).real() == 1.0);
  auto g = PosDefFamily::gns(phi, w("a", 2), w("b", 2));
  CHECK(eval_posdef(g, w("bA", 2)).real() == doctest::Approx(1.0));
  CHECK(eval_posdef(PosDefFamily::point_mass(Group::free(2)), w("", 2)).real() == 1.0);
  CHECK(eval_posdef(PosDefFamily::point_mass(Group::free(2)), w("a", 2)).real() == 0.0);
  CHECK_THROWS_AS(eval_posdef(phi, w("a", 3)), Error);
  CHECK_THROWS_AS(PosDefFamily::haagerup(1.0, 2), Error);
  CHECK_THROWS_AS(PosDefFamily::haagerup(0.0, 2), Error);
}

TEST_CASE("gns coefficient at e is phi(v^-1 u)") {
  auto phi = PosDefFamily::haagerup(0.3, 2);
  for (auto [u, v] : std::vector<std::pair<const char*, const char*>>{{"a", "b"}, {"ab", "ab"}, {"AB", "ba"}, {"", "bbb"}}) {
    auto g = PosDefFamily::gns(phi, w(u, 2), w(v, 2));
    CHECK(eval_posdef(g, w("", 2)) == eval_posdef(phi, w(v, 2).inverse() * w(u, 2)));
  }
}

TEST_CASE("lp certificates for the Haagerup family") {
  auto c = lp_certify(PosDefFamily::haagerup(0.5, 2), 2.0);
  CHECK(c.decision == LpDecision::Summable);
  REQUIRE(c.closed_form);
  CHECK(*c.closed_form == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(std::abs(c.partial_sum - *c.closed_form) <= c.tail_bound);
  // independent ball summation
  // spheres carry (4/3) 0.75^k, so the tail past radius 12 is (4/3) 0.75^13 / 0.25
  const double tail12 = 4.0 / 3.0 * std::pow(0.75, 13) / 0.25;
  CHECK(std::abs(ball_sum(PosDefFamily::haagerup(0.5, 2), 2.0, 2, 12) + tail12 - 5.0) < 1e-12);

  auto n = lp_certify(PosDefFamily::haagerup(std::pow(3.0, -0.5), 2), 2.0);
  CHECK(n.decision == LpDecision::NotSummable);
  REQUIRE(n.divergence_witness);
  CHECK(*n.divergence_witness == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("closed form vs ball enumeration on a parameter grid") {
  for (int d : {2, 3}) {
    for (double p : {1.0, 2.0, 3.0}) {
      for (double ratio : {0.2, 0.5, 0.8, 0.95}) {
        double alpha = std::pow(ratio / (2 * d - 1), 1.0 / p);
        auto c = lp_certify(PosDefFamily::haagerup(alpha, d), p);
        REQUIRE(c.decision == LpDecision::Summable);
        CHECK(std::abs(c.partial_sum - *c.closed_form) <= c.tail_bound);
        // partial sums by direct enumeration stay below the closed form
        int radius = d == 2 ? 8 : 6;
        double partial = ball_sum(PosDefFamily::haagerup(alpha, d), p, d, radius);
        CHECK(partial <= *c.closed_form * (1 + 1e-12));
        double tail = 0.0;
        for (int k = radius + 1; k < 4000; ++k) tail += 2.0 * d / (2 * d - 1) * std::pow(ratio, k);
        CHECK(oracle::rel_err(partial + tail, *c.closed_form) < 1e-9);
      }
    }
  }
}

TEST_CASE("zero extension") {
  auto psi = PosDefFamily::haagerup(0.5, 2);
  auto z = zero_extend(psi, FreeFactor{2}, Group::free(3));
  CHECK(eval_posdef(z, w("c", 3)).real() == 0.0);
  CHECK(eval_posdef(z, w("aB", 3)).real() == doctest::Approx(0.25));
  CHECK(eval_posdef(zero_extend(PosDefFamily::point_mass(Group::free(2)), FreeFactor{2}, Group::free(3)), w("", 3))
            .real() == 1.0);
  auto c = lp_certify(z, 2.0);
  CHECK(c.decision == LpDecision::Summable);
  CHECK(*c.closed_form == *lp_certify(psi, 2.0).closed_form);
  // enumeration over the ambient ball only sees the subgroup
  CHECK(std::abs(ball_sum(z, 2.0, 3, 8) - ball_sum(psi, 2.0, 2, 8)) < 1e-12);
  CHECK_THROWS_AS(zero_extend(psi, FreeFactor{2}, Group::sl2z()), Error);
}

TEST_CASE("gram checks") {
  auto id = GroupElement(Word(2));
  std::vector<GroupElement> s{id, w("a", 2), w("b", 2), w("ab", 2)};
  auto delta = gram_psd_check(PosDefFamily::point_mass(Group::free(2)), s);
  CHECK(delta.min_eigenvalue == doctest::Approx(1.0));
  CHECK(delta.pass);
  CHECK(gram_psd_check(PosDefFamily::haagerup(0.5, 2), s).pass);
  auto neg = gram_psd_check([](const GroupElement&) { return std::complex<double>(-1.0, 0.0); }, {id, w("a", 2)});
  CHECK_FALSE(neg.pass);
  CHECK(neg.min_eigenvalue == doctest::Approx(-2.0));
  CHECK_THROWS_AS(gram_psd_check(PosDefFamily::haagerup(0.5, 2), {id, id}), Error);
  CHECK_THROWS_AS(gram_psd_check(PosDefFamily::haagerup(0.5, 2), {}), Error);
}

TEST_CASE("gram checks on random samples for every variant") {
  std::mt19937_64 rng(7);
  auto hg = PosDefFamily::haagerup(0.6, 2);
  std::vector<PosDefFamily> families{
      hg, PosDefFamily::point_mass(Group::free(2)), PosDefFamily::gns(hg, w("a", 2), w("a", 2)),
      zero_extend(PosDefFamily::haagerup(0.5, 1), CyclicGen{parse_word("ab", 2)}, Group::free(2)),
      coset_cutoff_product(hg, CyclicGen{parse_word("a", 2)}, {GroupElement(Word(2))}, 2.0).first};
  for (const auto& phi : families) {
    for (int t = 0; t < 100; ++t) CHECK(gram_psd_check(phi, random_sample(rng, 2, 8)).pass);
  }
}

TEST_CASE("D_p for Haagerup on free factors") {
  auto in = dp_certify_haagerup(0.5, 2.0, 2, 6, Word(6), Word(6));
  CHECK(in.decision == LpDecision::Summable);
  REQUIRE(in.subgroup_sum);
  CHECK(*in.subgroup_sum == doctest::Approx(5.0));
  CHECK(in.lower == doctest::Approx(5.0));
  CHECK(in.upper == doctest::Approx(5.0));
  CHECK(in.sandwich_holds);

  auto out = dp_certify_haagerup(0.8, 2.0, 2, 6, Word(6), Word(6));
  CHECK(out.decision == LpDecision::NotSummable);
  CHECK(out.divergence_witness);

  auto t = dp_certify_haagerup(0.5, 2.0, 2, 4, parse_word("cA", 4), parse_word("d", 4));
  CHECK(t.sandwich_holds);
  CHECK(t.lower <= t.enumerated + t.enumerated_tail);
  CHECK(t.enumerated <= t.upper);
  CHECK_THROWS_AS(dp_certify_haagerup(0.5, 2.0, 1, 4, Word(4), Word(4)), Error);
}

TEST_CASE("coset cutoff products") {
  auto phi = PosDefFamily::haagerup(0.5, 2);
  CyclicGen h{parse_word("a", 2)};
  auto [one, c1] = coset_cutoff_product(phi, h, {GroupElement(Word(2))}, 2.0);
  CHECK(c1.decision == LpDecision::Summable);
  REQUIRE(c1.closed_form);
  double direct = 0.0;
  for (int n = -60; n <= 60; ++n) direct += std::pow(0.25, std::abs(n));
  CHECK(*c1.closed_form == doctest::Approx(5.0 / 3.0));
  CHECK(std::abs(direct - 5.0 / 3.0) < 1e-12);

  auto [two, c2] = coset_cutoff_product(phi, h, {GroupElement(Word(2)), w("b", 2)}, 2.0);
  REQUIRE(c2.closed_form);
  CHECK(*c2.closed_form == doctest::Approx(5.0 / 3.0 + 5.0 / 12.0));
  // direct summation over the two cosets a^n and b a^n
  double cosets = 0.0;
  Word a = parse_word("a", 2), b = parse_word("b", 2);
  for (int n = -60; n <= 60; ++n) {
    cosets += std::norm(eval_posdef(two, GroupElement(a.pow(n))));
    cosets += std::norm(eval_posdef(two, GroupElement(b * a.pow(n))));
  }
  CHECK(std::abs(cosets - (5.0 / 3.0 + 5.0 / 12.0)) < 1e-12);
  CHECK(ball_sum(two, 2.0, 2, 8) <= cosets);
  CHECK(eval_posdef(two, w("ba", 2)).real() == doctest::Approx(0.25));
  CHECK(eval_posdef(two, w("ab", 2)).real() == 0.0);

  auto [pm, c3] = coset_cutoff_product(PosDefFamily::point_mass(Group::free(2)), h, {GroupElement(Word(2))}, 2.0);
  CHECK(*c3.closed_form == doctest::Approx(1.0));

  CHECK_THROWS_AS(coset_cutoff_product(PosDefFamily::haagerup(0.8, 2), FreeFactor{2}, {GroupElement(Word(2))}, 2.0),
                  Error);
}

TEST_CASE("D_p dispatch") {
  CHECK(dp_certify(PosDefFamily::haagerup(0.5, 3), FreeFactor{2}, 2.0).decision == LpDecision::Summable);
  CHECK(dp_certify(PosDefFamily::haagerup(0.8, 3), FreeFactor{2}, 2.0).decision == LpDecision::NotSummable);
  CHECK(dp_certify(PosDefFamily::haagerup(0.9, 2), CyclicGen{parse_word("a", 2)}, 2.0).decision ==
        LpDecision::Summable);
}
