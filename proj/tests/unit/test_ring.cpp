#include <doctest.h>

#include <random>

#include "exotica/errors.hpp"
#include "exotica/ring.hpp"

using namespace exotica;

namespace {

GroupRingElement random_element(std::mt19937_64& rng, const Group& g) {
  std::uniform_int_distribution<int> coef(-3, 3), len(0, 3), gen(0, 3), terms(0, 4);
  GroupRingElement x(g);
  for (int t = terms(rng); t > 0; --t) {
    GroupElement s = g.identity();
    for (int l = len(rng); l > 0; --l) {
      int k = gen(rng);
      GroupElement e = g.generator(k / 2);
      s = s * (k % 2 ? e.inverse() : e);
    }
    x.add(s, ComplexRational(Rational(coef(rng), 2), Rational(coef(rng))));
  }
  return x;
}

// (x * y)(s) by a double loop over all pairs, independent of operator*.
ComplexRational brute_convolution_at(const GroupRingElement& x, const GroupRingElement& y, const GroupElement& s) {
  ComplexRational total;
  for (const auto& [t, a] : x.terms())
    for (const auto& [u, b] : y.terms())
      if (t * u == s) total = total + a * b;
  return total;
}

}  // namespace

TEST_CASE("convolution examples") {
  Group f2 = Group::free(2);
  GroupElement a = f2.generator(0), b = f2.generator(1);
  GroupRingElement e = GroupRingElement::delta(f2.identity());
  GroupRingElement x = GroupRingElement::delta(a, 2) + GroupRingElement::delta(b * a, ComplexRational::i());
  CHECK(e * x == x);
  CHECK(GroupRingElement::delta(a) * GroupRingElement::delta(b) == GroupRingElement::delta(a * b));
  GroupRingElement s = GroupRingElement::delta(a) + GroupRingElement::delta(a.inverse());
  GroupRingElement expect = GroupRingElement::delta(a * a) + GroupRingElement::delta(f2.identity(), 2) +
                            GroupRingElement::delta(a.inverse() * a.inverse());
  const GroupRingElement square = s * s;
  CHECK(square == expect);
  for (const auto& [g, c] : square.terms()) CHECK(c == brute_convolution_at(s, s, g));
}

TEST_CASE("zero coefficients are removed exactly") {
  Group f2 = Group::free(2);
  GroupRingElement x = GroupRingElement::delta(f2.generator(0));
  x -= GroupRingElement::delta(f2.generator(0));
  CHECK(x.is_zero());
  CHECK(x == GroupRingElement(f2));
}

TEST_CASE("involution and l1 examples") {
  Group f2 = Group::free(2);
  GroupElement a = f2.generator(0), b = f2.generator(1);
  CHECK(involution(GroupRingElement::delta(a)) == GroupRingElement::delta(a.inverse()));
  CHECK(involution(GroupRingElement::delta(f2.identity(), ComplexRational::i())) ==
        GroupRingElement::delta(f2.identity(), -ComplexRational::i()));
  GroupRingElement h = generator_sum(f2);
  CHECK(involution(h) == h);
  CHECK(l1_norm(h) == 4.0);
  CHECK(l1_norm(GroupRingElement(f2)) == 0.0);
  GroupRingElement y = GroupRingElement::delta(a, 2) - GroupRingElement::delta(b, ComplexRational(0, 3));
  CHECK(l1_norm(y) == 5.0);
}

TEST_CASE("ring axioms on random triples (exact)") {
  std::mt19937_64 rng(17);
  for (const Group& g : {Group::free(2), Group::sl2z()}) {
    for (int t = 0; t < 250; ++t) {
      auto x = random_element(rng, g), y = random_element(rng, g), z = random_element(rng, g);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) * z == x * z + y * z);
      CHECK(involution(involution(x)) == x);
      CHECK(involution(x * y) == involution(y) * involution(x));
      CHECK(l1_norm(x * y) <= l1_norm(x) * l1_norm(y) + 1e-12);
      CHECK(l1_norm(involution(x)) == doctest::Approx(l1_norm(x)));
      ComplexRational at_e = (involution(x) * x).coefficient(g.identity());
      Rational sq = 0;
      for (const auto& [s, c] : x.terms()) sq += c.norm();
      CHECK(at_e.im == 0);
      CHECK(at_e.re == sq);
    }
  }
}

TEST_CASE("mismatched ambient groups") {
  GroupRingElement x = GroupRingElement::delta(Group::free(2).generator(0));
  GroupRingElement y = GroupRingElement::delta(Group::free(3).generator(0));
  CHECK_THROWS_AS(x * y, Error);
  CHECK_THROWS_AS(x + y, Error);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational("010/4") == Rational(5, 2));
  CHECK(parse_rational("007") == Rational(7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}
