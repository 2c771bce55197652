#include <doctest.h>

#include "exotica/errors.hpp"
#include "exotica/group.hpp"

using namespace exotica;

TEST_CASE("group descriptors round trip through text") {
  for (std::string s : {"F2", "F3", "SL2Z", "SL2Z/5", "F2xF2", "(F2xF3)xSL2Z"}) {
    CHECK(to_string(parse_group(s)) == s);
  }
  CHECK_THROWS(parse_group("G7"));
}

TEST_CASE("elements validate their determinant") {
  CHECK_THROWS_AS(GroupElement(IntMatrix2{1, 1, 1, 1}), Error);
  CHECK_THROWS_AS(GroupElement(ModMatrix2{5, {2, 0, 0, 2}}), Error);
  CHECK_NOTHROW(GroupElement(ModMatrix2{5, {2, 0, 0, 3}}));
}

TEST_CASE("arithmetic per variant") {
  Group f2 = Group::free(2);
  GroupElement a = f2.generator(0), b = f2.generator(1);
  CHECK(to_string(a * b * a.inverse()) == "abA");
  CHECK((a * a.inverse()).is_identity());
  CHECK((a * b).word_length() == 2);

  Group sl = Group::sl2z();
  GroupElement s = sl.generator(0), t = sl.generator(1);
  CHECK(s.matrix() == standard_s());
  CHECK((s * s * s * s).is_identity());
  CHECK((s * t) * (s * t) * (s * t) == s * s);
  CHECK_THROWS_AS(s.word(), Error);

  Group q = Group::sl2z_mod(3);
  GroupElement tq = q.generator(1);
  CHECK((tq * tq * tq).is_identity());
  CHECK(reduce_mod(t, 3) == tq);
}

TEST_CASE("direct products") {
  Group g = Group::product(Group::free(2), Group::free(2));
  GroupElement x = parse_element("(ab,B)", g);
  GroupElement y = parse_element("(B,b)", g);
  CHECK(x.group() == g);
  CHECK(to_string(x * y) == "(a,)");
  CHECK(x.first() == parse_element("ab", Group::free(2)));
  CHECK((x * x.inverse()).is_identity());
  CHECK(g.generator_count() == 4);
}

TEST_CASE("mixing groups is a mismatch") {
  GroupElement a = Group::free(2).generator(0);
  GroupElement c = Group::free(3).generator(0);
  CHECK_THROWS_AS(a * c, Error);
  CHECK_THROWS_AS(a * Group::sl2z().generator(0), Error);
}

TEST_CASE("matrix element parsing") {
  GroupElement m = parse_element("[1,6,0,1]", Group::sl2z());
  CHECK(m.matrix() == IntMatrix2{1, 6, 0, 1});
  CHECK(to_string(m) == "[1,6,0,1]");
  CHECK_THROWS(parse_element("[1,2,3]", Group::sl2z()));
}
