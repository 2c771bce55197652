#include <doctest.h>

#include <random>

#include "exotica/errors.hpp"
#include "exotica/io.hpp"

using namespace exotica;

TEST_CASE("ring element text round trips") {
  Group f2 = Group::free(2);
  auto x = parse_ring_element("a + A - 2*b + 1/2*ab + 3i*id", f2);
  CHECK(x.coefficient(parse_element("a", f2)) == ComplexRational(1));
  CHECK(x.coefficient(parse_element("b", f2)) == ComplexRational(-2));
  CHECK(x.coefficient(parse_element("ab", f2)) == ComplexRational(Rational(1, 2)));
  CHECK(x.coefficient(f2.identity()) == ComplexRational(0, 3));
  CHECK(parse_ring_element(ring_to_string(x), f2) == x);
  CHECK(parse_ring_element("h", f2) == generator_sum(f2));
  CHECK(parse_ring_element("0", f2).is_zero());
  CHECK(ring_to_string(x) == "3i*id + a + A - 2*b + 1/2*ab");
  auto neg = parse_ring_element("-a - 1/3i*b + 2*b", f2);
  CHECK(parse_ring_element(ring_to_string(neg), f2) == neg);
  auto m = parse_ring_element("id - [1,6,0,1]", Group::sl2z());
  CHECK(m.support_size() == 2);
  CHECK_THROWS_AS(parse_ring_element("a +", f2), Error);
  CHECK_THROWS_AS(parse_ring_element("2*q", f2), Error);
}

TEST_CASE("ring element json round trips") {
  for (const char* text : {"a + A - 2*b", "1/3*abA - 2/7i*B", "0"}) {
    auto x = parse_ring_element(text, Group::free(2));
    CHECK(ring_from_json(to_json(x)) == x);
    CHECK(ring_from_json(Json::parse(to_json(x).dump())) == x);
  }
  auto y = parse_ring_element("id - [1,6,0,1] + 1/2*[0,-1,1,0]", Group::sl2z());
  CHECK(ring_from_json(to_json(y)) == y);
  auto j = to_json(parse_ring_element("1/2*abA", Group::free(2)));
  CHECK(j["group"] == "F2");
  CHECK(j["terms"][0]["elt"] == "abA");
  CHECK(j["terms"][0]["re"] == "1/2");
  CHECK(j["terms"][0]["im"] == "0");
}

TEST_CASE("rep json round trips") {
  auto rep = cast_rep<std::complex<double>>(quotient_regular_rep(2, Group::sl2z_mod(2)));
  auto back = rep_from_json(to_json(rep));
  CHECK(back.dim() == rep.dim());
  CHECK(back.group() == rep.group());
  for (std::size_t i = 0; i < rep.generator_images().size(); ++i)
    CHECK(back.generator_images()[i] == rep.generator_images()[i]);
}

TEST_CASE("spec json round trips") {
  Group sl = Group::sl2z();
  for (const char* text : {"l1", "trivial", "regular:3", "cong:2,3,5", "join(trivial;cong:2)"}) {
    auto s = parse_spec(text, sl);
    auto back = spec_from_json(to_json(s));
    CHECK(describe(back) == describe(s));
    CHECK(to_json(back).dump() == to_json(s).dump());
  }
  auto t = parse_spec("trunc:7", Group::free(2));
  CHECK(describe(spec_from_json(to_json(t))) == describe(t));
  CHECK_THROWS_AS(spec_from_json(Json{{"type", "Nope"}}), Error);
}

TEST_CASE("numeric formatting") {
  CHECK(format12(1.0 / 3.0) == "0.333333333333");
  CHECK(format12(4.0) == "4");
  CHECK(round12(2.0 / 3.0) == 0.666666666667);
}

TEST_CASE("certificates serialize every field") {
  auto c = to_json(lp_certify(PosDefFamily::haagerup(0.5, 2), 2.0));
  for (const char* key : {"p", "decision", "closed_form", "partial_sum", "tail_bound", "enumeration_radius"})
    CHECK(c.contains(key));
  CHECK(c["decision"] == "Summable");
  auto t = to_json(okayasu_table(PosDefFamily::haagerup(0.5, 2), 2.0, 3));
  CHECK(t["rows"].size() == 3);
  auto d = to_json(compare(parse_spec("trivial", Group::free(2)), parse_spec("l1", Group::free(2)),
                           {generator_sum(Group::free(2))}));
  CHECK(d["rows"][0]["verdict"] == "overlapping");
  auto csv = to_csv(compare(parse_spec("trivial", Group::free(2)), parse_spec("l1", Group::free(2)),
                            {generator_sum(Group::free(2))}));
  CHECK(csv.rfind("sample,a_lower,a_upper,b_lower,b_upper,verdict,gap", 0) == 0);
}
