#include <doctest.h>

#include "config.hpp"
#include "exotica/errors.hpp"

using namespace exotica;
using namespace exotica::cli;

TEST_CASE("grid syntax") {
  CHECK(parse_grid("1,2,3") == std::vector<double>{1, 2, 3});
  auto g = parse_grid("0.05:0.95:0.05");
  CHECK(g.size() == 19);
  CHECK(g.front() == doctest::Approx(0.05));
  CHECK(g.back() == doctest::Approx(0.95));
  CHECK(parse_grid("4:12:4") == std::vector<double>{4, 8, 12});
  CHECK_THROWS(parse_grid("1:2:0"));
  CHECK_THROWS(parse_grid("x"));
}

TEST_CASE("key value files") {
  Config c("okayasu");
  c.load_text("# comment\nd = 3\np = 2,3\nalpha = 0.5  # trailing\n\n");
  CHECK(c.integer("d", 2) == 3);
  CHECK(c.grid("p", {}) == std::vector<double>{2, 3});
  CHECK(c.real("alpha", 0) == 0.5);
  CHECK(c.real("missing", 1.5) == 1.5);
  c.set("d=4");
  CHECK(c.integer("d", 2) == 4);
  CHECK_NOTHROW(c.restrict_to({"d", "p", "alpha"}));
}

TEST_CASE("errors name the field") {
  Config c("kesten");
  c.load_text("radius = 4\n");
  try {
    c.restrict_to({"radii"});
    FAIL("expected ConfigError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigError);
    CHECK(std::string(e.what()).find("kesten.radius") != std::string::npos);
  }
  c.load_text("radii = four\n");
  CHECK_THROWS_AS(c.int_grid("radii", {}), Error);
  CHECK_THROWS_AS(c.load_text("no equals sign\n"), Error);
  CHECK_THROWS_AS(c.set("novalue"), Error);
}
