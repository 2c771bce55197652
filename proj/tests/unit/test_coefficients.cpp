#include <doctest.h>

#include <cmath>

#include "exotica/coefficients.hpp"
#include "exotica/errors.hpp"

using namespace exotica;

namespace {

// Direct summation of both sides for H = <a> in F_2, phi_H = beta^|n| on Z.
// lhs: s = r_j a^n r_i^-1 over |s| <= T; rhs: |n| <= T.
std::pair<double, double> direct_sides(double beta, double p, const Word& ri, const Word& rj, int t) {
  double lhs = 0.0, rhs = 0.0;
  Word a = parse_word("a", 2);
  for (int n = -3 * t; n <= 3 * t; ++n) {
    Word s = rj * a.pow(n) * ri.inverse();
    double v = std::pow(beta, p * std::abs(n));
    if (static_cast<int>(s.length()) <= t) lhs += v;
    if (std::abs(n) <= t) rhs += v;
  }
  return {lhs, rhs};
}

}  // namespace

TEST_CASE("identity on the beta, p grid") {
  Group f2 = Group::free(2);
  CyclicGen h{parse_word("a", 2)};
  for (double beta : {0.3, 0.5, 0.7}) {
    for (double p : {2.0, 3.0, 4.0}) {
      auto r = induced_lp_identity(f2, h, PosDefFamily::haagerup(beta, 1), Word(2), Word(2), p, 40);
      CHECK(r.pass);
      CHECK(std::abs(r.lhs - r.rhs) <= r.tail_bound);
      CHECK(r.tail_bound <= 1e-6);
      REQUIRE(r.closed_form);
      double bp = std::pow(beta, p);
      CHECK(std::abs(*r.closed_form - (1 + 2 * bp / (1 - bp))) < 1e-10);
      CHECK(std::abs(r.rhs - *r.closed_form) < 1e-10);
      auto [lhs, rhs] = direct_sides(beta, p, Word(2), Word(2), 40);
      CHECK(std::abs(r.lhs - lhs) < 1e-12);
      CHECK(std::abs(r.rhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("closed form at beta = 1/2") {
  auto r = induced_lp_identity(Group::free(2), CyclicGen{parse_word("a", 2)}, PosDefFamily::haagerup(0.5, 1), Word(2),
                               Word(2), 2.0, 40);
  CHECK(*r.closed_form == doctest::Approx(5.0 / 3.0));
  CHECK(std::abs(r.lhs - 5.0 / 3.0) < 1e-6);
}

TEST_CASE("distinct cosets shift the support") {
  Group f2 = Group::free(2);
  CyclicGen h{parse_word("a", 2)};
  Word ri = parse_word("b", 2), rj = parse_word("ab", 2);
  auto r = induced_lp_identity(f2, h, PosDefFamily::haagerup(0.5, 1), ri, rj, 2.0, 40);
  CHECK(r.pass);
  auto [lhs, rhs] = direct_sides(0.5, 2.0, ri, rj, 40);
  CHECK(std::abs(r.lhs - lhs) < 1e-12);
  // coefficient vanishes off r_j H r_i^-1
  auto c = induced_coefficient(f2, h, PosDefFamily::haagerup(0.5, 1), ri, rj);
  CHECK(std::abs(eval_posdef(c, GroupElement(rj * parse_word("aaa", 2) * ri.inverse())) - 0.125) < 1e-15);
  CHECK(eval_posdef(c, GroupElement(parse_word("b", 2))) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("point mass coefficients") {
  Group f2 = Group::free(2);
  CyclicGen h{parse_word("a", 2)};
  auto same = induced_lp_identity(f2, h, PosDefFamily::point_mass(Group::free(1)), Word(2), Word(2), 2.0, 10);
  CHECK(same.lhs == doctest::Approx(1.0));
  CHECK(same.rhs == doctest::Approx(1.0));
  auto other = induced_lp_identity(f2, h, PosDefFamily::point_mass(Group::free(1)), parse_word("b", 2),
                                   parse_word("B", 2), 2.0, 10);
  CHECK(other.lhs == doctest::Approx(1.0));
  CHECK(other.rhs == doctest::Approx(1.0));
  CHECK(eval_posdef(induced_coefficient(f2, h, PosDefFamily::point_mass(Group::free(1)), parse_word("b", 2),
                                        parse_word("B", 2)),
                    GroupElement(parse_word("BB", 2))) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("free factor subgroups") {
  auto r = induced_lp_identity(Group::free(3), FreeFactor{2}, PosDefFamily::haagerup(0.4, 2), parse_word("c", 3),
                               parse_word("c", 3), 2.0, 9);
  CHECK(r.pass);
}

TEST_CASE("missing certificate") {
  try {
    induced_lp_identity(Group::free(3), FreeFactor{2}, PosDefFamily::haagerup(0.9, 2), Word(3), Word(3), 2.0, 6);
    FAIL("expected MissingCertificate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingCertificate);
  }
}

TEST_CASE("marginal examples") {
  Group f2 = Group::free(2);
  GroupElement e = f2.identity(), a = f2.generator(0), b = f2.generator(1);
  auto pair = [](const GroupElement& x, const GroupElement& y) { return GroupElement::pair(x, y); };

  ProductFunction delta{{pair(e, e), 1.0}};
  auto at_e = marginal_dominance(delta, e);
  CHECK(at_e.lhs == doctest::Approx(1.0));
  CHECK(at_e.rhs == doctest::Approx(1.0));
  CHECK(at_e.pass);
  auto off = marginal_dominance(delta, b);
  CHECK(off.lhs == 0.0);
  CHECK(off.rhs == 0.0);

  const double r = 1.0 / std::sqrt(2.0);
  ProductFunction two{{pair(e, e), r}, {pair(a, b), r}};
  auto m = marginal_dominance(two, b);
  CHECK(m.lhs == doctest::Approx(0.0));
  CHECK(m.rhs == doctest::Approx(0.5));
  CHECK(m.g_norm == doctest::Approx(1.0));
  CHECK(m.pass);

  CHECK_THROWS_AS(marginal_dominance(ProductFunction{}, e), Error);
  CHECK_THROWS_AS(marginal_dominance(ProductFunction{{pair(e, e), 0.0}}, e), Error);
}

TEST_CASE("random trials") {
  auto words = ball(2, 2);
  std::vector<GroupElement> grid;
  for (std::size_t i = 0; i < 8; ++i) grid.emplace_back(words[i]);
  auto t = marginal_trials(grid, grid, 200, 42);
  CHECK(t.trials == 200);
  CHECK(t.violations == 0);
  CHECK(t.checks > 0);
  CHECK(t.worst_margin >= -1e-12);
  CHECK(t.worst_g_defect <= 1e-12);
  auto again = marginal_trials(grid, grid, 200, 42);
  CHECK(again.worst_margin == t.worst_margin);
}
