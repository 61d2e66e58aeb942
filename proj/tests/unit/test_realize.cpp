#include "doctest.h"
#include "covg/arrangement.hpp"
#include "covg/json_io.hpp"
#include "support.hpp"

using namespace covg;

namespace {

AffineForm form(std::vector<long> coeffs, long constant = 0) {
  AffineForm f;
  for (long c : coeffs) f.coeffs.emplace_back(c);
  f.constant = constant;
  return f;
}

}  // namespace

TEST_CASE("exact LP: optimum, infeasible, unbounded") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(1), Rational(1)};
  lp.constraints.push_back({{Rational(1), Rational(2)}, Relation::LessEqual, Rational(4)});
  lp.constraints.push_back({{Rational(3), Rational(1)}, Relation::LessEqual, Rational(6)});
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(14, 5));

  LinearProgram bad;
  bad.num_vars = 1;
  bad.objective = {Rational(1)};
  bad.constraints.push_back({{Rational(1)}, Relation::GreaterEqual, Rational(2)});
  bad.constraints.push_back({{Rational(1)}, Relation::LessEqual, Rational(1)});
  CHECK(solve_lp(bad).status == LpStatus::Infeasible);

  LinearProgram open;
  open.num_vars = 1;
  open.objective = {Rational(1)};
  open.constraints.push_back({{Rational(1)}, Relation::GreaterEqual, Rational(1)});
  CHECK(solve_lp(open).status == LpStatus::Unbounded);
}

TEST_CASE("strict feasibility examples") {
  StrictSystem s{3, {form({1, -1, 0}), form({1, 0, -1}), form({0, -1, 1})}, {}};
  const auto r = lp_strict_feasible(s);
  REQUIRE(r.feasible);
  REQUIRE(r.witness);
  for (const auto& f : s.strict) CHECK(sgn(f(*r.witness)) > 0);
  std::vector<Rational> point{Rational(3), Rational(1), Rational(2)};
  for (const auto& f : s.strict) CHECK(sgn(f(point)) > 0);

  CHECK_FALSE(lp_strict_feasible({1, {form({1}), form({-1})}, {}}).feasible);
  CHECK_FALSE(lp_strict_feasible({3, {form({1, -1, 0}), form({0, 1, -1}), form({-1, 0, 1})}, {}}).feasible);
  CHECK(lp_strict_feasible({2, {form({1, 0})}, {form({1, -1})}}).feasible);
  CHECK_FALSE(lp_strict_feasible({2, {form({1, -1})}, {form({1, -1})}}).feasible);
}

TEST_CASE("adding constraints never restores feasibility") {
  StrictSystem s{2, {form({1, 0}), form({0, 1})}, {}};
  CHECK(lp_strict_feasible(s).feasible);
  s.strict.push_back(form({-1, -1}));
  CHECK_FALSE(lp_strict_feasible(s).feasible);
  s.strict.push_back(form({1, 1}, 5));
  CHECK_FALSE(lp_strict_feasible(s).feasible);
}

TEST_CASE("enumeration of a single hyperplane") {
  Arrangement a{1, {"1"}, {form({1})}, {}};
  const auto m = enumerate_covectors(a);
  CHECK(testing::strings(m.covectors()) == std::vector<std::string>{"0", "+", "-"});
}

TEST_CASE("braid enumeration agrees with ordered set partitions") {
  const std::size_t fubini[] = {1, 1, 3, 13, 75, 541};
  for (std::size_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(braid_com(n).size() == fubini[n]);
    CHECK(ordered_set_partitions(n).size() == fubini[n]);
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(enumerate_covectors(braid_arrangement(n)) == braid_com(n));
  }
  CHECK(topes(braid_com(4)).size() == 24);
  CHECK(braid_pair_label(1, 2, 3) == "12");
  CHECK(braid_pair_label(3, 10, 10) == "3,10");
}

TEST_CASE("box arrangements enumerate to the fixtures") {
  CHECK(enumerate_covectors(figure1_rectangle_arrangement()) == fixture("figure1-rectangle"));
  CHECK(enumerate_covectors(four_lines_in_box(-1, 1, -1, 1)) == fixture("figure1"));
}

TEST_CASE("enumeration errors") {
  Arrangement empty{1, {"1"}, {form({1})}, {form({1}), form({-1})}};
  CHECK_THROWS_AS(enumerate_covectors(empty), Error);
  CHECK_THROWS_AS(enumerate_covectors(braid_arrangement(6), EnumerationOptions{14}), Error);
  Arrangement mismatched{2, {"1"}, {form({1})}, {}};
  CHECK_THROWS_AS(mismatched.validate(), Error);
  CHECK_THROWS_AS(fixture("nope"), Error);
}

TEST_CASE("arrangement JSON round-trips byte-identically") {
  const auto a = figure1_rectangle_arrangement();
  const auto text = dump(to_json(a));
  CHECK(dump(to_json(arrangement_from_json(parse_json(text)))) == text);
  CHECK_THROWS_AS(arrangement_from_json(parse_json("{\"forms\": {}}")), Error);
}

TEST_CASE("COM JSON round-trips") {
  const auto m = fixture("figure1");
  CHECK(com_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(parse_json("{"), Error);
  CHECK_THROWS_AS(com_from_json(parse_json(R"({"ground": ["1"], "covectors": ["0", "+"]})")), Error);
}
