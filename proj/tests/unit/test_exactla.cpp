#include "doctest.h"
#include "covg/polynomial.hpp"
#include "covg/row_space.hpp"

using namespace covg;

TEST_CASE("rational parse and format") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(parse_rational("4/2")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("prime field arithmetic") {
  const PrimeField f(7);
  CHECK((f.from_int(3) * f.from_int(5)).value() == 1);
  CHECK((f.from_int(-1)).value() == 6);
  CHECK((f.one() / f.from_int(3)).value() == 5);
  CHECK(f.from_rational(Rational(1, 2)).value() == 4);
  CHECK_THROWS_AS(f.from_rational(Rational(1, 7)), Error);
  CHECK_THROWS_AS(PrimeField(8), Error);
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("rational").rational);
  const auto spec = FieldSpec::parse("fp:101");
  CHECK_FALSE(spec.rational);
  CHECK(spec.prime == 101);
  CHECK(spec.to_string() == "fp:101");
  CHECK_THROWS_AS(FieldSpec::parse("fp:100"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("real"), Error);
  CHECK(with_field(spec, [](auto field) { return field.name(); }) == "fp:101");
}

TEST_CASE("monomial order is graded and multiplicative") {
  const std::uint32_t a[] = {0, 0}, b[] = {0, 1}, c[] = {1, 1}, d[] = {2};
  const auto x0x0 = Monomial::product(a), x0x1 = Monomial::product(b), x1x1 = Monomial::product(c);
  const auto x2 = Monomial::product(d);
  CHECK(x0x0 < x0x1);
  CHECK(x0x1 < x1x1);
  CHECK(x2 < x0x0);
  CHECK(Monomial::one() < x2);
  CHECK(x0x0 * x2 < x0x1 * x2);
  CHECK(x0x1.divides(x0x1 * x2));
  CHECK_FALSE(x1x1.divides(x0x1));
  CHECK(x0x1.without(1) == Monomial::variable(0));
}

TEST_CASE("polynomial arithmetic and printing") {
  const auto vars = make_variables({"z1", "z2", "z3"});
  const auto z1 = QPolynomial::variable(vars, 0), z2 = QPolynomial::variable(vars, 1), z3 = QPolynomial::variable(vars, 2);
  CHECK((z1 * z2 - z1 * z3).to_string() == "z1*z2 - z1*z3");
  const auto p = (z1 + z2) * (z1 - z2);
  CHECK(p.to_string() == "z1^2 - z2^2");
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + QPolynomial::constant(vars, Rational(1))).is_homogeneous());
  CHECK((p - p).is_zero());
  CHECK(z1.scale(Rational(-1, 2)).to_string() == "-1/2*z1");
  const std::vector<Rational> point{Rational(2), Rational(3), Rational(0)};
  CHECK(p.evaluate(point) == Rational(-5));
  CHECK_THROWS_AS(QPolynomial::variable(vars, 3), Error);
  const auto other = make_variables({"w"});
  CHECK_THROWS_AS(z1 + QPolynomial::variable(other, 0), Error);
  const auto mod = p.convert(PrimeField(7));
  CHECK(mod.to_string() == "z1^2 + 6*z2^2");
}

TEST_CASE("elementary symmetric polynomials") {
  const auto vars = make_variables({"a", "b", "c"});
  std::vector<QPolynomial> xs;
  for (std::uint32_t i = 0; i < 3; ++i) xs.push_back(QPolynomial::variable(vars, i));
  CHECK(elementary_symmetric<RationalField>(0, xs, vars).to_string() == "1");
  CHECK(elementary_symmetric<RationalField>(2, xs, vars).to_string() == "a*b + a*c + b*c");
  CHECK(elementary_symmetric<RationalField>(3, xs, vars).to_string() == "a*b*c");
  CHECK_THROWS_AS(elementary_symmetric<RationalField>(4, xs, vars), Error);
}

TEST_CASE("row space rank, membership and coordinates") {
  RowSpace<RationalField> s(3);
  const std::vector<Rational> u{1, 2, 3}, v{2, 4, 6}, w{0, 1, 1}, sum{1, 3, 4};
  CHECK(s.insert(u));
  CHECK_FALSE(s.insert(v));
  CHECK(s.insert(w));
  CHECK(s.rank() == 2);
  CHECK(s.in_span(sum));
  const std::vector<Rational> e3{0, 0, 1};
  CHECK_FALSE(s.in_span(e3));
  const std::vector<Rational> short_vector{1};
  CHECK_THROWS_AS((void)s.in_span(short_vector), Error);
}

TEST_CASE("trace of a permutation on an invariant subspace") {
  RowSpace<RationalField> s(3);
  const std::vector<Rational> ones{1, 1, 1}, diff{1, -1, 0};
  s.insert(ones);
  const std::uint32_t swap01[] = {1, 0, 2};
  CHECK(s.trace_on_subspace(swap01) == Rational(1));
  s.insert(diff);
  CHECK(s.trace_on_subspace(swap01) == Rational(0));
  const std::uint32_t cycle[] = {1, 2, 0};
  CHECK_THROWS_AS((void)s.trace_on_subspace(cycle), Error);
}
