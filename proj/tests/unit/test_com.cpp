#include <algorithm>

#include "doctest.h"
#include "covg/com.hpp"
#include "support.hpp"

using namespace covg;

TEST_CASE("signed vector parsing, printing and order") {
  const auto x = SignedVector::parse("0+-+");
  CHECK(x.size() == 4);
  CHECK(x[0] == Sign::Zero);
  CHECK(x[2] == Sign::Minus);
  CHECK(x.to_string() == "0+-+");
  CHECK((-x).to_string() == "0-+-");
  CHECK(x.zero_set() == ElementSet::of({0}));
  CHECK(x.support() == ElementSet::of({1, 2, 3}));
  CHECK_FALSE(x.is_tope());
  CHECK(SignedVector::parse("0") < SignedVector::parse("+"));
  CHECK(SignedVector::parse("+") < SignedVector::parse("-"));
  CHECK_THROWS_AS(SignedVector::parse("+x"), Error);
}

TEST_CASE("composition and separator") {
  const auto x = SignedVector::parse("+00-");
  const auto y = SignedVector::parse("-+0+");
  CHECK(compose(x, y).to_string() == "++0-");
  CHECK(compose(y, x).to_string() == "-+0+");
  CHECK(separator(x, y) == ElementSet::of({0, 3}));
  CHECK(separator(x, x).empty());
  CHECK(x.conforms_to(compose(x, y)));
}

TEST_CASE("restrict_to re-indexes in increasing order") {
  const auto x = SignedVector::parse("+-0+");
  CHECK(x.restrict_to(ElementSet::of({1, 3})).to_string() == "-+");
}

TEST_CASE("axiom checks on the corpus") {
  for (const auto& [name, m] : testing::corpus()) {
    CAPTURE(name);
    CHECK(check_axioms(m.covectors()).ok());
  }
}

TEST_CASE("axiom failures carry witnesses") {
  SUBCASE("face symmetry") {
    const std::vector<SignedVector> family{SignedVector::parse("0"), SignedVector::parse("+")};
    const auto r = check_axioms(family);
    CHECK_FALSE(r.face_symmetry);
    REQUIRE(r.face_symmetry_witness);
  }
  SUBCASE("strong elimination") {
    const std::vector<SignedVector> family{SignedVector::parse("++"), SignedVector::parse("--"),
                                           SignedVector::parse("+-"), SignedVector::parse("-+")};
    const auto r = check_axioms(family);
    CHECK(r.face_symmetry);
    CHECK_FALSE(r.strong_elimination);
    REQUIRE(r.elimination_witness);
  }
  SUBCASE("constructor rejects") {
    std::vector<SignedVector> family{SignedVector::parse("0"), SignedVector::parse("+")};
    CHECK_THROWS_AS(COM(GroundSet::numbered(1), family), Error);
    CHECK_NOTHROW(COM(GroundSet::numbered(1), {SignedVector::parse("+")}));
  }
  SUBCASE("mixed lengths") {
    std::vector<SignedVector> family{SignedVector::parse("+"), SignedVector::parse("+-")};
    CHECK_THROWS_AS(COM(GroundSet::numbered(2), family), Error);
  }
}

TEST_CASE("figure1 topes, flats and coloops") {
  const auto m = fixture("figure1");
  CHECK(m.size() == 13);
  CHECK(m.contains(SignedVector::parse("0+-+")));
  CHECK(topes(m).size() == 6);
  CHECK(coloops(m).empty());
  const auto poset = flat_poset(m);
  const std::vector<ElementSet> expected{ElementSet(), ElementSet::of({0}), ElementSet::of({1}), ElementSet::of({2}),
                                         ElementSet::of({0, 1, 2})};
  CHECK(poset.flats() == expected);
  CHECK(poset.minimum() == ElementSet());
  CHECK(poset.covers().size() == 6);
}

TEST_CASE("figure1-rectangle has six flats including {4}") {
  const auto poset = flat_poset(fixture("figure1-rectangle"));
  CHECK(poset.size() == 6);
  CHECK(poset.contains(ElementSet::of({3})));
}

TEST_CASE("restriction and contraction") {
  const auto m = fixture("figure1");
  const auto f = ElementSet::of({0, 1, 2});
  const auto c = contract(m, f);
  CHECK(c.ground_size() == 1);
  CHECK(c.ground().label(0) == "4");
  CHECK(topes(c).size() == 1);
  const auto r = restrict(m, f);
  CHECK(r.ground_size() == 3);
  CHECK(check_axioms(r.covectors()).ok());
  CHECK_THROWS_AS(contract(m, ElementSet::of({3})), Error);
  CHECK_THROWS_AS(restrict(m, ElementSet::of({0, 3})), Error);
}

TEST_CASE("contraction of braid at a rank-one flat") {
  const auto m = braid_com(3);
  const auto c = contract(m, ElementSet::of({0}));
  CHECK(c.size() == 3);
  CHECK(topes(c).size() == 2);
}

TEST_CASE("signed permutations act and compose") {
  const SignedPermutation w({1, 0, 2}, {Sign::Plus, Sign::Minus, Sign::Plus});
  const auto x = SignedVector::parse("+-0");
  CHECK(act(w, x).to_string() == "++0");
  CHECK(act(w.inverse(), act(w, x)) == x);
  CHECK((w * w.inverse()).is_identity());
  CHECK(act(w * w, x) == act(w, act(w, x)));
  CHECK_THROWS_AS(SignedPermutation({0, 0}, {Sign::Plus, Sign::Plus}), Error);
}

TEST_CASE("braid automorphisms") {
  const auto m = braid_com(3);
  const SignedPermutation swap12({0, 2, 1}, {Sign::Minus, Sign::Plus, Sign::Plus});
  CHECK(verify_automorphism(m, swap12));
  const SignedPermutation bad({0, 1, 2}, {Sign::Minus, Sign::Plus, Sign::Plus});
  CHECK_FALSE(verify_automorphism(m, bad));
}
