#include "doctest.h"
#include "covg/equivariant.hpp"
#include "covg/json_io.hpp"
#include "support.hpp"

using namespace covg;

TEST_CASE("group closure") {
  const auto g = braid_symmetric_group(4);
  CHECK(g.order() == 24);
  CHECK(g.elements().front().is_identity());
  CHECK(g.contains(braid_action({1, 0, 2, 3})));
  CHECK(GroupSpec::generate(3, {}).order() == 1);
  CHECK_THROWS_AS(GroupSpec::generate(2, {SignedPermutation::identity(3)}), Error);
  CHECK_THROWS_AS(GroupSpec::generate(6, braid_symmetric_group(4).generators(), 10), Error);
  CHECK_THROWS_AS(GroupSpec::from_elements(3, {SignedPermutation::identity(3), braid_action({1, 0, 2})}).index_of(
                      braid_action({0, 2, 1})),
                  Error);
  CHECK_THROWS_AS(GroupSpec::from_elements(3, {braid_action({1, 2, 0})}), Error);
}

TEST_CASE("braid action on pairs") {
  const auto w = braid_action({1, 0, 2});
  CHECK(w.perm() == std::vector<std::size_t>{0, 2, 1});
  CHECK(w.sign(0) == Sign::Minus);
  CHECK(w.sign(1) == Sign::Plus);
  braid_symmetric_group(3).require_automorphisms(braid_com(3));
  const SignedPermutation flip({0, 1, 2}, {Sign::Minus, Sign::Plus, Sign::Plus});
  CHECK_THROWS_AS(GroupSpec::generate(3, {flip}).require_automorphisms(braid_com(3)), Error);
}

TEST_CASE("brute-force automorphisms") {
  const auto aut = automorphisms_bruteforce(braid_com(3));
  CHECK(aut.size() == 12);
  CHECK(automorphisms_bruteforce(fixture("figure1")).size() >= 1);
  CHECK_THROWS_AS(automorphisms_bruteforce(braid_com(5)), Error);
}

TEST_CASE("graded characters of braid loci") {
  for (std::size_t n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const auto m = braid_com(n);
    const auto g = braid_symmetric_group(n);
    const auto locus = big_locus(m);
    const auto chi = graded_character(locus, g);
    const auto h = hilbert_series(locus);
    for (std::size_t d = 0; d < h.coeffs.size(); ++d) CHECK(chi.at(0, d) == static_cast<long>(h.coeffs[d]));
    for (std::size_t e = 0; e < g.order(); ++e) {
      Rational sum = 0;
      for (std::size_t d = 0; d < chi.degrees(); ++d) {
        sum += chi.at(e, d);
        CHECK(chi.at(e, d).get_den() == 1);
      }
      std::size_t fixed = 0;
      for (const auto& x : m.covectors()) fixed += act(g.elements()[e], x) == x ? 1 : 0;
      CHECK(sum == static_cast<long>(fixed));
      for (const auto& y : g.elements()) {
        const auto conj = g.index_of(y * g.elements()[e] * y.inverse());
        for (std::size_t d = 0; d < chi.degrees(); ++d) CHECK(chi.at(conj, d) == chi.at(e, d));
      }
    }
    CHECK(graded_character(locus, g, FieldSpec::parse("fp:1000003"), 2) == chi);
  }
}

TEST_CASE("characters over a small prime are refused") {
  CHECK_THROWS_AS(graded_character(big_locus(braid_com(3)), braid_symmetric_group(3), FieldSpec::parse("fp:5")), Error);
}

TEST_CASE("induction from the trivial subgroup gives the regular character") {
  const auto g = braid_symmetric_group(3);
  GradedCharacter trivial{{SignedPermutation::identity(3)}, {{Rational(1)}}};
  const auto ind = induced_character(g, trivial);
  CHECK(ind.at(0, 0) == 6);
  for (std::size_t e = 1; e < g.order(); ++e) CHECK(ind.at(e, 0) == 0);
  GradedCharacter stranger{{braid_action({1, 0, 2})}, {{Rational(1)}}};
  CHECK_THROWS_AS(induced_character(g, stranger), Error);
  CHECK(trivial.shifted(2).at(0, 2) == 1);
  CHECK(trivial.shifted(2).at(0, 0) == 0);
}

TEST_CASE("graded module structure") {
  for (std::size_t n = 2; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(verify_graded_module_structure(braid_com(n), braid_symmetric_group(n)).pass);
  }
  const auto m = fixture("figure1");
  const auto g = GroupSpec::from_elements(4, automorphisms_bruteforce(m));
  CHECK(verify_graded_module_structure(m, g, FieldSpec::parse("fp:1000003")).pass);
  CHECK(verify_graded_module_structure(m, GroupSpec::generate(4, {})).pass);
}

TEST_CASE("group JSON") {
  const auto m = braid_com(3);
  const auto g = braid_symmetric_group(3);
  const auto back = group_from_json(to_json(g, m.ground()), m.ground());
  CHECK(back.elements() == g.elements());
  CHECK_THROWS_AS(group_from_json(parse_json(R"({"generators": [{"perm": ["12","13"]}]})"), m.ground()), Error);
  CHECK_THROWS_AS(group_from_json(parse_json(R"({"generators": [{"perm": ["12","13","99"]}]})"), m.ground()), Error);
  CHECK_THROWS_AS(
      group_from_json(parse_json(R"({"generators": [{"perm": ["12","13","23"], "signs": [1,0,1]}]})"), m.ground()),
      Error);
}
