#include <algorithm>

#include "doctest.h"
#include "covg/matroidal.hpp"
#include "support.hpp"

using namespace covg;

TEST_CASE("total orders") {
  const TotalOrder order({2, 0, 1});
  CHECK(order.rank(2) == 0);
  CHECK(order.smallest(ElementSet::of({0, 1})) == 0);
  CHECK(order.smallest(ElementSet::of({1, 2})) == 2);
  CHECK(order.restrict_to(ElementSet::of({1, 2})).sequence() == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(TotalOrder({0, 0}), Error);
}

TEST_CASE("braid3 circuits are the two signed triangles") {
  const auto cs = circuits(braid_com(3));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].vector.to_string() == "+-+");
  CHECK(cs[1].vector.to_string() == "-+-");
  CHECK(cs[0].symmetric);
  CHECK(cs[1].symmetric);
}

TEST_CASE("circuits satisfy the direct characterization") {
  for (const auto& [name, m] : testing::corpus()) {
    CAPTURE(name);
    for (const auto& c : circuits(m)) {
      CHECK(is_circuit(m, c.vector));
      CHECK(c.symmetric == is_circuit(m, -c.vector));
    }
  }
}

TEST_CASE("circuit cap") { CHECK_THROWS_AS(circuits(braid_com(6), CircuitOptions{14}), Error); }

TEST_CASE("NBC sets of braid3") {
  const auto m = braid_com(3);
  const auto sets = nbc_sets(m, TotalOrder::natural(3));
  const std::vector<ElementSet> expected{ElementSet(), ElementSet::of({0}), ElementSet::of({1}),
                                         ElementSet::of({0, 1}), ElementSet::of({2}), ElementSet::of({0, 2})};
  CHECK(sets == expected);
}

TEST_CASE("NBC count equals tope count under every order") {
  for (const auto& [name, m] : testing::corpus()) {
    CAPTURE(name);
    std::vector<std::size_t> seq(m.ground_size());
    for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = i;
    std::size_t tried = 0;
    do {
      CHECK(check_nbc_tope_count(m, TotalOrder(seq)).pass);
    } while (std::next_permutation(seq.begin(), seq.end()) && ++tried < 24);
  }
}

TEST_CASE("figure1 closure, basic sets and codim") {
  const auto m = fixture("figure1");
  const auto poset = flat_poset(m);
  const auto top = ElementSet::of({0, 1, 2});
  CHECK(closure(poset, ElementSet::of({0, 1})) == top);
  CHECK(closure(poset, ElementSet::of({0})) == ElementSet::of({0}));
  CHECK_FALSE(closure(poset, ElementSet::of({3})).has_value());
  const std::vector<ElementSet> basic{ElementSet::of({0, 1}), ElementSet::of({0, 2}), ElementSet::of({1, 2})};
  CHECK(basic_sets(poset, top) == basic);
  CHECK(basic_sets(poset, ElementSet()) == std::vector<ElementSet>{ElementSet()});
  CHECK(codim(poset, top) == 2);
  CHECK(codim(poset, ElementSet::of({1})) == 1);
  CHECK(nonbasic(poset, ElementSet::of({3})));
  CHECK(nonbasic(poset, top));
  CHECK_FALSE(nonbasic(poset, ElementSet::of({0, 2})));
  const std::vector<ElementSet> minimal{ElementSet::of({0, 1, 2}), ElementSet::of({3})};
  CHECK(minimal_nonbasic_sets(m) == minimal);
  CHECK_THROWS_AS(basic_sets(poset, ElementSet::of({0, 1})), Error);
  CHECK_THROWS_AS(codim(poset, ElementSet::of({3})), Error);
}

TEST_CASE("counting lemmas hold on the corpus") {
  for (const auto& [name, m] : testing::corpus()) {
    CAPTURE(name);
    const auto t = check_tope_contraction_count(m);
    CHECK(t.pass);
    std::size_t sum = 0;
    for (const auto& [f, k] : t.topes_per_flat) sum += k;
    CHECK(sum == m.size());
    CHECK(check_basic_lemma(m).pass);
  }
}

TEST_CASE("two-values lemma") {
  const auto m = braid_com(3);
  const auto r = check_two_values(m, ElementSet(), SignedVector::parse("+-+"), ElementSet::of({0}));
  CHECK(r.pass);
  CHECK(r.covectors_checked == m.size());
  CHECK_THROWS_AS(check_two_values(m, ElementSet(), SignedVector::parse("+-+"), ElementSet::of({0, 1, 2})), Error);
  CHECK_THROWS_AS(check_two_values(m, ElementSet(), SignedVector::parse("+-+"), ElementSet()), Error);
  CHECK_THROWS_AS(check_two_values(m, ElementSet(), SignedVector::parse("++0"), ElementSet::of({0})), Error);
  CHECK(check_two_values_exhaustive(fixture("figure1")).pass);
}
