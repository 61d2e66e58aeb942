#include "doctest.h"
#include "covg/locus.hpp"
#include "covg/permstats.hpp"

using namespace covg;

TEST_CASE("statistics of single permutations") {
  const std::vector<std::size_t> w{3, 1, 4, 2};
  CHECK(inversions(w) == 3);
  CHECK(descents(w) == 2);
  CHECK(longest_increasing(w) == 2);
  CHECK(cycles(w) == 1);
  CHECK(cycles({1, 2, 3}) == 3);
  CHECK(one_line(w) == "3142");
}

TEST_CASE("distributions") {
  CHECK(inversion_distribution(3).coeffs == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(descent_distribution(3).coeffs == std::vector<std::uint64_t>{1, 4, 1});
  CHECK(lis_complement_distribution(3).coeffs == std::vector<std::uint64_t>{1, 4, 1});
  CHECK(cycle_complement_distribution(4) == stirling_product(4));
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(inversion_distribution(n) == mahonian_product(n));
    CHECK(descent_distribution(n).total() == permutations(n).size());
  }
  CHECK(stirling_product(4).coeffs == std::vector<std::uint64_t>{1, 6, 11, 6});
  CHECK(rising_factorial(3).coeffs == std::vector<std::uint64_t>{0, 2, 3, 1});
  CHECK(permutations(3).front() == std::vector<std::size_t>{1, 2, 3});
}
