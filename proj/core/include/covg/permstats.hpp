#pragma once

#include <cstddef>
#include <vector>

#include "covg/hilbert.hpp"

namespace covg {

/// Statistics of a permutation in 1-based one-line notation.
std::size_t inversions(const std::vector<std::size_t>& w);
std::size_t descents(const std::vector<std::size_t>& w);
std::size_t cycles(const std::vector<std::size_t>& w);
/// Length of a longest increasing subsequence.
std::size_t longest_increasing(const std::vector<std::size_t>& w);

/// sum over w in S_n of q^inv(w), q^des(w), q^(n - lis(w)), q^(n - cyc(w)).
HilbertSeries inversion_distribution(std::size_t n);
HilbertSeries descent_distribution(std::size_t n);
HilbertSeries lis_complement_distribution(std::size_t n);
HilbertSeries cycle_complement_distribution(std::size_t n);

/// Coefficients of prod_{i=1}^{n-1} (1 + i q).
HilbertSeries stirling_product(std::size_t n);
/// Coefficients of q (q + 1) ... (q + n - 1).
HilbertSeries rising_factorial(std::size_t n);
/// Coefficients of prod_{k=2}^{n} (1 + q + ... + q^{k-1}).
HilbertSeries mahonian_product(std::size_t n);

}  // namespace covg
