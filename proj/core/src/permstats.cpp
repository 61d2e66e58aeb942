#include "covg/permstats.hpp"

#include <algorithm>

#include "covg/locus.hpp"

namespace covg {

std::size_t inversions(const std::vector<std::size_t>& w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j] ? 1 : 0;
  }
  return count;
}

std::size_t descents(const std::vector<std::size_t>& w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) count += w[i] > w[i + 1] ? 1 : 0;
  return count;
}

std::size_t cycles(const std::vector<std::size_t>& w) {
  std::vector<bool> seen(w.size(), false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = w[j] - 1) seen[j] = true;
  }
  return count;
}

std::size_t longest_increasing(const std::vector<std::size_t>& w) {
  std::vector<std::size_t> best(w.size(), 1);
  std::size_t top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    top = std::max(top, best[i]);
  }
  return top;
}

namespace {

template <class Stat>
HilbertSeries distribution(std::size_t n, Stat stat) {
  HilbertSeries h;
  for (const auto& w : permutations(n)) {
    const std::size_t d = stat(w);
    if (h.coeffs.size() <= d) h.coeffs.resize(d + 1, 0);
    ++h.coeffs[d];
  }
  return h;
}

HilbertSeries multiply(const HilbertSeries& a, const HilbertSeries& b) {
  HilbertSeries out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

}  // namespace

HilbertSeries inversion_distribution(std::size_t n) { return distribution(n, inversions); }
HilbertSeries descent_distribution(std::size_t n) { return distribution(n, descents); }
HilbertSeries lis_complement_distribution(std::size_t n) {
  return distribution(n, [n](const auto& w) { return n - longest_increasing(w); });
}
HilbertSeries cycle_complement_distribution(std::size_t n) {
  return distribution(n, [n](const auto& w) { return n - cycles(w); });
}

HilbertSeries stirling_product(std::size_t n) {
  HilbertSeries h{{1}};
  for (std::size_t i = 1; i + 1 <= n; ++i) h = multiply(h, HilbertSeries{{1, i}});
  return h;
}

HilbertSeries rising_factorial(std::size_t n) {
  HilbertSeries h{{1}};
  for (std::size_t i = 0; i < n; ++i) h = multiply(h, HilbertSeries{{i, 1}});
  return h;
}

HilbertSeries mahonian_product(std::size_t n) {
  HilbertSeries h{{1}};
  for (std::size_t k = 2; k <= n; ++k) h = multiply(h, HilbertSeries{std::vector<std::uint64_t>(k, 1)});
  return h;
}

}  // namespace covg
