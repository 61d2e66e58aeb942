#include "covg/matroidal.hpp"

#include <algorithm>
#include <set>

namespace covg {

TotalOrder TotalOrder::natural(std::size_t n) {
  std::vector<std::size_t> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = i;
  return TotalOrder(std::move(seq));
}

TotalOrder::TotalOrder(std::vector<std::size_t> sequence) : sequence_(std::move(sequence)), rank_(sequence_.size()) {
  std::vector<bool> seen(sequence_.size(), false);
  for (std::size_t r = 0; r < sequence_.size(); ++r) {
    const auto e = sequence_[r];
    if (e >= sequence_.size() || seen[e]) throw Error(Errc::InvalidChoice, "total order is not a permutation");
    seen[e] = true;
    rank_[e] = r;
  }
}

std::size_t TotalOrder::smallest(ElementSet s) const {
  if (s.empty()) throw Error(Errc::InvalidChoice, "smallest element of the empty set");
  std::size_t best = s.first();
  for (auto e : s.elements()) {
    if (rank_[e] < rank_[best]) best = e;
  }
  return best;
}

TotalOrder TotalOrder::restrict_to(ElementSet subset) const {
  std::vector<std::size_t> position(sequence_.size(), 0);
  std::size_t k = 0;
  for (auto e : subset.elements()) position[e] = k++;
  std::vector<std::size_t> seq;
  for (auto e : sequence_) {
    if (subset.contains(e)) seq.push_back(position[e]);
  }
  return TotalOrder(std::move(seq));
}

bool is_circuit(const COM& m, const SignedVector& x) {
  if (x.size() != m.ground_size()) throw Error(Errc::LengthMismatch, "is_circuit");
  auto conformable = [&m](const SignedVector& z) {
    return std::any_of(m.covectors().begin(), m.covectors().end(),
                       [&z](const SignedVector& y) { return z.conforms_to(y); });
  };
  if (conformable(x)) return false;
  for (auto i : x.support().elements()) {
    SignedVector z = x;
    z.set(i, Sign::Zero);
    if (!conformable(z)) return false;
  }
  return true;
}

std::vector<Circuit> circuits(const COM& m, const CircuitOptions& options) {
  const std::size_t n = m.ground_size();
  if (n > options.max_ground) {
    throw Error(Errc::CapExceeded, "circuit enumeration on " + std::to_string(n) +
                                       " elements exceeds the cap of " + std::to_string(options.max_ground));
  }
  // Base-3 index with digit + = 0, - = 1, 0 = 2: turning a 0 into a sign lowers the index.
  std::vector<std::size_t> power(n + 1, 1);
  for (std::size_t k = 1; k <= n; ++k) power[k] = power[k - 1] * 3;
  const std::size_t total = power[n];
  auto index_of = [&](const SignedVector& v) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Sign s = v[k];
      idx += power[k] * (s == Sign::Plus ? 0 : s == Sign::Minus ? 1 : 2);
    }
    return idx;
  };

  // conformable[idx]: some covector agrees with the signed set on its support.
  std::vector<std::uint8_t> conformable(total, 0);
  for (const auto& y : m.covectors()) conformable[index_of(y)] = 1;
  std::vector<std::uint8_t> digit(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (idx > 0) {
      for (std::size_t k = 0; k < n; ++k) {
        if (++digit[k] < 3) break;
        digit[k] = 0;
      }
    }
    if (conformable[idx]) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (digit[k] == 2 && (conformable[idx - 2 * power[k]] || conformable[idx - power[k]])) {
        conformable[idx] = 1;
        break;
      }
    }
  }

  std::vector<SignedVector> found;
  std::fill(digit.begin(), digit.end(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (idx > 0) {
      for (std::size_t k = 0; k < n; ++k) {
        if (++digit[k] < 3) break;
        digit[k] = 0;
      }
    }
    if (conformable[idx]) continue;
    bool minimal = true;
    for (std::size_t k = 0; k < n && minimal; ++k) {
      if (digit[k] != 2 && !conformable[idx + (2 - digit[k]) * power[k]]) minimal = false;
    }
    if (!minimal) continue;
    SignedVector x(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (digit[k] != 2) x.set(k, digit[k] == 0 ? Sign::Plus : Sign::Minus);
    }
    found.push_back(x);
  }
  std::sort(found.begin(), found.end());

  std::vector<Circuit> out;
  out.reserve(found.size());
  for (const auto& x : found) {
    out.push_back({x, std::binary_search(found.begin(), found.end(), -x)});
  }
  return out;
}

std::vector<ElementSet> nbc_sets(const COM& m, const TotalOrder& order, const std::vector<Circuit>& circuit_list) {
  const std::size_t n = m.ground_size();
  if (order.size() != n) throw Error(Errc::LengthMismatch, "total order size");
  std::vector<std::uint64_t> forbidden;
  for (const auto& c : circuit_list) {
    const ElementSet supp = c.vector.support();
    forbidden.push_back(supp.bits());
    if (c.symmetric) {
      ElementSet broken = supp;
      broken.erase(order.smallest(supp));
      forbidden.push_back(broken.bits());
    }
  }
  // Keep only inclusion-minimal forbidden sets, smallest first.
  std::sort(forbidden.begin(), forbidden.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::uint64_t> minimal;
  for (auto f : forbidden) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [f](std::uint64_t g) { return (g & ~f) == 0; });
    if (!redundant) minimal.push_back(f);
  }

  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    const bool ok = std::none_of(minimal.begin(), minimal.end(), [s](std::uint64_t g) { return (g & ~s) == 0; });
    if (ok) out.emplace_back(s);
  }
  return out;
}

std::vector<ElementSet> nbc_sets(const COM& m, const TotalOrder& order) {
  return nbc_sets(m, order, circuits(m));
}

std::optional<ElementSet> closure(const FlatPoset& flats, ElementSet c) {
  std::optional<ElementSet> result;
  for (auto f : flats.flats()) {
    if (!c.subset_of(f)) continue;
    result = result ? (*result & f) : f;
  }
  return result;
}

std::optional<ElementSet> closure(const COM& m, ElementSet c) { return closure(flat_poset(m), c); }

std::vector<ElementSet> basic_sets(const FlatPoset& flats, ElementSet flat) {
  if (!flats.contains(flat)) throw Error(Errc::NotAFlat, "basic_sets: not a flat");
  std::vector<ElementSet> out;
  // Enumerate submasks of the flat.
  const std::uint64_t f = flat.bits();
  for (std::uint64_t s = f;; s = (s - 1) & f) {
    const ElementSet b(s);
    if (closure(flats, b) == flat) {
      bool minimal = true;
      for (auto e : b.elements()) {
        ElementSet smaller = b;
        smaller.erase(e);
        if (closure(flats, smaller) == flat) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(b);
    }
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> basic_sets(const COM& m, ElementSet flat) { return basic_sets(flat_poset(m), flat); }

bool nonbasic(const FlatPoset& flats, ElementSet c) {
  const auto cl = closure(flats, c);
  if (!cl) return true;
  // Closure is monotone, so a proper subset with the same closure exists iff a corank-1 one does.
  for (auto e : c.elements()) {
    ElementSet smaller = c;
    smaller.erase(e);
    if (closure(flats, smaller) == cl) return true;
  }
  return false;
}

bool nonbasic(const COM& m, ElementSet c) { return nonbasic(flat_poset(m), c); }

std::vector<ElementSet> minimal_nonbasic_sets(const FlatPoset& flats, std::size_t ground_size) {
  if (ground_size > 24) throw Error(Errc::CapExceeded, "minimal nonbasic sets enumerate 2^|I| subsets");
  const std::uint64_t limit = std::uint64_t{1} << ground_size;
  std::vector<std::uint8_t> is_nonbasic(limit);
  for (std::uint64_t s = 0; s < limit; ++s) is_nonbasic[s] = nonbasic(flats, ElementSet(s)) ? 1 : 0;
  std::vector<ElementSet> out;
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (!is_nonbasic[s]) continue;
    bool minimal = true;
    for (std::uint64_t b = s; b != 0 && minimal; b &= b - 1) {
      if (is_nonbasic[s & ~(b & -b)]) minimal = false;
    }
    if (minimal) out.emplace_back(s);
  }
  return out;
}

std::vector<ElementSet> minimal_nonbasic_sets(const COM& m) {
  return minimal_nonbasic_sets(flat_poset(m), m.ground_size());
}

std::size_t codim(const FlatPoset& flats, ElementSet flat) {
  const auto basics = basic_sets(flats, flat);
  if (basics.empty()) throw Error(Errc::Internal, "flat without a basic set");
  const std::size_t size = basics.front().size();
  for (auto b : basics) {
    if (b.size() != size) throw Error(Errc::Internal, "basic sets of one flat differ in size");
  }
  return size;
}

std::size_t codim(const COM& m, ElementSet flat) { return codim(flat_poset(m), flat); }

TopeCountReport check_tope_contraction_count(const COM& m) {
  TopeCountReport report;
  report.covectors = m.size();
  const auto flats = flat_poset(m);
  std::size_t sum = 0;
  for (auto f : flats.flats()) {
    const auto contraction = contract(m, f);
    const std::size_t t = topes(contraction).size();
    report.topes_per_flat.emplace_back(f, t);
    sum += t;

    const ElementSet rest = ElementSet::full(m.ground_size()) - f;
    std::set<SignedVector> images;
    std::size_t with_flat = 0;
    for (const auto& x : m.covectors()) {
      if (x.zero_set() != f) continue;
      ++with_flat;
      const auto image = x.restrict_to(rest);
      if (!image.is_tope() || !contraction.contains(image)) {
        report.fail("covector " + x.to_string() + " does not restrict to a tope of the contraction at " +
                    m.ground().format(f));
      }
      images.insert(image);
    }
    if (images.size() != with_flat) report.fail("restriction is not injective at flat " + m.ground().format(f));
    if (with_flat != t) {
      report.fail("flat " + m.ground().format(f) + ": " + std::to_string(with_flat) + " covectors vs " +
                  std::to_string(t) + " topes of the contraction");
    }
  }
  if (sum != m.size()) {
    report.fail("#M = " + std::to_string(m.size()) + " but the contraction tope sum is " + std::to_string(sum));
  }
  return report;
}

TwoValuesReport check_two_values(const COM& m, ElementSet flat, const SignedVector& x, ElementSet j) {
  const auto contraction = contract(m, flat);
  if (x.size() != contraction.ground_size()) throw Error(Errc::LengthMismatch, "circuit length");
  const ElementSet supp = x.support();
  if (j.empty() || !j.subset_of(supp) || j == supp) {
    throw Error(Errc::InvalidChoice, "J must be a nonempty proper subset of Supp(X)");
  }
  if (!is_circuit(contraction, x) || !is_circuit(contraction, -x)) {
    throw Error(Errc::InvalidChoice, x.to_string() + " is not a symmetric circuit of the contraction");
  }

  TwoValuesReport report;
  for (const auto& y : contraction.covectors()) {
    bool has_zero = false, has_one = false;
    for (auto i : supp.elements()) {
      const int value = (y[i] == x[i] ? 1 : 0) + (j.contains(i) && y[i] == Sign::Zero ? 1 : 0);
      (value == 0 ? has_zero : has_one) = true;
    }
    ++report.covectors_checked;
    if (!has_zero || !has_one) {
      report.fail("flat " + m.ground().format(flat) + ", X=" + x.to_string() + ", J=" +
                  contraction.ground().format(j) + ": covector " + y.to_string() + " attains only " +
                  (has_one ? "1" : "0"));
    }
  }
  return report;
}

TwoValuesReport check_two_values_exhaustive(const COM& m) {
  TwoValuesReport report;
  const auto poset = flat_poset(m);
  for (auto f : poset.flats()) {
    const auto contraction = contract(m, f);
    for (const auto& c : circuits(contraction)) {
      if (!c.symmetric) continue;
      const std::uint64_t supp = c.vector.support().bits();
      for (std::uint64_t j = (supp - 1) & supp; j != 0; j = (j - 1) & supp) {
        auto part = check_two_values(m, f, c.vector, ElementSet(j));
        report.covectors_checked += part.covectors_checked;
        report.merge(part);
      }
    }
  }
  return report;
}

CheckReport check_basic_lemma(const COM& m) {
  CheckReport report;
  const auto flats = flat_poset(m);
  std::vector<std::vector<ElementSet>> basics;
  for (auto f : flats.flats()) {
    basics.push_back(basic_sets(flats, f));
    if (basics.back().empty()) {
      report.fail("flat " + m.ground().format(f) + " has no basic set");
      continue;
    }
    for (auto b : basics.back()) {
      if (b.size() != basics.back().front().size()) {
        report.fail("flat " + m.ground().format(f) + " has basic sets of different sizes");
      }
    }
  }
  for (std::size_t a = 0; a < flats.size(); ++a) {
    for (std::size_t b = 0; b < flats.size(); ++b) {
      if (!flats.flats()[a].subset_of(flats.flats()[b])) continue;
      bool nested = false;
      for (auto small : basics[a]) {
        for (auto big : basics[b]) nested = nested || small.subset_of(big);
      }
      if (!nested) {
        report.fail("no nested basic sets for " + m.ground().format(flats.flats()[a]) + " in " +
                    m.ground().format(flats.flats()[b]));
      }
    }
  }
  return report;
}

CheckReport check_nbc_tope_count(const COM& m, const TotalOrder& order) {
  CheckReport report;
  const auto n = nbc_sets(m, order).size();
  const auto t = topes(m).size();
  if (n != t) report.fail("#NBC = " + std::to_string(n) + " but #topes = " + std::to_string(t));
  return report;
}

}  // namespace covg
