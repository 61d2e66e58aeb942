#include "covg/arrangement.hpp"

#include <functional>

namespace covg {

void Arrangement::validate() const {
  if (labels.size() != forms.size()) throw Error(Errc::LengthMismatch, "one label per form required");
  for (const auto* list : {&forms, &region}) {
    for (const auto& f : *list) {
      if (f.dimension() != dimension) throw Error(Errc::LengthMismatch, "form dimension differs from arrangement");
    }
  }
}

COM enumerate_covectors(const Arrangement& a, const EnumerationOptions& options) {
  a.validate();
  const std::size_t m = a.forms.size();
  if (m > options.max_forms) {
    throw Error(Errc::CapExceeded, std::to_string(m) + " forms exceed the cap of " +
                                       std::to_string(options.max_forms));
  }
  StrictSystem system{a.dimension, a.region, {}};
  if (!lp_strict_feasible(system).feasible) throw Error(Errc::EmptyRegion, "region is empty");

  std::vector<SignedVector> found;
  SignedVector current(m);
  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (k == m) {
      found.push_back(current);
      return;
    }
    for (Sign s : {Sign::Plus, Sign::Minus, Sign::Zero}) {
      current.set(k, s);
      if (s == Sign::Plus) system.strict.push_back(a.forms[k]);
      if (s == Sign::Minus) system.strict.push_back(-a.forms[k]);
      if (s == Sign::Zero) system.equalities.push_back(a.forms[k]);
      if (lp_strict_feasible(system).feasible) descend(k + 1);
      if (s == Sign::Zero) {
        system.equalities.pop_back();
      } else {
        system.strict.pop_back();
      }
    }
    current.set(k, Sign::Zero);
  };
  descend(0);

  COM result(GroundSet(a.labels), std::move(found));
  return result;
}

std::string braid_pair_label(std::size_t i, std::size_t j, std::size_t n) {
  if (n <= 9) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "," + std::to_string(j);
}

Arrangement braid_arrangement(std::size_t n) {
  Arrangement a;
  a.dimension = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      AffineForm f{std::vector<Rational>(n), 0};
      f.coeffs[i] = 1;
      f.coeffs[j] = -1;
      a.labels.push_back(braid_pair_label(i + 1, j + 1, n));
      a.forms.push_back(std::move(f));
    }
  }
  return a;
}

std::vector<std::vector<std::size_t>> ordered_set_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> block(n);
  // Place element e into an existing block, or open a new block at any gap
  // (shifting later blocks up by one).
  std::function<void(std::size_t, std::size_t)> place = [&](std::size_t e, std::size_t blocks) {
    if (e == n) {
      out.push_back(block);
      return;
    }
    for (std::size_t b = 0; b < blocks; ++b) {
      block[e] = b;
      place(e + 1, blocks);
    }
    for (std::size_t gap = 0; gap <= blocks; ++gap) {
      for (std::size_t f = 0; f < e; ++f) {
        if (block[f] >= gap) ++block[f];
      }
      block[e] = gap;
      place(e + 1, blocks + 1);
      for (std::size_t f = 0; f < e; ++f) {
        if (block[f] > gap) --block[f];
      }
    }
  };
  place(0, 0);
  return out;
}

COM braid_com(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidChoice, "braid_com needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) labels.push_back(braid_pair_label(i, j, n));
  }
  GroundSet ground(std::move(labels));
  std::vector<SignedVector> covectors;
  for (const auto& block : ordered_set_partitions(n)) {
    SignedVector x(ground.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++k) {
        x.set(k, block[i] < block[j] ? Sign::Plus : block[i] > block[j] ? Sign::Minus : Sign::Zero);
      }
    }
    covectors.push_back(x);
  }
  return COM::unchecked(std::move(ground), std::move(covectors));
}

}  // namespace covg
