#include "covg/locus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace covg {

const char* to_string(LabelKind kind) {
  switch (kind) {
    case LabelKind::Covector: return "covector";
    case LabelKind::Permutation: return "permutation";
    case LabelKind::OrderedSetPartition: return "ordered-set-partition";
    case LabelKind::Raw: return "raw";
  }
  return "raw";
}

void PointLocus::validate() const {
  std::set<std::vector<Rational>> seen;
  std::set<std::string> labels;
  for (const auto& p : points) {
    if (p.coords.size() != variables.size()) throw Error(Errc::LengthMismatch, "point " + p.label + " has wrong dimension");
    if (!seen.insert(p.coords).second) throw Error(Errc::InvalidChoice, "duplicate point " + p.label);
    if (!labels.insert(p.label).second) throw Error(Errc::InvalidChoice, "duplicate label " + p.label);
  }
}

std::size_t PointLocus::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].label == label) return k;
  }
  throw Error(Errc::InvalidChoice, "no point labeled " + label);
}

std::vector<std::string> small_variable_names(const GroundSet& ground) {
  std::vector<std::string> out;
  for (const auto& l : ground.labels()) {
    out.push_back("y" + l + "+");
    out.push_back("y" + l + "-");
  }
  return out;
}

std::vector<std::string> big_variable_names(const GroundSet& ground) {
  std::vector<std::string> out;
  for (const auto& l : ground.labels()) {
    out.push_back("y" + l + "+");
    out.push_back("y" + l + "-");
    out.push_back("z" + l);
  }
  return out;
}

PointLocus small_locus(const COM& m) {
  PointLocus locus{small_variable_names(m.ground()), {}, LabelKind::Covector};
  for (const auto& t : topes(m)) {
    LocusPoint p{t.to_string(), std::vector<Rational>(2 * m.ground_size())};
    for (std::size_t i = 0; i < m.ground_size(); ++i) p.coords[small_var(i, t[i])] = 1;
    locus.points.push_back(std::move(p));
  }
  return locus;
}

PointLocus big_locus(const COM& m) {
  PointLocus locus{big_variable_names(m.ground()), {}, LabelKind::Covector};
  for (const auto& x : m.covectors()) {
    LocusPoint p{x.to_string(), std::vector<Rational>(3 * m.ground_size())};
    for (std::size_t i = 0; i < m.ground_size(); ++i) p.coords[big_var(i, x[i])] = 1;
    locus.points.push_back(std::move(p));
  }
  return locus;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::string one_line(const std::vector<std::size_t>& w) {
  std::string s;
  for (auto v : w) {
    if (w.size() > 9 && !s.empty()) s += ",";
    s += std::to_string(v);
  }
  return s;
}

namespace {

void require_size(std::size_t n) {
  if (n < 1) throw Error(Errc::InvalidChoice, "permutation loci need n >= 1");
  if (n > kMaxPermutationLocus) {
    throw Error(Errc::CapExceeded, "n = " + std::to_string(n) + " exceeds the permutation-locus cap of " +
                                       std::to_string(kMaxPermutationLocus));
  }
}

}  // namespace

PointLocus kostant_locus(std::size_t n) {
  require_size(n);
  PointLocus locus{{}, {}, LabelKind::Permutation, true};
  for (std::size_t i = 1; i <= n; ++i) locus.variables.push_back("x" + std::to_string(i));
  for (const auto& w : permutations(n)) {
    LocusPoint p{one_line(w), {}};
    for (auto v : w) p.coords.emplace_back(static_cast<long>(v));
    locus.points.push_back(std::move(p));
  }
  return locus;
}

PointLocus permutohedral_locus(std::size_t n) {
  require_size(n);
  // Nonempty proper subsets of [n] as masks, ordered by size then lexicographically.
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s + 1 < (1U << n); ++s) subsets.push_back(s);
  auto elems = [n](std::uint32_t s) {
    std::vector<std::size_t> e;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1U) e.push_back(i + 1);
    }
    return e;
  };
  std::sort(subsets.begin(), subsets.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto ea = elems(a), eb = elems(b);
    if (ea.size() != eb.size()) return ea.size() < eb.size();
    return ea < eb;
  });

  PointLocus locus{{}, {}, LabelKind::Permutation, true};
  for (auto s : subsets) {
    std::string name = "x";
    for (auto e : elems(s)) name += (n > 9 && name.size() > 1 ? "," : "") + std::to_string(e);
    locus.variables.push_back(name);
  }
  for (const auto& w : permutations(n)) {
    LocusPoint p{one_line(w), std::vector<Rational>(subsets.size())};
    std::uint32_t prefix = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      prefix |= 1U << (w[j] - 1);
      const auto pos = std::find(subsets.begin(), subsets.end(), prefix) - subsets.begin();
      p.coords[static_cast<std::size_t>(pos)] = static_cast<long>(w[j]) - static_cast<long>(w[j + 1]);
    }
    locus.points.push_back(std::move(p));
  }
  return locus;
}

PointLocus permmatrix_locus(std::size_t n) {
  require_size(n);
  PointLocus locus{{}, {}, LabelKind::Permutation};
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      locus.variables.push_back("x" + std::to_string(i) + (n > 9 ? "," : "") + std::to_string(j));
    }
  }
  for (const auto& w : permutations(n)) {
    LocusPoint p{one_line(w), std::vector<Rational>(n * n)};
    for (std::size_t i = 0; i < n; ++i) p.coords[i * n + (w[i] - 1)] = 1;
    locus.points.push_back(std::move(p));
  }
  return locus;
}

}  // namespace covg
