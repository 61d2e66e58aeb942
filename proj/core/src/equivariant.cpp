#include "covg/equivariant.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "covg/parallel.hpp"

namespace covg {
namespace {

std::vector<SignedPermutation> identity_first(std::set<SignedPermutation> all, std::size_t n) {
  const auto id = SignedPermutation::identity(n);
  all.erase(id);
  std::vector<SignedPermutation> out{id};
  out.insert(out.end(), all.begin(), all.end());
  return out;
}

bool lex_less(ElementSet a, ElementSet b) {
  const auto ea = a.elements(), eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace

GroupSpec GroupSpec::generate(std::size_t ground_size, std::vector<SignedPermutation> generators, std::size_t cap) {
  for (const auto& s : generators) {
    if (s.size() != ground_size) throw Error(Errc::LengthMismatch, "generator acts on a different ground set");
  }
  std::set<SignedPermutation> seen{SignedPermutation::identity(ground_size)};
  std::deque<SignedPermutation> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const auto e = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      auto next = s * e;
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw Error(Errc::CapExceeded, "group order exceeds " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  GroupSpec g;
  g.ground_size_ = ground_size;
  g.generators_ = std::move(generators);
  g.elements_ = identity_first(std::move(seen), ground_size);
  return g;
}

GroupSpec GroupSpec::from_elements(std::size_t ground_size, std::vector<SignedPermutation> elements) {
  std::set<SignedPermutation> all(elements.begin(), elements.end());
  for (const auto& a : all) {
    if (a.size() != ground_size) throw Error(Errc::LengthMismatch, "element acts on a different ground set");
  }
  if (!all.contains(SignedPermutation::identity(ground_size))) throw Error(Errc::NotASubgroup, "identity missing");
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (!all.contains(a * b)) throw Error(Errc::NotASubgroup, "element set is not closed under composition");
    }
  }
  GroupSpec g;
  g.ground_size_ = ground_size;
  g.elements_ = identity_first(all, ground_size);
  g.generators_.assign(g.elements_.begin() + 1, g.elements_.end());
  return g;
}

bool GroupSpec::contains(const SignedPermutation& w) const {
  return w == elements_.front() || std::binary_search(elements_.begin() + 1, elements_.end(), w);
}

std::size_t GroupSpec::index_of(const SignedPermutation& w) const {
  if (w == elements_.front()) return 0;
  auto it = std::lower_bound(elements_.begin() + 1, elements_.end(), w);
  if (it == elements_.end() || *it != w) throw Error(Errc::NotASubgroup, "element not in the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

void GroupSpec::require_automorphisms(const COM& m) const {
  if (ground_size_ != m.ground_size()) throw Error(Errc::LengthMismatch, "group acts on a different ground set");
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (!verify_automorphism(m, generators_[k])) {
      throw Error(Errc::NotAnAutomorphism, "generator " + std::to_string(k + 1) + " does not preserve the covectors");
    }
  }
}

SignedPermutation braid_action(const std::vector<std::size_t>& sigma) {
  const std::size_t n = sigma.size();
  std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n, 0));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pair_index[i][j] = k++;
  }
  std::vector<std::size_t> perm(k);
  std::vector<Sign> signs(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto a = sigma[i], b = sigma[j];
      perm[pair_index[i][j]] = pair_index[std::min(a, b)][std::max(a, b)];
      signs[pair_index[i][j]] = a < b ? Sign::Plus : Sign::Minus;
    }
  }
  return SignedPermutation(std::move(perm), std::move(signs));
}

GroupSpec braid_symmetric_group(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidChoice, "n >= 1 required");
  std::vector<SignedPermutation> gens;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[k], sigma[k + 1]);
    gens.push_back(braid_action(sigma));
  }
  return GroupSpec::generate(n * (n - 1) / 2, std::move(gens));
}

std::vector<SignedPermutation> automorphisms_bruteforce(const COM& m) {
  const std::size_t n = m.ground_size();
  if (n > 6) throw Error(Errc::CapExceeded, "brute-force automorphism search is limited to 6 elements");
  std::vector<SignedPermutation> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<Sign> signs(n);
      for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1U ? Sign::Minus : Sign::Plus;
      SignedPermutation w(perm, std::move(signs));
      if (verify_automorphism(m, w)) out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> locus_action(const PointLocus& locus, const SignedPermutation& w) {
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::size_t p = 0; p < locus.size(); ++p) index.emplace(locus.points[p].label, static_cast<std::uint32_t>(p));
  std::vector<std::uint32_t> out(locus.size());
  for (std::size_t p = 0; p < locus.size(); ++p) {
    const auto x = SignedVector::parse(locus.points[p].label);
    if (x.size() != w.size()) throw Error(Errc::LengthMismatch, "signed permutation and locus labels differ in length");
    auto it = index.find(act(w, x).to_string());
    if (it == index.end()) {
      throw Error(Errc::NotAnAutomorphism, "image of " + locus.points[p].label + " is not a point of the locus");
    }
    out[p] = it->second;
  }
  return out;
}

std::size_t GradedCharacter::degrees() const {
  std::size_t d = 0;
  for (const auto& row : values) d = std::max(d, row.size());
  return d;
}

Rational GradedCharacter::at(std::size_t g, std::size_t d) const {
  return d < values[g].size() ? values[g][d] : Rational(0);
}

GradedCharacter GradedCharacter::shifted(std::size_t k) const {
  GradedCharacter out{elements, {}};
  for (const auto& row : values) {
    std::vector<Rational> r(k, Rational(0));
    r.insert(r.end(), row.begin(), row.end());
    out.values.push_back(std::move(r));
  }
  return out;
}

bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
  if (a.elements != b.elements) return false;
  const std::size_t d = std::max(a.degrees(), b.degrees());
  for (std::size_t g = 0; g < a.elements.size(); ++g) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a.at(g, k) != b.at(g, k)) return false;
    }
  }
  return true;
}

GradedCharacter graded_character(const PointLocus& locus, const std::vector<SignedPermutation>& elements,
                                 const std::vector<std::vector<std::uint32_t>>& actions, const FieldSpec& field,
                                 unsigned threads) {
  if (actions.size() != elements.size()) throw Error(Errc::SizeMismatch, "one action per group element required");
  if (!field.rational && (field.prime <= elements.size() || field.prime <= 2 * locus.size())) {
    throw Error(Errc::InvalidChoice, "traces over F_p need p > |G| and p > 2 #points");
  }
  GradedCharacter out{elements, std::vector<std::vector<Rational>>(elements.size())};
  with_field(field, [&](auto k) {
    using K = decltype(k);
    HilbertEngine<K> engine(locus, k);
    auto lift = [&](const typename K::Element& e) -> Rational {
      if constexpr (std::is_same_v<K, PrimeField>) {
        const auto v = e.value();
        const auto p = k.prime();
        return v > p / 2 ? Rational(-static_cast<long>(p - v)) : Rational(static_cast<long>(v));
      } else {
        return e;
      }
    };
    parallel_for(elements.size(), threads, [&](std::size_t g) {
      std::vector<Rational> row;
      Rational previous = 0;
      for (std::size_t d = 0; d <= engine.top_degree(); ++d) {
        const Rational t = lift(engine.filtration(d).trace_on_subspace(actions[g]));
        row.push_back(t - previous);
        previous = t;
      }
      out.values[g] = std::move(row);
    });
  });
  return out;
}

GradedCharacter graded_character(const PointLocus& locus, const GroupSpec& g, const FieldSpec& field,
                                 unsigned threads) {
  std::vector<std::vector<std::uint32_t>> actions;
  for (const auto& w : g.elements()) actions.push_back(locus_action(locus, w));
  return graded_character(locus, g.elements(), actions, field, threads);
}

GradedCharacter induced_character(const GroupSpec& g, const GradedCharacter& chi) {
  std::map<SignedPermutation, std::size_t> h;
  for (std::size_t k = 0; k < chi.elements.size(); ++k) {
    if (!g.contains(chi.elements[k])) throw Error(Errc::NotASubgroup, "H is not contained in G");
    h.emplace(chi.elements[k], k);
  }
  if (h.empty() || h.size() != chi.elements.size()) throw Error(Errc::NotASubgroup, "H must list distinct elements");
  for (const auto& [a, ia] : h) {
    for (const auto& [b, ib] : h) {
      if (!h.contains(a * b)) throw Error(Errc::NotASubgroup, "H is not closed under composition");
    }
  }
  const std::size_t degrees = chi.degrees();
  const Rational order_h(static_cast<long>(h.size()));
  GradedCharacter out{g.elements(), {}};
  for (const auto& e : g.elements()) {
    std::vector<Rational> row(degrees, Rational(0));
    for (const auto& x : g.elements()) {
      auto it = h.find(x.inverse() * e * x);
      if (it == h.end()) continue;
      for (std::size_t d = 0; d < degrees; ++d) row[d] += chi.at(it->second, d);
    }
    for (auto& v : row) v /= order_h;
    out.values.push_back(std::move(row));
  }
  return out;
}

ModuleReport verify_graded_module_structure(const COM& m, const GroupSpec& g, const FieldSpec& field,
                                            unsigned threads) {
  g.require_automorphisms(m);
  ModuleReport report;
  report.big = graded_character(big_locus(m), g, field, threads);
  report.induced_sum = GradedCharacter{g.elements(), std::vector<std::vector<Rational>>(g.order())};

  const auto flats = flat_poset(m);
  std::set<ElementSet> done;
  for (auto f : flats.flats()) {
    if (done.contains(f)) continue;
    std::vector<ElementSet> orbit;
    std::vector<SignedPermutation> stabilizer;
    for (const auto& w : g.elements()) {
      const auto image = w.image(f);
      if (!flats.contains(image)) throw Error(Errc::NotAnAutomorphism, "group moves a flat to a non-flat");
      orbit.push_back(image);
      if (image == f) stabilizer.push_back(w);
    }
    done.insert(orbit.begin(), orbit.end());
    const ElementSet rep = *std::min_element(orbit.begin(), orbit.end(), lex_less);
    if (rep != f) {
      // Recompute the stabilizer at the lexicographic representative.
      stabilizer.clear();
      for (const auto& w : g.elements()) {
        if (w.image(rep) == rep) stabilizer.push_back(w);
      }
    }
    ++report.flat_orbits;

    const ElementSet rest = ElementSet::full(m.ground_size()) - rep;
    const auto small = small_locus(contract(m, rep));
    std::vector<std::vector<std::uint32_t>> actions;
    for (const auto& w : stabilizer) actions.push_back(locus_action(small, w.restrict_to(rest)));
    const auto chi = graded_character(small, stabilizer, actions, field, threads).shifted(codim(flats, rep));
    const auto induced = induced_character(g, chi);
    for (std::size_t e = 0; e < g.order(); ++e) {
      auto& row = report.induced_sum.values[e];
      if (row.size() < induced.values[e].size()) row.resize(induced.values[e].size(), Rational(0));
      for (std::size_t d = 0; d < induced.values[e].size(); ++d) row[d] += induced.values[e][d];
    }
    report.notes.push_back("orbit of " + m.ground().format(rep) + ": " + std::to_string(std::set(orbit.begin(), orbit.end()).size()) +
                           " flats, stabilizer order " + std::to_string(stabilizer.size()));
  }

  for (std::size_t e = 0; e < g.order(); ++e) {
    const std::size_t d = std::max(report.big.values[e].size(), report.induced_sum.values[e].size());
    for (std::size_t k = 0; k < d; ++k) {
      if (report.big.at(e, k) != report.induced_sum.at(e, k)) {
        report.fail("element " + std::to_string(e) + ", degree " + std::to_string(k) + ": big locus trace " +
                    format_rational(report.big.at(e, k)) + " vs induced sum " +
                    format_rational(report.induced_sum.at(e, k)));
      }
    }
  }
  return report;
}

}  // namespace covg
