#include "covg/vg.hpp"

namespace covg {

NbcBasis nbc_basis(const COM& m, const TotalOrder& order, const BasicChoice& basic) {
  if (order.size() != m.ground_size()) throw Error(Errc::LengthMismatch, "total order size");
  NbcBasis out;
  for (auto nbc : nbc_sets(m, order)) {
    std::vector<std::uint32_t> idx;
    for (auto i : nbc.elements()) idx.push_back(small_var(i, Sign::Plus));
    out.small.push_back(Monomial::product(idx));
  }
  const auto flats = flat_poset(m);
  for (auto f : flats.flats()) {
    auto it = basic.find(f);
    if (it == basic.end()) throw Error(Errc::InvalidChoice, "no basic set chosen for flat " + m.ground().format(f));
    const ElementSet rest = ElementSet::full(m.ground_size()) - f;
    const auto outside = rest.elements();
    const auto local = nbc_sets(contract(m, f), order.restrict_to(rest));
    std::vector<std::uint32_t> zs;
    for (auto b : it->second.elements()) zs.push_back(big_var(b, Sign::Zero));
    for (auto nbc : local) {
      std::vector<std::uint32_t> idx = zs;
      for (auto k : nbc.elements()) idx.push_back(big_var(outside[k], Sign::Plus));
      out.big.push_back(Monomial::product(idx));
    }
    out.strata.push_back({f, it->second.size(), local.size()});
  }
  return out;
}

NbcBasis nbc_basis(const COM& m, const TotalOrder& order) { return nbc_basis(m, order, default_basic_choice(m)); }

namespace {

HilbertSeries nbc_series(const COM& m, const TotalOrder& order) {
  HilbertSeries h;
  for (auto nbc : nbc_sets(m, order)) {
    if (h.coeffs.size() <= nbc.size()) h.coeffs.resize(nbc.size() + 1, 0);
    ++h.coeffs[nbc.size()];
  }
  return h;
}

}  // namespace

NbcHilbert hilbert_via_nbc(const COM& m, const TotalOrder& order) {
  if (order.size() != m.ground_size()) throw Error(Errc::LengthMismatch, "total order size");
  NbcHilbert out{nbc_series(m, order), {}};
  const auto flats = flat_poset(m);
  for (auto f : flats.flats()) {
    const ElementSet rest = ElementSet::full(m.ground_size()) - f;
    out.big += nbc_series(contract(m, f), order.restrict_to(rest)).shifted(codim(flats, f));
  }
  return out;
}

TheoremReport verify_theorem_big(const COM& m, const TotalOrder& order, const VerifyOptions& options) {
  TheoremReport report;
  const auto locus = big_locus(m);
  const auto ideal = big_ideal_generators(m, order);
  const auto basis = nbc_basis(m, order, ideal.basic_choice);

  with_field(options.field, [&](auto k) {
    HilbertEngine<decltype(k)> engine(locus, k);
    for (const auto& g : ideal.generators) {
      ++report.generators_checked;
      if (!engine.gr_membership(g.poly)) report.fail(g.family + " generator " + g.poly.to_string() + " is not in gr I");
    }

    const auto flats = flat_poset(m);
    for (auto f : flats.flats()) {
      const auto contraction = contract(m, f);
      const ElementSet b = ideal.basic_choice.at(f);
      for (const auto& c : circuits(contraction)) {
        const std::uint64_t supp = c.vector.support().bits();
        if (!c.symmetric || c.vector.support().size() > options.exhaustive_j_support) continue;
        for (std::uint64_t j = (supp - 1) & supp; j != 0; j = (j - 1) & supp) {
          const auto g = flat_symmetric_generator(m, f, b, c.vector, ElementSet(j), ideal.variables);
          ++report.j_variants_checked;
          if (!engine.gr_membership(g)) {
            report.fail("flat " + m.ground().format(f) + ", circuit " + c.vector.to_string() + ", J=" +
                        contraction.ground().format(ElementSet(j)) + ": " + g.to_string() + " is not in gr I");
          }
        }
      }
    }
    report.rank_series = engine.series();
  });

  if (basis.big.size() != m.size()) {
    report.fail("#N-hat = " + std::to_string(basis.big.size()) + " but #M = " + std::to_string(m.size()));
  } else if (!verify_basis(locus, basis.big, options.field)) {
    report.fail("N-hat is not a basis of the big locus functions");
  }
  for (const auto& s : basis.strata) {
    const auto topes_f = topes(contract(m, s.flat)).size();
    if (s.size != topes_f) {
      report.fail("stratum " + m.ground().format(s.flat) + " has " + std::to_string(s.size) + " NBC monomials but " +
                  std::to_string(topes_f) + " topes of the contraction");
    }
  }
  report.nbc_series = hilbert_via_nbc(m, order).big;
  if (!(report.rank_series == report.nbc_series)) {
    report.fail("rank series " + report.rank_series.to_string() + " differs from NBC series " +
                report.nbc_series.to_string());
  }
  return report;
}

TheoremReport verify_small_generators(const COM& m, const TotalOrder& order, const VerifyOptions& options) {
  TheoremReport report;
  const auto locus = small_locus(m);
  if (locus.empty()) throw Error(Errc::EmptyLocus, "the COM has coloops, so the small locus is empty");
  const auto ideals = small_ideal_generators(m, order);
  const auto basis = nbc_basis(m, order);

  for (const auto& g : ideals.affine.generators) {
    ++report.generators_checked;
    for (const auto& p : locus.points) {
      if (g.poly.evaluate(p.coords) != 0) {
        report.fail(g.family + " generator " + g.poly.to_string() + " does not vanish at " + p.label);
        break;
      }
    }
  }
  with_field(options.field, [&](auto k) {
    HilbertEngine<decltype(k)> engine(locus, k);
    for (const auto& g : ideals.graded.generators) {
      ++report.generators_checked;
      if (!engine.gr_membership(g.poly)) report.fail(g.family + " generator " + g.poly.to_string() + " is not in gr I");
    }
    report.rank_series = engine.series();
  });
  if (basis.small.size() != locus.size() || !verify_basis(locus, basis.small, options.field)) {
    report.fail("small NBC monomials are not a basis of the small locus functions");
  }
  report.nbc_series = hilbert_via_nbc(m, order).small;
  if (!(report.rank_series == report.nbc_series)) {
    report.fail("rank series " + report.rank_series.to_string() + " differs from NBC series " +
                report.nbc_series.to_string());
  }
  return report;
}

}  // namespace covg
