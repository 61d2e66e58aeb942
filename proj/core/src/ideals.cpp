#include "covg/ideals.hpp"

#include <algorithm>

#include "covg/locus.hpp"

namespace covg {

const char* to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::SmallAffine: return "small-affine";
    case IdealKind::SmallGraded: return "small-graded";
    case IdealKind::Tilde: return "tilde";
    case IdealKind::Big: return "big";
  }
  return "big";
}

std::vector<QPolynomial> IdealPresentation::polynomials() const {
  std::vector<QPolynomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.poly);
  return out;
}

std::vector<std::size_t> complement_indices(std::size_t ground_size, ElementSet flat) {
  return (ElementSet::full(ground_size) - flat).elements();
}

namespace {

QPolynomial var(const VariableList& vars, std::uint32_t index) { return QPolynomial::variable(vars, index); }

QPolynomial product_of(const VariableList& vars, std::vector<std::uint32_t> indices) {
  return QPolynomial::monomial(vars, Monomial::product(indices));
}

std::vector<std::uint32_t> z_indices(ElementSet s) {
  std::vector<std::uint32_t> out;
  for (auto b : s.elements()) out.push_back(big_var(b, Sign::Zero));
  return out;
}

bool lex_less(ElementSet a, ElementSet b) {
  const auto ea = a.elements(), eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace

SmallIdealPresentations small_ideal_generators(const COM& m, const TotalOrder& order) {
  if (order.size() != m.ground_size()) throw Error(Errc::LengthMismatch, "total order size");
  const auto vars = make_variables(small_variable_names(m.ground()));
  const std::size_t n = m.ground_size();
  const auto circuit_list = circuits(m);

  SmallIdealPresentations out;
  out.affine = {IdealKind::SmallAffine, vars, {}, order, {}, {}};
  out.graded = {IdealKind::SmallGraded, vars, {}, order, {}, {}};

  auto circuit_monomial = [&](const SignedVector& x) {
    std::vector<std::uint32_t> idx;
    for (auto i : x.support().elements()) idx.push_back(small_var(i, x[i]));
    return product_of(vars, idx);
  };

  for (std::size_t i = 0; i < n; ++i) {
    const auto yp = var(vars, small_var(i, Sign::Plus));
    const auto ym = var(vars, small_var(i, Sign::Minus));
    out.affine.generators.push_back({yp * ym, "product"});
    out.affine.generators.push_back({yp + ym - QPolynomial::constant(vars, 1), "sum-minus-one"});
  }
  for (const auto& c : circuit_list) out.affine.generators.push_back({circuit_monomial(c.vector), "circuit"});

  for (std::size_t i = 0; i < n; ++i) {
    const auto yp = var(vars, small_var(i, Sign::Plus));
    const auto ym = var(vars, small_var(i, Sign::Minus));
    out.graded.generators.push_back({yp * yp, "quadratic"});
    out.graded.generators.push_back({yp * ym, "quadratic"});
    out.graded.generators.push_back({ym * ym, "quadratic"});
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.graded.generators.push_back({var(vars, small_var(i, Sign::Plus)) + var(vars, small_var(i, Sign::Minus)), "sum"});
  }
  for (const auto& c : circuit_list) out.graded.generators.push_back({circuit_monomial(c.vector), "circuit"});
  for (const auto& c : circuit_list) {
    if (!c.symmetric) continue;
    std::vector<QPolynomial> ys;
    for (auto i : c.vector.support().elements()) ys.push_back(var(vars, small_var(i, c.vector[i])));
    out.graded.generators.push_back(
        {elementary_symmetric<RationalField>(ys.size() - 1, ys, vars), "symmetric-circuit"});
  }
  return out;
}

IdealPresentation tilde_ideal_generators(const COM& m) {
  const auto vars = make_variables(big_variable_names(m.ground()));
  const auto flats = flat_poset(m);
  IdealPresentation out{IdealKind::Tilde, vars, {}, std::nullopt, {}, {}};
  for (auto c : minimal_nonbasic_sets(flats, m.ground_size())) {
    out.generators.push_back({product_of(vars, z_indices(c)), "nonbasic"});
  }
  for (auto f : flats.flats()) {
    const auto basics = basic_sets(flats, f);
    for (std::size_t a = 0; a < basics.size(); ++a) {
      for (std::size_t b = a + 1; b < basics.size(); ++b) {
        out.generators.push_back(
            {product_of(vars, z_indices(basics[a])) - product_of(vars, z_indices(basics[b])), "basic-difference"});
      }
    }
  }
  return out;
}

BasicChoice default_basic_choice(const COM& m) {
  const auto flats = flat_poset(m);
  BasicChoice out;
  for (auto f : flats.flats()) {
    const auto basics = basic_sets(flats, f);
    out[f] = *std::min_element(basics.begin(), basics.end(), lex_less);
  }
  return out;
}

JChooser default_j_chooser(const COM& m, const TotalOrder& order) {
  const std::size_t n = m.ground_size();
  return [n, order](ElementSet flat, const SignedVector& circuit) {
    const auto local = order.restrict_to(ElementSet::full(n) - flat);
    ElementSet j;
    j.insert(local.smallest(circuit.support()));
    return j;
  };
}

QPolynomial flat_symmetric_generator(const COM& m, ElementSet flat, ElementSet basic, const SignedVector& circuit,
                                     ElementSet j, const VariableList& vars) {
  const auto outside = complement_indices(m.ground_size(), flat);
  const ElementSet supp = circuit.support();
  if (j.empty() || !j.subset_of(supp) || j == supp) {
    throw Error(Errc::InvalidChoice, "J must be a nonempty proper subset of Supp(X)");
  }
  std::vector<QPolynomial> ytilde;
  for (auto k : supp.elements()) {
    const auto i = outside[k];
    auto y = var(vars, big_var(i, circuit[k]));
    if (j.contains(k)) y += var(vars, big_var(i, Sign::Zero));
    ytilde.push_back(std::move(y));
  }
  return product_of(vars, z_indices(basic)) * elementary_symmetric<RationalField>(ytilde.size() - 1, ytilde, vars);
}

IdealPresentation big_ideal_generators(const COM& m, const TotalOrder& order, const BasicChoice& basic,
                                       const JChooser& j) {
  if (order.size() != m.ground_size()) throw Error(Errc::LengthMismatch, "total order size");
  const std::size_t n = m.ground_size();
  const auto flats = flat_poset(m);
  IdealPresentation out = tilde_ideal_generators(m);
  out.kind = IdealKind::Big;
  out.order = order;
  const auto& vars = out.variables;

  for (auto f : flats.flats()) {
    auto it = basic.find(f);
    if (it == basic.end()) throw Error(Errc::InvalidChoice, "no basic set chosen for flat " + m.ground().format(f));
    const auto options = basic_sets(flats, f);
    if (std::find(options.begin(), options.end(), it->second) == options.end()) {
      throw Error(Errc::InvalidChoice, m.ground().format(it->second) + " is not basic for " + m.ground().format(f));
    }
    out.basic_choice[f] = it->second;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t v[3] = {big_var(i, Sign::Plus), big_var(i, Sign::Minus), big_var(i, Sign::Zero)};
    for (int a = 0; a < 3; ++a) {
      for (int b = a; b < 3; ++b) out.generators.push_back({var(vars, v[a]) * var(vars, v[b]), "quadratic"});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.generators.push_back({var(vars, big_var(i, Sign::Plus)) + var(vars, big_var(i, Sign::Minus)) +
                                  var(vars, big_var(i, Sign::Zero)),
                              "sum"});
  }
  for (auto f : flats.flats()) {
    const auto zf = product_of(vars, z_indices(out.basic_choice[f]));
    for (auto i : f.elements()) {
      out.generators.push_back({zf * var(vars, big_var(i, Sign::Plus)), "flat-linear"});
      out.generators.push_back({zf * var(vars, big_var(i, Sign::Minus)), "flat-linear"});
    }
  }
  std::vector<std::pair<ElementSet, std::vector<Circuit>>> per_flat;
  for (auto f : flats.flats()) per_flat.emplace_back(f, circuits(contract(m, f)));
  for (const auto& [f, cs] : per_flat) {
    const auto outside = complement_indices(n, f);
    const auto zf = product_of(vars, z_indices(out.basic_choice[f]));
    for (const auto& c : cs) {
      std::vector<std::uint32_t> idx;
      for (auto k : c.vector.support().elements()) idx.push_back(big_var(outside[k], c.vector[k]));
      out.generators.push_back({zf * product_of(vars, idx), "flat-circuit"});
    }
  }
  for (const auto& [f, cs] : per_flat) {
    for (const auto& c : cs) {
      if (!c.symmetric) continue;
      const ElementSet jset = j(f, c.vector);
      out.generators.push_back(
          {flat_symmetric_generator(m, f, out.basic_choice[f], c.vector, jset, vars), "flat-symmetric"});
      out.j_choices.push_back({f, c.vector, jset});
    }
  }
  return out;
}

IdealPresentation big_ideal_generators(const COM& m, const TotalOrder& order) {
  return big_ideal_generators(m, order, default_basic_choice(m), default_j_chooser(m, order));
}

}  // namespace covg
