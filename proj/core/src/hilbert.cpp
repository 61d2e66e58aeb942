#include "covg/hilbert.hpp"

namespace covg {

template class HilbertEngine<RationalField>;
template class HilbertEngine<PrimeField>;

std::uint64_t HilbertSeries::total() const {
  std::uint64_t t = 0;
  for (auto c : coeffs) t += c;
  return t;
}

HilbertSeries HilbertSeries::shifted(std::size_t k) const {
  HilbertSeries out;
  out.coeffs.assign(k, 0);
  out.coeffs.insert(out.coeffs.end(), coeffs.begin(), coeffs.end());
  return out;
}

HilbertSeries& HilbertSeries::operator+=(const HilbertSeries& o) {
  if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
  for (std::size_t d = 0; d < o.coeffs.size(); ++d) coeffs[d] += o.coeffs[d];
  return *this;
}

HilbertSeries HilbertSeries::normalized() const {
  HilbertSeries out = *this;
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

std::string HilbertSeries::to_string() const {
  std::string out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = coeffs[d] == 1 && d > 0;
    if (!unit) out += std::to_string(coeffs[d]);
    if (d >= 1) out += "q";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

HilbertSeries hilbert_series(const PointLocus& locus, const FieldSpec& field) {
  return with_field(field, [&](auto k) { return HilbertEngine<decltype(k)>(locus, k).series(); });
}

bool verify_basis(const PointLocus& locus, const std::vector<Monomial>& monomials, const FieldSpec& field) {
  if (monomials.size() != locus.size()) {
    throw Error(Errc::SizeMismatch, std::to_string(monomials.size()) + " monomials for " +
                                        std::to_string(locus.size()) + " points");
  }
  return with_field(field, [&](auto k) {
    using K = decltype(k);
    RowSpace<K> space(locus.size(), k);
    for (const auto& m : monomials) {
      std::vector<typename K::Element> values(locus.size(), k.one());
      for (std::size_t p = 0; p < locus.size(); ++p) {
        for (const auto& [i, e] : m.exponents()) {
          if (i >= locus.variables.size()) throw Error(Errc::LengthMismatch, "monomial outside the locus variables");
          const auto x = k.from_rational(locus.points[p].coords[i]);
          for (std::uint32_t r = 0; r < e; ++r) values[p] *= x;
        }
      }
      if (!space.insert(values)) return false;
    }
    return space.rank() == locus.size();
  });
}

}  // namespace covg
