#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "covg/field.hpp"
#include "covg/locus.hpp"
#include "covg/polynomial.hpp"
#include "covg/row_space.hpp"

namespace covg {

struct HilbertSeries {
  std::vector<std::uint64_t> coeffs;

  std::uint64_t total() const;
  /// Multiplication by q^k.
  HilbertSeries shifted(std::size_t k) const;
  HilbertSeries& operator+=(const HilbertSeries& o);
  /// Trailing zeros removed.
  HilbertSeries normalized() const;
  /// "1 + 6q + 6q^2".
  std::string to_string() const;

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.normalized().coeffs == b.normalized().coeffs;
  }
};

/// Orbit-harmonics engine on a finite point locus.
///
/// Builds the evaluation spans E_{<=d} degree by degree. Within a degree the
/// candidates are the monomials all of whose degree d-1 divisors were
/// standard, inserted in monomial order; a candidate whose evaluation vector
/// raises the rank is standard. h_d is the rank increase at degree d.
template <class K>
class HilbertEngine {
 public:
  using Element = typename K::Element;

  /// Throws Errc::EmptyLocus, Errc::InvalidChoice (F_p on a characteristic-0
  /// locus) and Errc::NonTermination.
  explicit HilbertEngine(const PointLocus& locus, K field = {}) : field_(std::move(field)), n_(locus.size()) {
    if (locus.empty()) throw Error(Errc::EmptyLocus, "the locus has no points");
    locus.validate();
    if (locus.requires_char0 && field_.characteristic()) {
      throw Error(Errc::InvalidChoice, "this locus requires a field of characteristic 0");
    }
    vars_ = make_variables(locus.variables);
    columns_.assign(locus.variables.size(), std::vector<Element>(n_, field_.zero()));
    for (std::size_t p = 0; p < n_; ++p) {
      for (std::size_t v = 0; v < locus.variables.size(); ++v) {
        columns_[v][p] = field_.from_rational(locus.points[p].coords[v]);
      }
    }
    run();
  }

  const K& field() const { return field_; }
  const VariableList& variables() const { return vars_; }
  std::size_t points() const { return n_; }
  const HilbertSeries& series() const { return series_; }
  /// Standard monomials in insertion order (monomial order within each degree).
  const std::vector<Monomial>& standard_monomials() const { return standard_; }
  std::size_t top_degree() const { return snapshots_.size() - 1; }

  /// E_{<=d}; every degree at or past the top degree gives the full space.
  const RowSpace<K>& filtration(std::size_t d) const { return snapshots_[std::min(d, snapshots_.size() - 1)]; }

  std::vector<Element> evaluate(const Monomial& m) const {
    std::vector<Element> out(n_, field_.one());
    for (const auto& [i, e] : m.exponents()) {
      if (i >= columns_.size()) throw Error(Errc::LengthMismatch, "monomial outside the locus variables");
      for (std::size_t p = 0; p < n_; ++p) {
        for (std::uint32_t k = 0; k < e; ++k) out[p] *= columns_[i][p];
      }
    }
    return out;
  }

  std::vector<Element> evaluate(const QPolynomial& g) const {
    require_variables(g);
    std::vector<Element> out(n_, field_.zero());
    for (const auto& [m, c] : g.terms()) {
      const Element coeff = field_.from_rational(c);
      const auto values = evaluate(m);
      for (std::size_t p = 0; p < n_; ++p) out[p] += coeff * values[p];
    }
    return out;
  }

  /// g homogeneous of degree d >= 1 lies in gr I iff its evaluation vector
  /// lies in E_{<=d-1}. The zero polynomial is a member. Throws
  /// Errc::NotHomogeneous, Errc::InvalidChoice for nonzero constants.
  bool gr_membership(const QPolynomial& g) const {
    if (g.is_zero()) return true;
    if (!g.is_homogeneous()) throw Error(Errc::NotHomogeneous, g.to_string() + " is not homogeneous");
    if (g.degree() == 0) throw Error(Errc::InvalidChoice, "gr membership needs degree >= 1");
    const auto values = evaluate(g);
    return filtration(g.degree() - 1).in_span(values);
  }

 private:
  void require_variables(const QPolynomial& g) const {
    if (*g.variables() != *vars_) throw Error(Errc::LengthMismatch, "polynomial ring differs from the locus variables");
  }

  void run() {
    RowSpace<K> space(n_, field_);
    std::vector<Element> ones(n_, field_.one());
    space.insert(ones);
    std::map<Monomial, std::vector<Element>> previous;
    previous.emplace(Monomial::one(), std::move(ones));
    standard_.push_back(Monomial::one());
    series_.coeffs.push_back(1);
    snapshots_.push_back(space);

    for (std::uint32_t d = 1; space.rank() < n_; ++d) {
      if (d + 1 > n_) throw Error(Errc::NonTermination, "rank loop passed degree #points - 1");
      std::set<Monomial> candidates;
      for (const auto& [s, values] : previous) {
        for (std::uint32_t v = 0; v < columns_.size(); ++v) {
          const Monomial m = s * Monomial::variable(v);
          if (candidates.contains(m)) continue;
          bool all_standard = true;
          for (const auto& [u, e] : m.exponents()) {
            if (!previous.contains(m.without(u))) {
              all_standard = false;
              break;
            }
          }
          if (all_standard) candidates.insert(m);
        }
      }
      std::map<Monomial, std::vector<Element>> current;
      std::uint64_t count = 0;
      for (const auto& m : candidates) {
        if (space.rank() == n_) break;
        const std::uint32_t v = m.exponents().front().first;
        const auto& base = previous.at(m.without(v));
        std::vector<Element> values(n_);
        for (std::size_t p = 0; p < n_; ++p) values[p] = base[p] * columns_[v][p];
        if (space.insert(values)) {
          ++count;
          standard_.push_back(m);
          current.emplace(m, std::move(values));
        }
      }
      series_.coeffs.push_back(count);
      snapshots_.push_back(space);
      previous = std::move(current);
    }
  }

  K field_;
  std::size_t n_;
  VariableList vars_;
  std::vector<std::vector<Element>> columns_;
  HilbertSeries series_;
  std::vector<Monomial> standard_;
  std::vector<RowSpace<K>> snapshots_;
};

extern template class HilbertEngine<RationalField>;
extern template class HilbertEngine<PrimeField>;

/// Hilbert series of the locus over the chosen field.
HilbertSeries hilbert_series(const PointLocus& locus, const FieldSpec& field = {});

/// Rank of the evaluation matrix of `monomials` on the locus equals #points
/// and #monomials. Throws Errc::SizeMismatch when the counts differ.
bool verify_basis(const PointLocus& locus, const std::vector<Monomial>& monomials, const FieldSpec& field = {});

}  // namespace covg
