#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covg/error.hpp"
#include "covg/field.hpp"

namespace covg {

/// Shared, immutable list of variable names.
using VariableList = std::shared_ptr<const std::vector<std::string>>;

VariableList make_variables(std::vector<std::string> names);

/// A monomial as sorted (variable index, exponent) pairs with positive exponents.
///
/// Order (used repo-wide): total degree first; within a degree, a < b iff at
/// the first variable index where the exponents differ, a has the larger
/// exponent. Equivalently, compare the nondecreasing index sequences
/// lexicographically, so y1+ < y1- < z1 < ... in degree one. This is a graded
/// monomial order (compatible with multiplication).
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return {}; }
  static Monomial variable(std::uint32_t index, std::uint32_t exponent = 1);
  /// Product of the listed variables (repetitions allowed).
  static Monomial product(std::span<const std::uint32_t> indices);

  std::uint32_t degree() const { return degree_; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& exponents() const { return exps_; }
  std::uint32_t exponent(std::uint32_t index) const;
  bool is_one() const { return exps_.empty(); }
  bool divides(const Monomial& other) const;
  /// this / x_index; requires the exponent to be positive.
  Monomial without(std::uint32_t index) const;
  /// Largest variable index present; requires !is_one().
  std::uint32_t max_index() const { return exps_.back().first; }

  std::string to_string(const std::vector<std::string>& names) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> exps_;
  std::uint32_t degree_ = 0;
};

/// Sparse polynomial over the field K in a declared variable list.
template <class K>
class Polynomial {
 public:
  using Element = typename K::Element;

  Polynomial(VariableList vars, K field = {}) : vars_(std::move(vars)), field_(std::move(field)) {}

  static Polynomial constant(VariableList vars, const Element& c, K field = {}) {
    Polynomial p(std::move(vars), std::move(field));
    p.add_term(Monomial::one(), c);
    return p;
  }
  static Polynomial monomial(VariableList vars, const Monomial& m, K field = {}) {
    Polynomial p(std::move(vars), field);
    p.add_term(m, field.one());
    return p;
  }
  static Polynomial variable(VariableList vars, std::uint32_t index, K field = {}) {
    if (index >= vars->size()) throw Error(Errc::LengthMismatch, "variable index out of range");
    return monomial(std::move(vars), Monomial::variable(index), std::move(field));
  }

  const VariableList& variables() const { return vars_; }
  const K& field() const { return field_; }
  const std::map<Monomial, Element>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest total degree; 0 for the zero polynomial.
  std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }
  bool is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
  }

  void add_term(const Monomial& m, const Element& c) {
    if (!m.is_one() && m.max_index() >= vars_->size()) throw Error(Errc::LengthMismatch, "monomial outside variable list");
    if (K::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (K::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    Polynomial out(a.vars_, a.field_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }
  Polynomial scale(const Element& c) const {
    Polynomial out(vars_, field_);
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
  }
  Polynomial operator-() const { return scale(-field_.one()); }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != vars_->size()) throw Error(Errc::LengthMismatch, "point dimension");
    Element total = field_.zero();
    for (const auto& [m, c] : terms_) {
      Element v = c;
      for (const auto& [i, e] : m.exponents()) {
        for (std::uint32_t k = 0; k < e; ++k) v *= point[i];
      }
      total += v;
    }
    return total;
  }

  /// Same polynomial with coefficients mapped into another field.
  template <class K2>
  Polynomial<K2> convert(const K2& target) const {
    Polynomial<K2> out(vars_, target);
    for (const auto& [m, c] : terms_) out.add_term(m, target.from_rational(c));
    return out;
  }

  /// Terms from smallest to largest monomial, e.g. "y1+*z2 + y3-*z2 + z2*z3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      std::string coeff = field_.format(it->second);
      bool negative = !coeff.empty() && coeff.front() == '-';
      if (negative) coeff.erase(0, 1);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const bool unit = coeff == "1";
      if (it->first.is_one()) {
        out += coeff;
      } else {
        if (!unit) out += coeff + "*";
        out += it->first.to_string(*vars_);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const Polynomial& o) const {
    if (vars_ != o.vars_ && *vars_ != *o.vars_) throw Error(Errc::LengthMismatch, "polynomials over different variable lists");
  }

  VariableList vars_;
  K field_;
  std::map<Monomial, Element> terms_;
};

using QPolynomial = Polynomial<RationalField>;

/// e_d(p_1, ..., p_n); e_0 = 1. Throws Errc::InvalidChoice when d > n.
template <class K>
Polynomial<K> elementary_symmetric(std::size_t d, std::span<const Polynomial<K>> ps, const VariableList& vars,
                                   const K& field = {}) {
  if (d > ps.size()) throw Error(Errc::InvalidChoice, "elementary symmetric degree exceeds the number of arguments");
  // dp[k] = e_k of the prefix processed so far.
  std::vector<Polynomial<K>> dp(d + 1, Polynomial<K>(vars, field));
  dp[0] = Polynomial<K>::constant(vars, field.one(), field);
  for (const auto& p : ps) {
    for (std::size_t k = d; k >= 1; --k) dp[k] += dp[k - 1] * p;
  }
  return dp[d];
}

}  // namespace covg
