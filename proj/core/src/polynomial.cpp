#include "covg/polynomial.hpp"

#include <algorithm>

namespace covg {

VariableList make_variables(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Monomial Monomial::variable(std::uint32_t index, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.exps_.emplace_back(index, exponent);
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::product(std::span<const std::uint32_t> indices) {
  Monomial m;
  for (auto i : indices) m = m * variable(i);
  return m;
}

std::uint32_t Monomial::exponent(std::uint32_t index) const {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), std::make_pair(index, std::uint32_t{0}));
  return it != exps_.end() && it->first == index ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (const auto& [i, e] : exps_) {
    if (other.exponent(i) < e) return false;
  }
  return true;
}

Monomial Monomial::without(std::uint32_t index) const {
  Monomial m = *this;
  auto it = std::lower_bound(m.exps_.begin(), m.exps_.end(), std::make_pair(index, std::uint32_t{0}));
  if (it == m.exps_.end() || it->first != index) throw Error(Errc::Internal, "variable does not divide monomial");
  if (--it->second == 0) m.exps_.erase(it);
  --m.degree_;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.degree_ = a.degree_ + b.degree_;
  m.exps_.reserve(a.exps_.size() + b.exps_.size());
  auto i = a.exps_.begin(), j = b.exps_.begin();
  while (i != a.exps_.end() || j != b.exps_.end()) {
    if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first)) {
      m.exps_.push_back(*i++);
    } else if (i == a.exps_.end() || j->first < i->first) {
      m.exps_.push_back(*j++);
    } else {
      m.exps_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const auto n = std::min(a.exps_.size(), b.exps_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [ia, ea] = a.exps_[k];
    const auto& [ib, eb] = b.exps_[k];
    if (ia != ib) return ia <=> ib;
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [i, e] : exps_) {
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace covg
