#include "covg/signed_vector.hpp"

#include <algorithm>
#include <unordered_set>

namespace covg {

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxGround) {
    throw Error(Errc::CapExceeded, "ground set has " + std::to_string(labels_.size()) +
                                       " elements, at most 64 supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw Error(Errc::Parse, "duplicate ground label '" + l + "'");
  }
}

GroundSet GroundSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::size_t GroundSet::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(Errc::Parse, "unknown ground label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

GroundSet GroundSet::subset(ElementSet subset) const {
  std::vector<std::string> out;
  for (auto i : subset.elements()) out.push_back(labels_.at(i));
  return GroundSet(std::move(out));
}

std::string GroundSet::format(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : s.elements()) {
    if (!first) out += ",";
    out += labels_.at(i);
    first = false;
  }
  return out + "}";
}

char to_char(Sign s) {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
  }
  return '?';
}

SignedVector::SignedVector(std::size_t size) : size_(static_cast<std::uint32_t>(size)) {
  if (size > kMaxGround) throw Error(Errc::CapExceeded, "signed vector longer than 64");
}

SignedVector::SignedVector(std::size_t size, std::uint64_t plus, std::uint64_t minus)
    : plus_(plus), minus_(minus), size_(static_cast<std::uint32_t>(size)) {
  if (size > kMaxGround) throw Error(Errc::CapExceeded, "signed vector longer than 64");
  if ((plus & minus) != 0 || ((plus | minus) & ~ElementSet::full(size).bits()) != 0) {
    throw Error(Errc::Internal, "malformed sign masks");
  }
}

SignedVector SignedVector::parse(std::string_view text) {
  SignedVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '+': v.plus_ |= std::uint64_t{1} << i; break;
      case '-': v.minus_ |= std::uint64_t{1} << i; break;
      case '0': break;
      default:
        throw Error(Errc::Parse, "bad sign character '" + std::string(1, text[i]) + "' in \"" +
                                     std::string(text) + "\"");
    }
  }
  return v;
}

void SignedVector::set(std::size_t i, Sign s) {
  const std::uint64_t bit = std::uint64_t{1} << i;
  plus_ &= ~bit;
  minus_ &= ~bit;
  if (s == Sign::Plus) plus_ |= bit;
  if (s == Sign::Minus) minus_ |= bit;
}

SignedVector SignedVector::restrict_to(ElementSet subset) const {
  SignedVector out(subset.size());
  std::size_t k = 0;
  for (auto i : subset.elements()) out.set(k++, (*this)[i]);
  return out;
}

std::string SignedVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) s[i] = to_char((*this)[i]);
  return s;
}

std::strong_ordering operator<=>(const SignedVector& a, const SignedVector& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  const std::uint64_t diff = (a.plus_ ^ b.plus_) | (a.minus_ ^ b.minus_);
  if (diff == 0) return std::strong_ordering::equal;
  const auto i = static_cast<std::size_t>(std::countr_zero(diff));
  // code(0) = 0, code(+) = 1, code(-) = 2
  auto code = [i](const SignedVector& v) {
    return static_cast<int>((v.plus_ >> i) & 1U) + 2 * static_cast<int>((v.minus_ >> i) & 1U);
  };
  return code(a) <=> code(b);
}

SignedVector compose(const SignedVector& x, const SignedVector& y) {
  if (x.size() != y.size()) throw Error(Errc::LengthMismatch, "compose");
  const std::uint64_t supp = x.plus_bits() | x.minus_bits();
  return SignedVector(x.size(), x.plus_bits() | (y.plus_bits() & ~supp),
                      x.minus_bits() | (y.minus_bits() & ~supp));
}

ElementSet separator(const SignedVector& x, const SignedVector& y) {
  if (x.size() != y.size()) throw Error(Errc::LengthMismatch, "separator");
  return ElementSet((x.plus_bits() & y.minus_bits()) | (x.minus_bits() & y.plus_bits()));
}

}  // namespace covg
