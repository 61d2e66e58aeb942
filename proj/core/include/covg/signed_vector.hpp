#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "covg/error.hpp"

namespace covg {

/// Largest ground set supported. Subsets are 64-bit masks.
inline constexpr std::size_t kMaxGround = 64;

/// A subset of a ground set {0, ..., n-1}, stored as a bit mask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static ElementSet of(std::initializer_list<std::size_t> elements) {
    ElementSet s;
    for (auto e : elements) s.insert(e);
    return s;
  }
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Smallest element under the natural index order; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  std::vector<std::size_t> elements() const;

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  /// Numeric order on the masks; deterministic, not inclusion.
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Ordered list of distinct element labels. The order is the default total order.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  /// Labels "1", ..., "n".
  static GroundSet numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Index of a label; throws Errc::Parse when absent.
  std::size_t index_of(std::string_view label) const;

  /// The ground set induced on `subset`, keeping the original order.
  GroundSet subset(ElementSet subset) const;

  std::string format(ElementSet s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
char to_char(Sign s);

/// A signed subset X : I -> {+,-,0}.
///
/// Storage is bit-planar: one mask of `+` positions and one of `-` positions,
/// i.e. two bits per element with 00 = 0, 01 = +, 10 = -.
class SignedVector {
 public:
  SignedVector() = default;
  explicit SignedVector(std::size_t size);
  SignedVector(std::size_t size, std::uint64_t plus, std::uint64_t minus);

  /// Parses a string over the alphabet `+ - 0`.
  static SignedVector parse(std::string_view text);

  std::size_t size() const { return size_; }
  Sign operator[](std::size_t i) const {
    if ((plus_ >> i) & 1U) return Sign::Plus;
    if ((minus_ >> i) & 1U) return Sign::Minus;
    return Sign::Zero;
  }
  void set(std::size_t i, Sign s);

  std::uint64_t plus_bits() const { return plus_; }
  std::uint64_t minus_bits() const { return minus_; }

  ElementSet support() const { return ElementSet(plus_ | minus_); }
  /// Flat(X): the zero set.
  ElementSet zero_set() const { return ElementSet::full(size_) - support(); }
  bool is_zero() const { return (plus_ | minus_) == 0; }
  bool is_tope() const { return support() == ElementSet::full(size_); }

  SignedVector operator-() const { return SignedVector(size_, minus_, plus_); }

  /// True iff `*this` agrees with `other` on the support of `*this`,
  /// i.e. (*this) o other == other.
  bool conforms_to(const SignedVector& other) const {
    return (plus_ & ~other.plus_) == 0 && (minus_ & ~other.minus_) == 0;
  }

  /// Restriction to the positions in `subset`, re-indexed in increasing order.
  SignedVector restrict_to(ElementSet subset) const;

  std::string to_string() const;

  friend bool operator==(const SignedVector&, const SignedVector&) = default;
  /// Canonical order: lexicographic over elements in ground order with 0 < + < -.
  friend std::strong_ordering operator<=>(const SignedVector& a, const SignedVector& b);

  std::size_t hash() const {
    return std::hash<std::uint64_t>{}(plus_ * 0x9E3779B97F4A7C15ULL ^ minus_) ^ size_;
  }

 private:
  std::uint64_t plus_ = 0;
  std::uint64_t minus_ = 0;
  std::uint32_t size_ = 0;
};

/// X o Y: X where X is nonzero, Y elsewhere.
SignedVector compose(const SignedVector& x, const SignedVector& y);

/// Sep(X, Y) = { i : X(i) = -Y(i) != 0 }.
ElementSet separator(const SignedVector& x, const SignedVector& y);

struct SignedVectorHash {
  std::size_t operator()(const SignedVector& v) const { return v.hash(); }
};

}  // namespace covg
