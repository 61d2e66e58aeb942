#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "covg/error.hpp"
#include "covg/rational.hpp"

namespace covg {

__extension__ typedef unsigned __int128 u128;

/// Element of Z/pZ. The modulus travels with the value; a default-constructed
/// element is an untyped zero that adopts the modulus of its partner.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t modulus) : value_(modulus ? value % modulus : value), modulus_(modulus) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Fp inverse() const;

  Fp& operator+=(const Fp& o) {
    adopt(o);
    value_ += o.value_;
    if (modulus_ && value_ >= modulus_) value_ -= modulus_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    adopt(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    adopt(o);
    value_ = modulus_ ? static_cast<std::uint64_t>((static_cast<u128>(value_) * o.value_) % modulus_) : 0;
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return Fp(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

  friend bool operator==(const Fp& a, const Fp& b) { return a.value_ == b.value_; }

 private:
  void adopt(const Fp& o) {
    if (modulus_ == 0) modulus_ = o.modulus_;
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

/// The rationals.
struct RationalField {
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_int(long v) const { return Rational(v); }
  Element from_rational(const Rational& q) const { return q; }
  static bool is_zero(const Element& e) { return sgn(e) == 0; }
  std::string format(const Element& e) const { return format_rational(e); }
  std::string name() const { return "rational"; }
  /// Characteristic 0 is reported as nullopt.
  std::optional<std::uint64_t> characteristic() const { return std::nullopt; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// The prime field Z/pZ, 2 <= p < 2^62.
class PrimeField {
 public:
  using Element = Fp;
  static constexpr std::uint64_t kDefaultPrime = 1000003;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t prime() const { return p_; }
  Element zero() const { return Fp(0, p_); }
  Element one() const { return Fp(1, p_); }
  Element from_int(long v) const;
  /// Throws Errc::InvalidChoice when p divides the denominator.
  Element from_rational(const Rational& q) const;
  static bool is_zero(const Element& e) { return e.is_zero(); }
  std::string format(const Element& e) const { return std::to_string(e.value()); }
  std::string name() const { return "fp:" + std::to_string(p_); }
  std::optional<std::uint64_t> characteristic() const { return p_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// A run-time field selection: "rational" or "fp:<p>".
struct FieldSpec {
  bool rational = true;
  std::uint64_t prime = PrimeField::kDefaultPrime;

  static FieldSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Calls fn(RationalField{}) or fn(PrimeField{p}) and returns its result.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.rational) return fn(RationalField{});
  return fn(PrimeField(spec.prime));
}

}  // namespace covg
