#include "covg/field.hpp"

#include <charconv>

namespace covg {

Fp Fp::inverse() const {
  if (value_ == 0) throw Error(Errc::Internal, "division by zero in F_p");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = value_, e = modulus_ - 2;
  while (e > 0) {
    if (e & 1U) result = static_cast<std::uint64_t>((static_cast<u128>(result) * base) % modulus_);
    base = static_cast<std::uint64_t>((static_cast<u128>(base) * base) % modulus_);
    e >>= 1U;
  }
  return Fp(result, modulus_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e > 0; e >>= 1U, a = mulmod(a, a)) {
      if (e & 1U) r = mulmod(r, a);
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw Error(Errc::InvalidChoice, std::to_string(p) + " is not a supported prime");
  }
}

PrimeField::Element PrimeField::from_int(long v) const {
  const auto m = static_cast<long long>(p_);
  long long r = static_cast<long long>(v) % m;
  if (r < 0) r += m;
  return Fp(static_cast<std::uint64_t>(r), p_);
}

PrimeField::Element PrimeField::from_rational(const Rational& q) const {
  const Integer p(std::to_string(p_));
  Integer num = q.get_num() % p;
  Integer den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw Error(Errc::InvalidChoice, "denominator of " + format_rational(q) + " vanishes mod " + name());
  return Fp(std::stoull(num.get_str()), p_) / Fp(std::stoull(den.get_str()), p_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational" || text == "q" || text == "Q") return {};
  if (text.starts_with("fp:")) {
    std::uint64_t p = 0;
    const auto digits = text.substr(3);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error(Errc::Parse, "bad prime in field spec '" + std::string(text) + "'");
    }
    PrimeField check(p);
    return {false, p};
  }
  if (text == "fp") return {false, PrimeField::kDefaultPrime};
  throw Error(Errc::Parse, "field must be 'rational' or 'fp:<p>', got '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const { return rational ? "rational" : "fp:" + std::to_string(prime); }

}  // namespace covg
