#pragma once

#include <cstdint>

namespace perfgen {

using Coeff = std::uint32_t;

/// The prime field F_p. Elements are canonical representatives in [0, p).
class PrimeField {
public:
  static constexpr Coeff kDefaultPrime = 32003;

  PrimeField() : PrimeField(kDefaultPrime) {}
  explicit PrimeField(Coeff p);

  Coeff characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  Coeff pow(Coeff a, std::uint64_t e) const;

  /// Reduces a signed machine integer into [0, p).
  Coeff from_int(std::int64_t v) const;
  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  bool operator==(const PrimeField&) const = default;

private:
  Coeff p_;
};

bool is_prime(std::uint64_t n);

}  // namespace perfgen
