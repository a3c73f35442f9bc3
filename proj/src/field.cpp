#include "perfgen/field.hpp"

#include "perfgen/error.hpp"

namespace perfgen {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Coeff p) : p_(p) {
  // Products are formed in 64 bits and sums in 32 bits.
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

Coeff PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

}  // namespace perfgen
