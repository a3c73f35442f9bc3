#pragma once

#include <cstdint>
#include <random>

#include "perfgen/field.hpp"

namespace perfgen {

/// splitmix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  return mix_seed(parent ^ mix_seed(index + 1));
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  Coeff coeff(const PrimeField& f) {
    return std::uniform_int_distribution<Coeff>(0, f.characteristic() - 1)(engine_);
  }
  Coeff nonzero_coeff(const PrimeField& f) {
    return std::uniform_int_distribution<Coeff>(1, f.characteristic() - 1)(engine_);
  }
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

}  // namespace perfgen
