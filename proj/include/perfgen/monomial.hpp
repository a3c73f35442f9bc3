#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace perfgen {

/// Exponent vector x_1^{e_1} ... x_d^{e_d}. Storage is inline with a fixed
/// capacity; unused slots stay zero so equality and hashing ignore them.
class Monomial {
public:
  static constexpr std::size_t kMaxVars = 16;
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::initializer_list<unsigned> exps);
  Monomial(std::size_t nvars, std::span<const unsigned> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return nvars_; }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v) { e_[i] = static_cast<Exponent>(v); }

  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) with *this as divisor: returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Support contained in variables [0, k).
  bool supported_below(std::size_t k) const;

  std::span<const Exponent> exponents() const { return {e_.data(), nvars_}; }

  /// Fixed internal encoding order: lexicographic on (e_1, ..., e_d).
  /// Only used for canonical storage, never as a mathematical order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.e_ <=> b.e_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const;
  std::string to_string() const;

private:
  std::array<Exponent, kMaxVars> e_{};
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of total degree exactly `degree` in `nvars` variables,
/// in a deterministic order (descending powers of x_1 first).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);
/// All monomials of total degree < `bound`, grouped by ascending degree.
std::vector<Monomial> monomials_below(std::size_t nvars, unsigned bound);

/// Exact binomial coefficient; zero when k < 0 or k > n.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace perfgen
