#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "perfgen/monomial.hpp"
#include "perfgen/polynomial.hpp"

namespace perfgen {

enum class OrderKind {
  /// Lexicographic on (e_d, ..., e_{g+1}, e_1 + ... + e_g, e_g, ..., e_1). Local.
  block_sum,
  /// Lexicographic on (e_d, ..., e_1). Local.
  pure_lex,
  /// Total degree, then reverse lexicographic with x_1 > ... > x_d. Global.
  degrevlex,
  /// Block order eliminating the last `block` variables, degrevlex inside
  /// each block. Global.
  elimination,
};

/// A total monomial order on a fixed number of variables. Local kinds take
/// the least element of the support as leading term, global kinds the
/// largest.
class OrderSpec {
public:
  static OrderSpec block_sum(std::size_t nvars, std::size_t g);
  static OrderSpec pure_lex(std::size_t nvars);
  static OrderSpec degrevlex(std::size_t nvars);
  static OrderSpec elimination(std::size_t nvars, std::size_t block);

  /// Accepts `paper:g=<int>`, `lex` and `degrevlex`.
  static OrderSpec parse(std::string_view text, std::size_t nvars);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t g() const { return param_; }
  bool is_local() const { return kind_ == OrderKind::block_sum || kind_ == OrderKind::pure_lex; }

  /// Throws Error on a variable-count mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  /// Same as compare() without the dimension check; for inner loops.
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare_unchecked(a, b) < 0; }

  std::string to_string() const;

private:
  OrderSpec(OrderKind kind, std::size_t nvars, std::size_t param)
      : kind_(kind), nvars_(nvars), param_(param) {}

  OrderKind kind_;
  std::size_t nvars_;
  std::size_t param_;
};

std::strong_ordering compare_monomials(const OrderSpec& ord, const Monomial& a, const Monomial& b);

/// Least term for local kinds, largest term for global kinds.
/// Throws Error for the zero polynomial.
Term leading_term(const Polynomial& f, const OrderSpec& ord);

}  // namespace perfgen
