#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "perfgen/field.hpp"
#include "perfgen/monomial.hpp"

namespace perfgen {

struct Term {
  Monomial mono;
  Coeff coeff;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial over F_p in a fixed number of variables. Terms are kept
/// sorted ascending by the internal monomial encoding with no zero
/// coefficients, so structural equality is polynomial equality.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::size_t nvars, PrimeField field) : nvars_(nvars), field_(field) {}

  static Polynomial constant(std::size_t nvars, PrimeField field, Coeff c);
  static Polynomial monomial(const Monomial& m, PrimeField field, Coeff c = 1);
  static Polynomial variable(std::size_t nvars, PrimeField field, std::size_t index);
  /// Builds from an arbitrary term list: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(std::size_t nvars, PrimeField field, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of `m`, zero if absent.
  Coeff coeff(const Monomial& m) const;
  unsigned total_degree() const;
  /// Minimum total degree over the support; nullopt for the zero polynomial.
  std::optional<unsigned> order() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(Coeff c) const;
  Polynomial times_monomial(const Monomial& m, Coeff c = 1) const;
  /// Drops every term of total degree >= bound (reduction mod m^bound).
  Polynomial truncated(unsigned bound) const;
  /// this - c * m * g, truncated below `bound` when given.
  Polynomial minus_multiple(Coeff c, const Monomial& m, const Polynomial& g,
                            unsigned bound = std::numeric_limits<unsigned>::max()) const;
  Polynomial pow(unsigned e) const;

  /// Re-embeds into a ring with more variables (appended at the end).
  Polynomial extended(std::size_t nvars) const;
  /// Substitutes x_{index} = 0 and removes that variable.
  Polynomial drop_variable(std::size_t index) const;
  /// Divides by a polynomial that is known to divide exactly; throws otherwise.
  Polynomial exact_div(const Polynomial& divisor) const;

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

private:
  std::size_t nvars_ = 0;
  PrimeField field_;
  std::vector<Term> terms_;
};

Polynomial homogeneous_component(const Polynomial& f, unsigned degree);

/// Order of vanishing at the origin; nullopt stands for infinity.
std::optional<unsigned> order_of_vanishing(const Polynomial& f);

/// Minimum order over a generator list (ord of the ideal); nullopt if all zero.
std::optional<unsigned> ideal_order(std::span<const Polynomial> gens);
unsigned max_degree(std::span<const Polynomial> gens);

/// Square scalar matrix over F_p, row-major.
struct ScalarMatrix {
  std::size_t n = 0;
  std::vector<Coeff> a;

  Coeff& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  Coeff at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  static ScalarMatrix identity(std::size_t n);
};

/// Inverse over F_p, nullopt if singular.
std::optional<ScalarMatrix> invert(const ScalarMatrix& m, const PrimeField& field);

/// Substitutes x_i -> sum_j M[i][j] x_j. Throws Error if M is singular.
Polynomial apply_linear_change(const Polynomial& f, const ScalarMatrix& m);

}  // namespace perfgen
