#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "perfgen/order.hpp"
#include "perfgen/polynomial.hpp"

namespace perfgen {

/// Minimal generators of the leading-term ideal of (J + m^T)/m^T under a
/// local order, each with a witness from the image whose leading term it is.
struct Staircase {
  OrderSpec order;
  unsigned bound;
  std::vector<Monomial> generators;
  std::vector<Polynomial> witnesses;
};

/// Columns of the Macaulay matrix are sorted ascending by `order`, so row
/// echelon pivots are leading monomials. Witnesses are the reduced rows.
/// Under a non degree-compatible order a pivot may be a truncation artifact;
/// see staircase_stable.
Staircase truncated_staircase(std::span<const Polynomial> gens, const OrderSpec& order,
                              unsigned bound);

/// Staircases at T and T+1 agree on all generators of degree < T-1.
bool staircase_stable(std::span<const Polynomial> gens, const OrderSpec& order, unsigned bound);

struct DivisionStep {
  Term cancelled;
  std::size_t basis_index;
  Term multiplier;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
  std::vector<DivisionStep> trace;
};

/// Division with remainder modulo m^T: f = sum q_i g_i + r (mod m^T), and no
/// term of r is divisible by any LT(g_i). Each step cancels the least
/// divisible term; among several divisors the lowest index wins.
DivisionResult hironaka_divide(const Polynomial& f, std::span<const Polynomial> basis,
                               const OrderSpec& order, unsigned bound);

std::string format_trace(const DivisionResult& result);

struct SuperfluousResult {
  std::vector<Polynomial> kept;
  std::vector<std::size_t> kept_indices;
  std::size_t mu = 0;
};

/// Scans left to right and drops y_i iff y_i lies in mI + (y_{i+1}, ..., y_m)
/// modulo m^T. The survivors are a minimal generating set.
SuperfluousResult superfluous_filter(std::span<const Polynomial> basis, unsigned bound);

struct LeadingTermStructure {
  /// Every staircase generator is a monomial in x_1..x_g.
  bool supported_in_first_g = false;
  /// Any two generators differ in some exponent e_i with i < g.
  bool distinct_prefixes = false;
  Staircase staircase;

  bool holds() const { return supported_in_first_g && distinct_prefixes; }
};

/// Checks the leading-term shape of a standard basis under the block-sum order
/// with parameter g. Coordinates must already put parameters last.
LeadingTermStructure check_leading_term_structure(std::span<const Polynomial> gens, std::size_t g,
                                                  unsigned bound);

}  // namespace perfgen
