#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "perfgen/order.hpp"
#include "perfgen/polynomial.hpp"

namespace perfgen {

/// Reduced Groebner basis for a global order: monic elements sorted by
/// ascending leading monomial, no term divisible by another leading monomial.
class GroebnerBasis {
public:
  GroebnerBasis(OrderSpec order, std::size_t nvars, PrimeField field)
      : order_(order), nvars_(nvars), field_(field) {}

  const OrderSpec& order() const { return order_; }
  std::size_t nvars() const { return nvars_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  bool is_unit() const { return elements_.size() == 1 && leads_.front().is_one(); }
  bool is_zero_ideal() const { return elements_.empty(); }

  bool operator==(const GroebnerBasis& o) const {
    return nvars_ == o.nvars_ && elements_ == o.elements_;
  }

private:
  friend GroebnerBasis reduced_groebner(std::span<const Polynomial>, const OrderSpec&);

  OrderSpec order_;
  std::size_t nvars_;
  PrimeField field_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
};

/// Buchberger completion with the Gebauer-Moeller pair criteria and sugar
/// selection, followed by autoreduction. Throws Error for local orders.
GroebnerBasis reduced_groebner(std::span<const Polynomial> gens, const OrderSpec& order);

/// Full reduction; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Dimension of the affine coordinate ring, read off the staircase: the
/// largest set of variables containing the support of no leading monomial.
/// Returns -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& gb);

/// Height d - dim; nullopt for the unit ideal.
std::optional<std::size_t> ideal_height(std::span<const Polynomial> gens);

/// (I : f) via I cap (f) computed by eliminating one auxiliary variable t
/// from t*I + (1-t)*f, then dividing by f. Result in degrevlex.
GroebnerBasis colon_ideal(std::span<const Polynomial> gens, const Polynomial& f);

struct RegularityCheck {
  bool regular = false;
  /// Set when f already lies in the ideal; regular is false then.
  bool in_ideal = false;
};

RegularityCheck check_regular_element(const Polynomial& f, std::span<const Polynomial> gens);
inline bool is_regular_element(const Polynomial& f, std::span<const Polynomial> gens) {
  return check_regular_element(f, gens).regular;
}

/// Height of the ideal of k[x] generated by Phi_n(J cap m^{n-1}); 0 if that
/// space is zero.
std::size_t phi_height(std::span<const Polynomial> gens, unsigned n);

}  // namespace perfgen
