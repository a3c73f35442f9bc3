#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "perfgen/echelon.hpp"
#include "perfgen/order.hpp"
#include "perfgen/polynomial.hpp"

namespace perfgen {

/// Monomial basis of R/m^T: all monomials of total degree < T, in a chosen
/// column order. The default order is ascending degree, so the degree T-1
/// block comes last.
class TruncatedBasis {
public:
  TruncatedBasis(std::size_t nvars, unsigned bound);
  /// Columns sorted ascending by `order`.
  TruncatedBasis(std::size_t nvars, unsigned bound, const OrderSpec& order);

  std::size_t nvars() const { return nvars_; }
  unsigned bound() const { return bound_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& at(Column c) const { return monomials_[c]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::optional<Column> index_of(const Monomial& m) const;

  /// Sparse row of f mod m^T in this basis.
  SparseRow encode(const Polynomial& f) const;
  /// Sparse row of (u * f) mod m^T.
  SparseRow encode_shifted(const Polynomial& f, const Monomial& u) const;
  Polynomial decode(const SparseRow& row, const PrimeField& field) const;

private:
  void build_index();

  std::size_t nvars_;
  unsigned bound_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, Column, MonomialHash> index_;
};

/// (J + m^T)/m^T as a reduced row echelon matrix over the truncated basis.
struct MacaulayImage {
  unsigned bound = 0;
  PrimeField field;
  std::shared_ptr<const TruncatedBasis> basis;
  Echelon echelon;

  std::size_t dim() const { return echelon.rank(); }
  Polynomial row_polynomial(std::size_t i) const;
  /// True iff f mod m^T lies in the image.
  bool contains(const Polynomial& f) const;
};

struct ImageOptions {
  /// Column order; nullopt means ascending degree.
  std::optional<OrderSpec> column_order;
  int threads = 0;
};

/// Row space spanned by (u * f) mod m^T over all generators f and monomials
/// u with deg u < T.
MacaulayImage ideal_image(std::span<const Polynomial> gens, unsigned bound,
                          const ImageOptions& options = {});
MacaulayImage ideal_image(std::span<const Polynomial> gens,
                          std::shared_ptr<const TruncatedBasis> basis, int threads = 0);

/// The generators {x_i * f_j} of mJ.
std::vector<Polynomial> times_maximal_ideal(std::span<const Polynomial> gens);
/// The monomial generators of m^k.
std::vector<Polynomial> maximal_ideal_power(std::size_t nvars, const PrimeField& field, unsigned k);

/// dim (J + m^n)/(mJ + m^n), computed as the difference of two image dimensions.
std::size_t mu_mod_n(std::span<const Polynomial> gens, unsigned n);

/// dim (J + m^T)/(mJ + m^T) by one elimination: the rows of mJ first, then
/// the generators; the rank increase is the answer.
std::size_t mu_at_level(std::span<const Polynomial> gens, unsigned bound, int threads = 0);

struct StabilizationPolicy {
  unsigned initial_offset = 2;
  unsigned window = 2;
  unsigned max_offset = 8;
};

struct StabilizedMu {
  std::size_t mu = 0;
  unsigned level = 0;
  bool stable = false;
  /// mu_T for each level tried, starting at the initial level.
  std::vector<std::size_t> history;
};

/// Evaluates mu_T for increasing T until it is constant over `window`
/// consecutive levels. `stable` is false if the maximum level is reached.
StabilizedMu mu_stabilized(std::span<const Polynomial> gens, const StabilizationPolicy& policy = {});

/// Dimension of (I cap m^{n-1} + m^n)/m^n.
std::size_t lambda_socle(std::span<const Polynomial> gens, unsigned n);

/// Basis of the degree-(n-1) forms Phi_n(J cap m^{n-1}).
std::vector<Polynomial> phi_basis(std::span<const Polynomial> gens, unsigned n);

/// True iff every target lies in the image. Throws Error if some target has
/// degree >= T, since the test would be vacuous there.
bool subspace_inclusion(std::span<const Polynomial> targets, const MacaulayImage& image);

/// Local m-primary test: some m^s with s < max_level is contained in
/// J + m^{s+1}, hence in J by Nakayama.
bool is_m_primary(std::span<const Polynomial> gens, unsigned max_level);

}  // namespace perfgen
