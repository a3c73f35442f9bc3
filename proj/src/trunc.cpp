#include "perfgen/trunc.hpp"

#include <algorithm>

#include "perfgen/error.hpp"

namespace perfgen {

TruncatedBasis::TruncatedBasis(std::size_t nvars, unsigned bound)
    : nvars_(nvars), bound_(bound), monomials_(monomials_below(nvars, bound)) {
  build_index();
}

TruncatedBasis::TruncatedBasis(std::size_t nvars, unsigned bound, const OrderSpec& order)
    : nvars_(nvars), bound_(bound), monomials_(monomials_below(nvars, bound)) {
  if (order.nvars() != nvars) throw Error("column order has the wrong variable count");
  std::sort(monomials_.begin(), monomials_.end(),
            [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  build_index();
}

void TruncatedBasis::build_index() {
  index_.reserve(monomials_.size() * 2);
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    index_.emplace(monomials_[i], static_cast<Column>(i));
  }
}

std::optional<Column> TruncatedBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

SparseRow sort_row(std::vector<std::pair<Column, Coeff>>& entries) {
  std::sort(entries.begin(), entries.end());
  SparseRow row;
  row.cols.reserve(entries.size());
  row.vals.reserve(entries.size());
  for (auto& [c, v] : entries) {
    row.cols.push_back(c);
    row.vals.push_back(v);
  }
  return row;
}

}  // namespace

SparseRow TruncatedBasis::encode(const Polynomial& f) const {
  return encode_shifted(f, Monomial(nvars_));
}

SparseRow TruncatedBasis::encode_shifted(const Polynomial& f, const Monomial& u) const {
  if (f.nvars() != nvars_) throw Error("polynomial has the wrong variable count for the basis");
  std::vector<std::pair<Column, Coeff>> entries;
  entries.reserve(f.size());
  const unsigned du = u.degree();
  for (const auto& t : f.terms()) {
    if (t.mono.degree() + du >= bound_) continue;
    entries.emplace_back(*index_of(t.mono * u), t.coeff);
  }
  return sort_row(entries);
}

Polynomial TruncatedBasis::decode(const SparseRow& row, const PrimeField& field) const {
  std::vector<Term> terms;
  terms.reserve(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) terms.push_back({monomials_[row.cols[k]], row.vals[k]});
  return Polynomial::from_terms(nvars_, field, std::move(terms));
}

Polynomial MacaulayImage::row_polynomial(std::size_t i) const {
  return basis->decode(echelon.rows().at(i), field);
}

bool MacaulayImage::contains(const Polynomial& f) const {
  return echelon.contains(basis->encode(f));
}

namespace {

void check_gens(std::span<const Polynomial> gens, std::size_t& nvars, PrimeField& field) {
  if (gens.empty()) throw Error("generator list is empty");
  nvars = gens.front().nvars();
  field = gens.front().field();
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw Error("generators live in different rings");
  }
}

// Rows (u * f) mod m^T for every generator and every monomial u with
// min_shift <= deg u < T - ord f.
std::vector<SparseRow> multiple_rows(std::span<const Polynomial> gens, const TruncatedBasis& basis,
                                     unsigned min_shift) {
  const unsigned bound = basis.bound();
  unsigned max_shift = 0;
  for (const auto& g : gens) {
    if (auto o = g.order(); o && *o < bound) max_shift = std::max(max_shift, bound - *o);
  }
  std::vector<std::vector<Monomial>> by_degree;
  for (unsigned s = 0; s < max_shift; ++s) by_degree.push_back(monomials_of_degree(basis.nvars(), s));
  std::vector<SparseRow> rows;
  for (const auto& g : gens) {
    auto o = g.order();
    if (!o || *o >= bound) continue;
    for (unsigned s = min_shift; s < bound - *o; ++s) {
      for (const auto& u : by_degree[s]) {
        SparseRow r = basis.encode_shifted(g, u);
        if (!r.empty()) rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

}  // namespace

MacaulayImage ideal_image(std::span<const Polynomial> gens,
                          std::shared_ptr<const TruncatedBasis> basis, int threads) {
  std::size_t nvars;
  PrimeField field;
  check_gens(gens, nvars, field);
  if (basis->nvars() != nvars) throw Error("basis has the wrong variable count");
  auto rows = multiple_rows(gens, *basis, 0);
  MacaulayImage img;
  img.bound = basis->bound();
  img.field = field;
  img.echelon = reduce_rows(rows, basis->size(), field, threads);
  img.basis = std::move(basis);
  return img;
}

MacaulayImage ideal_image(std::span<const Polynomial> gens, unsigned bound,
                          const ImageOptions& options) {
  std::size_t nvars;
  PrimeField field;
  check_gens(gens, nvars, field);
  auto basis = options.column_order
                   ? std::make_shared<const TruncatedBasis>(nvars, bound, *options.column_order)
                   : std::make_shared<const TruncatedBasis>(nvars, bound);
  return ideal_image(gens, std::move(basis), options.threads);
}

std::vector<Polynomial> times_maximal_ideal(std::span<const Polynomial> gens) {
  std::vector<Polynomial> out;
  for (const auto& f : gens) {
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      out.push_back(f.times_monomial(Monomial::variable(f.nvars(), i)));
    }
  }
  return out;
}

std::vector<Polynomial> maximal_ideal_power(std::size_t nvars, const PrimeField& field, unsigned k) {
  std::vector<Polynomial> out;
  for (const auto& m : monomials_of_degree(nvars, k)) out.push_back(Polynomial::monomial(m, field));
  return out;
}

std::size_t mu_mod_n(std::span<const Polynomial> gens, unsigned n) {
  if (n < 1) throw Error("mu_mod_n requires n >= 1");
  std::size_t nvars;
  PrimeField field;
  check_gens(gens, nvars, field);
  auto basis = std::make_shared<const TruncatedBasis>(nvars, n);
  auto mj = times_maximal_ideal(gens);
  return ideal_image(gens, basis).dim() - ideal_image(mj, basis).dim();
}

std::size_t mu_at_level(std::span<const Polynomial> gens, unsigned bound, int threads) {
  std::size_t nvars;
  PrimeField field;
  check_gens(gens, nvars, field);
  TruncatedBasis basis(nvars, bound);
  EchelonBuilder builder(basis.size(), field, threads);
  builder.insert(multiple_rows(gens, basis, 1));
  std::vector<SparseRow> gen_rows;
  for (const auto& g : gens) gen_rows.push_back(basis.encode(g));
  std::size_t mu = 0;
  for (const auto& r : gen_rows) mu += builder.insert_one(r) ? 1 : 0;
  return mu;
}

StabilizedMu mu_stabilized(std::span<const Polynomial> gens, const StabilizationPolicy& policy) {
  if (policy.window < 2) throw Error("stabilization window must be at least 2");
  if (policy.initial_offset < 2 || policy.max_offset < policy.initial_offset) {
    throw Error("invalid truncation offsets");
  }
  std::size_t nvars;
  PrimeField field;
  check_gens(gens, nvars, field);
  const unsigned maxdeg = max_degree(gens);
  const unsigned first = maxdeg + policy.initial_offset;
  const unsigned last = maxdeg + policy.max_offset;
  StabilizedMu out;
  unsigned run = 0;
  for (unsigned level = first; level <= last; ++level) {
    std::size_t mu = mu_at_level(gens, level);
    run = (!out.history.empty() && out.history.back() == mu) ? run + 1 : 1;
    out.history.push_back(mu);
    out.mu = mu;
    out.level = level;
    if (run >= policy.window) {
      out.stable = true;
      // Report the first level of the constant run.
      out.level = level - (policy.window - 1);
      return out;
    }
  }
  return out;
}

namespace {

// Rows of an image whose pivot sits in the top degree block of a
// degree-ascending basis are supported only on that block.
std::vector<std::size_t> top_degree_rows(const MacaulayImage& img) {
  std::vector<std::size_t> out;
  const unsigned top = img.bound - 1;
  for (std::size_t i = 0; i < img.echelon.rank(); ++i) {
    if (img.basis->at(img.echelon.rows()[i].lead()).degree() == top) out.push_back(i);
  }
  return out;
}

}  // namespace

std::size_t lambda_socle(std::span<const Polynomial> gens, unsigned n) {
  if (n < 1) throw Error("lambda_socle requires n >= 1");
  return top_degree_rows(ideal_image(gens, n)).size();
}

std::vector<Polynomial> phi_basis(std::span<const Polynomial> gens, unsigned n) {
  if (n < 2) throw Error("phi_basis requires n >= 2");
  auto img = ideal_image(gens, n);
  std::vector<Polynomial> out;
  for (std::size_t i : top_degree_rows(img)) out.push_back(img.row_polynomial(i));
  return out;
}

bool subspace_inclusion(std::span<const Polynomial> targets, const MacaulayImage& image) {
  for (const auto& t : targets) {
    if (!t.is_zero() && t.total_degree() >= image.bound) {
      throw Error("subspace_inclusion: target degree " + std::to_string(t.total_degree()) +
                  " is not below the truncation level " + std::to_string(image.bound));
    }
  }
  return std::all_of(targets.begin(), targets.end(),
                     [&](const Polynomial& t) { return image.contains(t); });
}

bool is_m_primary(std::span<const Polynomial> gens, unsigned max_level) {
  std::size_t nvars;
  PrimeField field;
  check_gens(gens, nvars, field);
  auto ord = ideal_order(gens);
  if (!ord) return false;
  for (unsigned s = *ord; s < max_level; ++s) {
    auto img = ideal_image(gens, s + 1);
    if (top_degree_rows(img).size() == binomial(s + nvars - 1, nvars - 1)) return true;
  }
  return false;
}

}  // namespace perfgen
