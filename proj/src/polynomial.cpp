#include "perfgen/polynomial.hpp"

#include <algorithm>

#include "perfgen/error.hpp"

namespace perfgen {

namespace {

bool term_less(const Term& a, const Term& b) { return a.mono < b.mono; }

// Merges two sorted term lists, combining a + scale * b.
std::vector<Term> merge_scaled(const std::vector<Term>& a, const std::vector<Term>& b,
                               Coeff scale, const PrimeField& f) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      Coeff c = f.mul(scale, b[j].coeff);
      if (c != 0) out.push_back({b[j].mono, c});
      ++j;
    } else {
      Coeff c = f.add(a[i].coeff, f.mul(scale, b[j].coeff));
      if (c != 0) out.push_back({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, PrimeField field, Coeff c) {
  Polynomial p(nvars, field);
  c %= field.characteristic();
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, PrimeField field, Coeff c) {
  Polynomial p(m.nvars(), field);
  c %= field.characteristic();
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, PrimeField field, std::size_t index) {
  return monomial(Monomial::variable(nvars, index), field, 1);
}

Polynomial Polynomial::from_terms(std::size_t nvars, PrimeField field, std::vector<Term> terms) {
  Polynomial p(nvars, field);
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto& t : terms) {
    if (t.mono.nvars() != nvars) throw Error("term has wrong variable count");
    Coeff c = t.coeff % field.characteristic();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, c);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({t.mono, c});
    }
  }
  return p;
}

Coeff Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_less);
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::optional<unsigned> Polynomial::order() const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw Error("variable count mismatch in addition");
  Polynomial r(nvars_, field_);
  r.terms_ = merge_scaled(terms_, o.terms_, 1, field_);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw Error("variable count mismatch in subtraction");
  Polynomial r(nvars_, field_);
  r.terms_ = merge_scaled(terms_, o.terms_, field_.neg(1), field_);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(field_.neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw Error("variable count mismatch in multiplication");
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, field_.mul(a.coeff, b.coeff)});
  }
  return from_terms(nvars_, field_, std::move(prod));
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial r(nvars_, field_);
  c %= field_.characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field_.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, Coeff c) const {
  Polynomial r(nvars_, field_);
  c %= field_.characteristic();
  if (c == 0) return r;
  // Multiplication by a monomial preserves the internal lexicographic order.
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::truncated(unsigned bound) const {
  Polynomial r(nvars_, field_);
  for (const auto& t : terms_) {
    if (t.mono.degree() < bound) r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::minus_multiple(Coeff c, const Monomial& m, const Polynomial& g,
                                      unsigned bound) const {
  Polynomial shifted(nvars_, field_);
  for (const auto& t : g.terms_) {
    Monomial mm = t.mono * m;
    if (mm.degree() < bound) shifted.terms_.push_back({mm, t.coeff});
  }
  Polynomial r(nvars_, field_);
  r.terms_ = merge_scaled(terms_, shifted.terms_, field_.neg(c % field_.characteristic()), field_);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(nvars_, field_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw Error("cannot shrink variable count by extension");
  Polynomial r(nvars, field_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars_; ++i) m.set(i, t.mono[i]);
    r.terms_.push_back({m, t.coeff});
  }
  // Appending zero exponents keeps the lexicographic order.
  return r;
}

Polynomial Polynomial::drop_variable(std::size_t index) const {
  if (index >= nvars_) throw Error("variable index out of range");
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    if (t.mono[index] != 0) continue;
    Monomial m(nvars_ - 1);
    for (std::size_t i = 0, j = 0; i < nvars_; ++i) {
      if (i != index) m.set(j++, t.mono[i]);
    }
    kept.push_back({m, t.coeff});
  }
  return from_terms(nvars_ - 1, field_, std::move(kept));
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  // Division by the largest term under the internal (lexicographic, admissible)
  // order: the leading term of the quotient is lead(rest) / lead(divisor).
  Polynomial rest = *this;
  Polynomial quot(nvars_, field_);
  const Term& lead = divisor.terms_.back();
  Coeff lead_inv = field_.inv(lead.coeff);
  std::vector<Term> qterms;
  while (!rest.is_zero()) {
    const Term& top = rest.terms_.back();
    if (!lead.mono.divides(top.mono)) throw Error("polynomial division is not exact");
    Monomial q = lead.mono.quotient_of(top.mono);
    Coeff c = field_.mul(top.coeff, lead_inv);
    qterms.push_back({q, c});
    rest = rest.minus_multiple(c, q, divisor);
  }
  return from_terms(nvars_, field_, std::move(qterms));
}

Polynomial homogeneous_component(const Polynomial& f, unsigned degree) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    if (t.mono.degree() == degree) kept.push_back(t);
  }
  return Polynomial::from_terms(f.nvars(), f.field(), std::move(kept));
}

std::optional<unsigned> order_of_vanishing(const Polynomial& f) { return f.order(); }

std::optional<unsigned> ideal_order(std::span<const Polynomial> gens) {
  std::optional<unsigned> best;
  for (const auto& g : gens) {
    auto o = g.order();
    if (o && (!best || *o < *best)) best = o;
  }
  return best;
}

unsigned max_degree(std::span<const Polynomial> gens) {
  unsigned d = 0;
  for (const auto& g : gens) d = std::max(d, g.total_degree());
  return d;
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m{n, std::vector<Coeff>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::optional<ScalarMatrix> invert(const ScalarMatrix& m, const PrimeField& f) {
  const std::size_t n = m.n;
  ScalarMatrix a = m;
  ScalarMatrix inv = ScalarMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a.at(col, j), a.at(piv, j));
      std::swap(inv.at(col, j), inv.at(piv, j));
    }
    Coeff s = f.inv(a.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) = f.mul(a.at(col, j), s);
      inv.at(col, j) = f.mul(inv.at(col, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      Coeff c = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(col, j)));
        inv.at(i, j) = f.sub(inv.at(i, j), f.mul(c, inv.at(col, j)));
      }
    }
  }
  return inv;
}

Polynomial apply_linear_change(const Polynomial& f, const ScalarMatrix& m) {
  const std::size_t d = f.nvars();
  if (m.n != d) throw Error("linear change has wrong dimension");
  if (!invert(m, f.field())) throw Error("linear change of coordinates is singular");
  std::vector<Polynomial> images;
  images.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Term> lin;
    for (std::size_t j = 0; j < d; ++j) {
      if (m.at(i, j) != 0) lin.push_back({Monomial::variable(d, j), m.at(i, j)});
    }
    images.push_back(Polynomial::from_terms(d, f.field(), std::move(lin)));
  }
  // Cache powers of each image since exponents repeat across terms.
  std::vector<std::vector<Polynomial>> powers(d);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(d, f.field(), 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(d, f.field());
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(d, f.field(), t.coeff);
    for (std::size_t i = 0; i < d; ++i) {
      if (t.mono[i] != 0) prod = prod * power(i, t.mono[i]);
    }
    result += prod;
  }
  return result;
}

}  // namespace perfgen
