#include "perfgen/stdbasis.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "perfgen/error.hpp"
#include "perfgen/poly_io.hpp"
#include "perfgen/trunc.hpp"

namespace perfgen {

Staircase truncated_staircase(std::span<const Polynomial> gens, const OrderSpec& order,
                              unsigned bound) {
  if (!order.is_local()) throw Error("truncated_staircase requires a local order");
  ImageOptions opts;
  opts.column_order = order;
  MacaulayImage img = ideal_image(gens, bound, opts);

  std::unordered_set<Monomial, MonomialHash> pivots;
  for (const auto& row : img.echelon.rows()) pivots.insert(img.basis->at(row.lead()));

  // The pivot set is closed under multiplication inside degree < T, so a
  // pivot is a minimal generator iff none of its divisors by one variable is.
  Staircase sc{order, bound, {}, {}};
  for (std::size_t i = 0; i < img.echelon.rank(); ++i) {
    const Monomial& m = img.basis->at(img.echelon.rows()[i].lead());
    bool minimal = true;
    for (std::size_t v = 0; v < m.nvars() && minimal; ++v) {
      if (m[v] == 0) continue;
      Monomial down = m;
      down.set(v, m[v] - 1u);
      if (pivots.count(down)) minimal = false;
    }
    if (minimal) {
      sc.generators.push_back(m);
      sc.witnesses.push_back(img.row_polynomial(i));
    }
  }
  return sc;
}

bool staircase_stable(std::span<const Polynomial> gens, const OrderSpec& order, unsigned bound) {
  auto low = [bound](const Staircase& s) {
    std::vector<Monomial> out;
    for (const auto& m : s.generators) {
      if (m.degree() + 1 < bound) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return low(truncated_staircase(gens, order, bound)) ==
         low(truncated_staircase(gens, order, bound + 1));
}

DivisionResult hironaka_divide(const Polynomial& f, std::span<const Polynomial> basis,
                               const OrderSpec& order, unsigned bound) {
  if (!order.is_local()) throw Error("hironaka_divide requires a local order");
  const std::size_t d = f.nvars();
  const PrimeField& field = f.field();
  std::vector<Term> leads;
  for (const auto& g : basis) {
    if (g.is_zero()) throw Error("hironaka_divide: zero basis element");
    if (g.nvars() != d) throw Error("hironaka_divide: variable count mismatch");
    leads.push_back(leading_term(g, order));
  }
  DivisionResult res;
  res.quotients.assign(basis.size(), Polynomial(d, field));
  std::vector<std::vector<Term>> qterms(basis.size());
  std::vector<Term> rem;
  Polynomial work = f.truncated(bound);
  while (!work.is_zero()) {
    // Least remaining term; every term below it has already moved to r.
    const Term least = leading_term(work, order);
    std::size_t idx = basis.size();
    for (std::size_t i = 0; i < leads.size(); ++i) {
      if (leads[i].mono.divides(least.mono)) {
        idx = i;
        break;
      }
    }
    if (idx == basis.size()) {
      rem.push_back(least);
      work = work - Polynomial::monomial(least.mono, field, least.coeff);
      continue;
    }
    Monomial q = leads[idx].mono.quotient_of(least.mono);
    Coeff c = field.div(least.coeff, leads[idx].coeff);
    res.trace.push_back({least, idx, {q, c}});
    qterms[idx].push_back({q, c});
    work = work.minus_multiple(c, q, basis[idx], bound);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    res.quotients[i] = Polynomial::from_terms(d, field, std::move(qterms[i]));
  }
  res.remainder = Polynomial::from_terms(d, field, std::move(rem));
  return res;
}

std::string format_trace(const DivisionResult& result) {
  std::ostringstream out;
  std::size_t step = 0;
  const PrimeField& field = result.remainder.field();
  for (const auto& s : result.trace) {
    out << "step " << ++step << ": cancel "
        << format_poly(Polynomial::monomial(s.cancelled.mono, field, s.cancelled.coeff))
        << " with g" << (s.basis_index + 1) << " multiplier "
        << format_poly(Polynomial::monomial(s.multiplier.mono, field, s.multiplier.coeff)) << '\n';
  }
  for (std::size_t i = 0; i < result.quotients.size(); ++i) {
    out << "q" << (i + 1) << " = " << format_poly(result.quotients[i]) << '\n';
  }
  out << "r = " << format_poly(result.remainder) << '\n';
  return out.str();
}

SuperfluousResult superfluous_filter(std::span<const Polynomial> basis, unsigned bound) {
  if (basis.empty()) return {};
  const std::size_t d = basis.front().nvars();
  const PrimeField field = basis.front().field();
  TruncatedBasis cols(d, bound);
  EchelonBuilder builder(cols.size(), field);
  // Rows of mI: u * y_k with 1 <= deg u.
  std::vector<SparseRow> rows;
  for (const auto& y : basis) {
    auto o = y.order();
    if (!o || *o + 1 >= bound) continue;
    for (unsigned s = 1; s < bound - *o; ++s) {
      for (const auto& u : monomials_of_degree(d, s)) {
        SparseRow r = cols.encode_shifted(y, u);
        if (!r.empty()) rows.push_back(std::move(r));
      }
    }
  }
  builder.insert(rows);
  // (y_{i+1}, ..., y_m)R lies in span(y_{i+1}, ..., y_m) + mI, so scanning
  // from the right only needs the surviving generators' spans.
  std::vector<bool> keep(basis.size(), false);
  for (std::size_t i = basis.size(); i-- > 0;) {
    keep[i] = builder.insert_one(cols.encode(basis[i]));
  }
  SuperfluousResult res;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    res.kept.push_back(basis[i]);
    res.kept_indices.push_back(i);
  }
  res.mu = res.kept.size();
  return res;
}

LeadingTermStructure check_leading_term_structure(std::span<const Polynomial> gens, std::size_t g,
                                                  unsigned bound) {
  if (gens.empty()) throw Error("generator list is empty");
  const std::size_t d = gens.front().nvars();
  LeadingTermStructure out{false, false, truncated_staircase(gens, OrderSpec::block_sum(d, g), bound)};
  const auto& gensc = out.staircase.generators;
  out.supported_in_first_g = std::all_of(gensc.begin(), gensc.end(),
                                         [g](const Monomial& m) { return m.supported_below(g); });
  out.distinct_prefixes = true;
  for (std::size_t a = 0; a < gensc.size() && out.distinct_prefixes; ++a) {
    for (std::size_t b = a + 1; b < gensc.size(); ++b) {
      bool differ = false;
      for (std::size_t i = 0; i + 1 < g; ++i) {
        if (gensc[a][i] != gensc[b][i]) differ = true;
      }
      if (!differ) {
        out.distinct_prefixes = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace perfgen
