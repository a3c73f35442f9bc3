#include "perfgen/groebner.hpp"

#include <algorithm>
#include <bit>

#include "perfgen/error.hpp"
#include "perfgen/trunc.hpp"

namespace perfgen {

namespace {

// Terms ascending under the order; the leading term is back().
struct OPoly {
  std::vector<Term> terms;
  unsigned sugar = 0;

  const Term& lead() const { return terms.back(); }
  bool empty() const { return terms.empty(); }
};

class Engine {
public:
  Engine(const OrderSpec& order, const PrimeField& field) : order_(order), field_(field) {}

  OPoly convert(const Polynomial& f) const {
    OPoly p;
    p.terms = f.terms();
    std::sort(p.terms.begin(), p.terms.end(),
              [&](const Term& a, const Term& b) { return order_.less(a.mono, b.mono); });
    p.sugar = f.total_degree();
    return p;
  }

  Polynomial back(const OPoly& p, std::size_t nvars) const {
    return Polynomial::from_terms(nvars, field_, p.terms);
  }

  void make_monic(OPoly& p) const {
    if (p.empty()) return;
    Coeff s = field_.inv(p.lead().coeff);
    if (s == 1) return;
    for (auto& t : p.terms) t.coeff = field_.mul(t.coeff, s);
  }

  // f - c * m * g with both operands ascending under the order.
  std::vector<Term> sub_mul(const std::vector<Term>& f, Coeff c, const Monomial& m,
                            const std::vector<Term>& g) const {
    std::vector<Term> out;
    out.reserve(f.size() + g.size());
    const Coeff negc = field_.neg(c);
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(f[i++]);
        continue;
      }
      Monomial gm = g[j].mono * m;
      if (i == f.size()) {
        out.push_back({gm, field_.mul(negc, g[j].coeff)});
        ++j;
        continue;
      }
      auto cmp = order_.compare_unchecked(f[i].mono, gm);
      if (cmp < 0) {
        out.push_back(f[i++]);
      } else if (cmp > 0) {
        out.push_back({gm, field_.mul(negc, g[j].coeff)});
        ++j;
      } else {
        Coeff v = field_.add(f[i].coeff, field_.mul(negc, g[j].coeff));
        if (v != 0) out.push_back({gm, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction of p against the given reducers (assumed monic).
  OPoly reduce(OPoly p, const std::vector<const OPoly*>& reducers) const {
    std::vector<Term> rem;
    while (!p.empty()) {
      const Term lt = p.lead();
      const OPoly* div = nullptr;
      for (const OPoly* g : reducers) {
        if (g->lead().mono.divides(lt.mono)) {
          div = g;
          break;
        }
      }
      if (!div) {
        rem.push_back(lt);
        p.terms.pop_back();
        continue;
      }
      Monomial q = div->lead().mono.quotient_of(lt.mono);
      p.sugar = std::max(p.sugar, div->sugar + q.degree());
      p.terms = sub_mul(p.terms, lt.coeff, q, div->terms);
    }
    std::reverse(rem.begin(), rem.end());
    p.terms = std::move(rem);
    return p;
  }

  const OrderSpec& order() const { return order_; }

private:
  const OrderSpec& order_;
  const PrimeField& field_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
public:
  Buchberger(const Engine& engine) : engine_(engine) {}

  void add(OPoly h) {
    engine_.make_monic(h);
    polys_.push_back(std::move(h));
    update(polys_.size() - 1);
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        if (it->sugar < best->sugar ||
            (it->sugar == best->sugar && engine_.order().less(it->lcm, best->lcm))) {
          best = it;
        }
      }
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      OPoly s = spoly(p);
      OPoly h = engine_.reduce(std::move(s), reducers());
      if (h.empty()) continue;
      add(std::move(h));
      if (polys_.back().lead().mono.is_one()) {
        pairs_.clear();
        return;
      }
    }
  }

  std::vector<const OPoly*> reducers() const {
    std::vector<const OPoly*> out;
    out.reserve(active_.size());
    for (std::size_t k : active_) out.push_back(&polys_[k]);
    return out;
  }

  std::vector<std::size_t> active() const { return active_; }
  const OPoly& poly(std::size_t k) const { return polys_[k]; }
  OPoly reduce_input(OPoly p) const { return engine_.reduce(std::move(p), reducers()); }

private:
  OPoly spoly(const Pair& p) const {
    const OPoly& f = polys_[p.i];
    const OPoly& g = polys_[p.j];
    Monomial mf = f.lead().mono.quotient_of(p.lcm);
    Monomial mg = g.lead().mono.quotient_of(p.lcm);
    OPoly s;
    std::vector<Term> ft;
    ft.reserve(f.terms.size());
    for (const auto& t : f.terms) ft.push_back({t.mono * mf, t.coeff});
    s.terms = engine_.sub_mul(ft, 1, mg, g.terms);
    s.sugar = p.sugar;
    return s;
  }

  void update(std::size_t h) {
    const Monomial& lh = polys_[h].lead().mono;
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g : active_) {
      const Monomial& lg = polys_[g].lead().mono;
      cands.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Cand& c = cands[a];
      bool keep = c.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b) {
          if (cands[b].lcm.divides(c.lcm)) keep = false;
        }
        for (const Cand& k : kept) {
          if (!keep) break;
          if (k.lcm.divides(c.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(c);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const Pair& p : pairs_) {
      const Monomial& li = polys_[p.i].lead().mono;
      const Monomial& lj = polys_[p.j].lead().mono;
      bool drop = lh.divides(p.lcm) && li.lcm(lh) != p.lcm && lj.lcm(lh) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const Cand& c : kept) {
      if (c.coprime) continue;
      const OPoly& fg = polys_[c.g];
      const OPoly& fh = polys_[h];
      unsigned deg = c.lcm.degree();
      unsigned sugar = std::max(fg.sugar + deg - fg.lead().mono.degree(),
                                fh.sugar + deg - fh.lead().mono.degree());
      next.push_back({c.g, h, c.lcm, sugar});
    }
    pairs_ = std::move(next);
    std::vector<std::size_t> act;
    for (std::size_t g : active_) {
      if (!lh.divides(polys_[g].lead().mono)) act.push_back(g);
    }
    act.push_back(h);
    active_ = std::move(act);
  }

  const Engine& engine_;
  std::vector<OPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis reduced_groebner(std::span<const Polynomial> gens, const OrderSpec& order) {
  if (order.is_local()) throw Error("reduced_groebner requires a global order");
  if (gens.empty()) throw Error("generator list is empty");
  const std::size_t nvars = gens.front().nvars();
  const PrimeField field = gens.front().field();
  if (order.nvars() != nvars) throw Error("order has the wrong variable count");
  Engine engine(order, field);
  Buchberger bb(engine);
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw Error("generators live in different rings");
    if (g.is_zero()) continue;
    OPoly h = bb.reduce_input(engine.convert(g));
    if (h.empty()) continue;
    bb.add(std::move(h));
    if (bb.poly(bb.active().back()).lead().mono.is_one()) break;
  }
  bb.run();

  // Minimal basis, then tail reduction of each element by the others.
  std::vector<std::size_t> act = bb.active();
  std::vector<std::size_t> minimal;
  for (std::size_t a : act) {
    const Monomial& la = bb.poly(a).lead().mono;
    bool redundant = false;
    for (std::size_t b : act) {
      if (a == b) continue;
      const Monomial& lb = bb.poly(b).lead().mono;
      if (lb.divides(la) && (lb != la || b < a)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(a);
  }
  std::vector<OPoly> reduced;
  for (std::size_t a : minimal) {
    std::vector<const OPoly*> others;
    for (std::size_t b : minimal) {
      if (b != a) others.push_back(&bb.poly(b));
    }
    OPoly p = bb.poly(a);
    Term lead = p.lead();
    p.terms.pop_back();
    OPoly tail = engine.reduce(std::move(p), others);
    tail.terms.push_back(lead);
    engine.make_monic(tail);
    reduced.push_back(std::move(tail));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const OPoly& a, const OPoly& b) {
    return order.less(a.lead().mono, b.lead().mono);
  });
  GroebnerBasis gb(order, nvars, field);
  for (const auto& p : reduced) {
    gb.leads_.push_back(p.lead().mono);
    gb.elements_.push_back(engine.back(p, nvars));
  }
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.nvars() != gb.nvars()) throw Error("normal_form: variable count mismatch");
  Engine engine(gb.order(), gb.field());
  std::vector<OPoly> basis;
  basis.reserve(gb.elements().size());
  for (const auto& g : gb.elements()) basis.push_back(engine.convert(g));
  std::vector<const OPoly*> reducers;
  for (const auto& b : basis) reducers.push_back(&b);
  return engine.back(engine.reduce(engine.convert(f), reducers), f.nvars());
}

int krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const std::size_t d = gb.nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (m[i] != 0) s |= 1u << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  const std::uint32_t full = d >= 32 ? 0xffffffffu : (1u << d) - 1;
  for (std::uint32_t set = 0;; ++set) {
    int size = std::popcount(set);
    if (size > best) {
      bool independent = std::all_of(supports.begin(), supports.end(),
                                     [set](std::uint32_t s) { return (s & ~set) != 0; });
      if (independent) best = size;
    }
    if (set == full) break;
  }
  return best;
}

std::optional<std::size_t> ideal_height(std::span<const Polynomial> gens) {
  if (gens.empty()) throw Error("generator list is empty");
  const std::size_t d = gens.front().nvars();
  int dim = krull_dimension(reduced_groebner(gens, OrderSpec::degrevlex(d)));
  if (dim < 0) return std::nullopt;
  return d - static_cast<std::size_t>(dim);
}

GroebnerBasis colon_ideal(std::span<const Polynomial> gens, const Polynomial& f) {
  if (f.is_zero()) throw Error("colon by the zero polynomial");
  const std::size_t d = f.nvars();
  const PrimeField field = f.field();
  const std::size_t e = d + 1;
  const Polynomial t = Polynomial::variable(e, field, d);
  const Polynomial one = Polynomial::constant(e, field, 1);
  std::vector<Polynomial> ext;
  for (const auto& g : gens) {
    if (g.nvars() != d) throw Error("colon_ideal: variable count mismatch");
    if (!g.is_zero()) ext.push_back(t * g.extended(e));
  }
  ext.push_back((one - t) * f.extended(e));
  GroebnerBasis elim = reduced_groebner(ext, OrderSpec::elimination(e, 1));
  std::vector<Polynomial> quotients;
  for (std::size_t k = 0; k < elim.elements().size(); ++k) {
    if (elim.leading_monomials()[k][d] != 0) continue;
    quotients.push_back(elim.elements()[k].drop_variable(d).exact_div(f));
  }
  if (quotients.empty()) quotients.push_back(Polynomial(d, field));
  return reduced_groebner(quotients, OrderSpec::degrevlex(d));
}

RegularityCheck check_regular_element(const Polynomial& f, std::span<const Polynomial> gens) {
  RegularityCheck out;
  const std::size_t d = f.nvars();
  std::vector<Polynomial> base(gens.begin(), gens.end());
  if (base.empty()) base.push_back(Polynomial(d, f.field()));
  GroebnerBasis ideal = reduced_groebner(base, OrderSpec::degrevlex(d));
  if (normal_form(f, ideal).is_zero()) {
    out.in_ideal = true;
    return out;
  }
  out.regular = colon_ideal(base, f) == ideal;
  return out;
}

std::size_t phi_height(std::span<const Polynomial> gens, unsigned n) {
  auto forms = phi_basis(gens, n);
  if (forms.empty()) return 0;
  return *ideal_height(forms);
}

}  // namespace perfgen
