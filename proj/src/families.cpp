#include "perfgen/families.hpp"

#include <algorithm>

#include "perfgen/groebner.hpp"

namespace perfgen {

std::string family_name(Family f) {
  switch (f) {
    case Family::hilbert_burch: return "hilbert-burch";
    case Family::pfaffian: return "pfaffian";
    case Family::m_primary: return "m-primary";
    case Family::complete_intersection: return "complete-intersection";
    case Family::example: return "example";
    case Family::example_g4: return "example-g4";
    case Family::user: return "user";
  }
  return "user";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::hilbert_burch, Family::pfaffian, Family::m_primary,
                   Family::complete_intersection, Family::example,
                   Family::example_g4, Family::user}) {
    if (family_name(f) == name) return f;
  }
  throw Error("unknown family '" + name + "'");
}

Polynomial random_form(std::size_t nvars, unsigned degree, Rng& rng, const PrimeField& field) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(nvars, degree)) terms.push_back({m, rng.coeff(field)});
  return Polynomial::from_terms(nvars, field, std::move(terms));
}

ScalarMatrix random_invertible(std::size_t d, Rng& rng, const PrimeField& field) {
  while (true) {
    ScalarMatrix m{d, std::vector<Coeff>(d * d)};
    for (auto& v : m.a) v = rng.coeff(field);
    if (invert(m, field)) return m;
  }
}

namespace {

std::string join_params(std::initializer_list<std::pair<const char*, std::size_t>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ' ';
    out += std::string(k) + '=' + std::to_string(v);
  }
  return out;
}

bool any_zero(const std::vector<Polynomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); });
}

// Lowest-degree homogeneous components of the generators.
std::vector<Polynomial> initial_forms(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (auto o = g.order()) out.push_back(homogeneous_component(g, *o));
  }
  return out;
}

}  // namespace

IdealSpec hilbert_burch_from_matrix(const PolyMatrix& m) {
  IdealSpec spec;
  spec.d = m.nvars();
  spec.field = m.field();
  spec.generators = maximal_minors(m);
  spec.family = Family::hilbert_burch;
  spec.expected_grade = 2;
  spec.homogeneous = std::all_of(spec.generators.begin(), spec.generators.end(),
                                 [](const Polynomial& p) { return p.is_homogeneous(); });
  spec.quasi_homogeneous = spec.homogeneous;
  spec.params = join_params({{"t", m.cols()}});
  return spec;
}

IdealSpec gen_hilbert_burch(std::size_t d, std::size_t t, unsigned entry_degree, std::uint64_t seed,
                            const GenerationOptions& opts) {
  if (d < 2 || t < 1 || entry_degree < 1) throw Error("gen_hilbert_burch: need d>=2, t>=1, deg>=1");
  for (unsigned attempt = 0; attempt < opts.retry_budget; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    PolyMatrix m(t + 1, t, d, opts.field);
    for (std::size_t i = 0; i <= t; ++i) {
      for (std::size_t j = 0; j < t; ++j) m(i, j) = random_form(d, entry_degree, rng, opts.field);
    }
    IdealSpec spec = hilbert_burch_from_matrix(m);
    if (any_zero(spec.generators)) continue;
    auto h = ideal_height(spec.generators);
    if (!h || *h != 2) continue;
    spec.seed = seed;
    spec.attempts = attempt + 1;
    spec.params = join_params({{"t", t}, {"deg", entry_degree}});
    return spec;
  }
  throw GenerationError("hilbert-burch: retry budget exhausted");
}

IdealSpec pfaffian_from_matrix(const PolyMatrix& a) {
  IdealSpec spec;
  spec.d = a.nvars();
  spec.field = a.field();
  spec.generators = sub_pfaffians(a);
  spec.family = Family::pfaffian;
  spec.expected_grade = 3;
  spec.homogeneous = std::all_of(spec.generators.begin(), spec.generators.end(),
                                 [](const Polynomial& p) { return p.is_homogeneous(); });
  spec.quasi_homogeneous = spec.homogeneous;
  spec.params = join_params({{"k", (a.rows() - 1) / 2}});
  return spec;
}

IdealSpec gen_pfaffian(std::size_t d, std::size_t k, unsigned entry_degree, std::uint64_t seed,
                       const GenerationOptions& opts) {
  if (d < 3 || k < 1 || entry_degree < 1) throw Error("gen_pfaffian: need d>=3, k>=1, deg>=1");
  const std::size_t size = 2 * k + 1;
  for (unsigned attempt = 0; attempt < opts.retry_budget; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    std::vector<Polynomial> upper;
    for (std::size_t i = 0; i < size * (size - 1) / 2; ++i) {
      upper.push_back(random_form(d, entry_degree, rng, opts.field));
    }
    IdealSpec spec = pfaffian_from_matrix(PolyMatrix::skew_from_upper(size, upper));
    if (any_zero(spec.generators)) continue;
    auto h = ideal_height(spec.generators);
    if (!h || *h != 3) continue;
    spec.seed = seed;
    spec.attempts = attempt + 1;
    spec.params = join_params({{"k", k}, {"deg", entry_degree}});
    return spec;
  }
  throw GenerationError("pfaffian: retry budget exhausted");
}

IdealSpec gen_mprimary(std::size_t d, unsigned n, std::size_t count, std::uint64_t seed,
                       const GenerationOptions& opts) {
  if (count < d) throw Error("gen_mprimary: count must be at least d");
  if (n < 2) throw Error("gen_mprimary: n must be at least 2");
  for (unsigned attempt = 0; attempt < opts.retry_budget; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    IdealSpec spec;
    spec.d = d;
    spec.field = opts.field;
    spec.family = Family::m_primary;
    spec.expected_grade = d;
    spec.homogeneous = false;
    spec.quasi_homogeneous = false;
    for (std::size_t i = 0; i < count; ++i) {
      spec.generators.push_back(random_form(d, n - 1, rng, opts.field) +
                                random_form(d, n, rng, opts.field));
    }
    if (any_zero(spec.generators)) continue;
    if (local_height(spec) != std::optional<std::size_t>(d)) continue;
    spec.seed = seed;
    spec.attempts = attempt + 1;
    spec.params = join_params({{"n", n}, {"gens", count}});
    return spec;
  }
  throw GenerationError("m-primary: retry budget exhausted");
}

IdealSpec gen_complete_intersection(std::size_t d, std::size_t g, unsigned degree,
                                    std::uint64_t seed, const GenerationOptions& opts) {
  if (g < 1 || g > d || degree < 1) throw Error("gen_complete_intersection: need 1<=g<=d, deg>=1");
  for (unsigned attempt = 0; attempt < opts.retry_budget; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    IdealSpec spec;
    spec.d = d;
    spec.field = opts.field;
    spec.family = Family::complete_intersection;
    spec.expected_grade = g;
    for (std::size_t i = 0; i < g; ++i) spec.generators.push_back(random_form(d, degree, rng, opts.field));
    if (any_zero(spec.generators)) continue;
    auto h = ideal_height(spec.generators);
    if (!h || *h != g) continue;
    spec.seed = seed;
    spec.attempts = attempt + 1;
    spec.params = join_params({{"g", g}, {"deg", degree}});
    return spec;
  }
  throw GenerationError("complete-intersection: retry budget exhausted");
}

IdealSpec example_ideal(unsigned N, const PrimeField& field) {
  if (N < 3) throw Error("example_ideal requires N >= 3");
  const std::size_t d = N + 4;
  auto var = [&](std::size_t i, unsigned e = 1) { return Monomial::variable(d, i, e); };
  auto mono = [&](const Monomial& m) { return Polynomial::monomial(m, field); };
  IdealSpec spec;
  spec.d = d;
  spec.field = field;
  spec.family = Family::example;
  spec.expected_grade = 3;
  spec.homogeneous = false;
  spec.quasi_homogeneous = true;
  spec.params = "N=" + std::to_string(N);
  spec.generators.push_back(mono(var(0, 2)));
  spec.generators.push_back(mono(var(0) * var(1)));
  spec.generators.push_back(mono(var(0) * var(2)));
  for (unsigned j = 0; j <= N; ++j) {
    Monomial tail = var(1, N - j) * var(2, j);
    spec.generators.push_back(mono(var(0) * var(3 + j)) + mono(tail));
  }
  return spec;
}

IdealSpec example_ideal_g4(unsigned N, const PrimeField& field) {
  IdealSpec base = example_ideal(N, field);
  IdealSpec spec = base;
  spec.d = base.d + 1;
  spec.generators.clear();
  for (const auto& g : base.generators) spec.generators.push_back(g.extended(spec.d));
  spec.generators.push_back(Polynomial::monomial(Monomial::variable(spec.d, base.d, 2), field));
  spec.family = Family::example_g4;
  spec.expected_grade = 4;
  spec.certified = false;
  return spec;
}

std::optional<std::size_t> local_height(const IdealSpec& spec) {
  if (spec.homogeneous || spec.quasi_homogeneous) return ideal_height(spec.generators);
  auto forms = initial_forms(spec.generators);
  if (!forms.empty()) {
    auto h = ideal_height(forms);
    if (h && *h == spec.d) return spec.d;
  }
  const unsigned ord = ideal_order(spec.generators).value_or(0);
  if (is_m_primary(spec.generators, ord + 3)) return spec.d;
  return ideal_height(spec.generators);
}

bool ExampleReport::regular_sequence_ok() const {
  return regular.size() == N + 1 &&
         std::all_of(regular.begin(), regular.end(), [](bool b) { return b; });
}

ExampleReport verify_example(unsigned N, const PrimeField& field, const StabilizationPolicy& policy) {
  IdealSpec spec = example_ideal(N, field);
  ExampleReport rep;
  rep.N = N;
  rep.height = ideal_height(spec.generators);
  rep.mu_mod_3 = mu_mod_n(spec.generators, 3);
  rep.mu = mu_stabilized(spec.generators, policy);
  std::vector<Polynomial> current = spec.generators;
  for (unsigned i = 0; i <= N; ++i) {
    Polynomial y = Polynomial::variable(spec.d, field, 3 + i);
    rep.regular.push_back(is_regular_element(y, current));
    current.push_back(y);
  }
  rep.phi_height = phi_height(spec.generators, 3);
  return rep;
}

}  // namespace perfgen
