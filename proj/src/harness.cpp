#include "perfgen/harness.hpp"

#include <omp.h>

#include <bit>
#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "perfgen/groebner.hpp"
#include "perfgen/poly_io.hpp"

namespace perfgen {

BoundSet BoundSet::make(std::size_t g, unsigned n) {
  BoundSet b;
  b.g = g;
  b.n = n;
  const auto G = static_cast<std::int64_t>(g);
  const auto N = static_cast<std::int64_t>(n);
  b.e1_bound = binomial(G + N - 2, G - 1);
  b.e2_hypothesis = binomial(G + N - 3, G - 2);
  const std::int64_t alpha = g == 2 ? 1 : 0;
  b.main_bound = binomial((G - 1) * (N - 1) + alpha, G - 1);
  if (g == 3 && n >= 2 && n <= 5) {
    static constexpr std::uint64_t sharper[] = {3, 6, 10, 16};
    b.g3_small_n = sharper[n - 2];
  }
  return b;
}

std::uint64_t BoundSet::power_inclusion_bound(unsigned ell) const {
  const auto G = static_cast<std::int64_t>(g);
  return binomial(G + static_cast<std::int64_t>(ell) - 2, G - 1);
}

Json BoundSet::to_json() const {
  Json j;
  j["g"] = g;
  j["n"] = n;
  j["e1_bound"] = e1_bound;
  j["e2_hypothesis"] = e2_hypothesis;
  j["main_bound"] = main_bound;
  j["g3_small_n_bound"] = g3_small_n ? Json(*g3_small_n) : Json(nullptr);
  return j;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "n/a";
  }
  return "n/a";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "violated") return Verdict::violated;
  if (s == "n/a") return Verdict::not_applicable;
  throw Error("unknown verdict '" + s + "'");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

unsigned parse_unsigned(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty() || value[0] == '-') {
    throw Error("config: '" + key + "' needs a non-negative integer, got '" + value + "'");
  }
  return static_cast<unsigned>(v);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::vector<Polynomial> linear_variables(std::size_t nvars, const PrimeField& field, std::size_t from,
                                         std::size_t to) {
  std::vector<Polynomial> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(Polynomial::variable(nvars, field, i));
  return out;
}

std::vector<Polynomial> variables_in_mask(std::size_t nvars, const PrimeField& field, std::uint64_t mask) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (mask >> i & 1u) out.push_back(Polynomial::variable(nvars, field, i));
  }
  return out;
}

std::vector<Polynomial> changed(const std::vector<Polynomial>& gens, const ScalarMatrix& m) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(apply_linear_change(g, m));
  return out;
}

std::size_t height_or_zero(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return 0;
  return ideal_height(gens).value_or(gens.front().nvars());
}

}  // namespace

HarnessConfig parse_config(std::istream& in) {
  HarnessConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "p") {
      cfg.field = PrimeField(parse_unsigned(key, value));
    } else if (key == "trunc_initial_offset") {
      cfg.policy.initial_offset = parse_unsigned(key, value);
    } else if (key == "trunc_window") {
      cfg.policy.window = parse_unsigned(key, value);
    } else if (key == "trunc_max_offset") {
      cfg.policy.max_offset = parse_unsigned(key, value);
    } else if (key == "retry_budget") {
      cfg.retry_budget = parse_unsigned(key, value);
    } else if (key == "workers") {
      cfg.workers = static_cast<int>(parse_unsigned(key, value));
    } else {
      throw Error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (cfg.policy.window < 2) throw Error("config: trunc_window must be at least 2");
  if (cfg.policy.initial_offset < 2) throw Error("config: trunc_initial_offset must be at least 2");
  if (cfg.policy.max_offset < cfg.policy.initial_offset) {
    throw Error("config: trunc_max_offset below trunc_initial_offset");
  }
  return cfg;
}

HarnessConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "'");
  return parse_config(in);
}

Json ExperimentRecord::to_json() const {
  Json j;
  j["seed"] = seed;
  j["family"] = family;
  j["params"] = params;
  j["d"] = d;
  j["p"] = p;
  j["n"] = n;
  j["homogeneous"] = homogeneous;
  j["height"] = optional_json(height);
  j["expected_grade"] = optional_json(expected_grade);
  j["mu"] = mu;
  j["mu_stable"] = mu_stable;
  j["T_used"] = T_used;
  j["mu_n"] = mu_n;
  j["lambda_socle_n"] = lambda_socle_n;
  j["phi_height"] = phi_height;
  j["hyp_e2"] = hyp_e2;
  j["hyp_height_surrogate"] = hyp_height_surrogate;
  j["hyp_hb"] = hyp_hb;
  j["bounds"] = bounds.to_json();
  j["verdict_e1"] = verdict_name(verdict_e1);
  j["verdict_e2"] = verdict_name(verdict_e2);
  j["verdict_main"] = verdict_name(verdict_main);
  j["notes"] = notes;
  j["wall_ms"] = wall_ms;
  return j;
}

ExperimentRecord evaluate_instance(const IdealSpec& spec, unsigned n, const HarnessConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto& gens = spec.generators;
  const auto ord = ideal_order(gens);
  if (!ord) throw Error("evaluate_instance: zero ideal");
  if (*ord == 0) throw Error("evaluate_instance: generators must lie in the maximal ideal");
  if (n == 0) n = *ord + 1;
  if (n < 2) throw Error("evaluate_instance: n must be at least 2");

  ExperimentRecord rec;
  rec.seed = spec.seed;
  rec.family = family_name(spec.family);
  rec.params = spec.params;
  rec.d = spec.d;
  rec.p = spec.field.characteristic();
  rec.n = n;
  rec.homogeneous = spec.homogeneous;
  rec.expected_grade = spec.expected_grade;
  rec.height = local_height(spec);

  const auto mu = mu_stabilized(gens, config.policy);
  rec.mu = mu.mu;
  rec.mu_stable = mu.stable;
  rec.T_used = mu.level;
  rec.mu_n = mu_mod_n(gens, n);
  rec.lambda_socle_n = lambda_socle(gens, n);
  rec.phi_height = phi_height(gens, n);

  const std::size_t g = rec.height.value_or(spec.expected_grade.value_or(0));
  rec.bounds = BoundSet::make(g, n);
  rec.hyp_hb = *ord < n;
  rec.hyp_height_surrogate = rec.phi_height + 1 >= g;
  rec.hyp_e2 = rec.mu_n >= rec.bounds.e2_hypothesis;

  auto judge = [](bool ok) { return ok ? Verdict::holds : Verdict::violated; };
  if (rec.hyp_height_surrogate) rec.verdict_e1 = judge(rec.mu_n <= rec.bounds.e1_bound);
  if (mu.stable) {
    if (rec.hyp_height_surrogate && rec.hyp_e2) rec.verdict_e2 = judge(rec.mu <= rec.bounds.e1_bound);
    if (rec.hyp_height_surrogate && n > 2) rec.verdict_main = judge(rec.mu <= rec.bounds.main_bound);
  } else {
    rec.notes.push_back("mu not stable by T=" + std::to_string(mu.level) + "; e2 and main verdicts withheld");
  }

  if (!spec.homogeneous) {
    if (spec.quasi_homogeneous) {
      rec.notes.push_back("quasi-homogeneous generators");
    } else if (rec.height == std::optional<std::size_t>(spec.d)) {
      rec.notes.push_back("inhomogeneous generators; height from m-primary certificate");
    } else {
      rec.notes.push_back("inhomogeneous generators; global height used");
    }
  }
  if (!spec.certified) rec.notes.push_back("perfectness not certified");
  if (spec.expected_grade && rec.height != spec.expected_grade) {
    rec.notes.push_back("height differs from expected grade");
  }
  if (g > 3) rec.notes.push_back("height surrogate is heuristic for g > 3");
  if (rec.bounds.g3_small_n && mu.stable) {
    const bool ok = rec.mu <= *rec.bounds.g3_small_n;
    rec.notes.push_back("g3 sharper bound " + std::to_string(*rec.bounds.g3_small_n) +
                        (ok ? " holds" : " exceeded"));
  }
  rec.wall_ms = elapsed_ms(start);
  return rec;
}

PowerInclusionResult check_power_inclusion(const IdealSpec& spec, unsigned ell, std::size_t g,
                            const std::optional<ScalarMatrix>& change, const StabilizationPolicy& policy) {
  const std::size_t d = spec.d;
  if (g < 1 || g > d) throw Error("check_power_inclusion: need 1 <= g <= d");
  const auto gens = change ? changed(spec.generators, *change) : spec.generators;

  std::vector<Polynomial> rows = times_maximal_ideal(gens);
  for (auto& f : maximal_ideal_power(d, spec.field, ell + 1)) rows.push_back(std::move(f));
  for (auto& f : linear_variables(d, spec.field, g - 1, d)) rows.push_back(std::move(f));
  const MacaulayImage image = ideal_image(rows, ell + 2);

  std::vector<Polynomial> targets;
  if (g > 1) {
    for (const auto& m : monomials_of_degree(g - 1, ell)) {
      Monomial full(d);
      for (std::size_t i = 0; i + 1 < g; ++i) full.set(i, m[i]);
      targets.push_back(Polynomial::monomial(full, spec.field));
    }
  }

  PowerInclusionResult res;
  res.hypothesis = subspace_inclusion(targets, image);
  const auto mu = mu_stabilized(spec.generators, policy);
  res.mu = mu.mu;
  res.mu_stable = mu.stable;
  res.bound = BoundSet::make(g, 2).power_inclusion_bound(ell);
  res.bound_ok = res.mu <= res.bound;
  return res;
}

PowerContainmentResult check_power_containment(const std::vector<Polynomial>& forms, std::size_t d,
                                              unsigned n) {
  if (n < 2) throw Error("check_power_containment: n must be at least 2");
  if (forms.empty()) throw Error("check_power_containment: no forms");
  for (const auto& f : forms) {
    if (f.nvars() != d) throw Error("check_power_containment: variable count mismatch");
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != n - 1) {
      throw Error("check_power_containment: forms must be homogeneous of degree n-1");
    }
  }
  if (ideal_height(forms) != std::optional<std::size_t>(d)) {
    throw Error("check_power_containment: forms do not generate a height-d ideal");
  }
  const unsigned top = static_cast<unsigned>((n - 2) * d + 1);
  const PrimeField& field = forms.front().field();
  std::vector<Polynomial> targets;
  for (const auto& m : monomials_of_degree(d, top)) targets.push_back(Polynomial::monomial(m, field));

  PowerContainmentResult res;
  res.in_ideal = subspace_inclusion(targets, ideal_image(forms, top + 1));
  res.in_m_ideal = subspace_inclusion(targets, ideal_image(times_maximal_ideal(forms), top + 1));
  return res;
}

ScalarMatrix change_sending_to_last(const Polynomial& z) {
  const std::size_t d = z.nvars();
  const PrimeField& field = z.field();
  if (z.is_zero() || !z.is_homogeneous() || z.total_degree() != 1) {
    throw Error("change_sending_to_last: expected a nonzero linear form");
  }
  std::vector<Coeff> c(d);
  for (std::size_t i = 0; i < d; ++i) c[i] = z.coeff(Monomial::variable(d, i));
  std::size_t pivot = d - 1;
  while (c[pivot] == 0) --pivot;

  // sigma(x_i) = x_i off the pivot and the last slot; the last variable goes
  // to the pivot slot and the pivot is solved from sigma(z) = x_d.
  ScalarMatrix m{d, std::vector<Coeff>(d * d, 0)};
  for (std::size_t i = 0; i < d; ++i) {
    if (i != pivot && i != d - 1) m.at(i, i) = 1;
  }
  if (pivot != d - 1) m.at(d - 1, pivot) = 1;
  const Coeff inv = field.inv(c[pivot]);
  m.at(pivot, d - 1) = inv;
  for (std::size_t i = 0; i < d; ++i) {
    if (i == pivot) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (m.at(i, j) == 0) continue;
      m.at(pivot, j) = field.sub(m.at(pivot, j), field.mul(inv, field.mul(c[i], m.at(i, j))));
    }
  }
  return m;
}

std::vector<Polynomial> quotient_by_linear_form(const std::vector<Polynomial>& gens, const Polynomial& z) {
  const ScalarMatrix m = change_sending_to_last(z);
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial q = apply_linear_change(g, m).drop_variable(z.nvars() - 1);
    if (!q.is_zero()) out.push_back(std::move(q));
  }
  return out;
}

ReductionSearch find_reduction_parameter(const IdealSpec& spec, unsigned n, unsigned attempts,
                                         std::uint64_t seed) {
  if (spec.d < 2) throw Error("find_reduction_parameter: need at least two variables");
  ReductionSearch out;
  out.hypotheses_met = mu_mod_n(spec.generators, n) >= n && phi_height(spec.generators, n) >= 2;
  for (unsigned a = 0; a < attempts; ++a) {
    Rng rng(derive_seed(seed, a));
    Polynomial z = random_form(spec.d, 1, rng, spec.field);
    if (z.is_zero()) continue;
    auto quotient = quotient_by_linear_form(spec.generators, z);
    if (quotient.empty()) continue;
    const std::size_t qmu = mu_mod_n(quotient, n);
    if (qmu < n) continue;
    const std::size_t qphi = phi_height(quotient, n);
    if (qphi < 2) continue;
    if (spec.d > 3 && !is_regular_element(z, spec.generators)) continue;
    out.found = ReductionParameter{std::move(z), std::move(quotient), qmu, qphi, a + 1};
    break;
  }
  return out;
}

QuotientMu quotient_mu_preserved(const IdealSpec& spec, const Polynomial& z, const StabilizationPolicy& policy) {
  const auto check = check_regular_element(z, spec.generators);
  if (!check.regular) throw Error("quotient_mu_preserved: z is not regular on R/J");
  const auto quotient = quotient_by_linear_form(spec.generators, z);
  const auto a = mu_stabilized(spec.generators, policy);
  const auto b = mu_stabilized(quotient, policy);
  return {a.mu == b.mu, a.mu, b.mu, a.stable && b.stable};
}

bool compliant(const std::vector<Polynomial>& gens, unsigned n) {
  if (gens.empty()) return false;
  const std::size_t d = gens.front().nvars();
  const PrimeField& field = gens.front().field();
  const std::uint64_t full = std::uint64_t{1} << d;
  if (d > 3) {
    for (std::uint64_t mask = 0; mask < full; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != d - 3) continue;
      auto sum = gens;
      for (auto& v : variables_in_mask(d, field, mask)) sum.push_back(std::move(v));
      if (ideal_height(sum) != std::optional<std::size_t>(d)) return false;
    }
  }
  const auto phi = phi_basis(gens, n);
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    const auto ell = static_cast<std::size_t>(std::popcount(mask));
    if (ell + 2 > d) continue;
    auto sum = phi;
    for (auto& v : variables_in_mask(d, field, mask)) sum.push_back(std::move(v));
    if (height_or_zero(sum) < ell + 2) return false;
  }
  return true;
}

std::optional<ScalarMatrix> find_compliant_parameters(const IdealSpec& spec, unsigned n, unsigned attempts,
                                                      std::uint64_t seed) {
  if (!spec.homogeneous && !spec.quasi_homogeneous) {
    throw Error("find_compliant_parameters: needs homogeneous or quasi-homogeneous generators");
  }
  for (unsigned a = 0; a < attempts; ++a) {
    ScalarMatrix m = ScalarMatrix::identity(spec.d);
    if (a > 0) {
      Rng rng(derive_seed(seed, a));
      m = random_invertible(spec.d, rng, spec.field);
    }
    if (compliant(changed(spec.generators, m), n)) return m;
  }
  return std::nullopt;
}

bool powers_escape(const IdealSpec& spec, unsigned n, unsigned samples, std::uint64_t seed) {
  const MacaulayImage image = ideal_image(spec.generators, n);
  for (unsigned s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, s));
    const Polynomial r = random_form(spec.d, 1, rng, spec.field);
    if (!image.contains(r.pow(n - 1))) return true;
  }
  return false;
}

IdealSpec generate_instance(const BatchConfig& cfg, std::size_t index) {
  const std::uint64_t seed = derive_seed(cfg.seed, index);
  const GenerationOptions opts{cfg.harness.field, cfg.harness.retry_budget};
  switch (cfg.family) {
    case Family::hilbert_burch: return gen_hilbert_burch(cfg.d, cfg.t, cfg.deg, seed, opts);
    case Family::pfaffian: return gen_pfaffian(cfg.d, cfg.k, cfg.deg, seed, opts);
    case Family::m_primary:
      if (cfg.n < 2) throw Error("m-primary family needs --n >= 2");
      return gen_mprimary(cfg.d, cfg.n, cfg.gens ? cfg.gens : cfg.d + 1, seed, opts);
    case Family::complete_intersection: return gen_complete_intersection(cfg.d, cfg.g, cfg.deg, seed, opts);
    case Family::example:
      return example_ideal(cfg.N + static_cast<unsigned>(index), cfg.harness.field);
    case Family::example_g4:
      return example_ideal_g4(cfg.N + static_cast<unsigned>(index), cfg.harness.field);
    case Family::user: {
      if (cfg.ideal_path.empty()) throw Error("user family needs an ideal file");
      IdealFile file = read_ideal_file(cfg.ideal_path);
      IdealSpec spec;
      spec.d = file.nvars;
      spec.field = file.field;
      spec.generators = std::move(file.generators);
      spec.family = Family::user;
      spec.expected_grade.reset();
      spec.homogeneous = std::all_of(spec.generators.begin(), spec.generators.end(),
                                     [](const Polynomial& p) { return p.is_homogeneous(); });
      spec.quasi_homogeneous = spec.homogeneous;
      spec.certified = false;
      spec.params = "file=" + cfg.ideal_path;
      return spec;
    }
  }
  throw Error("unhandled family");
}

namespace {

std::string cell_key(const Json& r) {
  std::string key = r.at("family").get<std::string>();
  const auto& params = r.at("params").get_ref<const std::string&>();
  if (!params.empty()) key += ' ' + params;
  key += " n=";
  key += r.at("n").is_null() ? "?" : std::to_string(r.at("n").get<unsigned>());
  return key;
}

Json failure_record(const BatchConfig& cfg, std::size_t index, const std::string& why, double ms) {
  Json j;
  j["seed"] = derive_seed(cfg.seed, index);
  j["family"] = family_name(cfg.family);
  j["params"] = "";
  j["d"] = cfg.d;
  j["p"] = cfg.harness.field.characteristic();
  j["n"] = cfg.n ? Json(cfg.n) : Json(nullptr);
  for (const char* key : {"homogeneous", "height", "expected_grade", "mu", "mu_stable", "T_used", "mu_n",
                          "lambda_socle_n", "phi_height", "hyp_e2", "hyp_height_surrogate", "hyp_hb",
                          "bounds"}) {
    j[key] = nullptr;
  }
  for (const char* key : {"verdict_e1", "verdict_e2", "verdict_main"}) j[key] = "n/a";
  j["notes"] = Json::array({"generation failed: " + why});
  j["wall_ms"] = ms;
  return j;
}

}  // namespace

void BatchSummary::add(const Json& record) {
  CellTally& cell = cells[cell_key(record)];
  ++cell.records;
  for (const auto& note : record.at("notes")) {
    if (note.get_ref<const std::string&>().rfind("generation failed", 0) == 0) ++cell.failures;
  }
  for (const char* key : {"verdict_e1", "verdict_e2", "verdict_main"}) {
    ++cell.verdicts[key][parse_verdict(record.at(key).get<std::string>())];
  }
}

void BatchSummary::print(std::ostream& out) const {
  auto triple = [](const std::map<Verdict, std::size_t>& m) {
    auto get = [&](Verdict v) {
      auto it = m.find(v);
      return it == m.end() ? std::size_t{0} : it->second;
    };
    std::ostringstream s;
    s << get(Verdict::holds) << '/' << get(Verdict::violated) << '/' << get(Verdict::not_applicable);
    return s.str();
  };
  out << std::left << std::setw(40) << "cell" << std::setw(9) << "records" << std::setw(8) << "failed"
      << std::setw(14) << "e1 h/v/na" << std::setw(14) << "e2 h/v/na" << "main h/v/na\n";
  for (const auto& [key, cell] : cells) {
    auto verdicts = [&](const char* k) {
      auto it = cell.verdicts.find(k);
      return it == cell.verdicts.end() ? std::string("0/0/0") : triple(it->second);
    };
    out << std::left << std::setw(40) << key << std::setw(9) << cell.records << std::setw(8) << cell.failures
        << std::setw(14) << verdicts("verdict_e1") << std::setw(14) << verdicts("verdict_e2")
        << verdicts("verdict_main") << '\n';
  }
}

BatchSummary run_batch(const BatchConfig& cfg, std::ostream& out) {
  const auto count = static_cast<std::int64_t>(cfg.count);
  std::vector<Json> records(cfg.count);
  std::vector<std::string> errors(cfg.count);
  const int workers = cfg.harness.workers > 0 ? cfg.harness.workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const auto idx = static_cast<std::size_t>(i);
    try {
      const IdealSpec spec = generate_instance(cfg, idx);
      records[idx] = evaluate_instance(spec, cfg.n, cfg.harness).to_json();
    } catch (const GenerationError& e) {
      records[idx] = failure_record(cfg, idx, e.what(), elapsed_ms(start));
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }

  for (std::size_t i = 0; i < cfg.count; ++i) {
    if (!errors[i].empty()) throw Error("instance " + std::to_string(i) + ": " + errors[i]);
  }
  BatchSummary summary;
  for (const auto& r : records) {
    out << r.dump() << '\n';
    summary.add(r);
  }
  if (!out) throw Error("failed writing records");
  return summary;
}

BatchSummary summarize_records(std::istream& in) {
  BatchSummary summary;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      summary.add(Json::parse(line));
    } catch (const Json::exception& e) {
      throw Error("record line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return summary;
}

}  // namespace perfgen
