#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "perfgen/families.hpp"

namespace perfgen {

using Json = nlohmann::ordered_json;

struct BoundSet {
  std::size_t g = 0;
  unsigned n = 0;
  std::uint64_t e1_bound = 0;
  std::uint64_t e2_hypothesis = 0;
  std::uint64_t main_bound = 0;
  /// Sharper g = 3 bounds for n = 2..5; empty elsewhere.
  std::optional<std::uint64_t> g3_small_n;

  static BoundSet make(std::size_t g, unsigned n);
  std::uint64_t power_inclusion_bound(unsigned ell) const;
  Json to_json() const;
};

enum class Verdict { holds, violated, not_applicable };
std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& s);

struct HarnessConfig {
  PrimeField field;
  StabilizationPolicy policy;
  unsigned retry_budget = 32;
  /// 0 lets OpenMP decide.
  int workers = 0;
};

/// key = value lines; '#' comments. Unknown keys are rejected.
HarnessConfig parse_config(std::istream& in);
HarnessConfig load_config(const std::string& path);

struct ExperimentRecord {
  std::uint64_t seed = 0;
  std::string family;
  std::string params;
  std::size_t d = 0;
  Coeff p = 0;
  unsigned n = 0;
  bool homogeneous = true;
  std::optional<std::size_t> height;
  std::optional<std::size_t> expected_grade;
  std::size_t mu = 0;
  bool mu_stable = false;
  unsigned T_used = 0;
  std::size_t mu_n = 0;
  std::size_t lambda_socle_n = 0;
  std::size_t phi_height = 0;
  bool hyp_e2 = false;
  bool hyp_height_surrogate = false;
  bool hyp_hb = false;
  BoundSet bounds;
  Verdict verdict_e1 = Verdict::not_applicable;
  Verdict verdict_e2 = Verdict::not_applicable;
  Verdict verdict_main = Verdict::not_applicable;
  std::vector<std::string> notes;
  double wall_ms = 0;

  Json to_json() const;
};

/// `n == 0` selects ord(J) + 1.
ExperimentRecord evaluate_instance(const IdealSpec& spec, unsigned n, const HarnessConfig& config = {});

struct PowerInclusionResult {
  bool hypothesis = false;
  bool bound_ok = false;
  std::size_t mu = 0;
  bool mu_stable = false;
  std::uint64_t bound = 0;
};

/// Tests (x_1..x_{g-1})^l inside mJ + m^{l+1} + (x_g..x_d) after applying
/// `change` to the generators, and compares mu(J) with C(g+l-2, g-1).
PowerInclusionResult check_power_inclusion(const IdealSpec& spec, unsigned ell, std::size_t g,
                            const std::optional<ScalarMatrix>& change = std::nullopt,
                            const StabilizationPolicy& policy = {});

struct PowerContainmentResult {
  bool in_ideal = false;
  /// Only meaningful when d > 1 and n > 2.
  bool in_m_ideal = false;
};

/// Membership of every monomial of degree (n-2)d+1 in I and in mI, for I
/// generated by forms of degree n-1. Throws unless the forms have height d.
PowerContainmentResult check_power_containment(const std::vector<Polynomial>& forms, std::size_t d,
                                              unsigned n);

/// Invertible change sending the linear form z to x_d.
ScalarMatrix change_sending_to_last(const Polynomial& z);
/// Generators of J + (z) / (z) in d-1 variables.
std::vector<Polynomial> quotient_by_linear_form(const std::vector<Polynomial>& gens, const Polynomial& z);

struct ReductionParameter {
  Polynomial z;
  std::vector<Polynomial> quotient;
  std::size_t quotient_mu_n = 0;
  std::size_t quotient_phi_height = 0;
  unsigned attempts = 0;
};

struct ReductionSearch {
  /// mu_n(J) >= n and J not in yR + m^n for any linear y.
  bool hypotheses_met = false;
  std::optional<ReductionParameter> found;
};

ReductionSearch find_reduction_parameter(const IdealSpec& spec, unsigned n, unsigned attempts,
                                         std::uint64_t seed);

struct QuotientMu {
  bool preserved = false;
  std::size_t mu = 0;
  std::size_t quotient_mu = 0;
  bool stable = false;
};

/// Throws if z is not regular on R/J.
QuotientMu quotient_mu_preserved(const IdealSpec& spec, const Polynomial& z,
                                 const StabilizationPolicy& policy = {});

/// Tries the identity, then random invertible changes. The returned matrix
/// is the substitution applied to the generators.
std::optional<ScalarMatrix> find_compliant_parameters(const IdealSpec& spec, unsigned n,
                                                      unsigned attempts, std::uint64_t seed);
bool compliant(const std::vector<Polynomial>& gens, unsigned n);

/// Samples random linear forms r and reports whether some r^{n-1} lies
/// outside J + m^n. A heuristic stand-in for the statement over all of m.
bool powers_escape(const IdealSpec& spec, unsigned n, unsigned samples, std::uint64_t seed);

struct BatchConfig {
  Family family = Family::pfaffian;
  std::size_t d = 3;
  /// 0 selects ord(J) + 1 (m-primary uses it as the family degree too).
  unsigned n = 0;
  std::size_t t = 2;
  std::size_t k = 1;
  /// Complete intersections only.
  std::size_t g = 2;
  unsigned deg = 1;
  std::size_t gens = 0;
  unsigned N = 3;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  /// Ideal file for the user family.
  std::string ideal_path;
  HarnessConfig harness;
};

IdealSpec generate_instance(const BatchConfig& cfg, std::size_t index);

struct CellTally {
  std::size_t records = 0;
  std::size_t failures = 0;
  std::map<std::string, std::map<Verdict, std::size_t>> verdicts;
};

struct BatchSummary {
  std::map<std::string, CellTally> cells;
  void add(const Json& record);
  void print(std::ostream& out) const;
};

/// Evaluates cfg.count instances in parallel, writes one JSON line per
/// instance to `out` in instance order.
BatchSummary run_batch(const BatchConfig& cfg, std::ostream& out);
BatchSummary summarize_records(std::istream& in);

}  // namespace perfgen
