#include <doctest.h>

#include <sstream>

#include "perfgen/groebner.hpp"
#include "perfgen/harness.hpp"
#include "test_util.hpp"

using namespace perfgen;
using perfgen::testing::P;

namespace {

IdealSpec user_spec(std::vector<Polynomial> gens, std::optional<std::size_t> grade) {
  IdealSpec s;
  s.d = gens.front().nvars();
  s.generators = std::move(gens);
  s.expected_grade = grade;
  return s;
}

}  // namespace

TEST_CASE("binomials and bounds") {
  for (std::int64_t a = 1; a <= 30; ++a) {
    for (std::int64_t b = 1; b <= a; ++b) CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
    CHECK(binomial(a, 0) == 1);
    CHECK(binomial(a, a + 1) == 0);
  }
  CHECK(BoundSet::make(3, 3).e1_bound == 6);
  CHECK(BoundSet::make(3, 4).e1_bound == 10);
  CHECK(BoundSet::make(3, 5).e1_bound == 15);
  CHECK(BoundSet::make(3, 3).main_bound == 6);
  CHECK(BoundSet::make(3, 4).main_bound == 15);
  CHECK(BoundSet::make(3, 5).main_bound == 28);
  CHECK(BoundSet::make(2, 4).main_bound == 4);
  CHECK(BoundSet::make(3, 4).e2_hypothesis == 4);
  CHECK(BoundSet::make(3, 5).g3_small_n == 16u);
  CHECK_FALSE(BoundSet::make(4, 3).g3_small_n.has_value());
  CHECK(BoundSet::make(3, 0).power_inclusion_bound(3) == 6);
}

TEST_CASE("config parsing") {
  std::istringstream in("# defaults overridden\np = 101\ntrunc_window=3\nworkers = 2 # inline\n");
  const auto c = parse_config(in);
  CHECK(c.field.characteristic() == 101);
  CHECK(c.policy.window == 3);
  CHECK(c.policy.initial_offset == 2);
  CHECK(c.policy.max_offset == 8);
  CHECK(c.workers == 2);
  CHECK(c.retry_budget == 32);
  std::istringstream bad1("colour = red\n");
  CHECK_THROWS_AS(parse_config(bad1), Error);
  std::istringstream bad2("p = 100\n");
  CHECK_THROWS_AS(parse_config(bad2), Error);
  std::istringstream bad3("trunc_window = 1\n");
  CHECK_THROWS_AS(parse_config(bad3), Error);
  std::istringstream bad4("retry_budget = -1\n");
  CHECK_THROWS_AS(parse_config(bad4), Error);
}

TEST_CASE("record keys and order") {
  const auto rec = evaluate_instance(gen_pfaffian(3, 2, 1, 7), 3);
  std::vector<std::string> keys;
  const Json j = rec.to_json();
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"seed", "family", "params", "d", "p", "n", "homogeneous", "height",
                                         "expected_grade", "mu", "mu_stable", "T_used", "mu_n", "lambda_socle_n",
                                         "phi_height", "hyp_e2", "hyp_height_surrogate", "hyp_hb", "bounds",
                                         "verdict_e1", "verdict_e2", "verdict_main", "notes", "wall_ms"});
}

TEST_CASE("evaluate_instance examples") {
  const auto ex = evaluate_instance(example_ideal(3), 3);
  CHECK_FALSE(ex.hyp_height_surrogate);
  CHECK(ex.mu == 7);
  CHECK(ex.mu_n == 7);
  CHECK(ex.verdict_e1 == Verdict::not_applicable);
  CHECK(ex.verdict_e2 == Verdict::not_applicable);
  CHECK(ex.verdict_main == Verdict::not_applicable);

  const auto m2 = evaluate_instance(user_spec(maximal_ideal_power(3, PrimeField(), 2), 3), 3);
  CHECK(m2.mu_n == 6);
  CHECK(m2.bounds.e1_bound == 6);
  CHECK(m2.verdict_e1 == Verdict::holds);

  const auto pf = evaluate_instance(gen_pfaffian(3, 2, 1, 11), 3);
  CHECK(pf.mu == 5);
  CHECK(pf.verdict_e2 == Verdict::holds);
  CHECK(pf.hyp_hb);
  CHECK(pf.lambda_socle_n >= pf.mu_n);

  CHECK_THROWS_AS(evaluate_instance(user_spec({P("1 + x1", 2)}, std::nullopt), 3), Error);
}

TEST_CASE("unstable mu withholds verdicts") {
  HarnessConfig cfg;
  cfg.policy = {2, 2, 2};
  const auto rec = evaluate_instance(gen_pfaffian(4, 2, 1, 3), 3, cfg);
  CHECK_FALSE(rec.mu_stable);
  CHECK(rec.verdict_e2 == Verdict::not_applicable);
  CHECK(rec.verdict_main == Verdict::not_applicable);
  CHECK(rec.verdict_e1 != Verdict::not_applicable);
}

TEST_CASE("power inclusion hypothesis") {
  const auto m2 = user_spec(maximal_ideal_power(2, PrimeField(), 2), 2);
  const auto a = check_power_inclusion(m2, 3, 2);
  CHECK(a.hypothesis);
  CHECK(a.bound == 3);
  CHECK(a.mu == 3);
  CHECK(a.bound_ok);
  CHECK_FALSE(check_power_inclusion(m2, 2, 2).hypothesis);
  const auto lin = user_spec({P("x1", 2), P("x2", 2)}, 2);
  CHECK_FALSE(check_power_inclusion(lin, 1, 2).hypothesis);
}

TEST_CASE("power containment for forms of height d") {
  const auto r = check_power_containment({P("x1^2", 2), P("x2^2", 2)}, 2, 3);
  CHECK(r.in_ideal);
  CHECK(r.in_m_ideal);
  CHECK_THROWS_AS(check_power_containment({P("x1^2", 2), P("x1*x2", 2)}, 2, 3), Error);
  CHECK_THROWS_AS(check_power_containment({P("x1^2 + x2^3", 2), P("x2^2", 2)}, 2, 3), Error);
  Rng rng(3);
  for (int i = 0; i < 5; ++i) {
    std::vector<Polynomial> forms;
    for (int k = 0; k < 3; ++k) forms.push_back(random_form(3, 2, rng, PrimeField()));
    const auto c = check_power_containment(forms, 3, 3);
    CHECK(c.in_ideal);
    CHECK(c.in_m_ideal);
  }
}

TEST_CASE("linear change sending z to the last variable") {
  Rng rng(12);
  const PrimeField f;
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = rng.uniform(2, 5);
    Polynomial z = random_form(d, 1, rng, f);
    if (i % 3 == 0) z = Polynomial::variable(d, f, rng.uniform(0, d - 1));
    const auto m = change_sending_to_last(z);
    CHECK(invert(m, f).has_value());
    CHECK(apply_linear_change(z, m) == Polynomial::variable(d, f, d - 1));
  }
  CHECK_THROWS_AS(change_sending_to_last(P("x1^2", 2)), Error);
}

TEST_CASE("reduction parameter search") {
  const auto pf = gen_pfaffian(4, 2, 1, 5);
  const auto found = find_reduction_parameter(pf, 3, 20, 1);
  REQUIRE(found.found.has_value());
  const auto& z = found.found->z;
  const auto q = quotient_by_linear_form(pf.generators, z);
  CHECK(mu_mod_n(q, 3) >= 3);
  CHECK(phi_height(q, 3) >= 2);
  CHECK(is_regular_element(z, pf.generators));

  const auto ex = find_reduction_parameter(example_ideal(3), 3, 10, 1);
  CHECK_FALSE(ex.hypotheses_met);
  CHECK_FALSE(ex.found.has_value());

  const auto m2 = user_spec(maximal_ideal_power(3, PrimeField(), 2), 3);
  const auto r = find_reduction_parameter(m2, 3, 5, 2);
  REQUIRE(r.found.has_value());
  CHECK(r.found->quotient_mu_n == 3);
}

TEST_CASE("mu is preserved modulo a regular linear form") {
  const auto pf = gen_pfaffian(4, 2, 1, 5);
  const auto z = find_reduction_parameter(pf, 3, 20, 1).found->z;
  const auto a = quotient_mu_preserved(pf, z);
  CHECK(a.preserved);
  CHECK(a.mu == 5);

  const auto ci = user_spec({P("x1^2", 3), P("x2^2", 3)}, 2);
  const auto b = quotient_mu_preserved(ci, P("x3", 3));
  CHECK(b.preserved);
  CHECK(b.quotient_mu == 2);
  CHECK_THROWS_AS(quotient_mu_preserved(ci, P("x1^2", 3)), Error);
}

TEST_CASE("compliant parameters") {
  auto sq = user_spec({P("x1^2", 3), P("x2^2", 3), P("x3^2", 3)}, 3);
  const auto m = find_compliant_parameters(sq, 3, 1, 0);
  REQUIRE(m.has_value());
  CHECK(m->a == ScalarMatrix::identity(3).a);
  CHECK_FALSE(find_compliant_parameters(example_ideal(3), 3, 3, 0).has_value());
  const auto mp = gen_mprimary(3, 3, 4, 1);
  CHECK_THROWS_AS(find_compliant_parameters(mp, 3, 1, 0), Error);
  const auto pf = gen_pfaffian(4, 2, 1, 2);
  CHECK(find_compliant_parameters(pf, 3, 8, 3).has_value());
}

TEST_CASE("powers escape") {
  CHECK(powers_escape(gen_pfaffian(3, 2, 1, 1), 3, 50, 9));
  CHECK_FALSE(powers_escape(user_spec(maximal_ideal_power(2, PrimeField(), 2), 2), 3, 50, 9));
}

TEST_CASE("initial-form height is invariant under coordinate changes") {
  Rng rng(19);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto spec = gen_pfaffian(4, 2, 1, seed);
    const auto h = phi_height(spec.generators, 3);
    for (int i = 0; i < 20; ++i) {
      const auto m = random_invertible(4, rng, PrimeField());
      std::vector<Polynomial> gens;
      for (const auto& g : spec.generators) gens.push_back(apply_linear_change(g, m));
      CHECK(phi_height(gens, 3) == h);
    }
  }
}

TEST_CASE("batches are deterministic") {
  BatchConfig cfg;
  cfg.family = Family::pfaffian;
  cfg.d = 4;
  cfg.k = 2;
  cfg.count = 6;
  cfg.seed = 99;
  auto strip = [](const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
      auto j = Json::parse(line);
      j.erase("wall_ms");
      out += j.dump() + '\n';
    }
    return out;
  };
  std::ostringstream a, b;
  cfg.harness.workers = 1;
  run_batch(cfg, a);
  cfg.harness.workers = 3;
  const auto summary = run_batch(cfg, b);
  CHECK(strip(a.str()) == strip(b.str()));
  REQUIRE(summary.cells.size() == 1);
  CHECK(summary.cells.begin()->second.records == 6);

  std::istringstream again(a.str());
  const auto s2 = summarize_records(again);
  CHECK(s2.cells.begin()->second.records == 6);
  std::ostringstream table;
  s2.print(table);
  CHECK(table.str().find("pfaffian k=2 deg=1 n=3") != std::string::npos);
}

TEST_CASE("generation failures become records") {
  BatchConfig cfg;
  cfg.family = Family::complete_intersection;
  cfg.d = 2;
  cfg.g = 2;
  cfg.deg = 1;
  cfg.count = 2;
  cfg.harness.retry_budget = 0;
  std::ostringstream out;
  const auto s = run_batch(cfg, out);
  CHECK(s.cells.begin()->second.failures == 2);
  CHECK(out.str().find("generation failed") != std::string::npos);
}
