#include <doctest.h>

#include "perfgen/harness.hpp"
#include "perfgen/stdbasis.hpp"
#include "test_util.hpp"

using namespace perfgen;
using perfgen::testing::P;

namespace {

bool congruent(const Polynomial& a, const Polynomial& b, unsigned T) { return (a - b).truncated(T).is_zero(); }

Polynomial reassemble(const DivisionResult& r, std::span<const Polynomial> basis) {
  Polynomial sum = r.remainder;
  for (std::size_t i = 0; i < basis.size(); ++i) sum += r.quotients[i] * basis[i];
  return sum;
}

}  // namespace

TEST_CASE("division examples") {
  const auto lex = OrderSpec::pure_lex(2);
  const std::vector<Polynomial> b1{P("x2", 2)};
  const auto r1 = hironaka_divide(P("x1^2 + x2", 2), b1, lex, 6);
  CHECK(r1.quotients[0] == P("1", 2));
  CHECK(r1.remainder == P("x1^2", 2));

  const std::vector<Polynomial> b2{P("x1^2 + x2^5", 2)};
  const auto r2 = hironaka_divide(P("x1^2 + x2^5", 2), b2, lex, 8);
  CHECK(r2.quotients[0] == P("1", 2));
  CHECK(r2.remainder.is_zero());

  const auto r3 = hironaka_divide(P("x1^3", 2), b2, lex, 8);
  CHECK(r3.quotients[0] == P("x1", 2));
  CHECK(r3.remainder == P("-x1*x2^5", 2));
  CHECK(congruent(reassemble(r3, b2), P("x1^3", 2), 8));
  REQUIRE(r3.trace.size() == 1);
  CHECK(r3.trace[0].basis_index == 0);
  CHECK(format_trace(r3) == "step 1: cancel x1^3 with g1 multiplier x1\nq1 = x1\nr = -x1*x2^5\n");

  const std::vector<Polynomial> bad{P("0", 2)};
  CHECK_THROWS_AS(hironaka_divide(P("x1", 2), bad, lex, 4), Error);
  CHECK_THROWS_AS(hironaka_divide(P("x1", 2), b1, OrderSpec::degrevlex(2), 4), Error);
}

TEST_CASE("ties go to the lowest index") {
  const std::vector<Polynomial> basis{P("x1 + x2^2", 2), P("x1", 2)};
  const auto r = hironaka_divide(P("x1", 2), basis, OrderSpec::pure_lex(2), 5);
  REQUIRE_FALSE(r.trace.empty());
  CHECK(r.trace[0].basis_index == 0);
}

TEST_CASE("division identity and remainder condition, random") {
  Rng rng(101);
  for (int i = 0; i < 500; ++i) {
    const std::size_t d = rng.uniform(2, 4);
    const unsigned T = static_cast<unsigned>(rng.uniform(3, 7));
    const auto ord = i % 2 ? OrderSpec::pure_lex(d) : OrderSpec::block_sum(d, rng.uniform(1, d));
    std::vector<Polynomial> basis;
    const auto m = rng.uniform(1, 3);
    for (std::uint64_t k = 0; k < m; ++k) {
      Polynomial g = perfgen::testing::random_poly(d, 1, 4, 3, rng);
      if (g.is_zero()) g = Polynomial::variable(d, PrimeField(), 0);
      basis.push_back(g);
    }
    const auto f = perfgen::testing::random_poly(d, 0, T + 1, 6, rng);
    const auto r = hironaka_divide(f, basis, ord, T);
    CHECK(congruent(reassemble(r, basis), f, T));
    for (const auto& t : r.remainder.terms()) {
      CHECK(t.mono.degree() < T);
      for (const auto& g : basis) CHECK_FALSE(leading_term(g, ord).mono.divides(t.mono));
    }
  }
}

TEST_CASE("staircase examples") {
  const std::vector<Polynomial> ci{P("x1^2", 2), P("x2^3", 2)};
  auto s = truncated_staircase(ci, OrderSpec::pure_lex(2), 6);
  CHECK(s.generators == std::vector<Monomial>{Monomial(2, {2, 0}), Monomial(2, {0, 3})});
  CHECK(staircase_stable(ci, OrderSpec::pure_lex(2), 6));

  const std::vector<Polynomial> one{P("x3^4 + x1^3*x2^2", 3)};
  const auto s2 = truncated_staircase(one, OrderSpec::block_sum(3, 3), 7);
  CHECK(std::find(s2.generators.begin(), s2.generators.end(), Monomial(3, {0, 0, 4})) != s2.generators.end());

  const auto m2 = maximal_ideal_power(2, PrimeField(), 2);
  for (const auto& ord : {OrderSpec::pure_lex(2), OrderSpec::block_sum(2, 1), OrderSpec::block_sum(2, 2)}) {
    auto st = truncated_staircase(m2, ord, 5);
    std::sort(st.generators.begin(), st.generators.end());
    CHECK(st.generators.size() == 3);
    CHECK(staircase_stable(m2, ord, 5));
  }
  CHECK(staircase_stable(example_ideal(3).generators, OrderSpec::block_sum(7, 3), 6));
}

TEST_CASE("staircase invariants") {
  Rng rng(77);
  for (int i = 0; i < 40; ++i) {
    const std::size_t d = rng.uniform(2, 3);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(perfgen::testing::random_poly(d, 1, 3, 3, rng));
    const unsigned T = 6;
    const auto ord = i % 2 ? OrderSpec::pure_lex(d) : OrderSpec::block_sum(d, rng.uniform(1, d));
    const auto st = truncated_staircase(gens, ord, T);
    const auto img = ideal_image(gens, T);
    for (std::size_t a = 0; a < st.generators.size(); ++a) {
      CHECK(leading_term(st.witnesses[a], ord).mono == st.generators[a]);
      CHECK(img.contains(st.witnesses[a]));
      for (std::size_t b = 0; b < st.generators.size(); ++b) {
        if (a != b) CHECK_FALSE(st.generators[a].divides(st.generators[b]));
      }
    }
    // Elements of the ideal have leading terms inside the staircase ideal.
    for (int k = 0; k < 10; ++k) {
      Polynomial f(d, PrimeField());
      for (const auto& g : gens) f += perfgen::testing::random_poly(d, 0, 3, 2, rng) * g;
      f = f.truncated(T);
      if (f.is_zero()) continue;
      const auto lt = leading_term(f, ord).mono;
      CHECK(std::any_of(st.generators.begin(), st.generators.end(), [&](const Monomial& m) { return m.divides(lt); }));
    }
  }
}

TEST_CASE("superfluous filter") {
  const std::vector<Polynomial> a{P("x1", 2), P("x1 + x1*x2", 2)};
  CHECK(superfluous_filter(a, 5).mu == 1);
  const std::vector<Polynomial> b{P("x1 + x1*x2", 2), P("x1", 2)};
  CHECK(superfluous_filter(b, 5).mu == 1);
  const std::vector<Polynomial> c{P("x1^2", 2), P("x1*x2", 2), P("x2^2", 2), P("x1^3", 2)};
  const auto rc = superfluous_filter(c, 5);
  CHECK(rc.mu == 3);
  CHECK(rc.kept_indices == std::vector<std::size_t>{0, 1, 2});
  const auto ex = example_ideal(3);
  const auto st = truncated_staircase(ex.generators, OrderSpec::block_sum(7, 3), 6);
  CHECK(superfluous_filter(st.witnesses, 6).mu == 7);
  CHECK(superfluous_filter(ex.generators, 6).mu == 7);
}

TEST_CASE("superfluous filter agrees with stabilized mu") {
  Rng rng(5);
  int checked = 0;
  for (std::uint64_t s = 0; s < 30; ++s) {
    const IdealSpec spec = s % 3 == 0 ? gen_pfaffian(4, 2, 1, s)
                         : s % 3 == 1 ? gen_hilbert_burch(3, 2, 1, s)
                                      : gen_mprimary(2, 3, 3, s);
    auto gens = spec.generators;
    gens.push_back(gens.front() * perfgen::testing::random_poly(spec.d, 0, 2, 2, rng) + gens.back());
    const auto mu = mu_stabilized(gens);
    if (!mu.stable) continue;
    ++checked;
    CHECK(superfluous_filter(gens, mu.level + 1).mu == mu.mu);
  }
  CHECK(checked >= 25);
}

TEST_CASE("leading-term structure") {
  const std::vector<Polynomial> ci{P("x1^2", 3), P("x2^3", 3)};
  CHECK(check_leading_term_structure(ci, 2, 7).holds());
  const std::vector<Polynomial> bad{P("x1^2", 3), P("x3", 3)};
  CHECK_FALSE(check_leading_term_structure(bad, 2, 5).supported_in_first_g);

  int passed = 0, tried = 0;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const IdealSpec spec = gen_pfaffian(4, 2, 1, seed);
    const auto change = find_compliant_parameters(spec, 3, 16, seed);
    if (!change) continue;
    std::vector<Polynomial> gens;
    for (const auto& g : spec.generators) gens.push_back(apply_linear_change(g, *change));
    const auto ord = OrderSpec::block_sum(4, 3);
    if (!staircase_stable(gens, ord, 7)) continue;
    ++tried;
    if (check_leading_term_structure(gens, 3, 7).holds()) ++passed;
  }
  CHECK(tried > 0);
  CHECK(passed == tried);
}
