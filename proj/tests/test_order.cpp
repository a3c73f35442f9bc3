#include <doctest.h>

#include "perfgen/order.hpp"
#include "test_util.hpp"

using namespace perfgen;
using perfgen::testing::P;
using perfgen::testing::random_monomial;

TEST_CASE("block-sum order examples") {
  const auto o2 = OrderSpec::block_sum(3, 2);
  // Tuples (0,5,0,5) and (1,0,0,0).
  CHECK(compare_monomials(o2, Monomial(3, {5, 0, 0}), Monomial(3, {0, 0, 1})) < 0);
  const auto o3 = OrderSpec::block_sum(3, 3);
  // Tuples (4,4,0,0) and (5,0,2,3).
  CHECK(compare_monomials(o3, Monomial(3, {0, 0, 4}), Monomial(3, {3, 2, 0})) < 0);
  CHECK(leading_term(P("x3^4 + x1^3*x2^2", 3), o3).mono == Monomial(3, {0, 0, 4}));
}

TEST_CASE("one is least") {
  Rng rng(1);
  for (const auto& ord : {OrderSpec::block_sum(4, 2), OrderSpec::pure_lex(4), OrderSpec::degrevlex(4),
                          OrderSpec::elimination(4, 1)}) {
    for (int i = 0; i < 200; ++i) {
      const auto t = random_monomial(4, 3, rng);
      if (t.is_one()) continue;
      CHECK(ord.compare(Monomial(4), t) < 0);
    }
  }
  CHECK(leading_term(P("1 + x1", 2), OrderSpec::pure_lex(2)).mono == Monomial(2));
  CHECK(leading_term(P("x1^2 + x1^3", 2), OrderSpec::pure_lex(2)).mono == Monomial(2, {2, 0}));
  CHECK(leading_term(P("x1^2 + x1^3", 2), OrderSpec::degrevlex(2)).mono == Monomial(2, {3, 0}));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(OrderSpec::block_sum(3, 0), Error);
  CHECK_THROWS_AS(OrderSpec::block_sum(3, 4), Error);
  CHECK_THROWS_AS(OrderSpec::pure_lex(2).compare(Monomial(2), Monomial(3)), Error);
  CHECK_THROWS_AS(leading_term(Polynomial(2, PrimeField()), OrderSpec::pure_lex(2)), Error);
  CHECK_THROWS_AS(OrderSpec::parse("paper:g=x", 3), Error);
  CHECK_THROWS_AS(OrderSpec::parse("grevlex", 3), Error);
}

TEST_CASE("parse") {
  CHECK(OrderSpec::parse("paper:g=2", 3).kind() == OrderKind::block_sum);
  CHECK(OrderSpec::parse("paper:g=2", 3).g() == 2);
  CHECK(OrderSpec::parse("lex", 3).kind() == OrderKind::pure_lex);
  CHECK(OrderSpec::parse("degrevlex", 3).kind() == OrderKind::degrevlex);
  CHECK(OrderSpec::parse("paper:g=2", 3).to_string() == "paper:g=2");
}

TEST_CASE("admissibility, totality, transitivity on random triples") {
  Rng rng(2024);
  const std::size_t d = 5;
  for (const auto& ord : {OrderSpec::block_sum(d, 1), OrderSpec::block_sum(d, 3), OrderSpec::block_sum(d, d),
                          OrderSpec::pure_lex(d), OrderSpec::degrevlex(d), OrderSpec::elimination(d, 2)}) {
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
      const auto s = random_monomial(d, 3, rng);
      const auto a = random_monomial(d, 3, rng);
      const auto b = random_monomial(d, 3, rng);
      const auto ab = ord.compare(a, b);
      const auto ba = ord.compare(b, a);
      if ((ab == 0) != (a == b)) ++failures;
      if ((ab < 0) != (ba > 0)) ++failures;
      if ((ab < 0) != (ord.compare(s * a, s * b) < 0)) ++failures;
      if (ab < 0 && ord.compare(b, s) < 0 && !(ord.compare(a, s) < 0)) ++failures;
    }
    CHECK_MESSAGE(failures == 0, ord.to_string());
  }
}

TEST_CASE("leading terms are multiplicative under local orders") {
  Rng rng(8);
  for (const auto& ord : {OrderSpec::block_sum(4, 2), OrderSpec::pure_lex(4)}) {
    for (int i = 0; i < 300; ++i) {
      const auto f = perfgen::testing::random_poly(4, 0, 4, 4, rng);
      const auto g = perfgen::testing::random_poly(4, 0, 4, 4, rng);
      if (f.is_zero() || g.is_zero()) continue;
      CHECK(leading_term(f * g, ord).mono == leading_term(f, ord).mono * leading_term(g, ord).mono);
    }
  }
}

TEST_CASE("block-sum with g = d refines total degree") {
  Rng rng(4);
  const auto ord = OrderSpec::block_sum(4, 4);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_monomial(4, 4, rng);
    const auto b = random_monomial(4, 4, rng);
    if (a.degree() < b.degree()) CHECK(ord.compare(a, b) < 0);
  }
}
