#include <doctest.h>

#include <numeric>
#include <sstream>

#include "perfgen/poly_matrix.hpp"
#include "test_util.hpp"

using namespace perfgen;
using perfgen::testing::P;

TEST_CASE("field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.to_signed(6) == -1);
  CHECK_THROWS_AS(PrimeField(8), Error);
  CHECK_THROWS_AS(f.inv(0), Error);
  PrimeField big;
  CHECK(big.characteristic() == 32003);
  for (Coeff a = 1; a < 200; ++a) CHECK(big.mul(a, big.inv(a)) == 1);
}

TEST_CASE("parse_poly") {
  PrimeField f7(7);
  const Polynomial f = parse_poly("x1^2 + 2*x2", 2, f7);
  REQUIRE(f.size() == 2);
  CHECK(f.coeff(Monomial(2, {2, 0})) == 1);
  CHECK(f.coeff(Monomial(2, {0, 1})) == 2);
  CHECK(parse_poly("x1 - x1", 2, f7).is_zero());
  CHECK(parse_poly("7*x1", 2, f7).is_zero());
  CHECK(parse_poly(" - 3 * x1 * x2 ^ 2 + 5", 2, f7) == parse_poly("4*x1*x2^2 + 5", 2, f7));
  CHECK(parse_poly("x1*x1", 1, f7) == parse_poly("x1^2", 1, f7));

  CHECK_THROWS_AS(parse_poly("x3", 2, f7), ParseError);
  CHECK_THROWS_AS(parse_poly("x0", 2, f7), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 +", 2, f7), ParseError);
  CHECK_THROWS_AS(parse_poly("2*", 2, f7), ParseError);
  try {
    parse_poly("x1 + $", 2, f7);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("format_poly round trip") {
  Rng rng(11);
  PrimeField f;
  for (int i = 0; i < 200; ++i) {
    const auto p = perfgen::testing::random_poly(4, 0, 5, 6, rng, f);
    CHECK(parse_poly(format_poly(p), 4, f) == p);
  }
  CHECK(format_poly(Polynomial(3, f)) == "0");
}

TEST_CASE("ideal file") {
  std::istringstream in("# comment\nd=3 p=7\nx1^2 + x2  # trailing\n\nx3\n");
  const IdealFile file = parse_ideal(in);
  CHECK(file.nvars == 3);
  CHECK(file.field.characteristic() == 7);
  REQUIRE(file.generators.size() == 2);
  std::ostringstream out;
  write_ideal(out, file);
  std::istringstream again(out.str());
  CHECK(parse_ideal(again).generators == file.generators);
  std::istringstream bad("p=7\nx1\n");
  CHECK_THROWS_AS(parse_ideal(bad), Error);
}

TEST_CASE("homogeneous components and order") {
  const auto f = P("x1^2 + x2^3", 2);
  CHECK(homogeneous_component(f, 2) == P("x1^2", 2));
  CHECK(homogeneous_component(f, 5).is_zero());
  const auto g = P("x1*x2 + 3*x1^2", 2);
  CHECK(homogeneous_component(g, 2) == g);
  CHECK(order_of_vanishing(P("x1^3 + x2", 2)) == 1u);
  CHECK_FALSE(order_of_vanishing(P("0", 2)).has_value());
  CHECK(order_of_vanishing(P("5", 2)) == 0u);
}

TEST_CASE("ring axioms and component sums on random polynomials") {
  Rng rng(5);
  const PrimeField f;
  for (int i = 0; i < 100; ++i) {
    const auto a = perfgen::testing::random_poly(3, 0, 4, 5, rng);
    const auto b = perfgen::testing::random_poly(3, 0, 4, 5, rng);
    const auto c = perfgen::testing::random_poly(3, 0, 4, 5, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Polynomial(3, f));
    Polynomial sum(3, f);
    for (unsigned k = 0; k <= a.total_degree(); ++k) sum += homogeneous_component(a, k);
    CHECK(sum == a);
    if (!a.is_zero() && !b.is_zero()) {
      CHECK(*order_of_vanishing(a * b) == *order_of_vanishing(a) + *order_of_vanishing(b));
    }
  }
}

TEST_CASE("apply_linear_change") {
  const PrimeField f;
  ScalarMatrix id = ScalarMatrix::identity(2);
  CHECK(apply_linear_change(P("x1^2", 2), id) == P("x1^2", 2));
  ScalarMatrix swap{2, {0, 1, 1, 0}};
  CHECK(apply_linear_change(P("x1", 2), swap) == P("x2", 2));
  ScalarMatrix shear{2, {1, 1, 0, 1}};
  // (x1 + x2) * x2, expanded by hand.
  CHECK(apply_linear_change(P("x1*x2", 2), shear) == P("x1*x2 + x2^2", 2));
  ScalarMatrix singular{2, {1, 1, 1, 1}};
  CHECK_THROWS_AS(apply_linear_change(P("x1", 2), singular), Error);

  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto m = random_invertible(3, rng, f);
    const auto inv = invert(m, f);
    REQUIRE(inv.has_value());
    const auto p = perfgen::testing::random_poly(3, 1, 4, 5, rng);
    const auto q = apply_linear_change(p, m);
    CHECK(apply_linear_change(q, *inv) == p);
    for (unsigned k = 0; k <= 4; ++k) {
      CHECK(homogeneous_component(q, k) == apply_linear_change(homogeneous_component(p, k), m));
    }
  }
}

TEST_CASE("maximal minors") {
  const std::size_t d = 2;
  const auto M = PolyMatrix::from_rows({{P("x1", d), P("0", d)}, {P("x2", d), P("x1", d)}, {P("0", d), P("x2", d)}});
  const auto minors = maximal_minors(M);
  REQUIRE(minors.size() == 3);
  // Deleting row i leaves a 2x2 determinant computed by hand.
  CHECK(minors[0] == P("x2^2", d));
  CHECK(minors[1] == P("-x1*x2", d));
  CHECK(minors[2] == P("x1^2", d));

  const auto t1 = maximal_minors(PolyMatrix::from_rows({{P("x1", d)}, {P("x2", d)}}));
  CHECK(t1 == std::vector<Polynomial>{P("x2", d), P("-x1", d)});

  PolyMatrix zero(3, 2, d, PrimeField());
  for (const auto& m : maximal_minors(zero)) CHECK(m.is_zero());
  CHECK_THROWS_AS(maximal_minors(PolyMatrix(3, 1, d, PrimeField())), Error);
}

namespace {

// Pfaffian as a signed sum over perfect matchings.
Polynomial matching_pfaffian(const PolyMatrix& a, std::vector<std::size_t> idx) {
  if (idx.empty()) return Polynomial::constant(a.nvars(), a.field(), 1);
  const std::size_t first = idx.front();
  Polynomial sum(a.nvars(), a.field());
  for (std::size_t j = 1; j < idx.size(); ++j) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (k != j) rest.push_back(idx[k]);
    }
    Polynomial term = a(first, idx[j]) * matching_pfaffian(a, rest);
    sum = (j % 2 == 1) ? sum + term : sum - term;
  }
  return sum;
}

// Scalar determinant by Gaussian elimination mod p.
Coeff scalar_det(std::vector<std::vector<Coeff>> m, const PrimeField& f) {
  const std::size_t n = m.size();
  Coeff det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m[r][c] == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(m[r], m[c]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    const Coeff inv = f.inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Coeff factor = f.mul(m[i][c], inv);
      for (std::size_t j = c; j < n; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[c][j]));
    }
  }
  return det;
}

}  // namespace

TEST_CASE("sub-Pfaffians") {
  const std::size_t d = 3;
  const auto A = PolyMatrix::skew_from_upper(3, {P("x1", d), P("x2", d), P("x3", d)});
  CHECK(A.is_skew_symmetric());
  CHECK(sub_pfaffians(A) == std::vector<Polynomial>{P("x3", d), P("-x2", d), P("x1", d)});
  for (const auto& p : sub_pfaffians(PolyMatrix(3, 3, d, PrimeField()))) CHECK(p.is_zero());

  CHECK_THROWS_AS(sub_pfaffians(PolyMatrix(4, 4, d, PrimeField())), Error);
  auto not_skew = A;
  not_skew(0, 1) = P("x2", d);
  CHECK_THROWS_AS(sub_pfaffians(not_skew), Error);

  Rng rng(3);
  const PrimeField f;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polynomial> upper;
    for (int i = 0; i < 10; ++i) upper.push_back(random_form(5, 1, rng, f));
    const auto B = PolyMatrix::skew_from_upper(5, upper);
    const auto pf = sub_pfaffians(B);
    REQUIRE(pf.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < 5; ++k) {
        if (k != i) idx.push_back(k);
      }
      const Polynomial oracle = matching_pfaffian(B, idx);
      CHECK((pf[i] == oracle || pf[i] == -oracle));
      CHECK(pf[i].is_homogeneous());
      CHECK(pf[i].total_degree() == 2);
    }
  }
}

TEST_CASE("Pf^2 = det on random skew scalar matrices") {
  Rng rng(17);
  const PrimeField f;
  for (std::size_t size : {2u, 4u, 6u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Polynomial> upper;
      std::vector<std::vector<Coeff>> dense(size, std::vector<Coeff>(size, 0));
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
          const Coeff c = rng.coeff(f);
          upper.push_back(Polynomial::constant(1, f, c));
          dense[i][j] = c;
          dense[j][i] = f.neg(c);
        }
      }
      const Polynomial pf = pfaffian(PolyMatrix::skew_from_upper(size, upper));
      const Coeff pfc = pf.coeff(Monomial(1));
      CHECK(f.mul(pfc, pfc) == scalar_det(dense, f));
      CHECK(determinant(PolyMatrix::skew_from_upper(size, upper)).coeff(Monomial(1)) == scalar_det(dense, f));
    }
  }
}
