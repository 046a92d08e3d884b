#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace kcell;
using kctest::datum_of;

TEST_SUITE("laurent") {
  TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 40; ++it) {
      Laurent p = kctest::random_laurent(rng, 2, 5, 3, 4);
      Laurent q = kctest::random_laurent(rng, 2, 5, 3, 4);
      Laurent r = kctest::random_laurent(rng, 2, 5, 3, 4);
      CHECK(p + q == q + p);
      CHECK((p + q) + r == p + (q + r));
      CHECK(p * q == q * p);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p - p == Laurent::zero(2));
      CHECK(p * Laurent::one(2) == p);
      CHECK(p + (-p) == Laurent::zero(2));
      CHECK(p.scaled(3) == p + p + p);
      CHECK(p.mul_monomial(Weight{1, -2}, 5) == p * Laurent::monomial(Weight{1, -2}, 5));
    }
  }

  TEST_CASE("zero coefficients are never stored") {
    Laurent p(2);
    p.add_term(Weight{1, 0}, 4);
    p.add_term(Weight{1, 0}, -4);
    CHECK(p.is_zero());
    CHECK(p.num_terms() == 0);
    p.add_term(Weight{0, 1}, 2);
    CHECK(p.coeff(Weight{0, 1}) == 2);
    CHECK(p.coeff(Weight{5, 5}) == 0);
    CHECK(p.leading_exponent() == (Weight{0, 1}));
  }

  TEST_CASE("string round trips") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 40; ++it) {
      Laurent p = kctest::random_laurent(rng, 3, 6, 4, 9);
      CHECK(Laurent::from_string(p.to_string(), 3) == p);
    }
    CHECK(Laurent::zero(2).to_string() == "0");
    CHECK(Laurent::from_string("0", 2) == Laurent::zero(2));
    CHECK(Laurent::from_string("3", 2) == Laurent::monomial(Weight(2), 3));
    CHECK(Laurent::from_string("-e[1,0] + 2*e[0,-1]", 2).num_terms() == 2);
    CHECK(Laurent::from_string("e[1,0] - e[1,0]", 2).is_zero());
    CHECK_THROWS_AS(Laurent::from_string("e[1]", 2), ParseError);     // wrong rank
    CHECK_THROWS_AS(Laurent::from_string("e[1,", 2), ParseError);     // truncated
    CHECK_THROWS_AS(Laurent::from_string("2*f[1,0]", 2), ParseError); // bad symbol
    CHECK_THROWS_AS(Laurent::from_string("", 2), ParseError);
  }

  TEST_CASE("exact division recovers a factor") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 40; ++it) {
      Laurent p = kctest::random_nonzero_laurent(rng, 2, 5, 3, 4);
      Laurent q = kctest::random_nonzero_laurent(rng, 2, 5, 3, 4);
      CHECK(exact_div(p * q, q) == p);
      CHECK(exact_div(p * q, p) == q);
      CHECK(exact_div(Laurent::zero(2), q) == Laurent::zero(2));
    }
  }

  TEST_CASE("non-divisible pairs are detected") {
    // rank 1: (e^w + 1) does not divide (e^w - 1)
    Laurent num(1), den(1);
    num.add_term(Weight{1}, 1);
    num.add_term(Weight{0}, -1);
    den.add_term(Weight{1}, 1);
    den.add_term(Weight{0}, 1);
    CHECK_THROWS_AS(exact_div(num, den), NotDivisible);
    // coefficient obstruction: 3 does not divide 2
    CHECK_THROWS_AS(
        exact_div(Laurent::monomial(Weight{0}, 2), Laurent::monomial(Weight{0}, 3)),
        NotDivisible);
    Laurent three_terms(1);
    three_terms.add_term(Weight{2}, 1);
    three_terms.add_term(Weight{1}, 1);
    three_terms.add_term(Weight{0}, 1);
    CHECK_THROWS_AS(exact_div(three_terms, den), NotDivisible);
  }

  TEST_CASE("division by monomials matches shifting") {
    Laurent p = Laurent::from_string("2*e[1,1] + 4*e[-1,0]", 2);
    Laurent m = Laurent::monomial(Weight{-1, 0}, 2);
    CHECK(exact_div(p, m) == Laurent::from_string("1*e[2,1] + 2*e[0,0]", 2));
  }

  TEST_CASE("weyl action is a ring action") {
    RootDatum d = datum_of("B2");
    WeylGroup g(d);
    std::mt19937_64 rng(31);
    for (int it = 0; it < 20; ++it) {
      Laurent p = kctest::random_laurent(rng, 2, 4, 3, 3);
      Laurent q = kctest::random_laurent(rng, 2, 4, 3, 3);
      std::size_t a = rng() % g.size(), b = rng() % g.size();
      CHECK(p.weyl_act(g, g.identity()) == p);
      CHECK((p * q).weyl_act(g, a) == p.weyl_act(g, a) * q.weyl_act(g, a));
      CHECK((p + q).weyl_act(g, a) == p.weyl_act(g, a) + q.weyl_act(g, a));
      // act(ab) = act-by-a after act-by-b on exponents: e -> a(b(e))
      CHECK(p.weyl_act(g, g.mult(a, b)) == p.weyl_act(g, b).weyl_act(g, a));
    }
  }

  TEST_CASE("coset decomposition of exponents") {
    RootDatum d = datum_of("A2", "root");
    const OmegaGroup& om = d.omega();
    Laurent p = Laurent::from_string("1*e[1,0] + 2*e[0,1] + 3*e[1,1] + 4*e[0,0]", 2);
    auto parts = p.omega_components(om);
    CHECK(parts.size() == 3);  // [1,0] and [0,1] lie in different cosets; [1,1] with [0,0]
    Laurent sum(2);
    for (auto& [deg, part] : parts) {
      OmegaElement check_deg;
      CHECK(part.omega_homogeneous(om, &check_deg));
      CHECK(check_deg == deg);
      sum += part;
    }
    CHECK(sum == p);
    CHECK(!p.omega_homogeneous(om));
    Laurent hom = Laurent::from_string("1*e[1,1] + 7*e[0,0] + 1*e[2,-1]", 2);
    OmegaElement deg;
    CHECK(hom.omega_homogeneous(om, &deg));
    CHECK(deg == om.zero());
  }

  TEST_CASE("invariance wrapper verifies before wrapping") {
    RootDatum d = datum_of("A1");
    WeylGroup g(d);
    Laurent inv = Laurent::from_string("1*e[1] + 1*e[-1]", 1);
    InvariantPoly ok = make_invariant(g, inv);
    CHECK(ok.verified);
    CHECK(ok.poly == inv);
    Laurent bad = Laurent::from_string("1*e[1]", 1);
    CHECK_THROWS_AS(make_invariant(g, bad), InternalError);
  }
}
