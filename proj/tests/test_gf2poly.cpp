#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "polycode/errors.hpp"
#include "polycode/gf2poly.hpp"

using namespace polycode;

namespace {

Gf2Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::vector<std::uint64_t> w(static_cast<std::size_t>(max_degree / 64 + 1));
  for (auto& x : w) x = rng();
  return truncate(Gf2Poly(w), static_cast<std::size_t>(max_degree) + 1);
}

}  // namespace

TEST_CASE("parse reads monomial sums, binary literals and decimal masks") {
  const Gf2Poly p = parse("x^4+x+1");
  CHECK(p.exponents() == std::vector<std::size_t>{0, 1, 4});
  CHECK(parse("0b10011") == p);
  CHECK(parse("19") == p);
  CHECK(parse(" x ^ 4 + x + 1 ") == p);
  CHECK(parse("x+x").is_zero());
  CHECK(parse("1") == Gf2Poly::one());
  CHECK(parse("x^4+x+1").str() == "x^4+x+1");
  CHECK(Gf2Poly().str() == "0");
}

TEST_CASE("parse reports the offset of a malformed token") {
  try {
    parse("x^4+y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse("x^^2"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("0b102"), ParseError);
  CHECK_THROWS_AS(parse("x^4+"), ParseError);
}

TEST_CASE("degree and weight conventions") {
  CHECK(Gf2Poly().degree() == -1);
  CHECK(weight(Gf2Poly()) == 0);
  CHECK(Gf2Poly::monomial(200).degree() == 200);
  CHECK(weight(parse("x^6+x^3+1")) == 3);
}

TEST_CASE("ring arithmetic examples") {
  CHECK(mul(parse("x^2+x+1"), parse("x+1")) == parse("x^3+1"));
  CHECK(pow(parse("x^2+x+1"), 3) == parse("x^6+x^5+x^3+x+1"));
  const auto [q, r] = div_rem(parse("x^4+x+1"), parse("x^2+x+1"));
  CHECK(q == parse("x^2+x"));
  CHECK(r == Gf2Poly::one());
  CHECK_THROWS_AS(div_rem(parse("x"), Gf2Poly()), DomainError);
  CHECK_THROWS_AS(pow_mod(parse("x"), 3, Gf2Poly()), DomainError);
  CHECK(gcd(parse("x^2+1"), parse("x^3+1")) == parse("x+1"));
  CHECK(pow_mod(parse("x"), 15, parse("x^4+x+1")) == Gf2Poly::one());
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(parse("x^4+x+1")) == parse("x^4+x^3+1"));
  CHECK(reciprocal(parse("x^2+x+1")) == parse("x^2+x+1"));
  CHECK(reciprocal(Gf2Poly::one()) == Gf2Poly::one());
  CHECK(reciprocal(Gf2Poly()).is_zero());
}

TEST_CASE("order") {
  CHECK(order(parse("x^3+x+1")) == 7);
  CHECK(order(parse("x^2+x+1")) == 3);
  CHECK(order(parse("x^6+x^3+1")) == 9);
  CHECK(order(parse("x^4+x^3+x^2+x+1")) == 5);
  CHECK_THROWS_AS(order(parse("x^2+x")), DomainError);
  CHECK_THROWS_AS(order(Gf2Poly()), DomainError);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(parse("x^4+x+1")));
  CHECK_FALSE(is_irreducible(parse("x^2+1")));
  CHECK(is_irreducible(parse("x^18+x^9+1")));
  CHECK_FALSE(is_irreducible(parse("x^4+x^2+1")));
  CHECK(is_irreducible(parse("x+1")));
}

TEST_CASE("irreducible counts by degree match the necklace formula") {
  const int expected[] = {0, 2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
  for (int m = 1; m <= 10; ++m) {
    int count = 0;
    for (std::uint64_t mask = 1ULL << m; mask < (2ULL << m); ++mask)
      if (is_irreducible(Gf2Poly::from_mask(mask))) ++count;
    CHECK_MESSAGE(count == expected[m], "degree " << m);
  }
}

TEST_CASE("order of an irreducible polynomial divides 2^m - 1") {
  for (int m = 2; m <= 12; ++m)
    for (std::uint64_t mask = (1ULL << m) | 1; mask < (2ULL << m); mask += 2) {
      const Gf2Poly f = Gf2Poly::from_mask(mask);
      if (!is_irreducible(f)) continue;
      CHECK(((1ULL << m) - 1) % order(f) == 0);
    }
}

TEST_CASE("coefficient weight") {
  CHECK(coeff_weight(parse("x^6+x^3+1")) == 3);
  CHECK(coeff_weight(parse("x^5")) == 0);
  CHECK(coeff_weight(Gf2Poly()) == 0);
  CHECK(coeff_weight(pow(parse("x^2+x+1"), 4)) == 4);
  CHECK(pow(parse("x^2+x+1"), 4) == parse("x^8+x^4+1"));
  CHECK(coeff_weight(parse("x^9+x^7+x")) == 2);
}

TEST_CASE("random algebraic identities up to degree 256") {
  std::mt19937_64 rng(20261015);
  for (int it = 0; it < 300; ++it) {
    const Gf2Poly a = random_poly(rng, 256), b = random_poly(rng, 256), c = random_poly(rng, 256);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(square(a) == a * a);
    if (!b.is_zero()) {
      const auto [q, r] = div_rem(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
    Gf2Poly a1 = a;
    a1.set_coeff(0, true);
    CHECK(reciprocal(reciprocal(a1)) == a1);
    Gf2Poly b1 = b;
    b1.set_coeff(0, true);
    CHECK(reciprocal(a1 * b1) == reciprocal(a1) * reciprocal(b1));
    CHECK(mul_trunc(a, b, 100) == truncate(a * b, 100));
  }
}

TEST_CASE("Frobenius: pow(a, 2^k) moves each set bit i to 2^k i") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const Gf2Poly a = random_poly(rng, 120);
    for (int k = 0; k <= 4; ++k) {
      std::vector<std::size_t> e;
      for (auto i : a.exponents()) e.push_back(i << k);
      CHECK(pow(a, 1ULL << k) == Gf2Poly::from_exponents(e));
      CHECK(pow(a, 1ULL << k) == substitute_power(a, std::size_t{1} << k));
    }
  }
}

TEST_CASE("hex round trip") {
  const Gf2Poly p = parse("x^4+x+1");
  CHECK(to_hex(p, 5) == "13");
  CHECK(from_hex("13") == p);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    const Gf2Poly a = random_poly(rng, 200);
    CHECK(from_hex(to_hex(a, 201)) == a);
  }
}
