#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "polycode/errors.hpp"
#include "polycode/gf2matrix.hpp"
#include "polycode/ring.hpp"

using namespace polycode;

TEST_CASE("context invariants") {
  const RingContext c = new_context(parse("x^3+x+1"), 9);
  CHECK(c.m == 3);
  CHECK(c.T == 4);
  CHECK(c.e == 7);
  CHECK(c.U == parse("x^4+x^2+x+1"));
  CHECK(c.n == 27);
  CHECK(c.P * c.U == order_binomial(c));
  CHECK(c.U_star == reciprocal(c.U));
  CHECK(c.modulus == pow(c.P, 9));

  const RingContext d = new_context(parse("x^2+x+1"), 2);
  CHECK(d.U == parse("x+1"));
  CHECK(d.n == 4);
  CHECK(d.T == 1);
}

TEST_CASE("chain exponent") {
  CHECK(chain_exponent(2) == 1);
  CHECK(chain_exponent(3) == 2);
  CHECK(chain_exponent(4) == 2);
  CHECK(chain_exponent(5) == 3);
  CHECK(chain_exponent(16) == 4);
  CHECK(chain_exponent(31) == 5);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(new_context(parse("x^2+1"), 3), ValidationError);
  CHECK_THROWS_AS(new_context(parse("x+1"), 3), ValidationError);
  CHECK_THROWS_AS(new_context(parse("x^2+x+1"), 1), ValidationError);
}

TEST_CASE("classify and ideal generators") {
  const RingContext c = new_context(parse("x^2+x+1"), 4);
  CHECK(classify(c, Gf2Poly()).kind == ElementKind::Zero);
  CHECK(classify(c, Gf2Poly::one()).kind == ElementKind::Unit);
  CHECK(classify(c, parse("x")).kind == ElementKind::Unit);
  for (int j = 1; j < c.L; ++j) {
    const Classification k = classify(c, ideal_generator(c, j));
    CHECK(k.kind == ElementKind::Nilpotent);
    CHECK(k.index == j);
    const Classification k2 = classify(c, rem(ideal_generator(c, j) * parse("x^3+x+1"), c.modulus));
    CHECK(k2.index == j);
  }
  CHECK(ideal_generator(c, c.L).is_zero());
  CHECK(ideal_generator(c, 0) == Gf2Poly::one());
  CHECK_THROWS_AS(ideal_generator(c, 5), DomainError);
  CHECK_THROWS_AS(classify(c, Gf2Poly::monomial(8)), DomainError);
}

TEST_CASE("associate vector is x^n reduced") {
  const RingContext c = new_context(parse("x^3+x+1"), 3);
  CHECK(associate_vector(c) == rem(Gf2Poly::monomial(c.n), c.modulus));
}

TEST_CASE("ideal lattice is the chain <P^j>, exhaustively for mL <= 16") {
  for (const char* p : {"x^2+x+1", "x^3+x+1", "x^3+x^2+1", "x^4+x+1", "x^4+x^3+x^2+x+1", "x^5+x^2+1"}) {
    const int m = parse(p).degree();
    for (int L = 2; m * L <= 16; ++L) {
      const RingContext c = new_context(parse(p), L);
      const std::size_t n = static_cast<std::size_t>(c.n);
      std::set<std::vector<std::uint64_t>> chain;
      for (int j = 0; j <= L; ++j) {
        std::vector<Gf2Poly> rows;
        for (int i = 0; i < m * (L - j); ++i) rows.push_back(Gf2Poly::monomial(i) * ideal_generator(c, j));
        std::vector<std::uint64_t> key;
        const Gf2Matrix b = Gf2Matrix::from_rows(rows, n).rref();
        CHECK(static_cast<int>(b.rows()) == m * (L - j));
        for (const auto& r : b.row_polys()) key.push_back(r.low_word());
        chain.insert(key);
      }
      CHECK(chain.size() == static_cast<std::size_t>(L + 1));
      // Every principal ideal <a> (all ideals are principal here) lies in the chain.
      std::set<std::vector<std::uint64_t>> seen;
      for (std::uint64_t a = 0; a < (1ULL << n); ++a) {
        std::vector<Gf2Poly> rows;
        Gf2Poly g = Gf2Poly::from_mask(a);
        for (std::size_t i = 0; i < n; ++i) {
          rows.push_back(g);
          g = rem(g << 1, c.modulus);
        }
        std::vector<std::uint64_t> key;
        for (const auto& r : Gf2Matrix::from_rows(rows, n).rref().row_polys()) key.push_back(r.low_word());
        seen.insert(key);
        const Classification k = classify(c, Gf2Poly::from_mask(a));
        const int idx = k.kind == ElementKind::Zero ? L : k.kind == ElementKind::Unit ? 0 : k.index;
        CHECK(static_cast<int>(key.size()) == m * (L - idx));
      }
      CHECK(seen == chain);
    }
  }
}
