#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polycode/codes.hpp"
#include "polycode/duality.hpp"
#include "polycode/errors.hpp"
#include "polycode/trinomial.hpp"

using namespace polycode;

TEST_CASE("trinomial contexts") {
  CHECK(trinomial(0) == parse("x^2+x+1"));
  CHECK(trinomial(1) == parse("x^6+x^3+1"));
  CHECK(trinomial(2) == parse("x^18+x^9+1"));
  for (int v = 0; v <= 2; ++v) {
    const TrinomialContext t = trinomial_context(v, 4);
    std::uint64_t e = 3;
    for (int i = 0; i < v; ++i) e *= 3;
    CHECK(t.ring.e == e);
    CHECK(t.ring.U == t.ring.U_star);
    CHECK(reciprocal(t.ring.P) == t.ring.P);
    CHECK(t.T == 2);
  }
}

TEST_CASE("closed-form expansions equal generic powers") {
  CHECK(expansion_pow_2r_minus_1(1, 2) == parse("x^6+x^5+x^3+x+1"));
  for (std::size_t n : {1, 3, 9})
    for (int r = 2; r <= 6; ++r) {
      const Gf2Poly base = Gf2Poly::from_exponents({0, n, 2 * n});
      CHECK(expansion_pow_2r_minus_1(n, r) == pow(base, (1ULL << r) - 1));
    }
  CHECK(expansion_pow_2r_minus_1(3, 2) == substitute_power(expansion_pow_2r_minus_1(1, 2), 3));
}

TEST_CASE("weight formulas") {
  CHECK(weight_formulas(0, 2).plain == 5);
  CHECK(weight_formulas(0, 2).shifted == 6);
  CHECK(weight_formulas(0, 3).plain == 11);
  CHECK(weight_formulas(0, 3).shifted == 10);
  CHECK(weight_formulas(1, 2).plain == 5);
  for (int v = 0; v <= 2; ++v)
    for (int r = 2; r <= 10; ++r) {
      const WeightPair w = weight_formulas(v, r);
      const Gf2Poly p = pow(trinomial(v), (1ULL << r) - 1);
      std::size_t a = 1;
      for (int i = 0; i < v; ++i) a *= 3;
      CHECK(w.plain == static_cast<int>(weight(p)));
      CHECK(w.shifted == static_cast<int>(weight((Gf2Poly::one() + Gf2Poly::monomial(a)) * p)));
    }
}

TEST_CASE("family profile example") {
  const auto p = family_distance_profile(0, 3, 8);
  const int lo[] = {1, 2, 2, 2, 2, 4, 5, 10, 16};
  const int hi[] = {1, 2, 2, 2, 2, 5, 5, 10, 16};
  for (int j = 0; j <= 8; ++j) {
    CHECK(p[j].lower == lo[j]);
    CHECK(p[j].upper == hi[j]);
  }
  CHECK(family_complement_distance(2) == 5);
  CHECK(family_complement_distance(3) == 10);
}

TEST_CASE("family profile agrees with the generic path and the oracle") {
  for (int v = 0; v <= 1; ++v)
    for (int L = 2; L <= (v == 0 ? 16 : 5); ++L) {
      const TrinomialContext t = trinomial_context(v, L);
      const auto fam = family_distance_profile(v, t.T, L);
      const auto gen = full_distance_profile(t.ring);
      REQUIRE(fam.size() == gen.size());
      for (int j = 0; j <= L; ++j) {
        if (fam[j].exact() && gen[j].exact()) CHECK_MESSAGE(fam[j].lower == gen[j].lower, "v=" << v << " L=" << L << " j=" << j);
        CHECK(std::max(fam[j].lower, gen[j].lower) <= std::min(fam[j].upper, gen[j].upper));
        if (j == 0 || j == L || t.ring.n > 30) continue;
        const PolycyclicCode code(t.ring, j);
        const int d = code.k() <= t.ring.n - code.k() ? min_distance_bruteforce(code, 28) : min_distance_via_dual(code, 28);
        CHECK_MESSAGE(fam[j].lower <= d, "v=" << v << " L=" << L << " j=" << j);
        CHECK_MESSAGE(d <= fam[j].upper, "v=" << v << " L=" << L << " j=" << j);
      }
    }
}

TEST_CASE("dual distance of C_1") {
  CHECK(family_dual_d1(0, 1) == 2);
  CHECK(family_dual_d1(0, 2) == 5);
  CHECK(family_dual_d1(0, 3) == 10);
  CHECK(dual_min_distance_bruteforce(dual_code(PolycyclicCode(trinomial_context(0, 4).ring, 1)), 28) == 5);
  for (int T = 1; T <= 2; ++T) {
    const TrinomialContext t = trinomial_context(1, 1 << T);
    CHECK(t.ring.n == 6 << T);
    const DualCode d = dual_code(PolycyclicCode(t.ring, 1));
    CHECK(d.dim == 6);
    CHECK(dual_min_distance_bruteforce(d, 28) == family_dual_d1(1, T));
  }
}

TEST_CASE("family codes are reversible") {
  for (int v = 0; v <= 1; ++v)
    for (int L = 2; L <= 8; ++L) {
      const RingContext c = trinomial_context(v, L).ring;
      for (int j = 0; j <= L; ++j) CHECK(is_reversible(PolycyclicCode(c, j)));
    }
}

TEST_CASE("irreducible trinomials are exactly the powers of three") {
  for (std::size_t n = 1; n <= 81; ++n)
    CHECK_MESSAGE(is_irreducible_trinomial(n) == is_irreducible(Gf2Poly::from_exponents({0, n, 2 * n})), "n=" << n);
}
