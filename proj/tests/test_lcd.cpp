#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "polycode/distance.hpp"
#include "polycode/duality.hpp"
#include "polycode/errors.hpp"
#include "polycode/lcd.hpp"

using namespace polycode;

namespace {

RingContext ctx(const char* p, int L) { return new_context(parse(p), L); }

bool has(const std::vector<std::string>& v, const char* t) { return std::find(v.begin(), v.end(), t) != v.end(); }

// Hull dimension by intersecting the two word sets directly.
int hull_by_sets(const PolycyclicCode& code) {
  std::set<std::vector<std::uint64_t>> c;
  enumerate_codewords(code, 28, [&](const Gf2Poly& w) { c.insert(w.words()); });
  const DualCode d = dual_code(code);
  std::size_t common = 0;
  gray_enumerate(d.spanning, 28, [&](const Gf2Poly& w) { common += c.count(w.words()); });
  int dim = 0;
  while ((std::size_t{1} << dim) < common) ++dim;
  return dim;
}

}  // namespace

TEST_CASE("example instances") {
  const PolycyclicCode c1(ctx("x^3+x+1", 8), 1);
  const LcdVerdict v = lcd_verdict(c1);
  CHECK(v.is_lcd);
  CHECK(v.hull_dim == 0);
  CHECK(has(v.methods, tag::kLcdOracle));
  CHECK(has(v.methods, tag::kLcdLowIndex));
  CHECK(is_lcd_low_index(c1));
  CHECK(is_lcd_low_index_sweep(c1));
  CHECK(c1.n() == 24);
  CHECK(c1.k() == 21);
  CHECK(min_distance_via_dual(c1, 28) == 2);
  CHECK(dual_min_distance_bruteforce(dual_code(c1), 28) == 13);

  const PolycyclicCode c2(ctx("x^3+x+1", 6), 1);
  CHECK(is_lcd_oracle(c2).is_lcd);
  CHECK(c2.k() == 15);
  CHECK(min_distance_bruteforce(c2, 28) == 2);
}

TEST_CASE("hull dimension matches explicit set intersection on small codes") {
  for (const char* p : {"x^2+x+1", "x^3+x+1", "x^3+x^2+1"})
    for (int L = 2; L <= 5; ++L)
      for (int j = 1; j < L; ++j) {
        const PolycyclicCode code(ctx(p, L), j);
        CHECK_MESSAGE(is_lcd_oracle(code).hull_dim == hull_by_sets(code), p << " L=" << L << " j=" << j);
      }
}

TEST_CASE("boundary codes") {
  const RingContext c = ctx("x^2+x+1", 4);
  CHECK(is_lcd_oracle(PolycyclicCode(c, 0)).is_lcd);
  CHECK(is_lcd_oracle(PolycyclicCode(c, 4)).is_lcd);
  const PolycyclicCode half(c, 2);
  CHECK(is_lcd_low_index(half) == is_lcd_oracle(half).is_lcd);
  CHECK(is_lcd_low_index_sweep(half) == is_lcd_oracle(half).is_lcd);
  CHECK_THROWS_AS(is_lcd_low_index(PolycyclicCode(c, 3)), RegimeError);
  CHECK_THROWS_AS(is_lcd_high_index(PolycyclicCode(c, 2)), RegimeError);
}

TEST_CASE("oracle, low-index and high-index criteria agree for n <= 36") {
  int low = 0, high = 0, non_lcd = 0;
  for (int m = 2; m <= 6; ++m)
    for (std::uint64_t mask = (1ULL << m) | 1; mask < (2ULL << m); mask += 2) {
      const Gf2Poly P = Gf2Poly::from_mask(mask);
      if (!is_irreducible(P)) continue;
      for (int L = 2; m * L <= 36; ++L) {
        const RingContext c = new_context(P, L);
        for (int j = 1; j < L; ++j) {
          const PolycyclicCode code(c, j);
          const LcdVerdict o = is_lcd_oracle(code);
          CHECK(o.is_lcd == (o.hull_dim == 0));
          if (!o.is_lcd) ++non_lcd;
          if (j <= (1 << (c.T - 1))) {
            ++low;
            CHECK_MESSAGE(is_lcd_low_index(code) == o.is_lcd, P.str() << " L=" << L << " j=" << j);
            if (m * j <= 12) CHECK(is_lcd_low_index_sweep(code) == o.is_lcd);
          } else {
            ++high;
            const Decision d = is_lcd_high_index(code);
            if (d != Decision::Inconclusive)
              CHECK_MESSAGE((d == Decision::Lcd) == o.is_lcd, P.str() << " L=" << L << " j=" << j);
          }
          const LcdVerdict all = lcd_verdict(code);
          CHECK(all.is_lcd == o.is_lcd);
          CHECK(all.hull_dim == o.hull_dim);
        }
      }
    }
  CHECK(low > 0);
  CHECK(high > 0);
  CHECK(non_lcd > 0);
}

TEST_CASE("verdict does not depend on generator row order") {
  std::mt19937_64 rng(5);
  for (const char* p : {"x^2+x+1", "x^3+x+1", "x^4+x+1"})
    for (int L = 3; L <= 6; ++L)
      for (int j = 1; j < L; ++j) {
        const PolycyclicCode code(ctx(p, L), j);
        std::vector<Gf2Poly> rows = code.generator_matrix().row_polys();
        std::shuffle(rows.begin(), rows.end(), rng);
        const Gf2Matrix g = Gf2Matrix::from_rows(rows, static_cast<std::size_t>(code.n()));
        const int hull = code.k() - static_cast<int>((g * g.transpose()).rank());
        CHECK(hull == is_lcd_oracle(code).hull_dim);
      }
}

TEST_CASE("method selection") {
  const PolycyclicCode c(ctx("x^3+x+1", 8), 1);
  const LcdVerdict o = lcd_verdict(c, LcdMethods::Oracle);
  CHECK(o.methods == std::vector<std::string>{tag::kLcdOracle});
  const LcdVerdict t = lcd_verdict(c, LcdMethods::Theorem);
  CHECK_FALSE(has(t.methods, tag::kLcdOracle));
  CHECK(t.is_lcd);
  const LcdVerdict f = lcd_verdict(PolycyclicCode(ctx("x^2+x+1", 8), 1));
  CHECK(has(f.methods, tag::kLcdFamily));
}

TEST_CASE("families") {
  for (int v = 0; v <= 1; ++v)
    for (int T = 1; T <= 3; ++T) {
      if (v == 1 && T == 3) continue;
      for (int r = 0; r <= T - 1; ++r) CHECK(lcd_family_power_of_two(v, T, r).is_lcd);
      for (int r = 2; r <= T; ++r) CHECK(lcd_family_complement(v, T, r).is_lcd);
    }
  CHECK(lcd_family_three(0, 3).is_lcd);
  CHECK_THROWS_AS(lcd_family_three(0, 2), DomainError);
  CHECK_THROWS_AS(lcd_family_complement(0, 3, 1), DomainError);
  CHECK(in_lcd_family(3, 1));
  CHECK(in_lcd_family(3, 3));
  CHECK(in_lcd_family(3, 6));
  CHECK_FALSE(in_lcd_family(3, 5));
}

TEST_CASE("family parameters") {
  const CodeSummary s = family_parameters(0, 2, 0, FamilyKind::FirstIdeal);
  CHECK(s.n == 8);
  CHECK(s.k == 6);
  CHECK(s.d.lower == 2);
  REQUIRE(s.d_dual);
  CHECK(s.d_dual->lower == 5);
  CHECK(s.lcd == true);
  const CodeSummary c = family_parameters(0, 2, 2, FamilyKind::Complement);
  CHECK(c.d.lower == 5);
  CHECK(c.j == 3);
  for (int v = 0; v <= 1; ++v)
    for (int T = 1; T <= 3; ++T)
      for (int r = 0; r <= T - 1; ++r) {
        const CodeSummary p = family_parameters(v, T, r, FamilyKind::PowerOfTwo);
        int a = 1;
        for (int i = 0; i < v; ++i) a *= 3;
        CHECK(p.n == a * (1 << (T + 1)));
        CHECK(p.k == a * (1 << (r + 1)) * ((1 << (T - r)) - 1));
      }
}

TEST_CASE("conjecture scan") {
  const ConjectureReport r = conjecture_scan(0, 3, 64, 2);
  CHECK(r.rows.size() == 11);
  CHECK(r.counterexamples == 0);
  const ConjectureReport r1 = conjecture_scan(0, 3, 64, 1);
  CHECK(conjecture_csv(r) == conjecture_csv(r1));
  CHECK(conjecture_csv(r).rfind("v,T,j,n,k,is_lcd,hull_dim\n", 0) == 0);
  const ConjectureReport v1 = conjecture_scan(1, 2, 48);
  int v1_rows = 0;
  for (const auto& row : v1.rows)
    if (row.v == 1) {
      ++v1_rows;
      CHECK(row.is_lcd);
    }
  CHECK(v1_rows == 4);
  CHECK_THROWS_AS(conjecture_scan(0, 0, 10), ValidationError);
}
