#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polycode/codes.hpp"
#include "polycode/distance.hpp"
#include "polycode/duality.hpp"
#include "polycode/errors.hpp"
#include "polycode/fixtures.hpp"
#include "polycode/lcd.hpp"
#include "polycode/trinomial.hpp"

using namespace polycode;

namespace {

// Wall-clock limits in seconds.
constexpr double kTable1Limit = 5;
constexpr double kEx2FormulaLimit = 5;
constexpr double kExamples134Limit = 30;
constexpr double kSweepLimit = 600;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass_ = false;
    if (failures_++ < 5) detail_ << (detail_.tellp() ? "; " : "") << what;
  }
  void fixture(const std::string& name) {
    const FixtureReport r = run_fixture(name);
    expect(!r.checks.empty(), name + " has no checks");
    for (const auto& c : r.checks) expect(c.pass(), name + " " + c.item + ": expected " + c.expected + ", got " + c.actual);
  }
  Outcome outcome() const { return {pass_, detail_.str()}; }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::ostringstream detail_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Gf2Poly> irreducibles(int m) {
  std::vector<Gf2Poly> out;
  for (std::uint64_t mask = (1ULL << m) | 1; mask < (2ULL << m); mask += 2)
    if (is_irreducible(Gf2Poly::from_mask(mask))) out.push_back(Gf2Poly::from_mask(mask));
  return out;
}

int oracle_distance(const PolycyclicCode& code) {
  return code.k() <= code.n() - code.k() ? min_distance_bruteforce(code, 28) : min_distance_via_dual(code, 28);
}

int oracle_dual_distance(const PolycyclicCode& code) {
  const int kd = code.n() - code.k();
  return kd <= code.k() ? dual_min_distance_bruteforce(dual_code(code), 28) : dual_min_distance_via_primal(code, 28);
}

Outcome table1() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  c.fixture("table1");
  const double s = seconds_since(t0);
  c.expect(s < kTable1Limit, "took " + std::to_string(s) + " s");
  return c.outcome();
}

Outcome example2() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto p = full_distance_profile(new_context(parse("x^4+x+1"), 16));
  const double s = seconds_since(t0);
  const int lo[] = {1, 2, 2, 2, 2, 3, 3, 3, 3, 6, 6, 6, 8, 16, 16, 33, 64};
  const int hi[] = {1, 2, 2, 2, 2, 3, 3, 3, 3, 8, 8, 8, 8, 16, 16, 33, 64};
  for (int j = 0; j <= 16; ++j)
    c.expect(p[j].lower == lo[j] && p[j].upper == hi[j], "formula path d" + std::to_string(j));
  c.expect(s < kEx2FormulaLimit, "formula path took " + std::to_string(s) + " s");
  c.fixture("ex2");
  return c.outcome();
}

Outcome examples134() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* f : {"ex1", "ex3", "ex4"}) c.fixture(f);
  const double s = seconds_since(t0);
  c.expect(s < kExamples134Limit, "took " + std::to_string(s) + " s");
  return c.outcome();
}

Outcome weight_tables() {
  Check c;
  c.fixture("table3");
  c.fixture("table4");
  const Gf2Poly P = parse("x^4+x+1");
  c.expect(weight(pow(P, 3)) == 9 && weight(pow(P, 7)) == 17 && weight(pow(P, 15)) == 33, "powers of x^4+x+1");
  const Gf2Poly Q = parse("x^6+x^5+x^3+x^2+1");
  c.expect(weight(parse("x^32+x^16+1") * pow(Q, 16)) == 3, "(1+x^16+x^32)P^16");
  return c.outcome();
}

Outcome example5() {
  Check c;
  c.fixture("ex5");
  const RingContext ctx = new_context(parse("x^3+x+1"), 9);
  const int want[] = {0, 1, 3, 7, 15};
  for (int s = 1; s <= 4; ++s) {
    const auto r = dual_distance_at_power_index(ctx, s);
    const int j = 1 << (4 - s);
    c.expect(r && r->value == want[s], "reduced set s=" + std::to_string(s));
    const DualCode d = dual_code(PolycyclicCode(ctx, j));
    if (d.dim <= 24) c.expect(dual_min_distance_bruteforce(d, 24) == want[s], "dual oracle j=" + std::to_string(j));
  }
  return c.outcome();
}

Outcome example6() {
  Check c;
  c.fixture("ex6");
  const PolycyclicCode code(new_context(parse("x^3+x+1"), 8), 1);
  const LcdVerdict v = lcd_verdict(code, LcdMethods::All);
  c.expect(v.is_lcd, "verdict");
  c.expect(is_lcd_oracle(code).is_lcd && is_lcd_low_index(code) && is_lcd_low_index_sweep(code), "three methods");
  c.expect(code.n() == 24 && code.k() == 21 && oracle_distance(code) == 2, "[24,21,2]");
  c.expect(dual_code(code).dim == 3 && oracle_dual_distance(code) == 13, "[24,3,13]");
  return c.outcome();
}

Outcome oracle_sweep(int& codes) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  for (int m = 2; m <= 5; ++m)
    for (const Gf2Poly& P : irreducibles(m))
      for (int L = 2; m * L <= 30; ++L) {
        const RingContext ctx = new_context(P, L);
        const auto prof = full_distance_profile(ctx);
        for (int j = 1; j < L; ++j) {
          const int d = oracle_distance(PolycyclicCode(ctx, j));
          const std::string at = P.str() + " L=" + std::to_string(L) + " j=" + std::to_string(j);
          c.expect(prof[j].lower <= d && d <= prof[j].upper, at + ": oracle " + std::to_string(d) + " outside bounds");
          ++codes;
        }
      }
  const double s = seconds_since(t0);
  c.expect(s < kSweepLimit, "took " + std::to_string(s) + " s");
  return c.outcome();
}

Outcome trinomial_family() {
  Check c;
  for (std::size_t n : {1, 3, 9})
    for (int r = 2; r <= 6; ++r)
      c.expect(expansion_pow_2r_minus_1(n, r) == pow(Gf2Poly::from_exponents({0, n, 2 * n}), (1ULL << r) - 1),
               "expansion n=" + std::to_string(n) + " r=" + std::to_string(r));
  for (int v = 0; v <= 2; ++v)
    for (int r = 2; r <= 10; ++r) {
      const WeightPair w = weight_formulas(v, r);
      const Gf2Poly p = pow(trinomial(v), (1ULL << r) - 1);
      const std::size_t a = trinomial(v).exponents()[1];
      c.expect(w.plain == static_cast<int>(weight(p)) &&
                   w.shifted == static_cast<int>(weight((Gf2Poly::one() + Gf2Poly::monomial(a)) * p)),
               "weights v=" + std::to_string(v) + " r=" + std::to_string(r));
    }
  for (int v = 0; v <= 1; ++v)
    for (int T = 1; T <= (v == 0 ? 3 : 2); ++T) {
      const int L = 1 << T;
      const RingContext ctx = trinomial_context(v, L).ring;
      const auto prof = family_distance_profile(v, T, L);
      for (int j = 1; j < L; ++j) {
        const int d = oracle_distance(PolycyclicCode(ctx, j));
        const std::string at = "v=" + std::to_string(v) + " T=" + std::to_string(T) + " j=" + std::to_string(j);
        c.expect(prof[j].lower <= d && d <= prof[j].upper, at + ": oracle " + std::to_string(d));
      }
      c.expect(family_dual_d1(v, T) == oracle_dual_distance(PolycyclicCode(ctx, 1)),
               "dual d1 v=" + std::to_string(v) + " T=" + std::to_string(T));
    }
  return c.outcome();
}

Outcome lcd_families() {
  Check c;
  for (int v = 0; v <= 1; ++v)
    for (int T = 1; T <= 4; ++T) {
      for (int r = 0; r <= T - 1; ++r) c.expect(lcd_family_power_of_two(v, T, r).is_lcd, "power-of-two family");
      for (int r = 2; r <= T; ++r) c.expect(lcd_family_complement(v, T, r).is_lcd, "complement family");
      if (T >= 3) c.expect(lcd_family_three(v, T).is_lcd, "index-three family");
    }
  const ConjectureReport rep = conjecture_scan(0, 3, 1 << 20);
  c.expect(rep.counterexamples == 0 && rep.rows.size() == 11 && rep.skipped == 0, "conjecture scan v=0, T<=3");
  return c.outcome();
}

Outcome structure() {
  Check c;
  // Ideal lattice: every principal ideal is one of the L+1 chain members.
  for (int m = 2; m <= 4; ++m)
    for (const Gf2Poly& P : irreducibles(m))
      for (int L = 2; m * L <= 16; ++L) {
        const RingContext ctx = new_context(P, L);
        const std::size_t n = static_cast<std::size_t>(ctx.n);
        auto key_of = [&](Gf2Poly g, std::size_t rows) {
          std::vector<Gf2Poly> basis;
          for (std::size_t i = 0; i < rows; ++i) {
            basis.push_back(g);
            g = rem(g << 1, ctx.modulus);
          }
          std::vector<std::uint64_t> key;
          for (const auto& r : Gf2Matrix::from_rows(basis, n).rref().row_polys()) key.push_back(r.low_word());
          return key;
        };
        std::set<std::vector<std::uint64_t>> chain, seen;
        for (int j = 0; j <= L; ++j) chain.insert(key_of(ideal_generator(ctx, j), n));
        for (std::uint64_t a = 0; a < (1ULL << n); ++a) seen.insert(key_of(Gf2Poly::from_mask(a), n));
        c.expect(chain.size() == static_cast<std::size_t>(L + 1) && seen == chain, "ideal lattice " + P.str());
      }
  for (int m = 2; m <= 5; ++m)
    for (const Gf2Poly& P : irreducibles(m))
      for (int L = 2; m * L <= 30; ++L) {
        const RingContext ctx = new_context(P, L);
        for (int j = 0; j < L; ++j) {
          const PolycyclicCode code(ctx, j);
          const std::string at = P.str() + " L=" + std::to_string(L) + " j=" + std::to_string(j);
          c.expect(polycyclic_closure_holds(code), "polycyclic closure " + at);
          if (j == 0) continue;
          const DualCode d = dual_code(code);
          c.expect((code.generator_matrix() * d.spanning.transpose()).is_zero(), "G H^T " + at);
          c.expect(code.k() + d.dim == ctx.n, "dimension complement " + at);
          c.expect(sequential_closure_check(d), "sequential closure " + at);
        }
      }
  for (int v = 0; v <= 1; ++v)
    for (int L = 2; L <= 16; ++L) {
      const RingContext ctx = trinomial_context(v, L).ring;
      for (int j = 0; j <= L; ++j) c.expect(is_reversible(PolycyclicCode(ctx, j)), "reversibility");
    }
  return c.outcome();
}

Outcome tables67() {
  Check c;
  c.fixture("table6");
  c.fixture("table7");
  return c.outcome();
}

}  // namespace

int main() {
  int sweep_codes = 0;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1  table1 low-index patterns", table1},
      {"2  ex2 profile and oracle plateau", example2},
      {"3  ex1 ex3 ex4 profiles", examples134},
      {"4  table3 table4 weights", weight_tables},
      {"5  ex5 dual distances", example5},
      {"6  ex6 LCD code", example6},
      {"7  oracle equivalence sweep", [&] { return oracle_sweep(sweep_codes); }},
      {"8  trinomial family closed forms", trinomial_family},
      {"9  LCD families and conjecture scan", lcd_families},
      {"10 structural properties", structure},
      {"T6-7 table6 table7 parameters", tables67},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", seconds_since(t0));
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << buf << ")";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    all = all && o.pass;
  }
  std::cout << "oracle sweep covered " << sweep_codes << " codes\n";
  return all ? 0 : 1;
}
