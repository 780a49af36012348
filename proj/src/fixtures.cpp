#include "polycode/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "polycode/distance.hpp"
#include "polycode/duality.hpp"
#include "polycode/enumerate.hpp"
#include "polycode/errors.hpp"
#include "polycode/lcd.hpp"
#include "polycode/serialize.hpp"

namespace polycode {

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

std::string num(long long v) { return std::to_string(v); }

std::string params(int n, int k, int d) { return "[" + num(n) + "," + num(k) + "," + num(d) + "]"; }

void add_profile(Pairs& out, const RingContext& ctx, const std::vector<DistanceReport>& prof) {
  for (const auto& r : prof) out.emplace_back("d" + num(r.j), display_interval(r.lower, r.upper, ctx.n));
}

void add_expected_profile(Pairs& out, const std::vector<std::string>& values) {
  for (std::size_t j = 0; j < values.size(); ++j) out.emplace_back("d" + num(static_cast<long long>(j)), values[j]);
}

// ---- distance table for 1 <= j <= 2^(T-1) ----

struct LowRow {
  const char* poly;
  int L;
  int T;
  int order;
  std::vector<int> d;  // d_1 .. d_{2^(T-1)}
};

const std::vector<LowRow>& low_rows() {
  static const std::vector<LowRow> rows = {
      {"x^2+x+1", 5, 3, 3, {2, 2, 3, 3}},
      {"x^3+x+1", 2, 1, 7, {3}},
      {"x^4+x+1", 7, 3, 15, {2, 3, 3, 3}},
      {"x^5+x^3+1", 6, 3, 31, {3, 3, 3, 3}},
      {"x^6+x+1", 9, 4, 63, {3, 3, 3, 3, 3, 3, 3, 3}},
      {"x^7+x^4+1", 31, 5, 127, {2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3}},
  };
  return rows;
}

Pairs expect_table1() {
  Pairs out;
  for (const auto& r : low_rows()) {
    const std::string key = std::string(r.poly) + " L=" + num(r.L) + " ";
    out.emplace_back(key + "T", num(r.T));
    out.emplace_back(key + "order", num(r.order));
    for (std::size_t j = 0; j < r.d.size(); ++j) out.emplace_back(key + "d" + num(static_cast<long long>(j + 1)), num(r.d[j]));
  }
  return out;
}

Pairs compute_table1(const FixtureOptions&) {
  Pairs out;
  for (const auto& r : low_rows()) {
    const RingContext ctx = new_context(parse(r.poly), r.L);
    const std::string key = std::string(r.poly) + " L=" + num(r.L) + " ";
    out.emplace_back(key + "T", num(ctx.T));
    out.emplace_back(key + "order", num(static_cast<long long>(ctx.e)));
    const auto prof = full_distance_profile(ctx);
    for (int j = 1; j <= (1 << (ctx.T - 1)); ++j)
      out.emplace_back(key + "d" + num(j), display_interval(prof[j].lower, prof[j].upper, ctx.n));
  }
  return out;
}

// ---- worked examples ----

Pairs expect_ex1() {
  Pairs out = {{"lambda1", "2"},
               {"lambda2", "8"},
               {"lambda3", "20"},
               {"P^4", "x^20+x^16+x^8+x^4+1"},
               {"(1+x^4)P^4", "x^24+x^16+x^12+1"},
               {"(1+x+x^2)^2 P^2", "x^14+x^4+1"}};
  add_expected_profile(out, {"1", "3", "3", "[3,4]", "4", "25"});
  return out;
}

Pairs compute_ex1(const FixtureOptions&) {
  const RingContext ctx = new_context(parse("x^5+x^4+x^2+x+1"), 5);
  const Gf2Poly P4 = pow(ctx.P, 4);
  Pairs out = {{"lambda1", num(power_index_lambda(ctx, 1))},
               {"lambda2", num(power_index_lambda(ctx, 2))},
               {"lambda3", num(power_index_lambda(ctx, 3))},
               {"P^4", P4.str()},
               {"(1+x^4)P^4", (parse("1+x^4") * P4).str()},
               {"(1+x+x^2)^2 P^2", (square(parse("1+x+x^2")) * square(ctx.P)).str()}};
  add_profile(out, ctx, full_distance_profile(ctx));
  return out;
}

Pairs expect_ex2() {
  Pairs out = {{"J", "2"}};
  add_expected_profile(out, {"1", "2", "2", "2", "2", "3", "3", "3", "3", "[6,8]", "[6,8]", "[6,8]", "8", "16", "16",
                             "33", "64"});
  // Oracle-resolved plateau values (regression data; the formula path only bounds them).
  out.emplace_back("oracle d9", "6");
  out.emplace_back("oracle d10", "6");
  out.emplace_back("oracle d11", "8");
  return out;
}

Pairs compute_ex2(const FixtureOptions& opts) {
  const RingContext ctx = new_context(parse("x^4+x+1"), 16);
  Pairs out = {{"J", num(short_order_split(ctx))}};
  add_profile(out, ctx, full_distance_profile(ctx));
  ProfileOptions po;
  po.use_oracle = true;
  po.oracle_cap = std::max<std::size_t>(opts.oracle_cap, 28);
  po.workers = opts.workers;
  const auto prof = full_distance_profile(ctx, po);
  for (int j = 9; j <= 11; ++j) out.emplace_back("oracle d" + num(j), display_interval(prof[j].lower, prof[j].upper, ctx.n));
  return out;
}

Pairs expect_ex3() {
  Pairs out = {{"J", "4"},
               {"L'", "4"},
               {"lambda1", "3"},
               {"P^8", "x^40+x^32+x^16+x^8+1"},
               {"(1+x^8)P^8", "x^48+x^32+x^24+1"},
               {"(1+x^16)P^8", "x^56+x^48+x^40+x^24+x^8+1"},
               {"(1+x^8+x^16)P^8", "x^56+x^16+1"}};
  add_expected_profile(out, {"1", "2", "3", "3", "3", "3", "3", "3", "3", ">=6", ">=6", ">=6", "60"});
  return out;
}

Pairs compute_ex3(const FixtureOptions&) {
  const RingContext ctx = new_context(parse("x^5+x^4+x^2+x+1"), 12);
  const Gf2Poly P8 = pow(ctx.P, 8);
  Pairs out = {{"J", num(short_order_split(ctx))},
               {"L'", num(ctx.L - (1 << (ctx.T - 1)))},
               {"lambda1", num(power_index_lambda(ctx, 1))},
               {"P^8", P8.str()},
               {"(1+x^8)P^8", (parse("1+x^8") * P8).str()},
               {"(1+x^16)P^8", (parse("1+x^16") * P8).str()},
               {"(1+x^8+x^16)P^8", (parse("1+x^8+x^16") * P8).str()}};
  add_profile(out, ctx, full_distance_profile(ctx));
  return out;
}

Pairs expect_ex4() {
  Pairs out = {{"J", "4"},
               {"R", "2"},
               {"L'", "1"},
               {"lambda'1", "4"},
               {"lambda'2", "1"},
               {"P^24",
                "x^144+x^136+x^128+x^112+x^104+x^96+x^88+x^64+x^56+x^48+x^40+x^32+x^24+x^16+1"}};
  std::vector<std::string> d = {"1", "2", "2"};
  for (int j = 3; j <= 16; ++j) d.emplace_back("3");
  for (int j = 17; j <= 23; ++j) d.emplace_back("[6,15]");
  d.emplace_back("15");
  d.emplace_back("150");
  add_expected_profile(out, d);
  return out;
}

Pairs compute_ex4(const FixtureOptions&) {
  const RingContext ctx = new_context(parse("x^6+x^5+x^3+x^2+1"), 25);
  const Regime g = regime_of(ctx);
  Pairs out = {{"J", num(short_order_split(ctx))},
               {"R", num(g.R)},
               {"L'", num(g.Lprime)},
               {"lambda'1", num(gap_index_lambda(ctx, 1))},
               {"lambda'2", num(gap_index_lambda(ctx, 2))},
               {"P^24", pow(ctx.P, 24).str()}};
  add_profile(out, ctx, full_distance_profile(ctx));
  return out;
}

Pairs expect_ex5() {
  Pairs out = {{"U", "x^4+x^2+x+1"}, {"U*", "x^4+x^3+x^2+1"}};
  for (const char* src : {"reduced-set", "oracle"}) {
    const std::string s(src);
    out.emplace_back(s + " d8-perp", "1");
    out.emplace_back(s + " d4-perp", "3");
    out.emplace_back(s + " d2-perp", "7");
    out.emplace_back(s + " d1-perp", "15");
  }
  return out;
}

Pairs compute_ex5(const FixtureOptions& opts) {
  const RingContext ctx = new_context(parse("x^3+x+1"), 9);
  Pairs out = {{"U", ctx.U.str()}, {"U*", ctx.U_star.str()}};
  for (int s = 1; s <= 4; ++s) {
    const auto r = dual_distance_at_power_index(ctx, s);
    out.emplace_back("reduced-set d" + num(1 << (4 - s)) + "-perp", r ? num(r->value) : "above-cap");
  }
  for (int s = 1; s <= 4; ++s) {
    const int j = 1 << (4 - s);
    const DualCode dual = dual_code(PolycyclicCode(ctx, j));
    out.emplace_back("oracle d" + num(j) + "-perp",
                     num(dual_min_distance_bruteforce(dual, std::max<std::size_t>(opts.oracle_cap, 24), opts.workers)));
  }
  return out;
}

Pairs expect_ex6() {
  return {{"lcd", "true"},
          {"methods", "oracle,low-index-criterion"},
          {"code", "[24,21,2]"},
          {"dual", "[24,3,13]"}};
}

Pairs compute_ex6(const FixtureOptions& opts) {
  const RingContext ctx = new_context(parse("x^3+x+1"), 8);
  const PolycyclicCode code(ctx, 1);
  const LcdVerdict v = lcd_verdict(code);
  std::string methods;
  for (const auto& m : v.methods) methods += (methods.empty() ? "" : ",") + m;
  ProfileOptions po;
  po.use_oracle = true;
  po.verify_exact = true;
  po.oracle_cap = opts.oracle_cap;
  po.workers = opts.workers;
  const auto prof = full_distance_profile(ctx, po);
  const DualSummary ds = dual_summary(ctx, 1, po);
  return {{"lcd", v.is_lcd ? "true" : "false"},
          {"methods", methods},
          {"code", prof[1].exact() ? params(ctx.n, code.k(), prof[1].lower) : "inexact"},
          {"dual", ds.d_dual ? params(ctx.n, ds.k_dual, *ds.d_dual) : "unknown"}};
}

// ---- weight tables ----

const std::vector<std::string>& table3_multipliers() {
  static const std::vector<std::string> m = {"1",     "1+x",     "1+x^2",     "1+x^3",
                                             "1+x+x^2", "1+x+x^3", "1+x^2+x^3", "1+x+x^2+x^3"};
  return m;
}

Pairs expect_table3() {
  static const int w[8][3] = {{9, 17, 33}, {8, 18, 34}, {8, 16, 34}, {8, 18, 34},
                              {9, 17, 35}, {9, 17, 35}, {9, 17, 35}, {8, 16, 36}};
  Pairs out;
  for (std::size_t i = 0; i < 8; ++i)
    for (int r = 2; r <= 4; ++r)
      out.emplace_back("wt((" + table3_multipliers()[i] + ")P^(2^" + num(r) + "-1))", num(w[i][r - 2]));
  return out;
}

Pairs compute_table3(const FixtureOptions&) {
  const Gf2Poly P = parse("x^4+x+1");
  Pairs out;
  for (const auto& m : table3_multipliers())
    for (int r = 2; r <= 4; ++r)
      out.emplace_back("wt((" + m + ")P^(2^" + num(r) + "-1))",
                       num(static_cast<long long>(weight(parse(m) * pow(P, (1U << r) - 1)))));
  return out;
}

struct Table4Row {
  const char* multiplier;
  const char* expansion;
  int weight;
};

const std::vector<Table4Row>& table4_rows() {
  static const std::vector<Table4Row> rows = {
      {"1", "x^96+x^80+x^48+x^32+1", 5},
      {"1+x^16", "x^112+x^80+x^64+x^32+x^16+1", 6},
      {"1+x^32", "x^128+x^112+x^96+x^64+x^48+1", 6},
      {"1+x^48", "x^144+x^128+x^32+1", 4},
      {"1+x^16+x^32", "x^128+x^16+1", 3},
      {"1+x^16+x^48", "x^144+x^128+x^112+x^96+x^64+x^48+x^32+x^16+1", 9},
      {"1+x^32+x^48", "x^144+x^112+x^80+x^64+1", 5},
      {"1+x^16+x^32+x^48", "x^144+x^96+x^80+x^48+x^16+1", 6},
  };
  return rows;
}

Pairs expect_table4() {
  Pairs out;
  for (const auto& r : table4_rows()) {
    out.emplace_back(std::string("(") + r.multiplier + ")P^16", r.expansion);
    out.emplace_back(std::string("wt((") + r.multiplier + ")P^16)", num(r.weight));
  }
  out.emplace_back("minimum", "3");
  return out;
}

Pairs compute_table4(const FixtureOptions&) {
  const Gf2Poly P16 = pow(parse("x^6+x^5+x^3+x^2+1"), 16);
  Pairs out;
  std::size_t best = SIZE_MAX;
  for (const auto& r : table4_rows()) {
    const Gf2Poly f = parse(r.multiplier) * P16;
    out.emplace_back(std::string("(") + r.multiplier + ")P^16", f.str());
    out.emplace_back(std::string("wt((") + r.multiplier + ")P^16)", num(static_cast<long long>(weight(f))));
    best = std::min(best, weight(f));
  }
  out.emplace_back("minimum", num(static_cast<long long>(best)));
  return out;
}

const std::vector<std::string>& table5_multipliers() {
  static const std::vector<std::string> m = {"x^2", "1+x^2", "x+x^2", "1+x+x^2"};
  return m;
}

Pairs expect_table5() {
  static const int w[4][4] = {{1, 3, 7, 15}, {1, 3, 7, 15}, {2, 3, 7, 15}, {2, 3, 7, 15}};
  Pairs out;
  for (std::size_t i = 0; i < 4; ++i)
    for (int s = 1; s <= 4; ++s) out.emplace_back("s=" + num(s) + " l=" + table5_multipliers()[i], num(w[i][s - 1]));
  return out;
}

Pairs compute_table5(const FixtureOptions&) {
  const RingContext ctx = new_context(parse("x^3+x+1"), 9);
  Pairs out;
  for (const auto& m : table5_multipliers())
    for (int s = 1; s <= 4; ++s) {
      const Gf2Poly V = pow(order_binomial(ctx), (1U << s) - 1) * ctx.U_star;
      out.emplace_back("s=" + num(s) + " l=" + m,
                       num(static_cast<long long>(weight(dual_candidate(ctx, parse(m), V, 1 << (4 - s))))));
    }
  return out;
}

// ---- [n,k,d] parameter tables for C = <P> ----

struct ParamRow {
  const char* poly;
  int L;
  int n, k, d;
  int k_dual, d_dual;
};

const std::vector<ParamRow>& table6_rows() {
  static const std::vector<ParamRow> rows = {
      {"x^3+x+1", 9, 27, 24, 2, 3, 15},
      {"x^4+x+1", 22, 88, 84, 2, 4, 46},
      {"x^4+x+1", 26, 104, 100, 2, 4, 55},
      {"x^4+x+1", 45, 180, 176, 2, 4, 96},
      {"x^5+x^2+1", 13, 65, 60, 2, 5, 32},
      {"x^5+x^2+1", 19, 95, 90, 2, 5, 48},
      {"x^5+x^2+1", 5, 25, 20, 3, 5, 11},
      {"x^5+x^3+1", 6, 30, 25, 3, 5, 15},
      {"x^6+x+1", 6, 36, 30, 3, 6, 15},
      {"x^6+x^5+x^3+x^2+1", 10, 60, 54, 3, 6, 29},
      {"x^6+x^5+1", 11, 66, 60, 2, 6, 32},
      {"x^7+x^6+x^3+x+1", 4, 28, 21, 3, 7, 11},
      {"x^7+x^6+x^5+x^4+x^2+x+1", 6, 42, 35, 3, 7, 18},
      {"x^7+x^4+1", 11, 77, 70, 3, 7, 34},
      {"x^7+x^6+x^3+x^2+1", 13, 91, 84, 3, 7, 44},
      {"x^7+x^6+1", 18, 126, 119, 3, 7, 63},
      {"x^7+x^6+1", 19, 133, 126, 2, 7, 64},
      {"x^8+x^7+x^2+x+1", 3, 24, 16, 4, 8, 8},
      {"x^8+x^6+x^5+x+1", 5, 40, 32, 3, 8, 15},
      {"x^8+x^7+x^6+x^5+x^2+x+1", 9, 72, 64, 3, 8, 31},
      {"x^9+x^8+x^7+x^6+x^5+x^3+1", 3, 27, 18, 4, 9, 9},
      {"x^9+x^8+x^6+x^5+x^4+x^3+x^2+x+1", 6, 54, 45, 4, 9, 20},
      {"x^11+x^10+x^5+x^4+1", 8, 88, 77, 4, 11, 39},
  };
  return rows;
}

const std::vector<ParamRow>& table7_rows() {
  static const std::vector<ParamRow> rows = {
      {"x^3+x+1", 6, 18, 15, 2, 3, 9},
      {"x^3+x+1", 8, 24, 21, 2, 3, 13},
      {"x^3+x+1", 13, 39, 36, 2, 3, 21},
      {"x^3+x+1", 15, 45, 42, 2, 3, 25},
      {"x^4+x+1", 16, 64, 60, 2, 4, 33},
      {"x^4+x+1", 17, 68, 64, 2, 4, 35},
      {"x^4+x+1", 31, 124, 120, 2, 4, 65},
      {"x^4+x+1", 40, 160, 156, 2, 4, 84},
      {"x^4+x+1", 46, 184, 180, 2, 4, 97},
      {"x^5+x^2+1", 3, 15, 10, 3, 5, 5},
      {"x^5+x^2+1", 5, 25, 20, 3, 5, 11},
      {"x^5+x^4+x^2+x+1", 8, 40, 35, 2, 5, 19},
      {"x^5+x^2+1", 9, 45, 40, 2, 5, 21},
      {"x^5+x^2+1", 11, 55, 50, 2, 5, 27},
      {"x^5+x^4+x^2+x+1", 15, 75, 70, 2, 5, 37},
      {"x^5+x^2+1", 32, 160, 155, 2, 5, 81},
      {"x^6+x^5+x^4+x+1", 5, 30, 24, 3, 6, 12},
      {"x^6+x^5+x^3+x^2+1", 7, 42, 36, 3, 6, 18},
      {"x^6+x^5+1", 9, 54, 48, 3, 6, 25},
      {"x^6+x^5+x^3+x^2+1", 12, 72, 66, 2, 6, 34},
      {"x^6+x^5+x^3+x^2+1", 17, 102, 96, 2, 6, 49},
      {"x^6+x^5+x^3+x^2+1", 19, 114, 108, 2, 6, 55},
      {"x^6+x^5+1", 22, 132, 126, 2, 6, 65},
      {"x^7+x^6+x^3+x+1", 10, 70, 63, 3, 7, 30},
      {"x^7+x^4+1", 11, 77, 70, 3, 7, 34},
      {"x^7+x^6+x^5+x^4+1", 16, 112, 105, 3, 7, 52},
      {"x^8+x^7+x^2+x+1", 3, 24, 16, 4, 8, 8},
      {"x^8+x^7+x^2+x+1", 7, 56, 48, 3, 8, 23},
      {"x^9+x^7+x^2+x+1", 2, 18, 9, 5, 9, 4},
      {"x^9+x^8+x^7+x^6+x^5+x^3+1", 3, 27, 18, 4, 9, 9},
      {"x^9+x^6+x^4+x^3+1", 4, 36, 27, 4, 9, 12},
      {"x^10+x^6+x^2+x+1", 5, 50, 40, 4, 10, 16},
      {"x^10+x^9+x^8+x^7+x^5+x^4+1", 6, 60, 50, 3, 10, 22},
      {"x^11+x^10+x^8+x^6+1", 5, 55, 44, 4, 11, 19},
      {"x^11+x^10+x^5+x^4+1", 7, 77, 66, 4, 11, 30},
      {"x^11+x^10+x^5+x^4+1", 8, 88, 77, 4, 11, 39},
      {"x^12+x^11+x^9+x^7+x^6+x^4+1", 5, 60, 48, 4, 12, 20},
      {"x^13+x^12+x^10+x^8+x^6+x^4+x^3+x^2+1", 4, 52, 39, 5, 13, 15},
      {"x^14+x^13+x^11+x^6+x^5+x^4+x^2+x+1", 4, 56, 42, 5, 14, 17},
      {"x^15+x^7+x^6+x^3+x^2+x+1", 4, 60, 45, 5, 15, 15},
      {"x^17+x^8+x^7+x^6+x^4+x^3+1", 2, 34, 17, 7, 17, 5},
  };
  return rows;
}

std::string row_key(const ParamRow& r) { return std::string(r.poly) + " L=" + num(r.L); }

Pairs expect_params(const std::vector<ParamRow>& rows, bool with_lcd) {
  Pairs out;
  for (const auto& r : rows) {
    out.emplace_back(row_key(r) + " C", params(r.n, r.k, r.d));
    out.emplace_back(row_key(r) + " C-perp", params(r.n, r.k_dual, r.d_dual));
    if (with_lcd) out.emplace_back(row_key(r) + " lcd", "true");
  }
  return out;
}

// <P> inside F2[x]/<P^L> by plain linear algebra, for table rows whose P is
// reducible and so falls outside the chain-ring machinery.
std::pair<std::string, std::string> generic_parameters(const Gf2Poly& P, int L, const FixtureOptions& opts) {
  const int m = P.degree();
  const auto n = static_cast<std::size_t>(m * L);
  std::vector<Gf2Poly> rows;
  for (std::size_t i = 0; i + static_cast<std::size_t>(m) < n; ++i) rows.push_back(P << i);
  const Gf2Matrix g = Gf2Matrix::from_rows(rows, n);
  const Gf2Matrix h = g.nullspace();
  const int k = static_cast<int>(g.rank());
  if (h.rows() > opts.oracle_cap) return {"above-cap", "above-cap"};
  const auto hist = weight_distribution(h, opts.oracle_cap, opts.workers);
  const int d = macwilliams_min_distance(n, hist);
  const int d_dual = min_weight(h, opts.oracle_cap, opts.workers);
  return {params(static_cast<int>(n), k, d), params(static_cast<int>(n), static_cast<int>(h.rows()), d_dual)};
}

Pairs compute_params(const std::vector<ParamRow>& rows, bool with_lcd, const FixtureOptions& opts) {
  Pairs out;
  for (const auto& r : rows) {
    const Gf2Poly P = parse(r.poly);
    if (!is_irreducible(P)) {
      const auto [c, cd] = generic_parameters(P, r.L, opts);
      out.emplace_back(row_key(r) + " C", c);
      out.emplace_back(row_key(r) + " C-perp", cd);
      continue;
    }
    const RingContext ctx = new_context(P, r.L);
    const PolycyclicCode code(ctx, 1);
    const auto cap = opts.oracle_cap;
    std::string c = "above-cap";
    std::optional<int> d;
    if (static_cast<std::size_t>(code.k()) <= cap)
      d = min_distance_bruteforce(code, cap, opts.workers);
    else if (static_cast<std::size_t>(code.n() - code.k()) <= cap)
      d = min_distance_via_dual(code, cap, opts.workers);
    if (d) {
      const Interval bound = low_index_bounds(ctx).front();
      if (*d < bound.lower || *d > bound.upper)
        throw ConsistencyError(row_key(r) + ": oracle distance outside the formula bounds");
      c = params(ctx.n, code.k(), *d);
    }
    out.emplace_back(row_key(r) + " C", c);
    ProfileOptions po;
    po.use_oracle = true;
    po.verify_exact = true;
    po.oracle_cap = cap;
    po.workers = opts.workers;
    const DualSummary ds = dual_summary(ctx, 1, po);
    out.emplace_back(row_key(r) + " C-perp", ds.d_dual ? params(ctx.n, ds.k_dual, *ds.d_dual) : "above-cap");
    if (with_lcd) out.emplace_back(row_key(r) + " lcd", lcd_verdict(code).is_lcd ? "true" : "false");
  }
  return out;
}

struct Fixture {
  std::function<Pairs()> expected;
  std::function<Pairs(const FixtureOptions&)> compute;
};

const std::map<std::string, Fixture>& registry() {
  static const std::map<std::string, Fixture> r = {
      {"table1", {expect_table1, compute_table1}},
      {"table3", {expect_table3, compute_table3}},
      {"table4", {expect_table4, compute_table4}},
      {"table5", {expect_table5, compute_table5}},
      {"table6",
       {[] { return expect_params(table6_rows(), false); },
        [](const FixtureOptions& o) { return compute_params(table6_rows(), false, o); }}},
      {"table7",
       {[] { return expect_params(table7_rows(), true); },
        [](const FixtureOptions& o) { return compute_params(table7_rows(), true, o); }}},
      {"ex1", {expect_ex1, compute_ex1}},
      {"ex2", {expect_ex2, compute_ex2}},
      {"ex3", {expect_ex3, compute_ex3}},
      {"ex4", {expect_ex4, compute_ex4}},
      {"ex5", {expect_ex5, compute_ex5}},
      {"ex6", {expect_ex6, compute_ex6}},
  };
  return r;
}

}  // namespace

bool FixtureReport::passed() const { return failures() == 0 && !checks.empty(); }

int FixtureReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const FixtureCheck& c) { return !c.pass(); }));
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"table1", "table3", "table4", "table5", "table6", "table7",
                                                 "ex1",    "ex2",    "ex3",    "ex4",    "ex5",    "ex6"};
  return names;
}

FixtureReport run_fixture(const std::string& name, const FixtureOptions& opts) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ValidationError("unknown fixture '" + name + "'");
  const Pairs expected = it->second.expected();
  const Pairs actual = it->second.compute(opts);
  std::map<std::string, std::string> got(actual.begin(), actual.end());
  FixtureReport rep;
  rep.name = name;
  for (const auto& [item, value] : expected) {
    const auto g = got.find(item);
    rep.checks.push_back(FixtureCheck{item, value, g == got.end() ? "missing" : g->second});
  }
  return rep;
}

std::string fixtures_csv() {
  std::ostringstream os;
  os << "fixture,item,expected\n";
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  for (const auto& name : fixture_names())
    for (const auto& [item, value] : registry().at(name).expected())
      os << name << ',' << quote(item) << ',' << quote(value) << '\n';
  return os.str();
}

}  // namespace polycode
