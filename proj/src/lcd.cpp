#include "polycode/lcd.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <optional>
#include <sstream>
#include <thread>

#include "polycode/duality.hpp"
#include "polycode/enumerate.hpp"
#include "polycode/errors.hpp"
#include "polycode/trinomial.hpp"

namespace polycode {

namespace {

int pow2(int k) { return 1 << k; }

std::size_t pow3(int v) {
  std::size_t p = 1;
  for (int i = 0; i < v; ++i) p *= 3;
  return p;
}

// (x^e+1)^(2^T-2j) (U U*)^j mod x^n.
Gf2Poly low_index_multiplier(const RingContext& ctx, int j) {
  const auto n = static_cast<std::size_t>(ctx.n);
  const Gf2Poly a = pow_trunc(order_binomial(ctx), static_cast<std::uint64_t>(pow2(ctx.T) - 2 * j), n);
  const Gf2Poly b = pow_trunc(mul_trunc(ctx.U, ctx.U_star, n), static_cast<std::uint64_t>(j), n);
  return mul_trunc(a, b, n);
}

void require_low(const PolycyclicCode& code) {
  if (code.j() < 1 || code.j() > pow2(code.ctx().T - 1) || code.j() > code.ctx().L - 1)
    throw RegimeError("low-index criterion needs 1 <= j <= min(2^(T-1), L-1)");
}

// mj x mj matrix of delta -> top mj coefficients.
Gf2Matrix low_index_map(const PolycyclicCode& code) {
  const RingContext& ctx = code.ctx();
  const auto n = static_cast<std::size_t>(ctx.n);
  const auto mj = static_cast<std::size_t>(ctx.m * code.j());
  const std::size_t low = n - mj;
  const Gf2Poly M = low_index_multiplier(ctx, code.j());
  Gf2Matrix out(mj, mj);
  for (std::size_t i = 0; i < mj; ++i) {
    const Gf2Poly img = truncate(M << i, n);
    for (std::size_t c = 0; c < mj; ++c)
      if (img.coeff(low + c)) out.set(i, c, true);
  }
  return out;
}

struct Kernel {
  Gf2Matrix basis;
  std::size_t split = 0;  // gamma occupies bits [0, split)
};

Kernel high_index_kernel(const PolycyclicCode& code) {
  const RingContext& ctx = code.ctx();
  const int j = code.j();
  if (j <= pow2(ctx.T - 1) || j > ctx.L - 1) throw RegimeError("high-index criterion needs 2^(T-1) < j <= L-1");
  const auto n = static_cast<std::size_t>(ctx.n);
  const auto kg = static_cast<std::size_t>(ctx.m * (ctx.L - j));
  const auto kd = static_cast<std::size_t>(ctx.m * j);
  const Gf2Poly A = pow_trunc(ctx.P, static_cast<std::uint64_t>(2 * j - pow2(ctx.T)), n);
  const Gf2Poly B = mul_trunc(pow_trunc(ctx.U, static_cast<std::uint64_t>(pow2(ctx.T) - j), n),
                              pow_trunc(ctx.U_star, static_cast<std::uint64_t>(j), n), n);
  std::vector<Gf2Poly> rows;
  rows.reserve(kg + kd);
  for (std::size_t i = 0; i < kg; ++i) rows.push_back(truncate(A << i, n));
  for (std::size_t i = 0; i < kd; ++i) rows.push_back(truncate(B << i, n));
  // Kernel of v -> v M is the nullspace of M^T.
  return Kernel{Gf2Matrix::from_rows(rows, n).transpose().nullspace(), kg};
}

bool mixed(const Gf2Poly& w, std::size_t split) {
  bool g = false, d = false;
  for (auto e : w.exponents()) (e < split ? g : d) = true;
  return g && d;
}

std::optional<int> family_v(const RingContext& ctx) {
  for (int v = 0; 2 * pow3(v) <= static_cast<std::size_t>(ctx.m); ++v)
    if (ctx.P == trinomial(v)) return v;
  return std::nullopt;
}

LcdVerdict family_check(int v, int T, int j) {
  const TrinomialContext t = trinomial_context(v, pow2(T));
  LcdVerdict verdict = is_lcd_oracle(PolycyclicCode(t.ring, j));
  if (!verdict.is_lcd)
    throw ConsistencyError("family code v=" + std::to_string(v) + " T=" + std::to_string(T) + " j=" +
                           std::to_string(j) + " has hull dimension " + std::to_string(verdict.hull_dim));
  verdict.methods.emplace_back(tag::kLcdFamily);
  return verdict;
}

}  // namespace

LcdVerdict is_lcd_oracle(const PolycyclicCode& code) {
  LcdVerdict v;
  v.j = code.j();
  v.methods.emplace_back(tag::kLcdOracle);
  if (code.k() == 0) {
    v.is_lcd = true;
    return v;
  }
  const Gf2Matrix g = code.generator_matrix();
  const int via_gram = code.k() - static_cast<int>((g * g.transpose()).rank());
  const Gf2Matrix h = g.nullspace();
  const int via_stack = code.n() - static_cast<int>(Gf2Matrix::vstack(g, h).rank());
  if (via_gram != via_stack)
    throw ConsistencyError("hull dimension " + std::to_string(via_gram) + " from G G^T but " +
                           std::to_string(via_stack) + " from the stacked bases");
  v.hull_dim = via_gram;
  v.is_lcd = via_gram == 0;
  return v;
}

bool is_lcd_low_index(const PolycyclicCode& code) {
  require_low(code);
  const Gf2Matrix M = low_index_map(code);
  return M.rank() == M.rows();
}

bool is_lcd_low_index_sweep(const PolycyclicCode& code) {
  require_low(code);
  const RingContext& ctx = code.ctx();
  const auto mj = static_cast<std::size_t>(ctx.m * code.j());
  if (mj > 20) throw CapError("delta sweep limited to mj <= 20");
  const auto n = static_cast<std::size_t>(ctx.n);
  const Gf2Poly M = low_index_multiplier(ctx, code.j());
  const int floor_deg = static_cast<int>(n - mj);
  for (std::uint64_t d = 1; d < (std::uint64_t{1} << mj); ++d)
    if (mul_trunc(M, Gf2Poly::from_mask(d), n).degree() < floor_deg) return false;
  return true;
}

Decision is_lcd_high_index(const PolycyclicCode& code) {
  const Kernel k = high_index_kernel(code);
  const std::size_t dim = k.basis.rows();
  if (dim == 0) return Decision::Lcd;
  if (dim <= 20) {
    Gf2Poly w;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim); ++i) {
      w += k.basis.row_poly(static_cast<std::size_t>(std::countr_zero(i)));
      if (mixed(w, k.split)) return Decision::NotLcd;
    }
    return Decision::Lcd;
  }
  for (std::size_t a = 0; a < dim; ++a) {
    const Gf2Poly ra = k.basis.row_poly(a);
    if (mixed(ra, k.split)) return Decision::NotLcd;
    for (std::size_t b = a + 1; b < dim; ++b)
      if (mixed(ra + k.basis.row_poly(b), k.split)) return Decision::NotLcd;
  }
  return Decision::Inconclusive;
}

LcdVerdict lcd_verdict(const PolycyclicCode& code, LcdMethods methods) {
  const RingContext& ctx = code.ctx();
  const int j = code.j();
  std::optional<LcdVerdict> out;
  auto record = [&](bool is_lcd, int hull, const char* t) {
    if (out && (out->is_lcd != is_lcd || out->hull_dim != hull))
      throw ConsistencyError("LCD methods disagree at j = " + std::to_string(j) + " (" + t + ")");
    if (!out) {
      out = LcdVerdict{j, is_lcd, hull, {}};
    }
    out->methods.emplace_back(t);
  };
  if (methods != LcdMethods::Theorem) {
    const LcdVerdict o = is_lcd_oracle(code);
    record(o.is_lcd, o.hull_dim, tag::kLcdOracle);
  }
  if (methods != LcdMethods::Oracle && j >= 1 && j <= ctx.L - 1) {
    if (j <= pow2(ctx.T - 1)) {
      const Gf2Matrix M = low_index_map(code);
      const int hull = static_cast<int>(M.rows() - M.rank());
      if (M.rows() <= 12 && is_lcd_low_index_sweep(code) != (hull == 0))
        throw ConsistencyError("delta sweep disagrees with the rank test at j = " + std::to_string(j));
      record(hull == 0, hull, tag::kLcdLowIndex);
    } else {
      const Kernel k = high_index_kernel(code);
      const Decision d = is_lcd_high_index(code);
      if (d != Decision::Inconclusive) record(d == Decision::Lcd, static_cast<int>(k.basis.rows()), tag::kLcdHighIndex);
    }
    if (ctx.L == pow2(ctx.T) && in_lcd_family(ctx.T, j))
      if (family_v(ctx)) record(true, 0, tag::kLcdFamily);
  }
  if (!out) {
    // Criterion paths only, none decisive: fall back to the oracle.
    const LcdVerdict o = is_lcd_oracle(code);
    record(o.is_lcd, o.hull_dim, tag::kLcdOracle);
  }
  return *out;
}

LcdVerdict lcd_family_power_of_two(int v, int T, int r) {
  if (r < 0 || r > T - 1) throw DomainError("power-of-two family needs 0 <= r <= T-1");
  return family_check(v, T, pow2(r));
}

LcdVerdict lcd_family_complement(int v, int T, int r) {
  if (r < 2 || r > T) throw DomainError("complement family needs 2 <= r <= T");
  return family_check(v, T, pow2(T) - pow2(T - r));
}

LcdVerdict lcd_family_three(int v, int T) {
  if (T < 3) throw DomainError("index-three family needs T >= 3");
  return family_check(v, T, 3);
}

bool in_lcd_family(int T, int j) {
  for (int r = 0; r <= T - 1; ++r)
    if (j == pow2(r)) return true;
  for (int r = 2; r <= T; ++r)
    if (j == pow2(T) - pow2(T - r)) return true;
  return T >= 3 && j == 3;
}

ConjectureReport conjecture_scan(int vmax, int tmax, int dim_cap, unsigned workers) {
  if (vmax < 0 || tmax < 1 || dim_cap < 1) throw ValidationError("scan needs vmax >= 0, tmax >= 1, dim_cap >= 1");
  ConjectureReport rep;
  rep.vmax = vmax;
  rep.tmax = tmax;
  for (int v = 0; v <= vmax; ++v)
    for (int T = 1; T <= tmax; ++T) {
      const int n = static_cast<int>(2 * pow3(v)) * pow2(T);
      for (int j = 1; j <= pow2(T) - 1; ++j) {
        if (n > dim_cap) {
          ++rep.skipped;
          continue;
        }
        rep.rows.push_back(ConjectureRow{v, T, j, n, n - static_cast<int>(2 * pow3(v)) * j, false, 0});
      }
    }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rep.rows.size(); i = next++) {
      ConjectureRow& row = rep.rows[i];
      const RingContext ctx = trinomial_context(row.v, pow2(row.T)).ring;
      const LcdVerdict verdict = is_lcd_oracle(PolycyclicCode(ctx, row.j));
      row.is_lcd = verdict.is_lcd;
      row.hull_dim = verdict.hull_dim;
    }
  };
  const unsigned w = std::max(1U, std::min<unsigned>(workers ? workers : default_workers(),
                                                     static_cast<unsigned>(std::max<std::size_t>(1, rep.rows.size()))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < w; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& row : rep.rows)
    if (!row.is_lcd) ++rep.counterexamples;
  return rep;
}

std::string conjecture_csv(const ConjectureReport& report) {
  std::ostringstream os;
  os << "v,T,j,n,k,is_lcd,hull_dim\n";
  for (const auto& r : report.rows)
    os << r.v << ',' << r.T << ',' << r.j << ',' << r.n << ',' << r.k << ',' << (r.is_lcd ? "true" : "false") << ','
       << r.hull_dim << '\n';
  return os.str();
}

CodeSummary family_parameters(int v, int T, int r, FamilyKind which) {
  if (T < 1) throw DomainError("T must be positive");
  const TrinomialContext t = trinomial_context(v, pow2(T));
  const RingContext& ctx = t.ring;
  const int a = static_cast<int>(pow3(v));
  int j = 0, k = 0, k_dual = 0, d = 0;
  std::optional<int> d_dual;
  switch (which) {
    case FamilyKind::PowerOfTwo:
      if (r < 0 || r > T - 1) throw DomainError("power-of-two family needs 0 <= r <= T-1");
      j = pow2(r);
      k = a * pow2(r + 1) * (pow2(T - r) - 1);
      k_dual = a * pow2(r + 1);
      d = 2;
      if (auto s = dual_distance_at_power_index(ctx, T - r)) d_dual = s->value;
      if (r == 0) {
        const int closed = family_dual_d1(v, T);
        if (d_dual && *d_dual != closed) throw ConsistencyError("dual distance of C_1 disagrees with closed form");
        d_dual = closed;
      }
      break;
    case FamilyKind::Complement:
      if (r < 2 || r > T) throw DomainError("complement family needs 2 <= r <= T");
      j = pow2(T) - pow2(T - r);
      k = a * pow2(T - r + 1);
      k_dual = a * (pow2(T + 1) - pow2(T - r + 1));
      d = family_complement_distance(r);
      if (auto s = dual_distance_at_complement_index(ctx, r)) d_dual = s->value;
      break;
    case FamilyKind::FirstIdeal:
      j = 1;
      k = a * (pow2(T + 1) - 2);
      k_dual = 2 * a;
      d = 2;
      d_dual = family_dual_d1(v, T);
      break;
  }
  const PolycyclicCode code(ctx, j);
  if (code.k() != k || static_cast<int>(code.generator_matrix().rank()) != k)
    throw ConsistencyError("family dimension disagrees with the generator rank");
  if (dual_code(code).dim != k_dual) throw ConsistencyError("family dual dimension disagrees with the dual basis");
  const auto profile = family_distance_profile(v, T, pow2(T));
  const DistanceReport& rep = profile[static_cast<std::size_t>(j)];
  if (!rep.exact() || rep.lower != d) throw ConsistencyError("family distance disagrees with the closed-form profile");

  CodeSummary s;
  s.poly = ctx.P.str();
  s.L = ctx.L;
  s.j = j;
  s.n = ctx.n;
  s.k = k;
  s.d = Interval{d, d};
  if (d_dual) s.d_dual = Interval{*d_dual, *d_dual};
  s.lcd = is_lcd_oracle(code).is_lcd;
  s.reversible = is_reversible(code);
  return s;
}

}  // namespace polycode
