#include "polycode/duality.hpp"

#include <bit>
#include <random>
#include <string>

#include "polycode/enumerate.hpp"
#include "polycode/errors.hpp"

namespace polycode {

namespace {

int pow2(int k) { return 1 << k; }

// min wt(l v mod x^M) over deg l = deg_l exactly.
std::optional<ReducedSetResult> min_over_exact_degree(const Gf2Poly& v, int deg_l, std::size_t M,
                                                      std::size_t reduced_cap) {
  if (deg_l < 0) throw ConsistencyError("negative multiplier degree");
  if (static_cast<std::size_t>(deg_l) > reduced_cap) return std::nullopt;
  const Gf2Poly vt = truncate(v, M);
  std::vector<Gf2Poly> dirs;
  for (int i = 0; i < deg_l; ++i) dirs.push_back(vt << static_cast<std::size_t>(i));
  return ReducedSetResult{affine_min_weight(vt << static_cast<std::size_t>(deg_l), dirs, M),
                          std::uint64_t{1} << deg_l};
}

}  // namespace

bool orthogonal_to_rows(const Gf2Matrix& h, const Gf2Poly& w) {
  const auto& ww = w.words();
  for (std::size_t r = 0; r < h.rows(); ++r) {
    unsigned parity = 0;
    for (std::size_t i = 0; i < h.stride() && i < ww.size(); ++i)
      parity ^= static_cast<unsigned>(std::popcount(h.row(r)[i] & ww[i])) & 1U;
    if (parity) return false;
  }
  return true;
}

DualCode dual_code(const PolycyclicCode& code) {
  const RingContext& ctx = code.ctx();
  const int j = code.j();
  if (j < 1 || j > ctx.L - 1) throw DomainError("dual construction needs 1 <= j <= L-1");
  const auto n = static_cast<std::size_t>(ctx.n);
  DualCode d;
  d.ctx = ctx;
  d.j = j;
  d.dim = ctx.m * j;
  d.h_star = mul_trunc(pow_trunc(order_binomial(ctx), static_cast<std::uint64_t>(pow2(ctx.T) - j), n),
                       pow_trunc(ctx.U_star, static_cast<std::uint64_t>(j), n), n);
  std::vector<Gf2Poly> rows;
  for (int i = 0; i < d.dim; ++i) rows.push_back(truncate(d.h_star << static_cast<std::size_t>(i), n));
  d.spanning = Gf2Matrix::from_rows(rows, n);
  d.reduced = d.spanning.rref();
  if (d.reduced.rows() != static_cast<std::size_t>(d.dim))
    throw ConsistencyError("dual spanning set has rank " + std::to_string(d.reduced.rows()) + ", expected " +
                           std::to_string(d.dim));
  if (!(code.generator_matrix() * d.spanning.transpose()).is_zero())
    throw ConsistencyError("dual spanning rows are not orthogonal to the code");
  return d;
}

int dual_min_distance_bruteforce(const DualCode& dual, std::size_t cap, unsigned workers) {
  return min_weight(dual.spanning, cap, workers);
}

int dual_min_distance_via_primal(const PolycyclicCode& code, std::size_t cap, unsigned workers) {
  return macwilliams_min_distance(static_cast<std::size_t>(code.n()),
                                  weight_distribution(code.generator_matrix(), cap, workers));
}

Gf2Poly dual_candidate(const RingContext& ctx, const Gf2Poly& ell, const Gf2Poly& v, int q) {
  const auto n = static_cast<std::size_t>(ctx.n);
  Gf2Poly lv = ell * v;
  return truncate(pow_trunc(lv, static_cast<std::uint64_t>(q), n) << static_cast<std::size_t>(q - 1), n);
}

std::optional<ReducedSetResult> dual_distance_at_power_index(const RingContext& ctx, int s, std::size_t reduced_cap) {
  if (s < 1 || s > ctx.T) throw RegimeError("s out of range");
  const int q = pow2(ctx.T - s);
  if (q > ctx.L - 1) throw RegimeError("index 2^(T-s) must be below L");
  // Only coefficients t with q t + q - 1 < n survive the Frobenius spread.
  const std::size_t M = static_cast<std::size_t>(ctx.n / q);
  const Gf2Poly V = mul_trunc(pow_trunc(order_binomial(ctx), static_cast<std::uint64_t>(pow2(s) - 1), M),
                              ctx.U_star, M);
  return min_over_exact_degree(V, ctx.m - 1, M, reduced_cap);
}

std::optional<ReducedSetResult> dual_distance_at_complement_index(const RingContext& ctx, int r,
                                                                  std::size_t reduced_cap) {
  const Regime g = regime_of(ctx);
  if (g.kind == RegimeKind::FullPower) {
    if (r < 1 || r > ctx.T) throw RegimeError("r out of range");
  } else if (g.kind == RegimeKind::Gap) {
    if (r < 1 || r > g.R) throw RegimeError("r out of range");
  } else {
    throw RegimeError("complement-index dual formula needs L = 2^T or the gap regime");
  }
  const int q = pow2(ctx.T - r);
  const std::size_t M = static_cast<std::size_t>(ctx.n / q);
  const Gf2Poly Vp = mul_trunc(order_binomial(ctx), pow_trunc(ctx.U_star, static_cast<std::uint64_t>(pow2(r) - 1), M), M);
  return min_over_exact_degree(Vp, ctx.m * (pow2(r) - 1) - 1, M, reduced_cap);
}

bool sequential_closure_check(const DualCode& dual, std::size_t samples) {
  const auto n = static_cast<std::size_t>(dual.ctx.n);
  const PolycyclicCode code(dual.ctx, dual.j);
  const Gf2Matrix g = code.generator_matrix();
  auto closed = [&](const Gf2Poly& c) {
    std::vector<std::size_t> exps;
    for (auto e : c.exponents())
      if (e > 0) exps.push_back(e - 1);
    Gf2Poly shifted = Gf2Poly::from_exponents(exps);
    if (orthogonal_to_rows(g, shifted)) return true;
    shifted.flip(n - 1);
    return orthogonal_to_rows(g, shifted);
  };
  for (std::size_t r = 0; r < dual.spanning.rows(); ++r)
    if (!closed(dual.spanning.row_poly(r))) return false;
  std::mt19937_64 rng(0x5eed + static_cast<std::uint64_t>(dual.j));
  for (std::size_t t = 0; t < samples; ++t) {
    Gf2Poly w;
    for (std::size_t r = 0; r < dual.spanning.rows(); ++r)
      if (rng() & 1U) w += dual.spanning.row_poly(r);
    if (!closed(w)) return false;
  }
  return true;
}

DualSummary dual_summary(const RingContext& ctx, int j, const ProfileOptions& opts) {
  DualSummary s;
  s.j = j;
  s.n = ctx.n;
  s.k_dual = ctx.m * j;
  if (j < 0 || j > ctx.L) throw DomainError("index out of range");
  if (j == 0) {
    s.provenance.push_back(tag::kZeroCode);
    return s;
  }
  if (j == ctx.L) {
    s.d_dual = 1;
    s.provenance.push_back(tag::kFullSpace);
    return s;
  }
  auto record = [&](int v, const char* t) {
    if (s.d_dual && *s.d_dual != v)
      throw ConsistencyError("dual distance disagreement at j = " + std::to_string(j) + ": " +
                             std::to_string(*s.d_dual) + " vs " + std::to_string(v) + " (" + t + ")");
    s.d_dual = v;
    s.provenance.push_back(t);
  };
  const int T = ctx.T;
  for (int sidx = 1; sidx <= T; ++sidx)
    if (pow2(T - sidx) == j)
      if (auto d = dual_distance_at_power_index(ctx, sidx, opts.reduced_cap)) record(d->value, tag::kDualPowerIndex);
  const Regime g = regime_of(ctx);
  const int rmax = g.kind == RegimeKind::FullPower ? T : (g.kind == RegimeKind::Gap ? g.R : 0);
  for (int r = 1; r <= rmax; ++r)
    if (pow2(T) - pow2(T - r) == j)
      if (auto d = dual_distance_at_complement_index(ctx, r, opts.reduced_cap)) record(d->value, tag::kDualComplement);
  if (!s.d_dual.has_value() ? opts.use_oracle : opts.verify_exact) {
    const PolycyclicCode code(ctx, j);
    if (static_cast<std::size_t>(s.k_dual) <= opts.oracle_cap)
      record(dual_min_distance_bruteforce(dual_code(code), opts.oracle_cap, opts.workers), tag::kDualOracle);
    else if (static_cast<std::size_t>(code.k()) <= opts.oracle_cap)
      record(dual_min_distance_via_primal(code, opts.oracle_cap, opts.workers), tag::kPrimalTransform);
  }
  if (!s.d_dual) s.provenance.push_back(tag::kUnknown);
  return s;
}

}  // namespace polycode
