#include "polycode/distance.hpp"

#include <algorithm>
#include <string>

#include "polycode/errors.hpp"

namespace polycode {

namespace {

int pow2(int k) { return 1 << k; }

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

// min wt(a * f) over a with deg a <= lambda-1 and constant term 1.
std::optional<ReducedSetResult> min_over_unit_multipliers(const Gf2Poly& f, int lambda, std::size_t reduced_cap) {
  if (lambda < 1) throw ConsistencyError("reduced-set parameter must be positive");
  if (static_cast<std::size_t>(lambda - 1) > reduced_cap) return std::nullopt;
  std::vector<Gf2Poly> dirs;
  for (int i = 1; i < lambda; ++i) dirs.push_back(f << static_cast<std::size_t>(i));
  const std::size_t nbits = static_cast<std::size_t>(f.degree() + lambda);
  return ReducedSetResult{affine_min_weight(f, dirs, nbits), std::uint64_t{1} << (lambda - 1)};
}

}  // namespace

Regime regime_of(const RingContext& ctx) {
  const int L = ctx.L, T = ctx.T;
  if (L == pow2(T)) return {RegimeKind::FullPower, 0, 0};
  if (T >= 2 && L - pow2(T - 1) <= pow2(T - 2)) return {RegimeKind::UpperHalf, L - pow2(T - 1), 0};
  for (int R = 2; R <= T - 1; ++R) {
    const int base = pow2(T) - pow2(T - R);
    if (L > base && L <= base + pow2(T - R - 1)) return {RegimeKind::Gap, L - base, R};
  }
  throw ConsistencyError("L = " + std::to_string(L) + " fits no regime");
}

int min_distance_bruteforce(const PolycyclicCode& code, std::size_t cap, unsigned workers) {
  if (code.k() == 0) throw DomainError("minimum distance of the zero code is undefined");
  return min_weight(code.generator_matrix(), cap, workers);
}

int min_distance_via_dual(const PolycyclicCode& code, std::size_t cap, unsigned workers) {
  if (code.k() == 0) throw DomainError("minimum distance of the zero code is undefined");
  const Gf2Matrix h = code.generator_matrix().nullspace();
  return macwilliams_min_distance(static_cast<std::size_t>(code.n()), weight_distribution(h, cap, workers));
}

Interval long_order_interval(const RingContext& ctx) {
  if (ctx.e < static_cast<std::uint64_t>(ctx.n))
    throw RegimeError("order is below mL; use the short-order split");
  return {3, static_cast<int>(ctx.P.weight())};
}

int short_order_split(const RingContext& ctx) {
  if (ctx.e >= static_cast<std::uint64_t>(ctx.n)) throw RegimeError("order is at least mL; use the long-order bound");
  for (int J = 1; J <= ctx.T; ++J)
    if (ctx.e * static_cast<std::uint64_t>(pow2(ctx.T - J)) < static_cast<std::uint64_t>(ctx.n)) return J;
  throw ConsistencyError("no split index found");
}

std::vector<Interval> low_index_bounds(const RingContext& ctx) {
  const int half = pow2(ctx.T - 1);
  const int w = static_cast<int>(ctx.P.weight());
  std::vector<Interval> out(static_cast<std::size_t>(half), Interval{3, w});
  if (ctx.e < static_cast<std::uint64_t>(ctx.n)) {
    const int J = short_order_split(ctx);
    for (int j = 1; j <= pow2(ctx.T - J); ++j) out[static_cast<std::size_t>(j - 1)] = {2, 2};
  }
  return out;
}

int power_index_lambda(const RingContext& ctx, int s) {
  if (s < 1 || s > ctx.T) throw RegimeError("power index s out of range");
  const long long q = pow2(ctx.T - s);
  return ceil_div(static_cast<long long>(ctx.m) * (ctx.L - q), q);
}

std::optional<ReducedSetResult> distance_at_power_index(const RingContext& ctx, int s, std::size_t reduced_cap) {
  const int lambda = power_index_lambda(ctx, s);
  if (lambda == 1) return ReducedSetResult{static_cast<int>(pow(ctx.P, static_cast<std::uint64_t>(pow2(ctx.T - s))).weight()), 1};
  // wt(a^q P^q) = wt(a P) by the Frobenius map.
  return min_over_unit_multipliers(ctx.P, lambda, reduced_cap);
}

std::optional<ReducedSetResult> distance_at_full_length_index(const RingContext& ctx, int r, std::size_t reduced_cap) {
  if (ctx.L != pow2(ctx.T)) throw RegimeError("full-length formula needs L = 2^T");
  if (r < 1 || r > ctx.T) throw RegimeError("r out of range");
  const Gf2Poly f = pow(ctx.P, static_cast<std::uint64_t>(pow2(r) - 1));
  return min_over_unit_multipliers(f, ctx.m, reduced_cap);
}

std::optional<Interval> full_length_plateau(const RingContext& ctx, int r, int i, std::size_t reduced_cap) {
  if (ctx.L != pow2(ctx.T)) throw RegimeError("full-length plateau needs L = 2^T");
  if (r < 1 || r > ctx.T - 2 || i < 1 || i > pow2(ctx.T - r - 1)) throw RegimeError("plateau index out of range");
  const auto lo = distance_at_full_length_index(ctx, r, reduced_cap);
  const auto hi = distance_at_full_length_index(ctx, r + 1, reduced_cap);
  if (!lo || !hi) return std::nullopt;
  return Interval{2 * lo->value, hi->value};
}

std::optional<int> upper_half_lower_bound(const RingContext& ctx, int i, std::size_t reduced_cap) {
  const Regime g = regime_of(ctx);
  if (g.kind != RegimeKind::UpperHalf || g.Lprime < 2) throw RegimeError("upper-half doubling needs L = 2^(T-1)+L' with L' > 1");
  if (i < 1 || i >= g.Lprime) throw RegimeError("i out of range");
  const auto d = distance_at_power_index(ctx, 1, reduced_cap);
  if (!d) return std::nullopt;
  return 2 * d->value;
}

int gap_index_lambda(const RingContext& ctx, int r) {
  const Regime g = regime_of(ctx);
  if (g.kind != RegimeKind::Gap) throw RegimeError("gap formula needs L = 2^T - 2^(T-R) + L'");
  if (r < 1 || r > g.R) throw RegimeError("r out of range");
  const long long q = pow2(ctx.T - r);
  const long long num = static_cast<long long>(ctx.m) * q - static_cast<long long>(ctx.m) * (pow2(ctx.T - g.R) - g.Lprime);
  return ceil_div(num, q);
}

std::optional<ReducedSetResult> distance_at_gap_index(const RingContext& ctx, int r, std::size_t reduced_cap) {
  const int lambda = gap_index_lambda(ctx, r);
  if (lambda == 1)
    return ReducedSetResult{
        static_cast<int>(pow(ctx.P, static_cast<std::uint64_t>(pow2(ctx.T) - pow2(ctx.T - r))).weight()), 1};
  const Gf2Poly f = pow(ctx.P, static_cast<std::uint64_t>(pow2(r) - 1));
  return min_over_unit_multipliers(f, lambda, reduced_cap);
}

std::optional<Interval> gap_plateau(const RingContext& ctx, int r, int i, std::size_t reduced_cap) {
  const Regime g = regime_of(ctx);
  if (g.kind != RegimeKind::Gap) throw RegimeError("gap plateau needs the gap regime");
  if (r < 1 || r > g.R) throw RegimeError("r out of range");
  const auto lo = distance_at_gap_index(ctx, r, reduced_cap);
  if (!lo) return std::nullopt;
  if (r == g.R) {
    if (i < 1 || i >= g.Lprime) throw RegimeError("i out of range");
    return Interval{2 * lo->value, ctx.n};
  }
  if (i < 1 || i > pow2(ctx.T - r - 1)) throw RegimeError("i out of range");
  const auto hi = distance_at_gap_index(ctx, r + 1, reduced_cap);
  if (!hi) return std::nullopt;
  return Interval{2 * lo->value, hi->value};
}

std::vector<DistanceReport> full_distance_profile(const RingContext& ctx, const ProfileOptions& opts) {
  const int L = ctx.L, T = ctx.T, n = ctx.n;
  std::vector<Interval> b(static_cast<std::size_t>(L + 1), Interval{1, n});
  std::vector<std::vector<std::string>> prov(static_cast<std::size_t>(L + 1));
  auto note = [&](int j, const std::string& t) {
    auto& p = prov[static_cast<std::size_t>(j)];
    if (std::find(p.begin(), p.end(), t) == p.end()) p.push_back(t);
  };
  auto apply = [&](int j, int lo, int hi, const char* t) {
    auto& x = b[static_cast<std::size_t>(j)];
    x.lower = std::max(x.lower, lo);
    x.upper = std::min(x.upper, hi);
    note(j, t);
  };
  auto at = [&](int j) -> Interval& { return b[static_cast<std::size_t>(j)]; };

  apply(0, 1, 1, tag::kUnitIdeal);
  apply(L, n, n, tag::kZeroCode);

  const auto low = low_index_bounds(ctx);
  const bool long_order = ctx.e >= static_cast<std::uint64_t>(n);
  for (int j = 1; j <= pow2(T - 1); ++j) {
    const Interval& x = low[static_cast<std::size_t>(j - 1)];
    apply(j, x.lower, x.upper, long_order ? tag::kLongOrder : tag::kShortOrder);
    if (x.lower == 3 && ctx.P.weight() == 3) note(j, tag::kTrinomial);
  }

  for (int s = 1; s <= T; ++s) {
    const int j = pow2(T - s);
    if (auto d = distance_at_power_index(ctx, s, opts.reduced_cap)) apply(j, d->value, d->value, tag::kPowerIndex);
  }

  const Regime g = regime_of(ctx);
  if (g.kind == RegimeKind::FullPower) {
    for (int r = 1; r <= T; ++r)
      if (auto d = distance_at_full_length_index(ctx, r, opts.reduced_cap))
        apply(pow2(T) - pow2(T - r), d->value, d->value, tag::kFullLength);
  } else if (g.kind == RegimeKind::Gap) {
    for (int r = 1; r <= g.R; ++r)
      if (auto d = distance_at_gap_index(ctx, r, opts.reduced_cap))
        apply(pow2(T) - pow2(T - r), d->value, d->value, tag::kGapIndex);
  }

  auto check = [&] {
    for (int j = 0; j <= L; ++j)
      if (at(j).lower > at(j).upper)
        throw ConsistencyError("empty distance interval at j = " + std::to_string(j) + ": [" +
                               std::to_string(at(j).lower) + ", " + std::to_string(at(j).upper) + "]");
  };

  // Plateau rules and monotone chaining feed each other; iterate to a fixpoint.
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      std::vector<Interval> before = b;
      if (g.kind == RegimeKind::FullPower) {
        for (int r = 1; r <= T - 2; ++r) {
          const int j0 = pow2(T) - pow2(T - r), j1 = pow2(T) - pow2(T - r - 1);
          for (int i = 1; i <= pow2(T - r - 1); ++i) apply(j0 + i, 2 * at(j0).lower, at(j1).upper, tag::kFullPlateau);
        }
      } else if (g.kind == RegimeKind::UpperHalf) {
        const int j0 = pow2(T - 1);
        for (int i = 1; i < g.Lprime; ++i) apply(j0 + i, 2 * at(j0).lower, n, tag::kUpperHalf);
      } else {
        for (int r = 1; r <= g.R - 1; ++r) {
          const int j0 = pow2(T) - pow2(T - r), j1 = pow2(T) - pow2(T - r - 1);
          for (int i = 1; i <= pow2(T - r - 1); ++i) apply(j0 + i, 2 * at(j0).lower, at(j1).upper, tag::kGapPlateau);
        }
        const int j0 = pow2(T) - pow2(T - g.R);
        for (int i = 1; i < g.Lprime; ++i) apply(j0 + i, 2 * at(j0).lower, n, tag::kGapPlateau);
      }
      for (int j = 1; j < L; ++j)
        if (at(j - 1).lower > at(j).lower) {
          at(j).lower = at(j - 1).lower;
          note(j, tag::kMonotone);
        }
      for (int j = L - 1; j >= 1; --j)
        if (at(j + 1).upper < at(j).upper) {
          at(j).upper = at(j + 1).upper;
          note(j, tag::kMonotone);
        }
      changed = false;
      for (int j = 0; j <= L; ++j)
        if (before[static_cast<std::size_t>(j)].lower != at(j).lower ||
            before[static_cast<std::size_t>(j)].upper != at(j).upper)
          changed = true;
      check();
    }
  };
  propagate();

  if (opts.use_oracle || opts.verify_exact) {
    auto oracle_value = [&](int j) -> std::optional<int> {
      const PolycyclicCode code(ctx, j);
      if (static_cast<std::size_t>(code.k()) <= opts.oracle_cap)
        return min_distance_bruteforce(code, opts.oracle_cap, opts.workers);
      if (static_cast<std::size_t>(n - code.k()) <= opts.oracle_cap)
        return min_distance_via_dual(code, opts.oracle_cap, opts.workers);
      return std::nullopt;
    };
    for (int j = 1; j < L; ++j) {
      const bool was_exact = at(j).exact();
      if (was_exact && !opts.verify_exact) continue;
      if (!was_exact && !opts.use_oracle) continue;
      const auto v = oracle_value(j);
      if (!v) continue;
      if (*v < at(j).lower || *v > at(j).upper)
        throw ConsistencyError("oracle distance " + std::to_string(*v) + " at j = " + std::to_string(j) +
                               " lies outside [" + std::to_string(at(j).lower) + ", " + std::to_string(at(j).upper) +
                               "]");
      apply(j, *v, *v, tag::kOracle);
    }
    propagate();
  }

  std::vector<DistanceReport> out;
  for (int j = 0; j <= L; ++j)
    out.push_back(DistanceReport{j, at(j).lower, at(j).upper, prov[static_cast<std::size_t>(j)]});
  return out;
}

}  // namespace polycode
