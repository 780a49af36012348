#include "polycode/ring.hpp"

#include <string>

#include "polycode/errors.hpp"

namespace polycode {

int chain_exponent(int L) {
  int T = 1;
  while ((1LL << T) < L) ++T;
  return T;
}

RingContext new_context(const Gf2Poly& P, int L) {
  if (P.degree() < 2) throw ValidationError("P must have degree at least 2, got " + P.str());
  if (!is_irreducible(P)) throw ValidationError("P must be irreducible over GF(2), got " + P.str());
  if (L < 2) throw ValidationError("L must be at least 2, got " + std::to_string(L));
  RingContext ctx;
  ctx.P = P;
  ctx.m = P.degree();
  ctx.L = L;
  ctx.T = chain_exponent(L);
  ctx.n = ctx.m * L;
  ctx.e = order(P);
  auto [u, r] = div_rem(Gf2Poly::monomial(ctx.e) + Gf2Poly::one(), P);
  if (!r.is_zero()) throw ConsistencyError("P does not divide x^e+1");
  if (!gcd(P, u).is_one()) throw ConsistencyError("gcd(P, U) is not 1");
  ctx.U = u;
  ctx.U_star = reciprocal(u);
  ctx.modulus = pow(P, static_cast<std::uint64_t>(L));
  return ctx;
}

Classification classify(const RingContext& ctx, const Gf2Poly& a) {
  if (a.degree() >= ctx.n) throw DomainError("element degree must be below n = " + std::to_string(ctx.n));
  if (a.is_zero()) return {ElementKind::Zero, 0};
  int j = 0;
  Gf2Poly cur = a;
  while (true) {
    auto [q, r] = div_rem(cur, ctx.P);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++j;
  }
  if (j == 0) return {ElementKind::Unit, 0};
  return {ElementKind::Nilpotent, j};
}

Gf2Poly ideal_generator(const RingContext& ctx, int j) {
  if (j < 0 || j > ctx.L) throw DomainError("ideal index out of range: " + std::to_string(j));
  if (j == ctx.L) return {};
  return pow(ctx.P, static_cast<std::uint64_t>(j));
}

Gf2Poly associate_vector(const RingContext& ctx) {
  return ctx.modulus + Gf2Poly::monomial(static_cast<std::size_t>(ctx.n));
}

Gf2Poly order_binomial(const RingContext& ctx) { return Gf2Poly::monomial(ctx.e) + Gf2Poly::one(); }

}  // namespace polycode
