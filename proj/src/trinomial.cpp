#include "polycode/trinomial.hpp"

#include <algorithm>
#include <string>

#include "polycode/duality.hpp"
#include "polycode/errors.hpp"

namespace polycode {

namespace {

int pow2(int k) { return 1 << k; }

std::size_t pow3(int v) {
  std::size_t p = 1;
  for (int i = 0; i < v; ++i) p *= 3;
  return p;
}

int plain_weight(int r) { return r % 2 == 0 ? (pow2(r + 2) - 1) / 3 : (pow2(r + 2) + 1) / 3; }
int shifted_weight(int r) { return r % 2 == 0 ? (pow2(r + 2) + 2) / 3 : (pow2(r + 2) - 2) / 3; }

class ProfileBuilder {
 public:
  ProfileBuilder(int L, int n) : reports_(static_cast<std::size_t>(L) + 1) {
    for (int j = 0; j <= L; ++j) {
      reports_[static_cast<std::size_t>(j)].j = j;
      reports_[static_cast<std::size_t>(j)].lower = 1;
      reports_[static_cast<std::size_t>(j)].upper = n;
    }
  }

  void apply(int j, int lo, int hi, const char* t) {
    DistanceReport& r = reports_.at(static_cast<std::size_t>(j));
    const int nlo = std::max(r.lower, lo);
    const int nhi = std::min(r.upper, hi);
    if (nlo > nhi)
      throw ConsistencyError("closed forms disagree at j = " + std::to_string(j) + " (" + t + ")");
    r.lower = nlo;
    r.upper = nhi;
    if (std::find(r.provenance.begin(), r.provenance.end(), t) == r.provenance.end()) r.provenance.emplace_back(t);
  }

  void exact(int j, int d, const char* t) { apply(j, d, d, t); }

  std::vector<DistanceReport> take() { return std::move(reports_); }

 private:
  std::vector<DistanceReport> reports_;
};

}  // namespace

Gf2Poly trinomial(int v) {
  if (v < 0) throw DomainError("v must be non-negative");
  const std::size_t a = pow3(v);
  return Gf2Poly::from_exponents({0, a, 2 * a});
}

TrinomialContext trinomial_context(int v, int L) {
  TrinomialContext t;
  t.v = v;
  t.ring = new_context(trinomial(v), L);
  t.T = t.ring.T;
  if (t.ring.e != 3 * pow3(v)) throw ConsistencyError("trinomial order is not 3^(v+1)");
  if (t.ring.U != t.ring.U_star) throw ConsistencyError("trinomial cofactor is not self-reciprocal");
  return t;
}

Gf2Poly expansion_pow_2r_minus_1(std::size_t n, int r) {
  if (r < 2) throw DomainError("expansion needs r >= 2");
  if (n == 0) throw DomainError("n must be positive");
  const std::size_t q = std::size_t{1} << r;
  std::vector<std::size_t> e;
  if (r % 2 == 0) {
    const std::size_t a = (q - 1) / 3;
    for (std::size_t j = 0; j < a; ++j) {
      e.push_back(3 * j);
      e.push_back(3 * j + 1);
    }
    e.push_back(q - 1);
    for (std::size_t j = a; j < 2 * a; ++j) {
      e.push_back(3 * j + 2);
      e.push_back(3 * j + 3);
    }
  } else {
    const std::size_t a = (q - 2) / 3;
    for (std::size_t j = 0; j < a; ++j) {
      e.push_back(3 * j);
      e.push_back(3 * j + 1);
    }
    e.push_back(q - 2);
    e.push_back(q - 1);
    e.push_back(q);
    for (std::size_t j = (q + 1) / 3; j <= 2 * a; ++j) {
      e.push_back(3 * j + 1);
      e.push_back(3 * j + 2);
    }
  }
  for (auto& x : e) x *= n;
  return Gf2Poly::from_exponents(e);
}

WeightPair weight_formulas(int v, int r) {
  if (r < 2) throw DomainError("weight formulas need r >= 2");
  const Gf2Poly P = trinomial(v);
  const Gf2Poly Pq = pow(P, static_cast<std::uint64_t>(pow2(r) - 1));
  const Gf2Poly shift = Gf2Poly::from_exponents({0, pow3(v)});
  WeightPair w{plain_weight(r), shifted_weight(r)};
  if (static_cast<int>(weight(Pq)) != w.plain)
    throw ConsistencyError("plain weight formula fails at r = " + std::to_string(r));
  if (static_cast<int>(weight(shift * Pq)) != w.shifted)
    throw ConsistencyError("shifted weight formula fails at r = " + std::to_string(r));
  return w;
}

int family_complement_distance(int r) {
  if (r < 2) throw DomainError("complement index needs r >= 2");
  return r % 2 == 0 ? (pow2(r + 2) - 1) / 3 : (pow2(r + 2) - 2) / 3;
}

std::vector<DistanceReport> family_distance_profile(int v, int T, int L) {
  if (L < 2) throw ValidationError("L must be at least 2");
  if (T != chain_exponent(L)) throw DomainError("T does not match L");
  const int n = static_cast<int>(2 * pow3(v)) * L;
  ProfileBuilder b(L, n);
  b.exact(0, 1, tag::kUnitIdeal);
  b.exact(L, n, tag::kZeroCode);

  // Low indices: weight-2 words x^(3^(v+1) 2^(T-J)) + 1 while they fit.
  int J = 1;
  while (3 * pow2(T - J) >= 2 * L) ++J;
  for (int j = 1; j <= pow2(T - 1) && j < L; ++j) b.exact(j, j <= pow2(T - J) ? 2 : 3, tag::kFamilyLow);

  const int full = pow2(T);
  if (L == full) {
    for (int r = 2; r <= T; ++r) b.exact(full - pow2(T - r), family_complement_distance(r), tag::kFamilyComplement);
    for (int r = 1; r <= T - 1; ++r) {
      const int base = full - pow2(T - r);
      for (int i = 1; i <= pow2(T - r - 1); ++i) {
        if (r == 1)
          b.apply(base + i, 4, 5, tag::kFamilyPlateau);
        else if (r % 2 == 0)
          b.exact(base + i, (pow2(r + 3) - 2) / 3, tag::kFamilyPlateau);
        else
          b.apply(base + i, (pow2(r + 3) - 4) / 3, (pow2(r + 3) - 4) / 3 + 1, tag::kFamilyPlateau);
      }
    }
    return b.take();
  }

  const int half = pow2(T - 1);
  if (T >= 2 && L - half <= pow2(T - 2)) {
    for (int j = half + 1; j < L; ++j) b.apply(j, 6, n, tag::kFamilyUpperHalf);
    return b.take();
  }

  const Regime g = [&] {
    int R = 2;
    while (R <= T - 1) {
      const int Lp = L - (full - pow2(T - R));
      if (Lp >= 1 && Lp <= pow2(T - R - 1)) return Regime{RegimeKind::Gap, Lp, R};
      ++R;
    }
    throw ConsistencyError("L fits no regime");
  }();
  const int R = g.R;
  for (int r = 1; r <= R; ++r) {
    int d;
    if (r % 2 == 0)
      d = (pow2(r + 2) - 1) / 3;
    else if (r < R)
      d = (pow2(r + 2) - 2) / 3;
    else
      d = (pow2(R + 2) + 1) / 3;
    b.exact(full - pow2(T - r), d, tag::kFamilyGapIndex);
  }
  for (int r = 1; r <= R - 2; ++r) {
    const int base = full - pow2(T - r);
    for (int i = 1; i <= pow2(T - r - 1); ++i) {
      if (r % 2 == 0)
        b.exact(base + i, (pow2(r + 3) - 2) / 3, tag::kFamilyGapPlateau);
      else
        b.apply(base + i, (pow2(r + 3) - 4) / 3, (pow2(r + 3) - 4) / 3 + 1, tag::kFamilyGapPlateau);
    }
  }
  {
    const int r = R - 1;
    const int base = full - pow2(T - r);
    const int lo = r % 2 == 0 ? (pow2(R + 2) - 2) / 3 : (pow2(R + 2) - 4) / 3;
    for (int i = 1; i <= pow2(T - R); ++i) b.apply(base + i, lo, lo + 1, tag::kFamilyGapPlateau);
  }
  {
    const int base = full - pow2(T - R);
    const int lo = R % 2 == 0 ? (pow2(R + 3) - 2) / 3 : (pow2(R + 3) + 2) / 3;
    for (int i = 1; i < g.Lprime; ++i) b.apply(base + i, lo, n, tag::kFamilyGapPlateau);
  }
  return b.take();
}

int family_dual_d1(int v, int T) {
  if (T < 1) throw DomainError("T must be positive");
  const int d = T % 2 == 1 ? (pow2(T + 2) - 2) / 3 : (pow2(T + 2) - 1) / 3;
  const TrinomialContext t = trinomial_context(v, pow2(T));
  if (auto r = dual_distance_at_power_index(t.ring, T))
    if (r->value != d)
      throw ConsistencyError("closed-form dual distance " + std::to_string(d) + " differs from reduced-set value " +
                             std::to_string(r->value));
  return d;
}

bool is_irreducible_trinomial(std::size_t n) {
  if (n == 0) return false;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

}  // namespace polycode
