#pragma once

#include <cstddef>
#include <vector>

#include "polycode/distance.hpp"
#include "polycode/gf2poly.hpp"
#include "polycode/ring.hpp"

namespace polycode {

// x^(2*3^v) + x^(3^v) + 1.
Gf2Poly trinomial(int v);

struct TrinomialContext {
  int v = 0;
  int T = 0;
  RingContext ring;
};

TrinomialContext trinomial_context(int v, int L);

// Closed-form (x^(2n) + x^n + 1)^(2^r - 1), r >= 2.
Gf2Poly expansion_pow_2r_minus_1(std::size_t n, int r);

struct WeightPair {
  int plain = 0;    // wt(P^(2^r-1))
  int shifted = 0;  // wt((1 + x^(3^v)) P^(2^r-1))
};

// Closed forms, checked against direct popcounts (ConsistencyError on mismatch).
WeightPair weight_formulas(int v, int r);

// Closed-form distance at j = 2^T - 2^(T-r) when L = 2^T, 2 <= r <= T.
int family_complement_distance(int r);

// Distance profile j = 0..L from the closed forms alone. T must equal the
// chain exponent of L.
std::vector<DistanceReport> family_distance_profile(int v, int T, int L);

// Closed-form dual distance of C_1 when L = 2^T, checked against the dual
// reduced-set minimum.
int family_dual_d1(int v, int T);

// x^(2n) + x^n + 1 is irreducible iff n is a power of 3.
bool is_irreducible_trinomial(std::size_t n);

namespace tag {
inline constexpr const char* kFamilyLow = "family-low-index";
inline constexpr const char* kFamilyComplement = "family-complement-index";
inline constexpr const char* kFamilyPlateau = "family-plateau";
inline constexpr const char* kFamilyUpperHalf = "family-upper-half";
inline constexpr const char* kFamilyGapIndex = "family-gap-index";
inline constexpr const char* kFamilyGapPlateau = "family-gap-plateau";
}  // namespace tag

}  // namespace polycode
