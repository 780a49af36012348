#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polycode/codes.hpp"
#include "polycode/distance.hpp"
#include "polycode/gf2matrix.hpp"
#include "polycode/ring.hpp"

namespace polycode {

// Euclidean dual of C_j, spanned by x^i h*(x) mod x^n for i < mj with
// h*(x) = (x^e+1)^(2^T-j) U*(x)^j.
struct DualCode {
  RingContext ctx;
  int j = 0;
  Gf2Poly h_star;
  int dim = 0;
  Gf2Matrix spanning;  // raw shifted rows
  Gf2Matrix reduced;   // row-reduced copy
};

// Builds the dual and checks rank = mj and G H^T = 0; throws
// ConsistencyError if either fails.
DualCode dual_code(const PolycyclicCode& code);

// True when every row of h is orthogonal to w.
bool orthogonal_to_rows(const Gf2Matrix& h, const Gf2Poly& w);

int dual_min_distance_bruteforce(const DualCode& dual, std::size_t cap, unsigned workers = 0);

// Dual distance from the primal weight distribution (primal k <= cap).
int dual_min_distance_via_primal(const PolycyclicCode& code, std::size_t cap, unsigned workers = 0);

// d-perp at j = 2^(T-s): minimum weight of (l V)^q x^(q-1) mod x^n over
// deg l = m-1 exactly, with q = 2^(T-s) and V = (x^e+1)^(2^s-1) U*.
std::optional<ReducedSetResult> dual_distance_at_power_index(const RingContext& ctx, int s,
                                                             std::size_t reduced_cap = kDefaultReducedSetCap);

// d-perp at j = 2^T - 2^(T-r) (L = 2^T, or the gap regime with r <= R):
// minimum weight of (l V')^q x^(q-1) mod x^n over deg l = m(2^r-1)-1
// exactly, with q = 2^(T-r) and V' = (x^e+1) U*^(2^r-1).
std::optional<ReducedSetResult> dual_distance_at_complement_index(const RingContext& ctx, int r,
                                                                  std::size_t reduced_cap = kDefaultReducedSetCap);

// The literal candidate (l V)^q x^(q-1) mod x^n used by both formulas.
Gf2Poly dual_candidate(const RingContext& ctx, const Gf2Poly& ell, const Gf2Poly& v, int q);

// Every spanning row (and `samples` pseudo-random dual words) has a left
// shift with some appended bit that is again a dual word.
bool sequential_closure_check(const DualCode& dual, std::size_t samples = 0);

struct DualSummary {
  int j = 0;
  int n = 0;
  int k_dual = 0;
  std::optional<int> d_dual;
  std::vector<std::string> provenance;
};

namespace tag {
inline constexpr const char* kDualPowerIndex = "dual-power-index-reduced-set";
inline constexpr const char* kDualComplement = "dual-complement-index-reduced-set";
inline constexpr const char* kDualOracle = "dual-oracle";
inline constexpr const char* kPrimalTransform = "primal-weight-transform";
inline constexpr const char* kFullSpace = "full-space";
inline constexpr const char* kUnknown = "unknown-above-cap";
}  // namespace tag

// Best available dual distance for C_j, 0 <= j <= L.
DualSummary dual_summary(const RingContext& ctx, int j, const ProfileOptions& opts = {});

}  // namespace polycode
