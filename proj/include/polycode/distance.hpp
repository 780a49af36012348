#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycode/codes.hpp"
#include "polycode/enumerate.hpp"
#include "polycode/ring.hpp"

namespace polycode {

struct Interval {
  int lower = 1;
  int upper = 1;
  bool exact() const { return lower == upper; }
};

struct DistanceReport {
  int j = 0;
  int lower = 1;
  int upper = 1;
  std::vector<std::string> provenance;
  bool exact() const { return lower == upper; }
};

// Result of a minimum over a reduced candidate family.
struct ReducedSetResult {
  int value = 0;
  std::uint64_t candidates = 0;
};

// log2 of the largest candidate family evaluated by default.
constexpr std::size_t kDefaultReducedSetCap = 24;

// Provenance tags.
namespace tag {
inline constexpr const char* kUnitIdeal = "unit-ideal";
inline constexpr const char* kZeroCode = "zero-code-convention";
inline constexpr const char* kLongOrder = "long-order-bound";
inline constexpr const char* kShortOrder = "short-order-split";
inline constexpr const char* kTrinomial = "trinomial-weight";
inline constexpr const char* kPowerIndex = "power-index-reduced-set";
inline constexpr const char* kFullLength = "full-length-reduced-set";
inline constexpr const char* kFullPlateau = "full-length-plateau";
inline constexpr const char* kUpperHalf = "upper-half-doubling";
inline constexpr const char* kGapIndex = "gap-index-reduced-set";
inline constexpr const char* kGapPlateau = "gap-plateau";
inline constexpr const char* kMonotone = "monotone-chain";
inline constexpr const char* kOracle = "oracle";
}  // namespace tag

// How L sits inside (2^(T-1), 2^T].
enum class RegimeKind {
  FullPower,  // L = 2^T
  UpperHalf,  // L = 2^(T-1) + L', 1 <= L' <= 2^(T-2)
  Gap,        // L = 2^T - 2^(T-R) + L', 2 <= R <= T-1, 1 <= L' <= 2^(T-R-1)
};

struct Regime {
  RegimeKind kind;
  int Lprime = 0;
  int R = 0;
};

Regime regime_of(const RingContext& ctx);

int min_distance_bruteforce(const PolycyclicCode& code, std::size_t cap, unsigned workers = 0);

// Primal minimum distance from the weight distribution of the dual, for
// codes whose own dimension is over the cap but whose dual is small.
int min_distance_via_dual(const PolycyclicCode& code, std::size_t cap, unsigned workers = 0);

// [3, wt(P)] for every 1 <= j <= 2^(T-1) when e >= mL.
Interval long_order_interval(const RingContext& ctx);

// Smallest J >= 1 with e 2^(T-J) < mL (requires e < mL).
int short_order_split(const RingContext& ctx);

// Bounds for j = 1..2^(T-1) (entry j-1), choosing the order case.
std::vector<Interval> low_index_bounds(const RingContext& ctx);

// Exact distance at j = 2^(T-s). nullopt when the candidate family exceeds
// 2^reduced_cap.
int power_index_lambda(const RingContext& ctx, int s);
std::optional<ReducedSetResult> distance_at_power_index(const RingContext& ctx, int s,
                                                        std::size_t reduced_cap = kDefaultReducedSetCap);

// Exact distance at j = 2^T - 2^(T-r) when L = 2^T.
std::optional<ReducedSetResult> distance_at_full_length_index(const RingContext& ctx, int r,
                                                              std::size_t reduced_cap = kDefaultReducedSetCap);

// [2 d_{2^T-2^(T-r)}, d_{2^T-2^(T-r-1)}] for j = 2^T - 2^(T-r) + i when L = 2^T.
std::optional<Interval> full_length_plateau(const RingContext& ctx, int r, int i,
                                            std::size_t reduced_cap = kDefaultReducedSetCap);

// Lower bound 2 d_{2^(T-1)} for j = 2^(T-1) + i in the upper-half regime.
std::optional<int> upper_half_lower_bound(const RingContext& ctx, int i,
                                          std::size_t reduced_cap = kDefaultReducedSetCap);

// Exact distance at j = 2^T - 2^(T-r) in the gap regime.
int gap_index_lambda(const RingContext& ctx, int r);
std::optional<ReducedSetResult> distance_at_gap_index(const RingContext& ctx, int r,
                                                      std::size_t reduced_cap = kDefaultReducedSetCap);

// Gap regime plateaus. For r < R: [2 d_{2^T-2^(T-r)}, d_{2^T-2^(T-r-1)}] at
// j = 2^T - 2^(T-r) + i. For r = R: lower bound 2 d_{2^T-2^(T-R)} (upper = n).
std::optional<Interval> gap_plateau(const RingContext& ctx, int r, int i,
                                    std::size_t reduced_cap = kDefaultReducedSetCap);

struct ProfileOptions {
  bool use_oracle = false;
  std::size_t oracle_cap = kDefaultEnumerationCap;
  std::size_t reduced_cap = kDefaultReducedSetCap;
  // Also run the oracle on exact entries and require agreement.
  bool verify_exact = false;
  unsigned workers = 0;
};

// Reports for j = 0..L.
std::vector<DistanceReport> full_distance_profile(const RingContext& ctx, const ProfileOptions& opts = {});

}  // namespace polycode
