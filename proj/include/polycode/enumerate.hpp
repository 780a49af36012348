#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "polycode/gf2matrix.hpp"

namespace polycode {

constexpr std::size_t kDefaultEnumerationCap = 28;

// POLYCODE_ORACLE_CAP if set to a positive integer, else the default.
std::size_t enumeration_cap();
unsigned default_workers();

// Weight distribution of the row space of an independent basis, by Gray-code
// enumeration. The message space is split on the top message bits; each
// worker handles a fixed set of blocks, so the result does not depend on the
// number of workers. workers = 0 means default_workers().
std::vector<std::uint64_t> weight_distribution(const Gf2Matrix& basis, std::size_t cap, unsigned workers = 0);

// Minimum nonzero weight in the row space.
int min_weight(const Gf2Matrix& basis, std::size_t cap, unsigned workers = 0);

// Visit every vector of the row space once, in Gray-code message order.
void gray_enumerate(const Gf2Matrix& basis, std::size_t cap, const std::function<void(const Gf2Poly&)>& visit);

// Minimum weight over the affine set base + span(dirs), each word truncated
// to nbits; all 2^|dirs| combinations are visited. Combinations that vanish
// after truncation count with weight 0.
int affine_min_weight(const Gf2Poly& base, const std::vector<Gf2Poly>& dirs, std::size_t nbits);

// Minimum distance of the code whose dual has weight distribution dual_hist,
// by the MacWilliams transform in exact integer arithmetic.
int macwilliams_min_distance(std::size_t n, const std::vector<std::uint64_t>& dual_hist);

}  // namespace polycode
