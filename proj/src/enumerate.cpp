#include "polycode/enumerate.hpp"

#include <array>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>

#include "polycode/errors.hpp"

namespace polycode {

namespace {

using i128 = __int128;

// Number of top message bits used to split the work into blocks.
constexpr std::size_t kSplitBits = 6;

template <std::size_t W>
void block_histogram(const std::vector<std::array<std::uint64_t, W>>& rows, std::size_t low, std::uint64_t prefix,
                     std::vector<std::uint64_t>& hist) {
  std::array<std::uint64_t, W> cur{};
  for (std::size_t b = 0; low + b < rows.size(); ++b)
    if ((prefix >> b) & 1U)
      for (std::size_t i = 0; i < W; ++i) cur[i] ^= rows[low + b][i];
  auto wt = [&cur] {
    unsigned s = 0;
    for (std::size_t i = 0; i < W; ++i) s += static_cast<unsigned>(std::popcount(cur[i]));
    return s;
  };
  ++hist[wt()];
  const std::uint64_t count = std::uint64_t{1} << low;
  for (std::uint64_t g = 1; g < count; ++g) {
    const auto& r = rows[static_cast<std::size_t>(std::countr_zero(g))];
    for (std::size_t i = 0; i < W; ++i) cur[i] ^= r[i];
    ++hist[wt()];
  }
}

template <std::size_t W>
std::vector<std::uint64_t> distribution_impl(const Gf2Matrix& basis, unsigned workers) {
  std::vector<std::array<std::uint64_t, W>> rows(basis.rows());
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t i = 0; i < W; ++i) rows[r][i] = i < basis.stride() ? basis.row(r)[i] : 0;
  const std::size_t k = rows.size();
  const std::size_t high = k > kSplitBits + 8 ? kSplitBits : 0;
  const std::size_t low = k - high;
  const std::uint64_t blocks = std::uint64_t{1} << high;
  if (workers == 0) workers = 1;
  if (workers > blocks) workers = static_cast<unsigned>(blocks);

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(basis.cols() + 1, 0));
  auto run = [&](unsigned w) {
    for (std::uint64_t b = w; b < blocks; b += workers) block_histogram<W>(rows, low, b, partial[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> hist(basis.cols() + 1, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += p[i];
  return hist;
}

template <std::size_t... Ws>
std::vector<std::uint64_t> dispatch(const Gf2Matrix& basis, unsigned workers, std::index_sequence<Ws...>) {
  std::vector<std::uint64_t> out;
  const bool done = ((basis.stride() <= Ws + 1 ? (out = distribution_impl<Ws + 1>(basis, workers), true) : false) || ...);
  if (!done) throw CapError("codeword length " + std::to_string(basis.cols()) + " exceeds the enumeration limit of 512");
  return out;
}

i128 binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  i128 c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<i128>(n - i) / static_cast<i128>(i + 1);
  return c;
}

}  // namespace

std::size_t enumeration_cap() {
  if (const char* s = std::getenv("POLYCODE_ORACLE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultEnumerationCap;
}

unsigned default_workers() {
  const unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

std::vector<std::uint64_t> weight_distribution(const Gf2Matrix& basis, std::size_t cap, unsigned workers) {
  if (basis.rows() > cap)
    throw CapError("dimension " + std::to_string(basis.rows()) + " exceeds the enumeration cap " + std::to_string(cap));
  if (basis.rows() > 62) throw CapError("dimension above 62 cannot be enumerated");
  if (basis.rank() != basis.rows()) throw DomainError("enumeration basis rows are linearly dependent");
  if (workers == 0) workers = default_workers();
  if (basis.rows() == 0) {
    std::vector<std::uint64_t> h(basis.cols() + 1, 0);
    h[0] = 1;
    return h;
  }
  return dispatch(basis, workers, std::make_index_sequence<8>{});
}

int min_weight(const Gf2Matrix& basis, std::size_t cap, unsigned workers) {
  if (basis.rows() == 0) throw DomainError("minimum weight of the zero code is undefined");
  const auto hist = weight_distribution(basis, cap, workers);
  if (hist[0] != 1) throw ConsistencyError("zero word counted more than once");
  for (std::size_t w = 1; w < hist.size(); ++w)
    if (hist[w]) return static_cast<int>(w);
  throw ConsistencyError("nonzero code with no nonzero word");
}

void gray_enumerate(const Gf2Matrix& basis, std::size_t cap, const std::function<void(const Gf2Poly&)>& visit) {
  if (basis.rows() > cap)
    throw CapError("dimension " + std::to_string(basis.rows()) + " exceeds the enumeration cap " + std::to_string(cap));
  const auto rows = basis.row_polys();
  Gf2Poly cur;
  visit(cur);
  const std::uint64_t count = std::uint64_t{1} << rows.size();
  for (std::uint64_t g = 1; g < count; ++g) {
    cur += rows[static_cast<std::size_t>(std::countr_zero(g))];
    visit(cur);
  }
}

int affine_min_weight(const Gf2Poly& base, const std::vector<Gf2Poly>& dirs, std::size_t nbits) {
  if (dirs.size() > 62) throw CapError("affine set too large to enumerate");
  const std::size_t W = (nbits + 63) / 64;
  auto load = [&](const Gf2Poly& p) {
    const Gf2Poly t = truncate(p, nbits);
    std::vector<std::uint64_t> v(W, 0);
    for (std::size_t i = 0; i < t.words().size(); ++i) v[i] = t.words()[i];
    return v;
  };
  std::vector<std::uint64_t> cur = load(base);
  std::vector<std::uint64_t> flat;
  flat.reserve(dirs.size() * W);
  for (const auto& d : dirs) {
    auto v = load(d);
    flat.insert(flat.end(), v.begin(), v.end());
  }
  auto wt = [&] {
    int s = 0;
    for (auto w : cur) s += std::popcount(w);
    return s;
  };
  int best = wt();
  const std::uint64_t count = std::uint64_t{1} << dirs.size();
  for (std::uint64_t g = 1; g < count; ++g) {
    const std::uint64_t* r = flat.data() + static_cast<std::size_t>(std::countr_zero(g)) * W;
    for (std::size_t i = 0; i < W; ++i) cur[i] ^= r[i];
    const int w = wt();
    if (w < best) best = w;
  }
  return best;
}

int macwilliams_min_distance(std::size_t n, const std::vector<std::uint64_t>& dual_hist) {
  i128 total = 0;
  for (auto b : dual_hist) total += static_cast<i128>(b);
  const i128 limit = static_cast<i128>(1) << 100;
  for (std::size_t w = 1; w <= n; ++w) {
    if (binom(n, w) > limit / (total + 1)) throw CapError("weight transform exceeds exact integer range");
    i128 s = 0;
    for (std::size_t u = 0; u < dual_hist.size() && u <= n; ++u) {
      if (!dual_hist[u]) continue;
      i128 k = 0;
      for (std::size_t t = 0; t <= w && t <= u; ++t) {
        const i128 term = binom(u, t) * binom(n - u, w - t);
        k += (t % 2) ? -term : term;
      }
      s += static_cast<i128>(dual_hist[u]) * k;
    }
    if (s < 0 || s % total != 0) throw ConsistencyError("weight transform produced a non-integral count");
    if (s != 0) return static_cast<int>(w);
  }
  throw ConsistencyError("weight transform found no nonzero word");
}

}  // namespace polycode
