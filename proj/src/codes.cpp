#include "polycode/codes.hpp"

#include <string>

#include "polycode/enumerate.hpp"
#include "polycode/errors.hpp"

namespace polycode {

PolycyclicCode::PolycyclicCode(RingContext ctx, int j) : ctx_(std::move(ctx)), j_(j) {
  if (j < 0 || j > ctx_.L) throw DomainError("code index out of range: " + std::to_string(j));
  gen_ = ideal_generator(ctx_, j);
}

Gf2Matrix PolycyclicCode::generator_matrix() const {
  if (j_ == ctx_.L) throw DomainError("the zero code has no generator matrix");
  const std::size_t kk = static_cast<std::size_t>(k());
  std::vector<Gf2Poly> rows;
  rows.reserve(kk);
  for (std::size_t i = 0; i < kk; ++i) rows.push_back(gen_ << i);
  return Gf2Matrix::from_rows(rows, static_cast<std::size_t>(n()));
}

Gf2Poly PolycyclicCode::encode(const Gf2Poly& message) const {
  if (message.degree() >= k()) throw DomainError("message longer than the dimension " + std::to_string(k()));
  return message * gen_;
}

BitVector PolycyclicCode::encode(const BitVector& message) const {
  if (message.size() != static_cast<std::size_t>(k()))
    throw DomainError("message length " + std::to_string(message.size()) + " != k = " + std::to_string(k()));
  return to_bits(encode(from_bits(message)), static_cast<std::size_t>(n()));
}

bool PolycyclicCode::contains(const Gf2Poly& word) const {
  if (word.degree() >= n()) return false;
  if (j_ == ctx_.L) return word.is_zero();
  return rem(word, gen_).is_zero();
}

bool PolycyclicCode::contains(const BitVector& word) const {
  if (word.size() != static_cast<std::size_t>(n())) throw DomainError("word length differs from n");
  return contains(from_bits(word));
}

Gf2Poly from_bits(const BitVector& bits) {
  std::vector<std::uint64_t> w((bits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) w[i / 64] |= std::uint64_t{1} << (i % 64);
  return Gf2Poly(std::move(w));
}

BitVector to_bits(const Gf2Poly& p, std::size_t n) {
  BitVector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) out[i] = p.coeff(i) ? 1 : 0;
  return out;
}

void enumerate_codewords(const PolycyclicCode& code, std::size_t cap, const std::function<void(const Gf2Poly&)>& visit) {
  if (code.k() == 0) {
    visit(Gf2Poly{});
    return;
  }
  gray_enumerate(code.generator_matrix(), cap, visit);
}

Gf2Poly reverse_word(const Gf2Poly& w, std::size_t n) {
  std::vector<std::size_t> exps = w.exponents();
  for (auto& e : exps) e = n - 1 - e;
  return Gf2Poly::from_exponents(exps);
}

bool is_reversible(const PolycyclicCode& code) {
  if (code.k() == 0) return true;
  const auto n = static_cast<std::size_t>(code.n());
  for (std::size_t i = 0; i < static_cast<std::size_t>(code.k()); ++i)
    if (!code.contains(reverse_word(code.generator() << i, n))) return false;
  return true;
}

bool polycyclic_closure_holds(const PolycyclicCode& code) {
  if (code.k() == 0) return true;
  const auto n = static_cast<std::size_t>(code.n());
  const Gf2Poly a = associate_vector(code.ctx());
  for (std::size_t i = 0; i < static_cast<std::size_t>(code.k()); ++i) {
    const Gf2Poly c = code.generator() << i;
    Gf2Poly shifted = truncate(c << 1, n);
    if (c.coeff(n - 1)) shifted += a;
    if (!code.contains(shifted)) return false;
  }
  return true;
}

}  // namespace polycode
