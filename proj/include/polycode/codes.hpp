#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "polycode/gf2matrix.hpp"
#include "polycode/gf2poly.hpp"
#include "polycode/ring.hpp"

namespace polycode {

using BitVector = std::vector<std::uint8_t>;

// The ideal C_j = <P^j> of F2[x]/<P^L>, of length n = mL and dimension m(L-j).
class PolycyclicCode {
 public:
  PolycyclicCode(RingContext ctx, int j);

  const RingContext& ctx() const { return ctx_; }
  int j() const { return j_; }
  int n() const { return ctx_.n; }
  int k() const { return ctx_.m * (ctx_.L - j_); }
  const Gf2Poly& generator() const { return gen_; }

  // k x n; row i is x^i * P^j.
  Gf2Matrix generator_matrix() const;

  Gf2Poly encode(const Gf2Poly& message) const;
  BitVector encode(const BitVector& message) const;
  bool contains(const Gf2Poly& word) const;
  bool contains(const BitVector& word) const;

 private:
  RingContext ctx_;
  int j_;
  Gf2Poly gen_;
};

Gf2Poly from_bits(const BitVector& bits);
BitVector to_bits(const Gf2Poly& p, std::size_t n);

// Every codeword once, consecutive words differing by one generator row.
void enumerate_codewords(const PolycyclicCode& code, std::size_t cap, const std::function<void(const Gf2Poly&)>& visit);

// Coordinate reversal of a length-n word.
Gf2Poly reverse_word(const Gf2Poly& w, std::size_t n);

// Closure under reversal, tested on the generator rows.
bool is_reversible(const PolycyclicCode& code);

// Each generator row c satisfies (0,c_0,..,c_{n-2}) + c_{n-1} a in the code,
// with a the associate vector.
bool polycyclic_closure_holds(const PolycyclicCode& code);

}  // namespace polycode
