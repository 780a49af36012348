#pragma once

#include <cstdint>

#include "polycode/gf2poly.hpp"

namespace polycode {

// The chain ring F2[x]/<P^L> with its cached invariants.
struct RingContext {
  Gf2Poly P;
  int m = 0;            // deg P
  int L = 0;            // exponent of the ambient modulus
  int T = 0;            // 2^(T-1) < L <= 2^T
  std::uint64_t e = 0;  // order of P
  Gf2Poly U;            // P * U = x^e + 1
  Gf2Poly U_star;       // reciprocal of U
  Gf2Poly modulus;      // P^L
  int n = 0;            // code length m*L
};

RingContext new_context(const Gf2Poly& P, int L);

// Smallest T >= 1 with L <= 2^T.
int chain_exponent(int L);

enum class ElementKind { Zero, Unit, Nilpotent };

struct Classification {
  ElementKind kind;
  int index = 0;  // largest j with P^j | a (Nilpotent only)
};

Classification classify(const RingContext& ctx, const Gf2Poly& a);

// P^j as a ring element; j = L gives 0.
Gf2Poly ideal_generator(const RingContext& ctx, int j);

// a(x) with x^n = a(x) in the ring, i.e. the low part of P^L.
Gf2Poly associate_vector(const RingContext& ctx);

// x^e + 1.
Gf2Poly order_binomial(const RingContext& ctx);

}  // namespace polycode
