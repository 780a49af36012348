#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polycode {

// Polynomial over GF(2) stored as 64-bit limbs; bit i of the sequence is the
// coefficient of x^i. Trailing zero limbs are always trimmed.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(std::vector<std::uint64_t> words);

  static Gf2Poly from_mask(std::uint64_t mask);
  static Gf2Poly monomial(std::size_t k);
  static Gf2Poly one() { return from_mask(1); }
  // Polynomial with a 1 at each listed exponent (repeats cancel).
  static Gf2Poly from_exponents(const std::vector<std::size_t>& exps);

  int degree() const;
  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool v);
  void flip(std::size_t i);
  std::size_t weight() const;
  std::vector<std::size_t> exponents() const;

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

  // Descending monomials, e.g. "x^4+x+1"; zero is "0".
  std::string str() const;

  Gf2Poly& operator+=(const Gf2Poly& o);
  Gf2Poly& operator*=(const Gf2Poly& o);
  Gf2Poly& operator<<=(std::size_t k);

  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) { return a.w_ == b.w_; }
  friend bool operator!=(const Gf2Poly& a, const Gf2Poly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<std::uint64_t> w_;
};

Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b);
Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly operator<<(Gf2Poly a, std::size_t k);

Gf2Poly parse(std::string_view text);

Gf2Poly add(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly square(const Gf2Poly& a);
std::pair<Gf2Poly, Gf2Poly> div_rem(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly rem(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly pow(const Gf2Poly& a, std::uint64_t e);
Gf2Poly pow_mod(const Gf2Poly& a, std::uint64_t e, const Gf2Poly& modulus);

// Arithmetic modulo x^n.
Gf2Poly truncate(const Gf2Poly& a, std::size_t n);
Gf2Poly mul_trunc(const Gf2Poly& a, const Gf2Poly& b, std::size_t n);
Gf2Poly pow_trunc(const Gf2Poly& a, std::uint64_t e, std::size_t n);

// a(x) with every exponent multiplied by k.
Gf2Poly substitute_power(const Gf2Poly& a, std::size_t k);

Gf2Poly reciprocal(const Gf2Poly& a);
std::uint64_t order(const Gf2Poly& f);
bool is_irreducible(const Gf2Poly& f);
std::size_t weight(const Gf2Poly& f);
std::size_t coeff_weight(const Gf2Poly& f);

// Hex of the bit sequence read as an integer (x^0 is the least significant
// bit), zero-padded to ceil(nbits/4) digits.
std::string to_hex(const Gf2Poly& a, std::size_t nbits);
Gf2Poly from_hex(std::string_view hex);

}  // namespace polycode
