#include "polycode/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>

#include "polycode/errors.hpp"

namespace polycode {

namespace {

constexpr std::size_t kBits = 64;

// Spread the 32 low bits of v to the even positions of a 64-bit word.
std::uint64_t spread32(std::uint64_t v) {
  v &= 0xFFFFFFFFULL;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, std::size_t shift) {
  const std::size_t ws = shift / kBits, bs = shift % kBits;
  const std::size_t need = src.size() + ws + 1;
  if (dst.size() < need) dst.resize(need, 0);
  if (bs == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
  } else {
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[i + ws] ^= src[i] << bs;
      dst[i + ws + 1] ^= src[i] >> (kBits - bs);
    }
  }
}

}  // namespace

Gf2Poly::Gf2Poly(std::vector<std::uint64_t> words) : w_(std::move(words)) { trim(); }

void Gf2Poly::trim() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Gf2Poly Gf2Poly::from_mask(std::uint64_t mask) { return Gf2Poly(std::vector<std::uint64_t>{mask}); }

Gf2Poly Gf2Poly::monomial(std::size_t k) {
  Gf2Poly p;
  p.set_coeff(k, true);
  return p;
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<std::size_t>& exps) {
  Gf2Poly p;
  for (auto e : exps) p.flip(e);
  return p;
}

int Gf2Poly::degree() const {
  if (w_.empty()) return -1;
  return static_cast<int>((w_.size() - 1) * kBits + (kBits - 1 - std::countl_zero(w_.back())));
}

bool Gf2Poly::coeff(std::size_t i) const {
  const std::size_t wi = i / kBits;
  return wi < w_.size() && ((w_[wi] >> (i % kBits)) & 1U);
}

void Gf2Poly::set_coeff(std::size_t i, bool v) {
  if (coeff(i) != v) flip(i);
}

void Gf2Poly::flip(std::size_t i) {
  const std::size_t wi = i / kBits;
  if (wi >= w_.size()) w_.resize(wi + 1, 0);
  w_[wi] ^= (std::uint64_t{1} << (i % kBits));
  trim();
}

std::size_t Gf2Poly::weight() const {
  std::size_t s = 0;
  for (auto w : w_) s += static_cast<std::size_t>(std::popcount(w));
  return s;
}

std::vector<std::size_t> Gf2Poly::exponents() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t w = w_[i];
    while (w) {
      out.push_back(i * kBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::string Gf2Poly::str() const {
  if (is_zero()) return "0";
  auto exps = exponents();
  std::string s;
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    if (!s.empty()) s += '+';
    if (*it == 0)
      s += '1';
    else if (*it == 1)
      s += 'x';
    else
      s += "x^" + std::to_string(*it);
  }
  return s;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
  if (w_.size() < o.w_.size()) w_.resize(o.w_.size(), 0);
  for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
  trim();
  return *this;
}

Gf2Poly& Gf2Poly::operator*=(const Gf2Poly& o) {
  *this = mul(*this, o);
  return *this;
}

Gf2Poly& Gf2Poly::operator<<=(std::size_t k) {
  if (is_zero() || k == 0) return *this;
  std::vector<std::uint64_t> out;
  xor_shifted(out, w_, k);
  w_ = std::move(out);
  trim();
  return *this;
}

Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) { return mul(a, b); }
Gf2Poly operator<<(Gf2Poly a, std::size_t k) { return a <<= k; }

Gf2Poly parse(std::string_view text) {
  // Collect non-space characters with their original offsets.
  std::string s;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
      pos.push_back(i);
    }
  }
  if (s.empty()) throw ParseError("empty polynomial", 0);
  auto at = [&](std::size_t i) { return i < pos.size() ? pos[i] : text.size(); };

  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
    if (s.size() == 2) throw ParseError("binary literal without digits", at(2));
    Gf2Poly p;
    const std::size_t nd = s.size() - 2;
    for (std::size_t i = 2; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') throw ParseError("bad binary digit", at(i));
      if (s[i] == '1') p.flip(nd - 1 - (i - 2));
    }
    return p;
  }

  if (std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
      !(s == "1")) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::uint64_t d = static_cast<std::uint64_t>(s[i] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
        throw ParseError("decimal mask overflows 64 bits", at(i));
      v = v * 10 + d;
    }
    return Gf2Poly::from_mask(v);
  }

  Gf2Poly p;
  std::size_t i = 0;
  while (true) {
    if (i >= s.size()) throw ParseError("expected monomial", at(i));
    if (s[i] == '1') {
      p.flip(0);
      ++i;
    } else if (s[i] == 'x' || s[i] == 'X') {
      ++i;
      std::size_t k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw ParseError("expected exponent", at(i));
        k = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          if (k > 100000000) throw ParseError("exponent too large", at(i));
          k = k * 10 + static_cast<std::size_t>(s[i] - '0');
          ++i;
        }
      }
      p.flip(k);
    } else {
      throw ParseError(std::string("unexpected character '") + s[i] + "'", at(i));
    }
    if (i == s.size()) break;
    if (s[i] != '+') throw ParseError(std::string("expected '+' but found '") + s[i] + "'", at(i));
    ++i;
  }
  return p;
}

Gf2Poly add(const Gf2Poly& a, const Gf2Poly& b) { return a + b; }

Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Gf2Poly& sparse = a.weight() <= b.weight() ? a : b;
  const Gf2Poly& dense = (&sparse == &a) ? b : a;
  std::vector<std::uint64_t> out;
  out.reserve(a.words().size() + b.words().size() + 1);
  for (auto e : sparse.exponents()) xor_shifted(out, dense.words(), e);
  return Gf2Poly(std::move(out));
}

Gf2Poly square(const Gf2Poly& a) {
  std::vector<std::uint64_t> out(a.words().size() * 2, 0);
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    out[2 * i] = spread32(a.words()[i]);
    out[2 * i + 1] = spread32(a.words()[i] >> 32);
  }
  return Gf2Poly(std::move(out));
}

std::pair<Gf2Poly, Gf2Poly> div_rem(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const int db = b.degree();
  std::vector<std::uint64_t> r = a.words();
  std::vector<std::uint64_t> q;
  auto bit = [&](int i) { return (r[static_cast<std::size_t>(i) / kBits] >> (static_cast<std::size_t>(i) % kBits)) & 1U; };
  for (int i = a.degree(); i >= db; --i) {
    if (!bit(i)) continue;
    const std::size_t shift = static_cast<std::size_t>(i - db);
    xor_shifted(r, b.words(), shift);
    const std::size_t qi = shift / kBits;
    if (q.size() <= qi) q.resize(qi + 1, 0);
    q[qi] ^= std::uint64_t{1} << (shift % kBits);
  }
  return {Gf2Poly(std::move(q)), Gf2Poly(std::move(r))};
}

Gf2Poly rem(const Gf2Poly& a, const Gf2Poly& b) { return div_rem(a, b).second; }

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf2Poly pow(const Gf2Poly& a, std::uint64_t e) {
  Gf2Poly result = Gf2Poly::one();
  Gf2Poly base = a;
  while (e) {
    if (e & 1U) result = mul(result, base);
    e >>= 1;
    if (e) base = square(base);
  }
  return result;
}

Gf2Poly pow_mod(const Gf2Poly& a, std::uint64_t e, const Gf2Poly& modulus) {
  if (modulus.is_zero()) throw DomainError("pow_mod with zero modulus");
  Gf2Poly result = rem(Gf2Poly::one(), modulus);
  Gf2Poly base = rem(a, modulus);
  while (e) {
    if (e & 1U) result = rem(mul(result, base), modulus);
    e >>= 1;
    if (e) base = rem(square(base), modulus);
  }
  return result;
}

Gf2Poly truncate(const Gf2Poly& a, std::size_t n) {
  std::vector<std::uint64_t> w = a.words();
  const std::size_t nw = (n + kBits - 1) / kBits;
  if (w.size() > nw) w.resize(nw);
  if (n % kBits && w.size() == nw) w.back() &= (std::uint64_t{1} << (n % kBits)) - 1;
  return Gf2Poly(std::move(w));
}

Gf2Poly mul_trunc(const Gf2Poly& a, const Gf2Poly& b, std::size_t n) {
  return truncate(mul(truncate(a, n), truncate(b, n)), n);
}

Gf2Poly pow_trunc(const Gf2Poly& a, std::uint64_t e, std::size_t n) {
  Gf2Poly result = truncate(Gf2Poly::one(), n);
  Gf2Poly base = truncate(a, n);
  while (e) {
    if (e & 1U) result = truncate(mul(result, base), n);
    e >>= 1;
    if (e) base = truncate(square(base), n);
  }
  return result;
}

Gf2Poly substitute_power(const Gf2Poly& a, std::size_t k) {
  std::vector<std::size_t> exps = a.exponents();
  for (auto& e : exps) e *= k;
  return Gf2Poly::from_exponents(exps);
}

Gf2Poly reciprocal(const Gf2Poly& a) {
  if (a.is_zero()) return {};
  const std::size_t d = static_cast<std::size_t>(a.degree());
  std::vector<std::size_t> exps = a.exponents();
  for (auto& e : exps) e = d - e;
  return Gf2Poly::from_exponents(exps);
}

std::uint64_t order(const Gf2Poly& f) {
  if (f.is_zero() || !f.coeff(0)) throw DomainError("order undefined: zero polynomial or zero constant term");
  const int d = f.degree();
  if (d == 0) return 1;
  const std::uint64_t limit = d >= 40 ? (std::uint64_t{1} << 40) : (std::uint64_t{1} << d);
  if (d < 64) {
    const std::uint64_t fw = f.low_word();
    const std::uint64_t top = std::uint64_t{1} << d;
    std::uint64_t cur = 2 & (top - 1);
    if (d == 1) cur = 1;  // x = 1 mod (x+1)
    std::uint64_t k = 1;
    while (cur != 1) {
      cur <<= 1;
      if (cur & top) cur ^= fw;
      if (++k > limit) throw ConsistencyError("order search exceeded 2^deg iterations");
    }
    return k;
  }
  Gf2Poly cur = rem(Gf2Poly::monomial(1), f);
  std::uint64_t k = 1;
  while (!cur.is_one()) {
    cur <<= 1;
    if (cur.coeff(static_cast<std::size_t>(d))) cur += f;
    if (++k > limit) throw ConsistencyError("order search exceeded iteration limit");
  }
  return k;
}

bool is_irreducible(const Gf2Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Gf2Poly x = Gf2Poly::monomial(1);
  Gf2Poly h = rem(x, f);
  for (int i = 1; i <= d; ++i) {
    h = rem(square(h), f);
    if (i <= d / 2 && !gcd(f, h + x).is_one()) return false;
  }
  return h == rem(x, f);
}

std::size_t weight(const Gf2Poly& f) { return f.weight(); }

std::size_t coeff_weight(const Gf2Poly& f) {
  auto exps = f.exponents();
  if (exps.size() <= 1) return 0;
  std::size_t best = exps[1] - exps[0];
  for (std::size_t i = 2; i < exps.size(); ++i) best = std::min(best, exps[i] - exps[i - 1]);
  return best;
}

std::string to_hex(const Gf2Poly& a, std::size_t nbits) {
  static const char* digits = "0123456789abcdef";
  std::size_t nd = (nbits + 3) / 4;
  const std::size_t needed = a.is_zero() ? 1 : (static_cast<std::size_t>(a.degree()) / 4 + 1);
  nd = std::max(nd, needed);
  std::string s(nd, '0');
  for (std::size_t i = 0; i < nd; ++i) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b)
      if (a.coeff(4 * i + b)) v |= 1U << b;
    s[nd - 1 - i] = digits[v];
  }
  return s;
}

Gf2Poly from_hex(std::string_view hex) {
  Gf2Poly p;
  const std::size_t nd = hex.size();
  for (std::size_t i = 0; i < nd; ++i) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[i])));
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a' + 10);
    else
      throw ParseError("bad hex digit", i);
    for (std::size_t b = 0; b < 4; ++b)
      if (v & (1U << b)) p.flip(4 * (nd - 1 - i) + b);
  }
  return p;
}

}  // namespace polycode
