#pragma once

// Single-word GF(2)[x] kernel. A polynomial of degree < 64 is stored as a
// uint64_t with bit i holding the coefficient of x^i. The search loops run
// entirely on these functions; Poly falls back to them when both operands fit.

#include <bit>
#include <cstdint>
#include <utility>

namespace gf2p::word {

using Word = std::uint64_t;

struct Wide {
  Word lo = 0;
  Word hi = 0;
  friend bool operator==(const Wide&, const Wide&) = default;
};

constexpr int degree(Word a) noexcept {
  return a == 0 ? -1 : 63 - std::countl_zero(a);
}

/// Full 64x64 -> 128 bit carryless product.
Wide clmul(Word a, Word b) noexcept;

/// Product when degree(a) + degree(b) < 64 is known by the caller.
constexpr Word mul(Word a, Word b) noexcept {
  if (std::popcount(a) < std::popcount(b)) std::swap(a, b);
  Word r = 0;
  while (b != 0) {
    r ^= a << std::countr_zero(b);
    b &= b - 1;
  }
  return r;
}

/// Squaring spreads bit i to bit 2i. Requires degree(a) < 32.
constexpr Word square(Word a) noexcept {
  a &= 0xffffffffULL;
  a = (a | (a << 16)) & 0x0000ffff0000ffffULL;
  a = (a | (a << 8)) & 0x00ff00ff00ff00ffULL;
  a = (a | (a << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  a = (a | (a << 2)) & 0x3333333333333333ULL;
  a = (a | (a << 1)) & 0x5555555555555555ULL;
  return a;
}

/// Inverse of square() on perfect squares: gathers the even-indexed bits.
constexpr Word sqrt_even_bits(Word a) noexcept {
  a &= 0x5555555555555555ULL;
  a = (a | (a >> 1)) & 0x3333333333333333ULL;
  a = (a | (a >> 2)) & 0x0f0f0f0f0f0f0f0fULL;
  a = (a | (a >> 4)) & 0x00ff00ff00ff00ffULL;
  a = (a | (a >> 8)) & 0x0000ffff0000ffffULL;
  a = (a | (a >> 16)) & 0x00000000ffffffffULL;
  return a;
}

/// Remainder of a modulo d; d must be nonzero.
constexpr Word mod(Word a, Word d) noexcept {
  const int dd = degree(d);
  for (int da = degree(a); da >= dd; da = degree(a)) a ^= d << (da - dd);
  return a;
}

/// (quotient, remainder); d must be nonzero.
constexpr std::pair<Word, Word> divrem(Word a, Word d) noexcept {
  const int dd = degree(d);
  Word q = 0;
  for (int da = degree(a); da >= dd; da = degree(a)) {
    q |= Word{1} << (da - dd);
    a ^= d << (da - dd);
  }
  return {q, a};
}

constexpr Word gcd(Word a, Word b) noexcept {
  while (b != 0) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

/// a*b mod m with degree(a), degree(b) < degree(m) <= 32.
constexpr Word mulmod(Word a, Word b, Word m) noexcept { return mod(mul(a, b), m); }

/// p^e; the caller guarantees e*degree(p) < 64.
constexpr Word pow(Word p, unsigned e) noexcept {
  Word r = 1;
  while (e != 0) {
    if (e & 1U) r = mul(r, p);
    e >>= 1;
    if (e != 0) p = mul(p, p);
  }
  return r;
}

/// p(x+1) by Horner; degree(p) < 64.
constexpr Word translate(Word p) noexcept {
  Word r = 0;
  for (int i = degree(p); i >= 0; --i) r = (r << 1) ^ r ^ ((p >> i) & 1U);
  return r;
}

/// 1 + p + ... + p^n by Horner; the caller guarantees n*degree(p) < 64.
constexpr Word geometric_sum(Word p, unsigned n) noexcept {
  Word r = 1;
  for (unsigned i = 0; i < n; ++i) r = mul(r, p) ^ 1U;
  return r;
}

}  // namespace gf2p::word
