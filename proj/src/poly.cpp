#include "gf2perfect/poly.hpp"

#include <algorithm>
#include <bit>

namespace gf2p {

namespace {

using Word = Poly::Word;

constexpr Word kOddBits = 0xaaaaaaaaaaaaaaaaULL;

// dst ^= src << shift, growing dst as needed.
void xor_shifted(std::vector<Word>& dst, std::span<const Word> src, int shift) {
  if (src.empty()) return;
  const std::size_t word_shift = static_cast<std::size_t>(shift) / 64;
  const int bit_shift = shift % 64;
  const std::size_t needed = src.size() + word_shift + (bit_shift != 0 ? 1 : 0);
  if (dst.size() < needed) dst.resize(needed, 0);
  if (bit_shift == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + word_shift] ^= src[i];
    return;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + word_shift] ^= src[i] << bit_shift;
    dst[i + word_shift + 1] ^= src[i] >> (64 - bit_shift);
  }
}

int degree_of(const std::vector<Word>& w) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] != 0) return static_cast<int>(i * 64) + word::degree(w[i]);
  }
  return Poly::kZeroDegree;
}

}  // namespace

Poly::Poly(Word bits) {
  if (bits != 0) words_.push_back(bits);
}

Poly::Poly(std::vector<Word> words) : words_(std::move(words)) { trim(); }

Poly Poly::monomial(int k) {
  if (k < 0) throw std::domain_error("monomial exponent must be nonnegative");
  Poly p;
  p.set_coeff(k, true);
  return p;
}

void Poly::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

int Poly::degree() const noexcept {
  if (words_.empty()) return kZeroDegree;
  return static_cast<int>((words_.size() - 1) * 64) + word::degree(words_.back());
}

bool Poly::coeff(int i) const noexcept {
  if (i < 0) return false;
  const auto w = static_cast<std::size_t>(i) / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1U) != 0;
}

void Poly::set_coeff(int i, bool value) {
  if (i < 0) throw std::domain_error("negative coefficient index");
  const auto w = static_cast<std::size_t>(i) / 64;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const Word bit = Word{1} << (i % 64);
  words_[w] = value ? (words_[w] | bit) : (words_[w] & ~bit);
  trim();
}

std::size_t Poly::weight() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (words_.size() < rhs.words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Word> out(lhs.words_.size() + rhs.words_.size(), 0);
  for (std::size_t i = 0; i < lhs.words_.size(); ++i) {
    if (lhs.words_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.words_.size(); ++j) {
      const word::Wide w = word::clmul(lhs.words_[i], rhs.words_[j]);
      out[i + j] ^= w.lo;
      out[i + j + 1] ^= w.hi;
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::shift_left(int k) {
  if (k < 0) throw std::domain_error("negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Word> out;
  xor_shifted(out, words_, k);
  words_ = std::move(out);
  trim();
  return *this;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }

Poly mul(const Poly& p, const Poly& q) { return p * q; }

DivRem divrem(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.fits_word() && d.fits_word()) {
    auto [q, r] = word::divrem(p.low_word(), d.low_word());
    return {Poly(q), Poly(r)};
  }
  const int dd = d.degree();
  std::vector<Word> rem(p.words().begin(), p.words().end());
  std::vector<Word> quot;
  for (int dr = degree_of(rem); dr >= dd; dr = degree_of(rem)) {
    const int shift = dr - dd;
    const auto qw = static_cast<std::size_t>(shift) / 64;
    if (quot.size() <= qw) quot.resize(qw + 1, 0);
    quot[qw] |= Word{1} << (shift % 64);
    xor_shifted(rem, d.words(), shift);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly mod(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.fits_word() && d.fits_word()) return Poly(word::mod(p.low_word(), d.low_word()));
  if (p.degree() < d.degree()) return p;
  return divrem(p, d).remainder;
}

Poly divide_exact(const Poly& p, const Poly& d) {
  auto [q, r] = divrem(p, d);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& p) { return mod(p, d).is_zero(); }

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly a = p;
  Poly b = q;
  while (!b.is_zero()) {
    if (a.fits_word() && b.fits_word()) return Poly(word::gcd(a.low_word(), b.low_word()));
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

Poly square(const Poly& p) {
  std::vector<Word> out;
  out.reserve(p.words().size() * 2);
  for (auto w : p.words()) {
    out.push_back(word::square(w));
    out.push_back(word::square(w >> 32));
  }
  return Poly(std::move(out));
}

Poly pow(const Poly& p, std::uint64_t e) {
  Poly result = Poly::one();
  Poly base = p;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1;
    if (e != 0) base = square(base);
  }
  return result;
}

Poly translate(const Poly& p) {
  if (p.fits_word()) return Poly(word::translate(p.low_word()));
  Poly r;
  for (int i = p.degree(); i >= 0; --i) {
    Poly shifted = r;
    shifted.shift_left(1);
    r += shifted;
    if (p.coeff(i)) r += Poly::one();
  }
  return r;
}

Poly reverse(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("reverse of the zero polynomial");
  const int d = p.degree();
  Poly r;
  for (int i = 0; i <= d; ++i) {
    if (p.coeff(i)) r.set_coeff(d - i, true);
  }
  return r;
}

Poly derivative(const Poly& p) {
  const auto src = p.words();
  std::vector<Word> out(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Word odd = src[i] & kOddBits;
    out[i] |= odd >> 1;
    // Bit 0 of word i+1 is even, so nothing crosses word boundaries.
  }
  return Poly(std::move(out));
}

bool is_square(const Poly& p) {
  return std::ranges::all_of(p.words(), [](Word w) { return (w & kOddBits) == 0; });
}

Poly sqrt_of_square(const Poly& p) {
  if (!is_square(p)) throw std::domain_error("polynomial is not a perfect square");
  const auto src = p.words();
  std::vector<Word> out((src.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Word half = word::sqrt_even_bits(src[i]);
    out[i / 2] |= (i % 2 == 0) ? half : (half << 32);
  }
  return Poly(std::move(out));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return mod(a * b, m); }

Poly sqrmod(const Poly& a, const Poly& m) { return mod(square(a), m); }

}  // namespace gf2p
