#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gf2perfect/word.hpp"

namespace gf2p {

/// Univariate polynomial over GF(2), packed little-endian into 64-bit words
/// (bit i of the vector is the coefficient of x^i). The word vector never has
/// a zero top word, so the zero polynomial is the empty vector.
class Poly {
 public:
  using Word = word::Word;

  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(Word bits);
  explicit Poly(std::vector<Word> words);

  static Poly zero() { return {}; }
  static Poly one() { return Poly(Word{1}); }
  static Poly x() { return Poly(Word{2}); }
  static Poly x_plus_one() { return Poly(Word{3}); }
  static Poly monomial(int k);

  /// Highest set bit index, or kZeroDegree.
  int degree() const noexcept;
  bool is_zero() const noexcept { return words_.empty(); }
  bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
  bool coeff(int i) const noexcept;
  void set_coeff(int i, bool value);
  std::size_t weight() const noexcept;

  std::span<const Word> words() const noexcept { return words_; }
  bool fits_word() const noexcept { return words_.size() <= 1; }
  /// Low 64 coefficients.
  Word low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  Poly& operator+=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& shift_left(int k);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Canonical order: by degree, then by bitmask.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

 private:
  void trim() noexcept;

  std::vector<Word> words_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
/// Throws std::domain_error when d is zero.
DivRem divrem(const Poly& p, const Poly& d);
Poly mod(const Poly& p, const Poly& d);
/// Exact division; throws std::domain_error if d does not divide p.
Poly divide_exact(const Poly& p, const Poly& d);
bool divides(const Poly& d, const Poly& p);
/// Throws std::domain_error for gcd(0, 0).
Poly gcd(const Poly& p, const Poly& q);
Poly square(const Poly& p);
/// 0^0 is 1.
Poly pow(const Poly& p, std::uint64_t e);
/// p(x+1).
Poly translate(const Poly& p);
/// x^deg(p) * p(1/x); throws std::domain_error on zero.
Poly reverse(const Poly& p);
Poly derivative(const Poly& p);
/// Square root of a perfect square (all odd coefficients zero); throws otherwise.
Poly sqrt_of_square(const Poly& p);
bool is_square(const Poly& p);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly sqrmod(const Poly& a, const Poly& m);

}  // namespace gf2p

template <>
struct std::hash<gf2p::Poly> {
  std::size_t operator()(const gf2p::Poly& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : p.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
