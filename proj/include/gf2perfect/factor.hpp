#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gf2perfect/poly.hpp"

namespace gf2p {

struct PrimePower {
  Poly prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Multiset of distinct primes with positive exponents, kept sorted by the
/// canonical Poly order. Construction merges repeated primes.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors);

  std::span<const PrimePower> factors() const noexcept { return factors_; }
  /// Number of distinct primes.
  std::size_t omega() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  unsigned exponent_of(const Poly& prime) const noexcept;
  /// Product of prime^exponent.
  Poly value() const;

  void multiply(const Poly& prime, unsigned exponent);
  void multiply(const Factorization& other);

  /// "x^2*(x+1)*(x^2+x+1)^2*(x^4+x+1)"; the empty product prints as "1".
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Default seed for the randomized equal-degree splitting.
inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'2f2a'0c0f'fee1ULL;

/// Inputs up to this degree are factored by trial division over the shared
/// table of irreducibles of degree <= kTrialPrimeMaxDegree.
inline constexpr int kTrialDivisionMaxDegree = 20;
inline constexpr int kTrialPrimeMaxDegree = 10;

/// Largest degree irreducibles_up_to accepts.
inline constexpr int kMaxSieveDegree = 24;

/// Rabin's test. Throws std::domain_error for constants.
bool is_irreducible(const Poly& p);

/// Dispatches to trial division for small degrees, otherwise the general
/// squarefree / distinct-degree / equal-degree path. Throws on zero.
Factorization factorize(const Poly& p, std::uint64_t seed = kDefaultFactorSeed);

/// Squarefree decomposition, distinct-degree and trace-based equal-degree
/// splitting; valid for any degree.
Factorization factorize_general(const Poly& p, std::uint64_t seed = kDefaultFactorSeed);

/// Trial division by the irreducible table; requires degree <= 2*kTrialPrimeMaxDegree+1.
Factorization factorize_trial(const Poly& p);

/// Product of the distinct primes of p. Throws on zero.
Poly squarefree_part(const Poly& p);

/// All irreducibles of degree 1..max_degree in canonical order.
std::vector<Poly> irreducibles_up_to(int max_degree);

/// The shared irreducibles of degree <= kTrialPrimeMaxDegree as bitmasks.
std::span<const word::Word> small_irreducibles();

/// Word-level factorization for the search loops. primes must contain every
/// irreducible of degree <= degree(a)/2 in ascending order. Returns the
/// number of entries written to out (at most out.size()).
struct WordFactor {
  word::Word prime = 0;
  unsigned exponent = 0;
};
std::size_t factor_word(word::Word a, std::span<const word::Word> primes, std::span<WordFactor> out);

/// Cache file: one hex bitmask per line.
void save_irreducibles(const std::filesystem::path& path, std::span<const Poly> primes);
std::vector<Poly> load_irreducibles(const std::filesystem::path& path);

}  // namespace gf2p
