#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "gf2perfect/factor.hpp"
#include "gf2perfect/poly.hpp"

namespace gf2p {

/// 1 + p + ... + p^n. Uses n + 1 = 2^s * u (u odd):
///   sigma(p^n) = (p + 1)^(2^s - 1) * sigma(p^(u-1))^(2^s)
/// and Horner for the odd part. sigma_prime_power(p, 0) is 1.
Poly sigma_prime_power(const Poly& p, std::uint64_t n);

/// Word variant; the caller guarantees n * degree(p) < 64.
word::Word sigma_prime_power_word(word::Word p, unsigned n);

/// Multiplicative assembly over a known factorization.
Poly sigma_of(const Factorization& f);

struct SigmaValue {
  Poly input;
  Factorization input_factorization;
  Poly sigma;
  /// Filled on demand by ensure_sigma_factorization.
  std::optional<Factorization> sigma_factorization;
};

/// Throws std::domain_error on zero.
SigmaValue sigma(const Poly& a, std::uint64_t seed = kDefaultFactorSeed);
const Factorization& ensure_sigma_factorization(SigmaValue& value,
                                                std::uint64_t seed = kDefaultFactorSeed);

enum class Parity { Even, Odd };

const char* to_string(Parity p) noexcept;

/// Number of distinct primes. Throws on zero.
std::size_t omega(const Poly& a);

/// Even iff x or x+1 divides a. Throws on zero.
Parity parity(const Poly& a);

}  // namespace gf2p
