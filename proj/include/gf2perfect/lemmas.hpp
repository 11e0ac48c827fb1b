#pragma once

// Bounded machine checks of the structural lemmas used in the classification
// of even perfect polynomials with four prime factors. Each verifier scans a
// finite range exhaustively and returns what it found, so callers can compare
// against the expected solution set.

#include <cstdint>
#include <optional>
#include <vector>

#include "gf2perfect/factor.hpp"
#include "gf2perfect/poly.hpp"

namespace gf2p::lemmas {

/// p = x^a (x+1)^b + 1 with a, b >= 1.
struct SpecialForm {
  unsigned a = 0;
  unsigned b = 0;
  Poly witness;
};

/// h such that p = 1 + x + ... + x^h, if any.
std::optional<unsigned> is_complete(const Poly& p);

/// Present iff p + 1 = x^a (x+1)^b with a, b >= 1.
std::optional<SpecialForm> special_form(const Poly& p);

/// p == reverse(p). False for zero.
bool is_self_inverse(const Poly& p);

/// Irreducible self-inverse special-form polynomials of degree <= max_degree.
/// Expected: {x^2+x+1, x^4+x^3+x^2+x+1} once max_degree >= 4.
std::vector<Poly> verify_lemma1_iv(int max_degree);

/// A complete polynomial 1+...+x^m with exactly two simple prime factors
/// that are neither both self-inverse nor each other's inverse.
struct CompleteSplitViolation {
  unsigned m = 0;
  Poly p;
  Poly q;
};
std::vector<CompleteSplitViolation> verify_lemma1_iii(int m_bound);

struct Lemma4Solution {
  unsigned h = 0;
  unsigned k = 0;
  Poly p;
  Poly q;
};
/// (h, k) with sigma(x^2h) = P*Q, P and Q irreducible, P = sigma((x+1)^2k).
std::vector<Lemma4Solution> verify_lemma4(int h_bound, int k_bound);

struct Lemma5Violation {
  Poly p;
  unsigned n = 0;
  /// gcd of the exponents of sigma(p^2n): the value is a perfect power of this order.
  unsigned power = 0;
  Factorization sigma_factorization;
};
/// Irreducible p of degree <= p_degree_bound and 1 <= n <= n_bound such that
/// sigma(p^2n) is a perfect power of order >= 2.
std::vector<Lemma5Violation> verify_lemma5(int p_degree_bound, int n_bound);

struct Lemma6Violation {
  Poly p;
  unsigned n = 0;
  /// Largest Q with Q^m dividing sigma(p^2n).
  Poly q;
  unsigned m = 0;
};
/// For sigma(p^2n) = Q^m * A with m > 1 the degree bound
/// deg p > (m-1) deg Q (m odd) or deg p > m deg Q (m even) must hold.
/// Every m is checked against the largest such Q, which covers all Q.
std::vector<Lemma6Violation> verify_lemma6(int p_degree_bound, int n_bound);

/// h in 1..h_bound such that every prime of sigma(x^2h) has special form.
/// Expected: {1, 2, 3}.
std::vector<unsigned> verify_theorem8(int h_bound);

/// Number of distinct primes of minimal degree is even. Throws on zero.
bool verify_minimal_prime_parity(const Poly& a);
bool has_even_minimal_prime_count(const Factorization& f);

}  // namespace gf2p::lemmas
