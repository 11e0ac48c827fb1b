#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf2perfect/factor.hpp"
#include "gf2perfect/poly.hpp"
#include "gf2perfect/sigma.hpp"

namespace gf2p {

struct PerfectCertificate {
  Poly poly;
  Factorization factorization;
  Poly sigma;
  Factorization sigma_factorization;
  bool is_perfect = false;
  Parity parity = Parity::Odd;
  std::size_t omega = 0;
  /// Catalog name; empty for ad-hoc certificates.
  std::string label;
};

/// Full certificate for a; throws std::domain_error on zero.
PerfectCertificate certify_perfect(const Poly& a, std::uint64_t seed = kDefaultFactorSeed);

/// The known perfect polynomials: (x^2+x)^(2^n-1) for n <= 5, T1, T2, C1..C5,
/// S1 and their translates, each certified.
std::vector<PerfectCertificate> catalog();

/// Exponent pattern x^h (x+1)^k P^l Q^m, tagged by which reduction case it
/// falls in:
///   A  l, m even
///   B  {l, m} = {2^n, 2^n - 1}
///   C  l, m odd, one of them 2^n - 1, h and k even
///   D  as C with h and k of opposite parity
///   E  as C with h and k odd
enum class ShapeCase { A, B, C, D, E };

/// Exponent patterns the reduction rules exclude.
enum class PruneRule {
  /// One exponent even, the other odd, not of the form (2^n, 2^n - 1).
  MixedParity,
  /// Both exponents odd, neither of the form 2^n - 1.
  BothOddNonMersenne,
};

const char* to_string(ShapeCase c) noexcept;
const char* to_string(PruneRule r) noexcept;

struct Shape {
  ShapeCase tag = ShapeCase::A;
  unsigned h = 0;
  unsigned k = 0;
  unsigned l = 0;
  unsigned m = 0;
};

struct ShapeClass {
  std::optional<Shape> shape;
  std::optional<PruneRule> pruned_by;
};

/// Classification of an exponent tuple (all >= 1). Symmetric in (l, m).
ShapeClass classify_shape(unsigned h, unsigned k, unsigned l, unsigned m);

struct FoundPerfect {
  PerfectCertificate certificate;
  Poly translate;
  /// The translate was found by the same search.
  bool translate_found = false;
  /// Set by shape_search: the pattern and the odd primes P < Q.
  std::optional<Shape> shape;
  Poly p;
  Poly q;
};

struct SearchReport {
  std::string search;
  std::vector<std::pair<std::string, long long>> bounds;
  std::uint64_t candidates_examined = 0;
  std::vector<std::pair<std::string, std::uint64_t>> shapes_pruned;
  /// Sorted in canonical Poly order.
  std::vector<FoundPerfect> perfects_found;
  std::chrono::nanoseconds wall_time{0};
};

struct SearchOptions {
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultFactorSeed;
};

/// Upper bounds accepted by the searches.
inline constexpr int kMaxExhaustiveDegree = 32;
inline constexpr int kMaxShapeDegree = 63;
inline constexpr int kMaxOddSquareDegree = 62;

/// Every polynomial of degree 1..max_degree, certified by trial division.
SearchReport exhaustive_search(int max_degree, const SearchOptions& options = {});

struct ShapeSearchConfig {
  int deg_bound = 40;
  int p_deg_bound = 8;
  bool use_pruning = true;
};

/// Candidates x^h (x+1)^k P^l Q^m, h,k,l,m >= 1, P < Q odd irreducibles of
/// degree <= p_deg_bound, total degree <= deg_bound.
SearchReport shape_search(const ShapeSearchConfig& config, const SearchOptions& options = {});

/// Odd squarefree B of degree <= max_degree/2 with sigma(B^2) = B^2.
SearchReport odd_square_search(int max_degree, const SearchOptions& options = {});

}  // namespace gf2p
