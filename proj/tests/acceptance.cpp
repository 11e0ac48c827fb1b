// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gf2perfect/factor.hpp"
#include "gf2perfect/lemmas.hpp"
#include "gf2perfect/perfect.hpp"
#include "gf2perfect/sigma.hpp"
#include "gf2perfect/text.hpp"
#include "oracles.hpp"

using gf2p::Poly;
namespace lemmas = gf2p::lemmas;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  out.require(secs < limit_seconds, "time " + std::to_string(secs) + "s over limit");
  std::printf("%s %s %s (%.2fs, limit %.0fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs, limit_seconds,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

std::set<Poly> found_set(const gf2p::SearchReport& r) {
  std::set<Poly> s;
  for (const auto& f : r.perfects_found) s.insert(f.certificate.poly);
  return s;
}

Poly P(const char* s) { return gf2p::parse_poly(s); }

std::set<Poly> c_family() {
  return {P("x^2(x+1)(x^2+x+1)^2(x^4+x+1)"), translate(P("x^2(x+1)(x^2+x+1)^2(x^4+x+1)")),
          P("x^4(x+1)^4(x^4+x^3+x^2+x+1)(x^4+x^3+1)"), P("x^6(x+1)^3(x^3+x^2+1)(x^3+x+1)"),
          translate(P("x^6(x+1)^3(x^3+x^2+1)(x^3+x+1)"))};
}

Outcome catalog_certification() {
  Outcome o;
  const auto cat = gf2p::catalog();
  o.require(cat.size() == 16, "catalog has " + std::to_string(cat.size()) + " entries");
  for (const auto& c : cat) {
    // Bit equality of sigma with the input, recomputed from scratch.
    o.require(c.is_perfect && gf2p::sigma(c.poly).sigma == c.poly, c.label + " not perfect");
  }
  return o;
}

Outcome shape_search_reproduction() {
  Outcome o;
  const auto pruned = gf2p::shape_search({.deg_bound = 40, .p_deg_bound = 8, .use_pruning = true});
  o.require(found_set(pruned) == c_family(), "pruned (40,8) found " + std::to_string(pruned.perfects_found.size()));
  for (const auto& f : pruned.perfects_found) {
    o.require(f.certificate.omega == 4 && f.certificate.parity == gf2p::Parity::Even, "non even omega=4 result");
  }
  const auto full = gf2p::shape_search({.deg_bound = 24, .p_deg_bound = 8, .use_pruning = false});
  o.require(found_set(full) == c_family(), "unpruned (24,8) found " + std::to_string(full.perfects_found.size()));
  const auto pruned24 = gf2p::shape_search({.deg_bound = 24, .p_deg_bound = 8, .use_pruning = true});
  o.require(found_set(pruned24) == found_set(full), "pruned and unpruned disagree at 24");
  o.detail += "examined=" + std::to_string(pruned.candidates_examined);
  return o;
}

Outcome exhaustive_by_degree() {
  Outcome o;
  const auto r = gf2p::exhaustive_search(20);
  std::set<Poly> expected;
  for (const auto& c : gf2p::catalog()) {
    if (c.poly.degree() <= 20) expected.insert(c.poly);
  }
  const auto found = found_set(r);
  o.require(found == expected, "found " + std::to_string(found.size()) + ", catalog has " + std::to_string(expected.size()));
  o.require(found.size() == 14, "expected 14 entries of degree <= 20");
  std::multiset<int> degrees;
  for (const auto& p : found) degrees.insert(p.degree());
  o.require(degrees == std::multiset<int>{2, 5, 5, 6, 11, 11, 11, 11, 14, 15, 15, 16, 20, 20}, "degree profile");
  o.require(r.candidates_examined == (std::uint64_t{2} << 20) - 2, "candidate count");

  // Below degree 12, compare with divisor sums found by plain trial division.
  std::set<Poly> brute;
  for (std::uint64_t a = 2; a < (1U << 12); ++a) {
    if (oracle::divisor_sum_brute(a) == a) brute.insert(Poly(a));
  }
  std::set<Poly> low;
  for (const auto& p : found) {
    if (p.degree() < 12) low.insert(p);
  }
  o.require(low == brute, "divisor-sum oracle disagrees below degree 12");
  return o;
}

Outcome odd_square_nonexistence() {
  Outcome o;
  const auto r = gf2p::odd_square_search(28);
  o.require(r.perfects_found.empty(), "found " + std::to_string(r.perfects_found.size()));
  o.detail += "examined=" + std::to_string(r.candidates_examined);
  return o;
}

Outcome lemma_1iv() {
  Outcome o;
  o.require(lemmas::verify_lemma1_iv(16) == std::vector<Poly>{P("x^2+x+1"), P("x^4+x^3+x^2+x+1")}, "solution set");
  return o;
}

Outcome lemma_4() {
  Outcome o;
  const auto s = lemmas::verify_lemma4(20, 10);
  o.require(s.size() == 1 && s[0].h == 4 && s[0].k == 1 && s[0].p == P("x^2+x+1") && s[0].q == P("x^6+x^3+1"),
            "solution set");
  return o;
}

Outcome theorem_8() {
  Outcome o;
  o.require(lemmas::verify_theorem8(30) == std::vector<unsigned>{1, 2, 3}, "solution set");
  return o;
}

Outcome lemma_5() {
  Outcome o;
  const auto v = lemmas::verify_lemma5(6, 4);
  o.require(v.empty(), std::to_string(v.size()) + " violations");
  return o;
}

Outcome lemma_6() {
  Outcome o;
  const auto v = lemmas::verify_lemma6(6, 4);
  o.require(v.empty(), std::to_string(v.size()) + " violations");
  return o;
}

constexpr int kPropertyCases = 1000;

Outcome prop_multiplicativity() {
  Outcome o;
  std::mt19937_64 rng(601);
  int n = 0;
  while (n < kPropertyCases) {
    const Poly a = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 24));
    const Poly b = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 24));
    if (!gcd(a, b).is_one()) continue;
    if (gf2p::sigma(mul(a, b)).sigma != mul(gf2p::sigma(a).sigma, gf2p::sigma(b).sigma)) {
      o.require(false, "fails for " + gf2p::to_hex(a) + "," + gf2p::to_hex(b));
      break;
    }
    ++n;
  }
  return o;
}

Outcome prop_mersenne() {
  Outcome o;
  const auto primes = gf2p::irreducibles_up_to(10);
  std::mt19937_64 rng(602);
  for (int i = 0; i < kPropertyCases && o.ok; ++i) {
    const Poly& p = primes[rng() % primes.size()];
    const std::uint64_t e = (std::uint64_t{1} << (1 + rng() % 5)) - 1;
    const Poly horner = oracle::from_coeffs(oracle::geometric_sum(oracle::to_coeffs(p), static_cast<unsigned>(e)));
    o.require(horner == pow(p + Poly::one(), e) && gf2p::sigma_prime_power(p, e) == horner,
              "fails for " + gf2p::to_hex(p));
  }
  return o;
}

Outcome prop_splitting() {
  Outcome o;
  // Exhaustive over the stated grid, then randomized repetitions of it.
  std::mt19937_64 rng(603);
  int cases = 0;
  while (cases < kPropertyCases && o.ok) {
    for (std::uint64_t bits = 2; bits < 32 && o.ok; ++bits, ++cases) {
      const auto pc = oracle::to_coeffs(Poly(bits));
      const unsigned s = static_cast<unsigned>(rng() % 4);
      const unsigned u = 2 * static_cast<unsigned>(rng() % 3) + 1;
      const unsigned n = (1U << s) * u - 1;
      const auto rhs = oracle::mul(oracle::pow(oracle::add(pc, {1}), (1U << s) - 1),
                                   oracle::pow(oracle::geometric_sum(pc, u - 1), 1U << s));
      o.require(gf2p::sigma_prime_power(Poly(bits), n) == oracle::from_coeffs(rhs), "fails for " + std::to_string(bits));
    }
  }
  return o;
}

Outcome prop_reverse() {
  Outcome o;
  std::mt19937_64 rng(604);
  for (int i = 0; i < kPropertyCases && o.ok; ++i) {
    Poly p = oracle::random_poly(rng, static_cast<int>(rng() % 200));
    p.set_coeff(0, true);
    o.require(reverse(reverse(p)) == p, "fails for " + gf2p::to_hex(p));
  }
  return o;
}

Outcome prop_translation() {
  Outcome o;
  std::mt19937_64 rng(605);
  for (int i = 0; i < kPropertyCases && o.ok; ++i) {
    const Poly p = oracle::random_poly(rng, static_cast<int>(rng() % 200));
    o.require(translate(translate(p)) == p, "involution fails for " + gf2p::to_hex(p));
  }
  for (const auto& r : {gf2p::exhaustive_search(16), gf2p::shape_search({.deg_bound = 40, .p_deg_bound = 8}),
                        gf2p::odd_square_search(20)}) {
    const auto s = found_set(r);
    for (const auto& p : s) {
      o.require(s.count(translate(p)) == 1, r.search + ": translate of " + gf2p::to_hex(p) + " missing");
      o.require(lemmas::verify_minimal_prime_parity(p), r.search + ": minimal prime parity fails");
    }
  }
  return o;
}

Outcome prop_factor_round_trip() {
  Outcome o;
  std::mt19937_64 rng(606);
  for (int i = 0; i < kPropertyCases && o.ok; ++i) {
    const Poly p = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 64));
    const auto f = gf2p::factorize(p);
    bool primes_ok = true;
    for (const auto& pp : f.factors()) primes_ok = primes_ok && gf2p::is_irreducible(pp.prime);
    o.require(f.value() == p && primes_ok, "fails for " + gf2p::to_hex(p));
  }
  return o;
}

Outcome prop_irreducible_counts() {
  Outcome o;
  const auto primes = gf2p::irreducibles_up_to(16);
  std::vector<long long> counts(17, 0);
  for (const auto& p : primes) ++counts[static_cast<std::size_t>(p.degree())];
  for (int d = 1; d <= 16; ++d) {
    o.require(counts[static_cast<std::size_t>(d)] == oracle::irreducible_count(d), "degree " + std::to_string(d));
  }
  return o;
}

}  // namespace

int main() {
  criterion("1", "catalog certification", 1, catalog_certification);
  criterion("2", "shape search finds exactly C1..C5", 120, shape_search_reproduction);
  criterion("3", "exhaustive search to degree 20", 60, exhaustive_by_degree);
  criterion("4", "odd square search to degree 28 is empty", 5, odd_square_nonexistence);
  criterion("5a", "lemma 1(iv) at 16", 10, lemma_1iv);
  criterion("5b", "lemma 4 at (20,10)", 10, lemma_4);
  criterion("5c", "theorem 8 at 30", 10, theorem_8);
  criterion("5d", "lemma 5 at (6,4)", 10, lemma_5);
  criterion("5e", "lemma 6 at (6,4)", 10, lemma_6);
  criterion("6a", "sigma multiplicative on coprime pairs", 60, prop_multiplicativity);
  criterion("6b", "Mersenne exponent identity", 60, prop_mersenne);
  criterion("6c", "splitting identity", 60, prop_splitting);
  criterion("6d", "reverse involution for P(0)=1", 60, prop_reverse);
  criterion("6e", "translation involution and closure of found perfects", 60, prop_translation);
  criterion("6f", "factorize round trip to degree 64", 60, prop_factor_round_trip);
  criterion("6g", "irreducible counts for d <= 16", 60, prop_irreducible_counts);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
