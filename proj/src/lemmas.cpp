#include "gf2perfect/lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gf2perfect/sigma.hpp"

namespace gf2p::lemmas {

namespace {

void require_at_least(int value, int minimum, const char* name) {
  if (value < minimum) {
    throw std::invalid_argument(std::string(name) + " must be >= " + std::to_string(minimum));
  }
}

// sigma(x^e) = 1 + x + ... + x^e
Poly complete(unsigned e) {
  std::vector<Poly::Word> words(e / 64 + 1, ~Poly::Word{0});
  if ((e + 1) % 64 != 0) words.back() = (Poly::Word{1} << ((e + 1) % 64)) - 1;
  return Poly(std::move(words));
}

}  // namespace

std::optional<unsigned> is_complete(const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  const int d = p.degree();
  if (p.weight() != static_cast<std::size_t>(d) + 1) return std::nullopt;
  return static_cast<unsigned>(d);
}

std::optional<SpecialForm> special_form(const Poly& p) {
  if (p.is_zero() || !p.coeff(0)) return std::nullopt;
  Poly rest = p + Poly::one();
  if (rest.is_zero()) return std::nullopt;
  unsigned a = 0;
  while (!rest.coeff(0)) {
    rest = divide_exact(rest, Poly::x());
    ++a;
  }
  unsigned b = 0;
  const Poly x1 = Poly::x_plus_one();
  while (rest.degree() >= 1) {
    auto [q, r] = divrem(rest, x1);
    if (!r.is_zero()) return std::nullopt;
    rest = std::move(q);
    ++b;
  }
  if (a == 0 || b == 0) return std::nullopt;
  return SpecialForm{a, b, p};
}

bool is_self_inverse(const Poly& p) { return !p.is_zero() && reverse(p) == p; }

std::vector<Poly> verify_lemma1_iv(int max_degree) {
  require_at_least(max_degree, 2, "max_deg");
  std::vector<Poly> out;
  for (const auto& p : irreducibles_up_to(max_degree)) {
    if (is_self_inverse(p) && special_form(p)) out.push_back(p);
  }
  return out;
}

std::vector<CompleteSplitViolation> verify_lemma1_iii(int m_bound) {
  require_at_least(m_bound, 1, "m_bound");
  std::vector<CompleteSplitViolation> out;
  for (unsigned m = 1; m <= static_cast<unsigned>(m_bound); ++m) {
    const Factorization f = factorize(complete(m));
    if (f.omega() != 2) continue;
    const auto fs = f.factors();
    if (fs[0].exponent != 1 || fs[1].exponent != 1) continue;
    const Poly& p = fs[0].prime;
    const Poly& q = fs[1].prime;
    const bool both_self = is_self_inverse(p) && is_self_inverse(q);
    const bool swapped = reverse(p) == q && reverse(q) == p;
    if (!both_self && !swapped) out.push_back({m, p, q});
  }
  return out;
}

std::vector<Lemma4Solution> verify_lemma4(int h_bound, int k_bound) {
  require_at_least(h_bound, 1, "h_bound");
  require_at_least(k_bound, 1, "k_bound");
  std::vector<Poly> p_candidates;
  for (unsigned k = 1; k <= static_cast<unsigned>(k_bound); ++k) {
    p_candidates.push_back(sigma_prime_power(Poly::x_plus_one(), 2ULL * k));
  }
  std::vector<Lemma4Solution> out;
  for (unsigned h = 1; h <= static_cast<unsigned>(h_bound); ++h) {
    const Poly total = complete(2 * h);
    for (unsigned k = 1; k <= static_cast<unsigned>(k_bound); ++k) {
      const Poly& p = p_candidates[k - 1];
      auto [q, r] = divrem(total, p);
      if (!r.is_zero() || q.degree() < 1) continue;
      if (is_irreducible(p) && is_irreducible(q)) out.push_back({h, k, p, q});
    }
  }
  return out;
}

std::vector<Lemma5Violation> verify_lemma5(int p_degree_bound, int n_bound) {
  require_at_least(p_degree_bound, 1, "p_deg_bound");
  require_at_least(n_bound, 1, "n_bound");
  std::vector<Lemma5Violation> out;
  for (const auto& p : irreducibles_up_to(p_degree_bound)) {
    for (unsigned n = 1; n <= static_cast<unsigned>(n_bound); ++n) {
      Factorization f = factorize(sigma_prime_power(p, 2ULL * n));
      unsigned g = 0;
      for (const auto& pp : f.factors()) g = std::gcd(g, pp.exponent);
      if (g >= 2) out.push_back({p, n, g, std::move(f)});
    }
  }
  return out;
}

std::vector<Lemma6Violation> verify_lemma6(int p_degree_bound, int n_bound) {
  require_at_least(p_degree_bound, 1, "p_deg_bound");
  require_at_least(n_bound, 1, "n_bound");
  std::vector<Lemma6Violation> out;
  for (const auto& p : irreducibles_up_to(p_degree_bound)) {
    const long long dp = p.degree();
    for (unsigned n = 1; n <= static_cast<unsigned>(n_bound); ++n) {
      const Factorization f = factorize(sigma_prime_power(p, 2ULL * n));
      unsigned max_exp = 0;
      for (const auto& pp : f.factors()) max_exp = std::max(max_exp, pp.exponent);
      for (unsigned m = 2; m <= max_exp; ++m) {
        Poly q = Poly::one();
        for (const auto& pp : f.factors()) {
          if (pp.exponent >= m) q *= pp.prime;
        }
        const long long factor = (m % 2 == 1) ? m - 1 : m;
        if (!(dp > factor * q.degree())) out.push_back({p, n, q, m});
      }
    }
  }
  return out;
}

std::vector<unsigned> verify_theorem8(int h_bound) {
  require_at_least(h_bound, 3, "h_bound");
  std::vector<unsigned> out;
  for (unsigned h = 1; h <= static_cast<unsigned>(h_bound); ++h) {
    const Factorization f = factorize(complete(2 * h));
    const bool all_special = std::ranges::all_of(
        f.factors(), [](const PrimePower& pp) { return special_form(pp.prime).has_value(); });
    if (all_special) out.push_back(h);
  }
  return out;
}

bool has_even_minimal_prime_count(const Factorization& f) {
  if (f.empty()) return true;
  int min_degree = f.factors().front().prime.degree();
  for (const auto& pp : f.factors()) min_degree = std::min(min_degree, pp.prime.degree());
  const auto count = std::ranges::count_if(
      f.factors(), [min_degree](const PrimePower& pp) { return pp.prime.degree() == min_degree; });
  return count % 2 == 0;
}

bool verify_minimal_prime_parity(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("minimal prime parity of the zero polynomial");
  return has_even_minimal_prime_count(factorize(a));
}

}  // namespace gf2p::lemmas
