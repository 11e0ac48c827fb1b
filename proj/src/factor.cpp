#include "gf2perfect/factor.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <stdexcept>
#include <utility>

#include "gf2perfect/text.hpp"

namespace gf2p {

using word::Word;

Factorization::Factorization(std::vector<PrimePower> factors) {
  std::ranges::sort(factors, {}, &PrimePower::prime);
  for (auto& f : factors) {
    if (f.exponent == 0) continue;
    if (!factors_.empty() && factors_.back().prime == f.prime) {
      factors_.back().exponent += f.exponent;
    } else {
      factors_.push_back(std::move(f));
    }
  }
}

unsigned Factorization::exponent_of(const Poly& prime) const noexcept {
  auto it = std::ranges::lower_bound(factors_, prime, {}, &PrimePower::prime);
  return (it != factors_.end() && it->prime == prime) ? it->exponent : 0;
}

Poly Factorization::value() const {
  Poly v = Poly::one();
  for (const auto& f : factors_) v *= pow(f.prime, f.exponent);
  return v;
}

void Factorization::multiply(const Poly& prime, unsigned exponent) {
  if (exponent == 0) return;
  auto it = std::ranges::lower_bound(factors_, prime, {}, &PrimePower::prime);
  if (it != factors_.end() && it->prime == prime) {
    it->exponent += exponent;
  } else {
    factors_.insert(it, PrimePower{prime, exponent});
  }
}

void Factorization::multiply(const Factorization& other) {
  for (const auto& f : other.factors_) multiply(f.prime, f.exponent);
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += '*';
    const bool wrap = f.prime.weight() > 1;
    if (wrap) out += '(';
    out += to_text(f.prime);
    if (wrap) out += ')';
    if (f.exponent > 1) out += '^' + std::to_string(f.exponent);
  }
  return out;
}

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible_word(Word p) {
  const int d = word::degree(p);
  // powers[i] = x^(2^i) mod p
  std::array<Word, 33> powers{};
  powers[0] = word::mod(2, p);
  for (int i = 1; i <= d; ++i) powers[i] = word::mulmod(powers[i - 1], powers[i - 1], p);
  if (powers[d] != powers[0]) return false;
  for (int r : prime_divisors(d)) {
    if (word::gcd(powers[d / r] ^ powers[0], p) != 1) return false;
  }
  return true;
}

bool is_irreducible_general(const Poly& p) {
  const int d = p.degree();
  const Poly x = mod(Poly::x(), p);
  std::vector<Poly> powers;
  powers.reserve(static_cast<std::size_t>(d) + 1);
  powers.push_back(x);
  for (int i = 1; i <= d; ++i) powers.push_back(sqrmod(powers.back(), p));
  if (powers[static_cast<std::size_t>(d)] != x) return false;
  for (int r : prime_divisors(d)) {
    if (!gcd(powers[static_cast<std::size_t>(d / r)] + x, p).is_one()) return false;
  }
  return true;
}

void squarefree_decompose(const Poly& f, unsigned multiplicity, std::vector<PrimePower>& out) {
  if (f.degree() < 1) return;
  const Poly df = derivative(f);
  if (df.is_zero()) {
    squarefree_decompose(sqrt_of_square(f), multiplicity * 2, out);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = divide_exact(f, c);
  for (unsigned i = 1; !w.is_one(); ++i) {
    Poly y = gcd(w, c);
    Poly z = divide_exact(w, y);
    if (z.degree() >= 1) out.push_back({std::move(z), i * multiplicity});
    c = divide_exact(c, y);
    w = std::move(y);
  }
  if (c.degree() >= 1) squarefree_decompose(sqrt_of_square(c), multiplicity * 2, out);
}

// Splits squarefree f into products of irreducibles of a common degree.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  Poly h = mod(Poly::x(), f);
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = sqrmod(h, f);
    Poly g = gcd(h + Poly::x(), f);
    if (!g.is_one()) {
      f = divide_exact(f, g);
      h = mod(h, f);
      out.emplace_back(std::move(g), d);
    }
  }
  if (f.degree() >= 1) {
    const int d = f.degree();
    out.emplace_back(std::move(f), d);
  }
  return out;
}

Poly random_below(const Poly& g, std::mt19937_64& rng) {
  const int d = g.degree();
  std::vector<Word> words(static_cast<std::size_t>(d + 63) / 64);
  for (auto& w : words) w = rng();
  if (d % 64 != 0) words.back() &= (Word{1} << (d % 64)) - 1;
  return Poly(std::move(words));
}

// g is a product of distinct irreducibles of degree d. Uses the trace map
// a + a^2 + ... + a^(2^(d-1)), which lands in GF(2) modulo every factor.
void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<PrimePower>& out,
                  unsigned multiplicity) {
  if (g.degree() == d) {
    out.push_back({g, multiplicity});
    return;
  }
  for (;;) {
    const Poly a = random_below(g, rng);
    if (a.degree() < 1) continue;
    Poly term = a;
    Poly trace = a;
    for (int i = 1; i < d; ++i) {
      term = sqrmod(term, g);
      trace += term;
    }
    Poly u = gcd(trace, g);
    if (u.degree() >= 1 && u.degree() < g.degree()) {
      Poly v = divide_exact(g, u);
      equal_degree(u, d, rng, out, multiplicity);
      equal_degree(v, d, rng, out, multiplicity);
      return;
    }
  }
}

std::vector<Word> build_small_irreducibles() {
  std::vector<Word> out;
  for (const auto& p : irreducibles_up_to(kTrialPrimeMaxDegree)) out.push_back(p.low_word());
  return out;
}

}  // namespace

bool is_irreducible(const Poly& p) {
  const int d = p.degree();
  if (d < 1) throw std::domain_error("irreducibility is undefined for constants");
  if (d == 1) return true;
  if (!p.coeff(0)) return false;
  if (d <= 32) return is_irreducible_word(p.low_word());
  return is_irreducible_general(p);
}

Factorization factorize(const Poly& p, std::uint64_t seed) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  if (p.degree() <= kTrialDivisionMaxDegree) return factorize_trial(p);
  return factorize_general(p, seed);
}

Factorization factorize_general(const Poly& p, std::uint64_t seed) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<PrimePower> squarefree;
  squarefree_decompose(p, 1, squarefree);
  std::mt19937_64 rng(seed);
  std::vector<PrimePower> primes;
  for (const auto& part : squarefree) {
    for (auto& [block, d] : distinct_degree(part.prime)) {
      equal_degree(block, d, rng, primes, part.exponent);
    }
  }
  return Factorization(std::move(primes));
}

Factorization factorize_trial(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  if (p.degree() > 2 * kTrialPrimeMaxDegree + 1) {
    throw std::domain_error("trial division table too small for degree " + std::to_string(p.degree()));
  }
  std::array<WordFactor, 64> buf{};
  const std::size_t n = factor_word(p.low_word(), small_irreducibles(), buf);
  std::vector<PrimePower> factors;
  factors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) factors.push_back({Poly(buf[i].prime), buf[i].exponent});
  return Factorization(std::move(factors));
}

std::size_t factor_word(Word a, std::span<const Word> primes, std::span<WordFactor> out) {
  std::size_t n = 0;
  int da = word::degree(a);
  for (Word p : primes) {
    const int dp = word::degree(p);
    if (2 * dp > da) break;
    unsigned e = 0;
    for (;;) {
      auto [q, r] = word::divrem(a, p);
      if (r != 0) break;
      a = q;
      ++e;
    }
    if (e != 0) {
      if (n < out.size()) out[n] = {p, e};
      ++n;
      da = word::degree(a);
    }
  }
  if (da >= 1) {
    if (n < out.size()) out[n] = {a, 1};
    ++n;
  }
  return std::min(n, out.size());
}

Poly squarefree_part(const Poly& p) {
  Poly out = Poly::one();
  const Factorization f = factorize(p);
  for (const auto& pp : f.factors()) out *= pp.prime;
  return out;
}

std::vector<Poly> irreducibles_up_to(int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("irreducible degree bound must be >= 1");
  if (max_degree > kMaxSieveDegree) {
    throw std::out_of_range("irreducible degree bound must be <= " + std::to_string(kMaxSieveDegree));
  }
  const Word limit = Word{1} << (max_degree + 1);
  std::vector<bool> composite(limit, false);
  std::vector<Poly> out;
  for (int e = 1; e <= max_degree; ++e) {
    for (Word p = Word{1} << e; p < (Word{2} << e); ++p) {
      if (composite[p]) continue;
      out.emplace_back(p);
      if (2 * e > max_degree) continue;
      for (Word q = Word{1} << e; q < (Word{1} << (max_degree - e + 1)); ++q) composite[word::mul(p, q)] = true;
    }
  }
  return out;
}

std::span<const Word> small_irreducibles() {
  static const std::vector<Word> table = build_small_irreducibles();
  return table;
}

void save_irreducibles(const std::filesystem::path& path, std::span<const Poly> primes) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (const auto& p : primes) os << to_hex(p) << '\n';
  if (!os) throw std::runtime_error("failed writing " + path.string());
}

std::vector<Poly> load_irreducibles(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  std::vector<Poly> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    out.push_back(from_hex(line));
  }
  return out;
}

}  // namespace gf2p
