#include "gf2perfect/sigma.hpp"

#include <bit>
#include <stdexcept>

namespace gf2p {

namespace {

Poly geometric_sum(const Poly& p, std::uint64_t n) {
  Poly r = Poly::one();
  for (std::uint64_t i = 0; i < n; ++i) r = r * p + Poly::one();
  return r;
}

}  // namespace

Poly sigma_prime_power(const Poly& p, std::uint64_t n) {
  if (p.is_zero()) throw std::domain_error("sigma of a power of zero");
  if (n == 0) return Poly::one();
  const std::uint64_t count = n + 1;
  const int s = std::countr_zero(count);
  const std::uint64_t u = count >> s;
  const std::uint64_t two_s = std::uint64_t{1} << s;
  Poly odd_part = geometric_sum(p, u - 1);
  return pow(p + Poly::one(), two_s - 1) * pow(odd_part, two_s);
}

word::Word sigma_prime_power_word(word::Word p, unsigned n) {
  if (n == 0) return 1;
  const unsigned count = n + 1;
  const int s = std::countr_zero(count);
  const unsigned u = count >> s;
  const unsigned two_s = 1U << s;
  return word::mul(word::pow(p ^ 1U, two_s - 1), word::pow(word::geometric_sum(p, u - 1), two_s));
}

Poly sigma_of(const Factorization& f) {
  Poly out = Poly::one();
  for (const auto& pp : f.factors()) out *= sigma_prime_power(pp.prime, pp.exponent);
  return out;
}

SigmaValue sigma(const Poly& a, std::uint64_t seed) {
  if (a.is_zero()) throw std::domain_error("sigma of the zero polynomial");
  SigmaValue v;
  v.input = a;
  v.input_factorization = factorize(a, seed);
  v.sigma = sigma_of(v.input_factorization);
  return v;
}

const Factorization& ensure_sigma_factorization(SigmaValue& value, std::uint64_t seed) {
  if (!value.sigma_factorization) value.sigma_factorization = factorize(value.sigma, seed);
  return *value.sigma_factorization;
}

const char* to_string(Parity p) noexcept { return p == Parity::Even ? "even" : "odd"; }

std::size_t omega(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("omega of the zero polynomial");
  return factorize(a).omega();
}

Parity parity(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("parity of the zero polynomial");
  // x | a iff a(0) = 0; (x+1) | a iff a(1) = 0, i.e. an even number of terms.
  const bool even = !a.coeff(0) || a.weight() % 2 == 0;
  return even ? Parity::Even : Parity::Odd;
}

}  // namespace gf2p
