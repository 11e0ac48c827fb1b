#include "gf2perfect/perfect.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "gf2perfect/text.hpp"
#include "parallel.hpp"

namespace gf2p {

using word::Word;

PerfectCertificate certify_perfect(const Poly& a, std::uint64_t seed) {
  if (a.is_zero()) throw std::domain_error("cannot certify the zero polynomial");
  PerfectCertificate c;
  c.poly = a;
  c.factorization = factorize(a, seed);
  c.sigma = sigma_of(c.factorization);
  c.sigma_factorization = factorize(c.sigma, seed);
  c.is_perfect = c.sigma == a;
  c.parity = parity(a);
  c.omega = c.factorization.omega();
  return c;
}

std::vector<PerfectCertificate> catalog() {
  struct Entry {
    const char* label;
    const char* expr;
    bool translate;
  };
  static constexpr std::array<Entry, 16> kEntries{{
      {"(x^2+x)^1", "x^2+x", false},
      {"(x^2+x)^3", "(x^2+x)^3", false},
      {"(x^2+x)^7", "(x^2+x)^7", false},
      {"(x^2+x)^15", "(x^2+x)^15", false},
      {"(x^2+x)^31", "(x^2+x)^31", false},
      {"T1", "x^2(x+1)(x^2+x+1)", false},
      {"T1(x+1)", "x^2(x+1)(x^2+x+1)", true},
      {"T2", "x^3(x+1)^4(x^4+x^3+1)", false},
      {"T2(x+1)", "x^3(x+1)^4(x^4+x^3+1)", true},
      {"C1", "x^2(x+1)(x^2+x+1)^2(x^4+x+1)", false},
      {"C2", "x^2(x+1)(x^2+x+1)^2(x^4+x+1)", true},
      {"C3", "x^4(x+1)^4(x^4+x^3+x^2+x+1)(x^4+x^3+1)", false},
      {"C4", "x^6(x+1)^3(x^3+x^2+1)(x^3+x+1)", false},
      {"C5", "x^6(x+1)^3(x^3+x^2+1)(x^3+x+1)", true},
      {"S1", "x^6(x+1)^4(x^3+x+1)(x^3+x^2+1)(x^4+x^3+1)", false},
      {"S1(x+1)", "x^6(x+1)^4(x^3+x+1)(x^3+x^2+1)(x^4+x^3+1)", true},
  }};
  std::vector<PerfectCertificate> out;
  out.reserve(kEntries.size());
  for (const auto& e : kEntries) {
    Poly p = parse_poly(e.expr);
    if (e.translate) p = translate(p);
    PerfectCertificate c = certify_perfect(p);
    c.label = e.label;
    out.push_back(std::move(c));
  }
  return out;
}

const char* to_string(ShapeCase c) noexcept {
  switch (c) {
    case ShapeCase::A: return "a";
    case ShapeCase::B: return "b";
    case ShapeCase::C: return "c";
    case ShapeCase::D: return "d";
    case ShapeCase::E: return "e";
  }
  return "?";
}

const char* to_string(PruneRule r) noexcept {
  switch (r) {
    case PruneRule::MixedParity: return "mixed_parity_not_power_pair";
    case PruneRule::BothOddNonMersenne: return "both_odd_non_mersenne";
  }
  return "?";
}

namespace {

bool is_mersenne(unsigned e) { return std::has_single_bit(e + 1); }

bool is_power_pair(unsigned even, unsigned odd) {
  return std::has_single_bit(even) && odd + 1 == even;
}

void finish_translates(std::vector<FoundPerfect>& found) {
  std::ranges::sort(found, {}, [](const FoundPerfect& f) -> const Poly& { return f.certificate.poly; });
  std::unordered_set<Poly> present;
  for (const auto& f : found) present.insert(f.certificate.poly);
  for (auto& f : found) {
    f.translate = translate(f.certificate.poly);
    f.translate_found = present.contains(f.translate);
  }
}

void check_degree_range(int value, int lo, int hi, const char* name) {
  if (value < lo) throw std::invalid_argument(std::string(name) + " must be >= " + std::to_string(lo));
  if (value > hi) throw std::out_of_range(std::string(name) + " must be <= " + std::to_string(hi));
}

std::vector<Word> as_words(const std::vector<Poly>& polys) {
  std::vector<Word> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.low_word());
  return out;
}

// sigma over a word factorization; degree stays that of the input.
Word sigma_of_word(std::span<const WordFactor> factors) {
  Word s = 1;
  for (const auto& f : factors) s = word::mul(s, sigma_prime_power_word(f.prime, f.exponent));
  return s;
}

struct Partial {
  std::uint64_t examined = 0;
  std::uint64_t pruned_mixed = 0;
  std::uint64_t pruned_odd = 0;
  std::vector<Word> hits;
  std::vector<std::pair<Word, std::pair<Shape, std::pair<Word, Word>>>> shaped_hits;
};

}  // namespace

ShapeClass classify_shape(unsigned h, unsigned k, unsigned l, unsigned m) {
  const bool l_even = l % 2 == 0;
  const bool m_even = m % 2 == 0;
  if (l_even && m_even) return {Shape{ShapeCase::A, h, k, l, m}, std::nullopt};
  if (l_even != m_even) {
    const bool ok = l_even ? is_power_pair(l, m) : is_power_pair(m, l);
    if (!ok) return {std::nullopt, PruneRule::MixedParity};
    return {Shape{ShapeCase::B, h, k, l, m}, std::nullopt};
  }
  if (!is_mersenne(l) && !is_mersenne(m)) return {std::nullopt, PruneRule::BothOddNonMersenne};
  ShapeCase tag = ShapeCase::D;
  if (h % 2 == 0 && k % 2 == 0) tag = ShapeCase::C;
  if (h % 2 == 1 && k % 2 == 1) tag = ShapeCase::E;
  return {Shape{tag, h, k, l, m}, std::nullopt};
}

SearchReport exhaustive_search(int max_degree, const SearchOptions& options) {
  check_degree_range(max_degree, 1, kMaxExhaustiveDegree, "max_deg");
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Word> primes = as_words(irreducibles_up_to(std::max(1, max_degree / 2)));
  const Word first = 2;
  const Word last = Word{2} << max_degree;  // exclusive
  const std::size_t count = last - first;

  auto partials = detail::run_partitioned<Partial>(count, 256, options.jobs, [&](std::size_t b, std::size_t e) {
    Partial part;
    std::array<WordFactor, 64> buf{};
    for (Word a = first + b; a < first + e; ++a) {
      const std::size_t n = factor_word(a, primes, buf);
      if (sigma_of_word(std::span(buf.data(), n)) == a) part.hits.push_back(a);
    }
    part.examined = e - b;
    return part;
  });

  SearchReport report;
  report.search = "exhaustive";
  report.bounds = {{"max_deg", max_degree}};
  for (const auto& part : partials) {
    report.candidates_examined += part.examined;
    for (Word a : part.hits) report.perfects_found.push_back({certify_perfect(Poly(a), options.seed), {}, false, {}, {}, {}});
  }
  finish_translates(report.perfects_found);
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

SearchReport shape_search(const ShapeSearchConfig& config, const SearchOptions& options) {
  check_degree_range(config.deg_bound, 1, kMaxShapeDegree, "deg_bound");
  check_degree_range(config.p_deg_bound, 1, kMaxSieveDegree, "p_deg_bound");
  if (config.p_deg_bound > config.deg_bound) {
    throw std::invalid_argument("p_deg_bound must not exceed deg_bound");
  }
  const auto start = std::chrono::steady_clock::now();
  const int bound = config.deg_bound;

  std::vector<Word> odd_primes;
  for (const auto& p : irreducibles_up_to(config.p_deg_bound)) {
    if (p.degree() >= 2) odd_primes.push_back(p.low_word());
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < odd_primes.size(); ++i) {
    for (std::size_t j = i + 1; j < odd_primes.size(); ++j) {
      if (word::degree(odd_primes[i]) + word::degree(odd_primes[j]) + 2 <= bound) pairs.emplace_back(i, j);
    }
  }

  // sigma(x^h), sigma((x+1)^k) and (x+1)^k for every exponent that can occur.
  std::vector<Word> sigma_x(static_cast<std::size_t>(bound) + 1);
  std::vector<Word> sigma_x1(sigma_x.size());
  std::vector<Word> pow_x1(sigma_x.size());
  for (int e = 0; e <= bound; ++e) {
    sigma_x[e] = sigma_prime_power_word(2, static_cast<unsigned>(e));
    sigma_x1[e] = sigma_prime_power_word(3, static_cast<unsigned>(e));
    pow_x1[e] = word::pow(3, static_cast<unsigned>(e));
  }

  auto partials = detail::run_partitioned<Partial>(pairs.size(), pairs.size(), options.jobs, [&](std::size_t b, std::size_t e) {
    Partial part;
    for (std::size_t idx = b; idx < e; ++idx) {
      const Word p = odd_primes[pairs[idx].first];
      const Word q = odd_primes[pairs[idx].second];
      const int dp = word::degree(p);
      const int dq = word::degree(q);
      for (unsigned l = 1; static_cast<int>(l) * dp + dq + 2 <= bound; ++l) {
        for (unsigned m = 1; static_cast<int>(l) * dp + static_cast<int>(m) * dq + 2 <= bound; ++m) {
          const int room = bound - static_cast<int>(l) * dp - static_cast<int>(m) * dq;
          const auto hk_count = static_cast<std::uint64_t>(room) * static_cast<std::uint64_t>(room - 1) / 2;
          const ShapeClass cls = classify_shape(0, 0, l, m);
          if (config.use_pruning && cls.pruned_by) {
            (*cls.pruned_by == PruneRule::MixedParity ? part.pruned_mixed : part.pruned_odd) += hk_count;
            continue;
          }
          const Word odd_part = word::mul(word::pow(p, l), word::pow(q, m));
          const Word odd_sigma = word::mul(sigma_prime_power_word(p, l), sigma_prime_power_word(q, m));
          for (int h = 1; h < room; ++h) {
            for (int k = 1; h + k <= room; ++k) {
              const Word a = word::mul(pow_x1[k], odd_part) << h;
              const Word s = word::mul(word::mul(sigma_x[h], sigma_x1[k]), odd_sigma);
              if (s == a) {
                const ShapeClass full = classify_shape(static_cast<unsigned>(h), static_cast<unsigned>(k), l, m);
                Shape shape = full.shape.value_or(Shape{ShapeCase::A, static_cast<unsigned>(h), static_cast<unsigned>(k), l, m});
                part.shaped_hits.push_back({a, {shape, {p, q}}});
              }
            }
          }
          part.examined += hk_count;
        }
      }
    }
    return part;
  });

  SearchReport report;
  report.search = "shape";
  report.bounds = {{"deg_bound", config.deg_bound},
                   {"p_deg_bound", config.p_deg_bound},
                   {"pruning", config.use_pruning ? 1 : 0}};
  std::uint64_t pruned_mixed = 0;
  std::uint64_t pruned_odd = 0;
  for (const auto& part : partials) {
    report.candidates_examined += part.examined;
    pruned_mixed += part.pruned_mixed;
    pruned_odd += part.pruned_odd;
    for (const auto& [a, info] : part.shaped_hits) {
      FoundPerfect f{certify_perfect(Poly(a), options.seed), {}, false, {}, {}, {}};
      const ShapeClass cls = classify_shape(info.first.h, info.first.k, info.first.l, info.first.m);
      f.shape = cls.shape;
      f.p = Poly(info.second.first);
      f.q = Poly(info.second.second);
      report.perfects_found.push_back(std::move(f));
    }
  }
  report.shapes_pruned = {{to_string(PruneRule::MixedParity), pruned_mixed},
                          {to_string(PruneRule::BothOddNonMersenne), pruned_odd}};
  finish_translates(report.perfects_found);
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

SearchReport odd_square_search(int max_degree, const SearchOptions& options) {
  check_degree_range(max_degree, 2, kMaxOddSquareDegree, "max_deg");
  if (max_degree % 2 != 0) throw std::invalid_argument("max_deg must be even");
  const auto start = std::chrono::steady_clock::now();
  const int half = max_degree / 2;
  const std::vector<Word> primes = as_words(irreducibles_up_to(std::max(1, half / 2)));
  const Word first = 2;
  const Word last = Word{2} << half;
  const std::size_t count = last - first;

  auto partials = detail::run_partitioned<Partial>(count, 64, options.jobs, [&](std::size_t b, std::size_t e) {
    Partial part;
    std::array<WordFactor, 64> buf{};
    for (Word base = first + b; base < first + e; ++base) {
      // odd: B(0) = 1 and B(1) = 1
      if ((base & 1U) == 0 || std::popcount(base) % 2 == 0) continue;
      const std::size_t n = factor_word(base, primes, buf);
      bool squarefree = true;
      Word s = 1;
      for (std::size_t i = 0; i < n && squarefree; ++i) {
        squarefree = buf[i].exponent == 1;
        s = word::mul(s, sigma_prime_power_word(buf[i].prime, 2));
      }
      if (!squarefree) continue;
      ++part.examined;
      if (s == word::square(base)) part.hits.push_back(word::square(base));
    }
    return part;
  });

  SearchReport report;
  report.search = "odd_square";
  report.bounds = {{"max_deg", max_degree}};
  for (const auto& part : partials) {
    report.candidates_examined += part.examined;
    for (Word a : part.hits) report.perfects_found.push_back({certify_perfect(Poly(a), options.seed), {}, false, {}, {}, {}});
  }
  finish_translates(report.perfects_found);
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace gf2p
