#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "gf2perfect/lemmas.hpp"
#include "gf2perfect/perfect.hpp"
#include "gf2perfect/records.hpp"
#include "gf2perfect/text.hpp"
#include "oracles.hpp"

using gf2p::Poly;
using gf2p::PruneRule;
using gf2p::SearchReport;
using gf2p::ShapeCase;
using gf2p::parse_poly;

namespace {

Poly P(const char* s) { return parse_poly(s); }

const char* const kC1 = "x^2(x+1)(x^2+x+1)^2(x^4+x+1)";
const char* const kC3 = "x^4(x+1)^4(x^4+x^3+x^2+x+1)(x^4+x^3+1)";

std::set<Poly> found_set(const SearchReport& r) {
  std::set<Poly> s;
  for (const auto& f : r.perfects_found) s.insert(f.certificate.poly);
  return s;
}

std::set<Poly> catalog_set(int max_degree, std::size_t max_omega = 99) {
  std::set<Poly> s;
  for (const auto& c : gf2p::catalog()) {
    if (c.poly.degree() <= max_degree && c.omega <= max_omega) s.insert(c.poly);
  }
  return s;
}

std::set<Poly> c_family() {
  std::set<Poly> s;
  for (const auto& c : gf2p::catalog()) {
    if (c.label.size() == 2 && c.label[0] == 'C') s.insert(c.poly);
  }
  return s;
}

}  // namespace

TEST(Certify, Examples) {
  const Poly c1 = P(kC1);
  EXPECT_TRUE(gf2p::certify_perfect(translate(c1)).is_perfect);
  EXPECT_TRUE(gf2p::certify_perfect(P(kC3)).is_perfect);
  const auto x3 = gf2p::certify_perfect(P("x^3"));
  EXPECT_FALSE(x3.is_perfect);
  EXPECT_EQ(x3.sigma, P("(x+1)^3"));
  EXPECT_THROW(gf2p::certify_perfect(Poly{}), std::domain_error);
}

TEST(Certify, CertificateIsConsistent) {
  const auto c = gf2p::certify_perfect(P(kC1));
  EXPECT_EQ(c.omega, 4U);
  EXPECT_EQ(c.parity, gf2p::Parity::Even);
  EXPECT_EQ(c.factorization.value(), c.poly);
  EXPECT_EQ(c.sigma_factorization.value(), c.sigma);
  EXPECT_EQ(c.sigma_factorization, c.factorization);
}

TEST(Catalog, ContainsKnownEntries) {
  const auto cat = gf2p::catalog();
  ASSERT_EQ(cat.size(), 16U);
  auto has = [&](const Poly& p) {
    return std::any_of(cat.begin(), cat.end(), [&](const auto& c) { return c.poly == p; });
  };
  EXPECT_TRUE(has(P("(x^2+x)^7")));
  EXPECT_TRUE(has(P("x^3(x+1)^4(x^4+x^3+1)")));
  const Poly s1 = P("x^6(x+1)^4(x^3+x+1)(x^3+x^2+1)(x^4+x^3+1)");
  EXPECT_TRUE(has(s1));
  EXPECT_EQ(s1.degree(), 20);
  for (const auto& c : cat) {
    EXPECT_TRUE(c.is_perfect) << c.label;
    EXPECT_EQ(c.sigma, c.poly) << c.label;
    EXPECT_FALSE(c.label.empty());
  }
}

TEST(Catalog, ClosedUnderTranslation) {
  const auto all = catalog_set(1000);
  for (const auto& p : all) EXPECT_TRUE(all.count(translate(p))) << to_text(p);
}

TEST(Catalog, KnownHexMasks) {
  // Cross-check against masks built by the schoolbook oracle from factored forms.
  auto build = [](std::initializer_list<std::pair<std::uint64_t, unsigned>> parts) {
    oracle::Coeffs acc{1};
    for (const auto& [p, e] : parts) acc = oracle::mul(acc, oracle::pow(oracle::from_bits(p), e));
    return oracle::to_bits(acc);
  };
  const std::uint64_t c1 = build({{0b10, 2}, {0b11, 1}, {0b111, 2}, {0b10011, 1}});
  const std::uint64_t c4 = build({{0b10, 6}, {0b11, 3}, {0b1101, 1}, {0b1011, 1}});
  const std::uint64_t s1 = build({{0b10, 6}, {0b11, 4}, {0b1011, 1}, {0b1101, 1}, {0b11001, 1}});
  const auto all = catalog_set(1000);
  EXPECT_TRUE(all.count(Poly(c1)));
  EXPECT_TRUE(all.count(Poly(c4)));
  EXPECT_TRUE(all.count(Poly(s1)));
  EXPECT_EQ(c1, 0xec4U);
}

TEST(Exhaustive, Examples) {
  EXPECT_EQ(found_set(gf2p::exhaustive_search(7)),
            (std::set<Poly>{P("x^2+x"), P("(x^2+x)^3"), P("x^2(x+1)(x^2+x+1)"), P("x(x+1)^2(x^2+x+1)")}));
  EXPECT_TRUE(gf2p::exhaustive_search(1).perfects_found.empty());
  EXPECT_EQ(gf2p::exhaustive_search(1).candidates_examined, 2U);
}

TEST(Exhaustive, MatchesBruteDivisorSumUpTo12) {
  std::set<Poly> brute;
  for (std::uint64_t a = 2; a < (1U << 13); ++a) {
    if (oracle::divisor_sum_brute(a) == a) brute.insert(Poly(a));
  }
  EXPECT_EQ(found_set(gf2p::exhaustive_search(12)), brute);
  EXPECT_EQ(brute, catalog_set(12));
}

TEST(Exhaustive, Monotone) {
  SearchReport prev = gf2p::exhaustive_search(1);
  for (int d = 2; d <= 16; ++d) {
    SearchReport cur = gf2p::exhaustive_search(d);
    const auto a = found_set(prev);
    const auto b = found_set(cur);
    EXPECT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end())) << d;
    EXPECT_EQ(cur.candidates_examined, (std::uint64_t{2} << d) - 2);
    prev = std::move(cur);
  }
}

TEST(Exhaustive, DeterministicAcrossJobCounts) {
  const auto one = gf2p::exhaustive_search(16, {.jobs = 1});
  const auto many = gf2p::exhaustive_search(16, {.jobs = 5});
  EXPECT_EQ(gf2p::report_json(one).dump(), gf2p::report_json(many).dump());
}

TEST(Exhaustive, RejectsBadBounds) {
  EXPECT_THROW(gf2p::exhaustive_search(0), std::invalid_argument);
  EXPECT_THROW(gf2p::exhaustive_search(gf2p::kMaxExhaustiveDegree + 1), std::out_of_range);
}

TEST(Shape, ClassificationExamples) {
  auto c = gf2p::classify_shape(2, 4, 2, 4);
  ASSERT_TRUE(c.shape);
  EXPECT_EQ(c.shape->tag, ShapeCase::A);

  c = gf2p::classify_shape(2, 1, 2, 1);  // C1 pattern
  ASSERT_TRUE(c.shape);
  EXPECT_EQ(c.shape->tag, ShapeCase::B);
  c = gf2p::classify_shape(1, 1, 1, 2);  // l = 1, m = 2
  ASSERT_TRUE(c.shape);
  EXPECT_EQ(c.shape->tag, ShapeCase::B);

  c = gf2p::classify_shape(4, 4, 1, 1);  // C3 pattern
  ASSERT_TRUE(c.shape);
  EXPECT_EQ(c.shape->tag, ShapeCase::C);
  c = gf2p::classify_shape(4, 3, 1, 1);  // C4 pattern
  ASSERT_TRUE(c.shape);
  EXPECT_EQ(c.shape->tag, ShapeCase::D);
  c = gf2p::classify_shape(3, 4, 1, 5);
  ASSERT_TRUE(c.shape);
  EXPECT_EQ(c.shape->tag, ShapeCase::D);
  c = gf2p::classify_shape(3, 5, 3, 5);
  ASSERT_TRUE(c.shape);
  EXPECT_EQ(c.shape->tag, ShapeCase::E);

  c = gf2p::classify_shape(1, 1, 2, 3);
  EXPECT_FALSE(c.shape);
  EXPECT_EQ(c.pruned_by, PruneRule::MixedParity);
  c = gf2p::classify_shape(1, 1, 5, 9);
  EXPECT_FALSE(c.shape);
  EXPECT_EQ(c.pruned_by, PruneRule::BothOddNonMersenne);
}

TEST(ShapeProperty, ClassificationIsTotalAndSymmetric) {
  std::mt19937_64 rng(501);
  auto is_mersenne = [](unsigned v) { return (v & (v + 1)) == 0; };
  for (int i = 0; i < 5000; ++i) {
    const unsigned h = 1 + rng() % 20, k = 1 + rng() % 20, l = 1 + rng() % 33, m = 1 + rng() % 33;
    const auto c = gf2p::classify_shape(h, k, l, m);
    const auto s = gf2p::classify_shape(h, k, m, l);
    ASSERT_NE(c.shape.has_value(), c.pruned_by.has_value());
    ASSERT_EQ(c.shape.has_value(), s.shape.has_value());
    if (!c.shape) continue;
    ASSERT_EQ(c.shape->tag, s.shape->tag);
    switch (c.shape->tag) {
      case ShapeCase::A:
        ASSERT_TRUE(l % 2 == 0 && m % 2 == 0);
        break;
      case ShapeCase::B:
        ASSERT_TRUE((l == m + 1 && is_mersenne(m)) || (m == l + 1 && is_mersenne(l)));
        break;
      case ShapeCase::C:
        ASSERT_TRUE(h % 2 == 0 && k % 2 == 0 && l % 2 == 1 && m % 2 == 1);
        break;
      case ShapeCase::D:
        ASSERT_TRUE((h + k) % 2 == 1 && l % 2 == 1 && m % 2 == 1);
        break;
      case ShapeCase::E:
        ASSERT_TRUE(h % 2 == 1 && k % 2 == 1 && l % 2 == 1 && m % 2 == 1);
        break;
    }
    if (c.shape->tag >= ShapeCase::C) {
      ASSERT_TRUE(is_mersenne(l) || is_mersenne(m));
    }
  }
}

TEST(ShapeSearch, SmallConfigContainsC1C2) {
  const auto r = gf2p::shape_search({.deg_bound = 11, .p_deg_bound = 4, .use_pruning = true});
  const auto s = found_set(r);
  EXPECT_TRUE(s.count(P(kC1)));
  EXPECT_TRUE(s.count(translate(P(kC1))));
}

TEST(ShapeSearch, PruningIsSound) {
  for (int deg : {12, 16, 20, 24}) {
    for (int pdeg : {4, 6}) {
      const auto pruned = gf2p::shape_search({.deg_bound = deg, .p_deg_bound = pdeg, .use_pruning = true});
      const auto full = gf2p::shape_search({.deg_bound = deg, .p_deg_bound = pdeg, .use_pruning = false});
      EXPECT_EQ(found_set(pruned), found_set(full)) << deg << "," << pdeg;
      std::uint64_t skipped = 0;
      for (const auto& [rule, n] : pruned.shapes_pruned) skipped += n;
      EXPECT_EQ(pruned.candidates_examined + skipped, full.candidates_examined);
    }
  }
}

TEST(ShapeSearch, FindsExactlyTheCFamilyAt24) {
  const auto r = gf2p::shape_search({.deg_bound = 24, .p_deg_bound = 6, .use_pruning = true});
  EXPECT_EQ(found_set(r), c_family());
  for (const auto& f : r.perfects_found) {
    EXPECT_TRUE(f.certificate.is_perfect);
    EXPECT_EQ(f.certificate.omega, 4U);
    EXPECT_TRUE(f.translate_found);
    EXPECT_TRUE(f.shape.has_value());
    EXPECT_TRUE(gf2p::lemmas::has_even_minimal_prime_count(f.certificate.factorization));
  }
}

TEST(ShapeSearch, DeterministicAcrossJobCounts) {
  const gf2p::ShapeSearchConfig cfg{.deg_bound = 24, .p_deg_bound = 6, .use_pruning = true};
  const auto one = gf2p::shape_search(cfg, {.jobs = 1});
  const auto many = gf2p::shape_search(cfg, {.jobs = 7});
  EXPECT_EQ(gf2p::report_json(one).dump(), gf2p::report_json(many).dump());
  EXPECT_EQ(gf2p::report_summary(one), gf2p::report_summary(many));
}

TEST(ShapeSearch, RejectsInconsistentBounds) {
  EXPECT_THROW(gf2p::shape_search({.deg_bound = 10, .p_deg_bound = 12}), std::invalid_argument);
  EXPECT_THROW(gf2p::shape_search({.deg_bound = 0, .p_deg_bound = 1}), std::invalid_argument);
  EXPECT_THROW(gf2p::shape_search({.deg_bound = 64, .p_deg_bound = 8}), std::out_of_range);
}

TEST(OddSquare, Examples) {
  EXPECT_TRUE(gf2p::odd_square_search(4).perfects_found.empty());
  EXPECT_TRUE(gf2p::odd_square_search(20).perfects_found.empty());
  const Poly b = P("x^2+x+1");
  const auto c = gf2p::certify_perfect(pow(b, 2));
  EXPECT_EQ(c.sigma, P("x^4+x+1"));
  EXPECT_FALSE(c.is_perfect);
  EXPECT_THROW(gf2p::odd_square_search(7), std::invalid_argument);
}

TEST(OddSquare, CandidateCountMatchesDirectEnumeration) {
  // Odd squarefree B with 1 <= deg B <= 7.
  std::uint64_t expected = 0;
  for (std::uint64_t b = 2; b < 256; ++b) {
    const Poly p(b);
    if (!p.coeff(0) || p.weight() % 2 == 0) continue;
    if (!gcd(p, derivative(p)).is_one()) continue;
    ++expected;
  }
  EXPECT_EQ(gf2p::odd_square_search(14).candidates_examined, expected);
}

TEST(SearchProperty, TranslationClosureOnFoundPerfects) {
  for (const auto& r : {gf2p::exhaustive_search(16), gf2p::shape_search({.deg_bound = 24, .p_deg_bound = 6})}) {
    const auto s = found_set(r);
    for (const auto& f : r.perfects_found) {
      ASSERT_EQ(f.translate, translate(f.certificate.poly));
      ASSERT_TRUE(s.count(f.translate)) << to_text(f.certificate.poly);
      ASSERT_TRUE(gf2p::certify_perfect(f.translate).is_perfect);
      ASSERT_TRUE(gf2p::lemmas::has_even_minimal_prime_count(f.certificate.factorization));
    }
  }
}
