#include <gtest/gtest.h>

#include <random>
#include <string>

#include "gf2perfect/text.hpp"
#include "oracles.hpp"

using gf2p::ParseError;
using gf2p::Poly;
using gf2p::from_hex;
using gf2p::parse_poly;
using gf2p::to_hex;
using gf2p::to_text;

TEST(Text, PrintsDescendingTerms) {
  EXPECT_EQ(to_text(Poly(std::uint64_t{0x13})), "x^4+x+1");
  EXPECT_EQ(to_text(Poly::one()), "1");
  EXPECT_EQ(to_text(Poly::x()), "x");
  EXPECT_EQ(to_text(Poly{}), "0");
}

TEST(Text, PrintsHexBitmask) {
  EXPECT_EQ(to_hex(Poly(std::uint64_t{0x13})), "0x13");
  EXPECT_EQ(to_hex(Poly{}), "0x0");
  EXPECT_EQ(to_hex(Poly::monomial(64)), "0x10000000000000000");
  EXPECT_EQ(from_hex("0x10000000000000000"), Poly::monomial(64));
}

TEST(Text, ParsesSumsInAnyOrderAndSpacing) {
  EXPECT_EQ(parse_poly("x^4+x+1"), Poly(std::uint64_t{0x13}));
  EXPECT_EQ(parse_poly(" 1 + x + x^4 "), Poly(std::uint64_t{0x13}));
  EXPECT_EQ(parse_poly("x+x"), Poly{});
  EXPECT_EQ(parse_poly("0"), Poly{});
  EXPECT_EQ(parse_poly("0x13"), Poly(std::uint64_t{0x13}));
  EXPECT_EQ(parse_poly("0XAbC"), Poly(std::uint64_t{0xabc}));
}

TEST(Text, ParsesProductsWithExplicitAndImplicitMultiplication) {
  const Poly a = parse_poly("x^6(x+1)^3(x^3+x^2+1)(x^3+x+1)");
  const Poly b = parse_poly("x^6*(x+1)^3*(x^3+x^2+1)*(x^3+x+1)");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.degree(), 15);
  EXPECT_EQ(parse_poly("(x^2+x)^3"), parse_poly("x^6+x^5+x^4+x^3"));
  EXPECT_EQ(parse_poly("x^2(x+1)"), parse_poly("x^3+x^2"));
  EXPECT_EQ(parse_poly("((x+1))^2"), parse_poly("x^2+1"));
  EXPECT_EQ(parse_poly("0x7^2"), parse_poly("x^4+x^2+1"));
}

TEST(Text, ParseErrorsReportPosition) {
  auto position_of = [](const char* s) -> long {
    try {
      parse_poly(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(position_of("x^2+*1"), 4);
  EXPECT_EQ(position_of("x^"), 2);
  EXPECT_EQ(position_of("(x+1"), 4);
  EXPECT_EQ(position_of("y"), 0);
  EXPECT_EQ(position_of("x+1)"), 3);
  EXPECT_EQ(position_of(""), 0);
  EXPECT_EQ(position_of("0x"), 0);
  EXPECT_NE(position_of("x^99999999999"), -1);
  EXPECT_THROW(from_hex("13"), ParseError);
}

TEST(TextProperty, TextRoundTrip) {
  std::mt19937_64 rng(201);
  for (int i = 0; i < 2000; ++i) {
    const Poly p = oracle::random_poly_upto(rng, 64);
    ASSERT_EQ(parse_poly(to_text(p)), p) << to_text(p);
  }
}

TEST(TextProperty, HexRoundTrip) {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 2000; ++i) {
    const Poly p = oracle::random_poly_upto(rng, 64);
    ASSERT_EQ(parse_poly(to_hex(p)), p) << to_hex(p);
    ASSERT_EQ(from_hex(to_hex(p)), p);
  }
}

TEST(TextProperty, ZeroRoundTrips) {
  EXPECT_EQ(parse_poly(to_text(Poly{})), Poly{});
  EXPECT_EQ(parse_poly(to_hex(Poly{})), Poly{});
}
