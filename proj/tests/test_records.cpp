#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "gf2perfect/perfect.hpp"
#include "gf2perfect/records.hpp"
#include "gf2perfect/text.hpp"

using gf2p::LemmaBounds;
using gf2p::LemmaId;
using gf2p::Poly;
using gf2p::parse_poly;

TEST(Records, CertificateRecordLine) {
  const auto c = gf2p::certify_perfect(parse_poly("x^2(x+1)(x^2+x+1)^2(x^4+x+1)"));
  EXPECT_EQ(gf2p::certificate_record(c),
            "0xec4 x^11+x^10+x^9+x^7+x^6+x^2 x^2*(x+1)*(x^2+x+1)^2*(x^4+x+1) perfect:true");
}

TEST(Records, CertificateJsonFields) {
  const auto c = gf2p::certify_perfect(parse_poly("x^3"));
  const auto j = gf2p::certificate_json(c);
  EXPECT_EQ(j.at("poly_hex"), "0x8");
  EXPECT_EQ(j.at("poly_text"), "x^3");
  EXPECT_EQ(j.at("degree"), 3);
  EXPECT_EQ(j.at("factors").size(), 1U);
  EXPECT_EQ(j.at("factors")[0].at("prime_hex"), "0x2");
  EXPECT_EQ(j.at("factors")[0].at("exp"), 3);
  EXPECT_EQ(j.at("sigma_hex"), "0xf");
  EXPECT_EQ(j.at("parity"), "even");
  EXPECT_EQ(j.at("perfect"), false);
  EXPECT_FALSE(j.contains("label"));
}

TEST(Records, ReportJsonOmitsWallTime) {
  const auto r = gf2p::exhaustive_search(7);
  const auto j = gf2p::report_json(r);
  EXPECT_EQ(j.at("search"), "exhaustive");
  EXPECT_EQ(j.at("perfect_count"), 4);
  EXPECT_EQ(j.at("candidates_examined"), 254);
  EXPECT_FALSE(j.contains("wall_time"));
  EXPECT_EQ(j.at("perfects")[0].at("poly_hex"), "0x6");
  EXPECT_EQ(j.at("perfects")[0].at("translate_found"), true);
}

TEST(Records, SummaryLine) {
  const auto r = gf2p::exhaustive_search(7);
  EXPECT_EQ(gf2p::report_summary(r), "exhaustive max_deg=7 examined=254 found=4 [0x6,0x24,0x36,0x78]");
  const std::string records = gf2p::report_records(r);
  EXPECT_EQ(std::count(records.begin(), records.end(), '\n'), 4);
  EXPECT_EQ(records.substr(0, records.find('\n')), "0x6 x^2+x x*(x+1) perfect:true");
}

TEST(Records, LemmaIdNames) {
  for (const char* name : {"1iii", "1iv", "4", "5", "6", "8", "parity"}) {
    const auto id = gf2p::parse_lemma_id(name);
    ASSERT_TRUE(id.has_value()) << name;
    EXPECT_STREQ(gf2p::to_string(*id), name);
  }
  EXPECT_FALSE(gf2p::parse_lemma_id("7").has_value());
  EXPECT_FALSE(gf2p::parse_lemma_id("").has_value());
}

TEST(Records, VerdictsAtDefaultsHold) {
  for (auto id : {LemmaId::Lemma1iii, LemmaId::Lemma1iv, LemmaId::Lemma4, LemmaId::Lemma5, LemmaId::Lemma6,
                  LemmaId::Theorem8, LemmaId::MinimalPrimeParity}) {
    const auto v = gf2p::verify_lemma(id, {});
    EXPECT_TRUE(v.holds) << gf2p::to_string(id) << " " << v.record.dump();
    EXPECT_EQ(v.record.at("holds"), true);
    EXPECT_EQ(v.record.at("lemma"), gf2p::to_string(id));
  }
}

TEST(Records, VerdictExpectationFollowsBounds) {
  LemmaBounds b;
  b.max_deg = 3;
  auto v = gf2p::verify_lemma(LemmaId::Lemma1iv, b);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.record.at("found").size(), 1U);

  b = {};
  b.h_bound = 3;
  b.k_bound = 3;
  v = gf2p::verify_lemma(LemmaId::Lemma4, b);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.record.at("found").empty());
}

TEST(Records, ParityVerdictOnSinglePoly) {
  LemmaBounds b;
  b.poly = parse_poly("x^3(x+1)^4(x^4+x^3+1)");
  EXPECT_TRUE(gf2p::verify_lemma(LemmaId::MinimalPrimeParity, b).holds);
  b.poly = parse_poly("x^3");
  EXPECT_THROW(gf2p::verify_lemma(LemmaId::MinimalPrimeParity, b), std::invalid_argument);
}
