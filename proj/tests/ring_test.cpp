/*
 * Copyright 2026 The esp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "test_util.hpp"

namespace {

using esp::Element;
using esp::Errc;
using esp::Ring;
using testutil::el;

const char* const kRings[] = {"int", "rat", "zmod:9", "zmod:25", "zmod:45", "zloc:3", "poly:zmod:9:[X]",
                              "poly:rat:[X,Y]", "poly:poly:zmod:5:[X]:[Y]"};

TEST(RingMake, Zmod9HasHalf) {
  Ring r = Ring::parse("zmod:9");
  EXPECT_EQ(r.kind(), esp::RingKind::zmod);
  EXPECT_TRUE(r.has_half());
  EXPECT_EQ(r.half(), el(r, "5"));
}

TEST(RingMake, PolyOverRationalsHasTwoVariables) {
  Ring r = Ring::parse("poly:rat:[X,Y]");
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r.num_variables(), 2u);
  EXPECT_EQ(r.base(), Ring::rationals());
}

TEST(RingMake, Errors) {
  EXPECT_ESP_ERROR(Ring::parse("zloc:2"), Errc::unsupported_ring);
  EXPECT_ESP_ERROR(Ring::parse("zloc:9"), Errc::unsupported_ring);
  EXPECT_ESP_ERROR(Ring::parse("zmod:1"), Errc::unsupported_ring);
  EXPECT_ESP_ERROR(Ring::parse("zmod:x"), Errc::parse_error);
  EXPECT_ESP_ERROR(Ring::parse("poly:rat:[X,X]"), Errc::variable_clash);
  EXPECT_ESP_ERROR(Ring::parse("poly:poly:rat:[X]:[X]"), Errc::variable_clash);
  EXPECT_ESP_ERROR(Ring::parse("float"), Errc::parse_error);
}

TEST(RingMake, TextRoundTrips) {
  for (const char* t : kRings) EXPECT_EQ(Ring::parse(t).text(), t);
}

TEST(Arith, Examples) {
  Ring z9 = Ring::parse("zmod:9");
  EXPECT_EQ(el(z9, "7") + el(z9, "5"), el(z9, "3"));
  Ring q = Ring::rationals();
  EXPECT_EQ(el(q, "1/2") * el(q, "2/3"), el(q, "1/3"));
  Ring p5 = Ring::parse("poly:zmod:5:[X]");
  EXPECT_EQ(el(p5, "X+1") * el(p5, "X-1"), el(p5, "X^2+4"));
  EXPECT_EQ((el(p5, "X+1") * el(p5, "X-1")).str(), "X^2 + 4");
}

TEST(Arith, OwnerMismatch) {
  Ring a = Ring::parse("zmod:9");
  Ring b = Ring::parse("zmod:25");
  EXPECT_ESP_ERROR(a.one() + b.one(), Errc::owner_mismatch);
  EXPECT_ESP_ERROR(a.one() * b.one(), Errc::owner_mismatch);
}

TEST(Halve, Examples) {
  Ring z9 = Ring::parse("zmod:9");
  EXPECT_EQ(esp::halve(z9.one()), el(z9, "5"));
  Ring q = Ring::rationals();
  EXPECT_EQ(esp::halve(el(q, "3")), el(q, "3/2"));
  EXPECT_ESP_ERROR(esp::halve(Ring::integers().from_int(3)), Errc::not_halvable);
  EXPECT_ESP_ERROR(esp::halve(Ring::parse("zmod:8").one()), Errc::not_halvable);
}

TEST(InvertUnit, Examples) {
  Ring z25 = Ring::parse("zmod:25");
  EXPECT_EQ(esp::invert_unit(el(z25, "7")), el(z25, "18"));
  Ring l5 = Ring::parse("zloc:5");
  EXPECT_EQ(esp::invert_unit(el(l5, "3/2")), el(l5, "2/3"));
  EXPECT_ESP_ERROR(esp::invert_unit(el(Ring::parse("zmod:9"), "3")), Errc::not_unit);
  EXPECT_ESP_ERROR(esp::invert_unit(el(l5, "5/2")), Errc::not_unit);
  EXPECT_ESP_ERROR(esp::invert_unit(el(Ring::parse("poly:rat:[X]"), "X+1")), Errc::not_unit);
}

TEST(Zloc, DenominatorsDivisibleByPAreRejected) {
  Ring l3 = Ring::parse("zloc:3");
  EXPECT_ESP_ERROR(el(l3, "1/3"), Errc::parse_error);
  EXPECT_EQ(el(l3, "2/4"), el(l3, "1/2"));
}

TEST(Canonical, ElementStrings) {
  Ring z9 = Ring::parse("zmod:9");
  EXPECT_EQ(el(z9, "-1").str(), "8");
  EXPECT_EQ(el(z9, "1/2").str(), "5");
  Ring q = Ring::rationals();
  EXPECT_EQ(el(q, "-6/4").str(), "-3/2");
  Ring p = Ring::parse("poly:rat:[X,Y]");
  EXPECT_EQ(el(p, "3*X^2*Y - 1/2").str(), "3*X^2*Y - 1/2");
  EXPECT_EQ(el(p, "Y + X - X").str(), "Y");
  EXPECT_EQ(el(p, "0*X").str(), "0");
}

class RingProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(RingProperties, CanonicalFormIsIdempotent) {
  Ring r = Ring::parse(GetParam());
  esp::Rng rng = esp::trial_rng(3, 0);
  for (int t = 0; t < 100; ++t) {
    Element a = esp::random_element(r, rng);
    Element b = r.parse_element(a.str());
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.str(), b.str());
  }
}

TEST_P(RingProperties, AxiomsOnRandomTriples) {
  Ring r = Ring::parse(GetParam());
  esp::Rng rng = esp::trial_rng(5, 0);
  for (int t = 0; t < 100; ++t) {
    Element a = esp::random_element(r, rng);
    Element b = esp::random_element(r, rng);
    Element c = esp::random_element(r, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, r.zero());
    EXPECT_EQ(a * r.one(), a);
  }
}

TEST_P(RingProperties, HalveDoubles) {
  Ring r = Ring::parse(GetParam());
  if (!r.has_half()) GTEST_SKIP() << "2 is not a unit";
  esp::Rng rng = esp::trial_rng(7, 0);
  for (int t = 0; t < 100; ++t) {
    Element a = esp::random_element(r, rng);
    EXPECT_EQ(r.from_int(2) * esp::halve(a), a);
  }
}

TEST_P(RingProperties, UnitsInvert) {
  Ring r = Ring::parse(GetParam());
  esp::Rng rng = esp::trial_rng(9, 0);
  for (int t = 0; t < 50; ++t) {
    Element u = esp::random_unit(r, rng);
    EXPECT_TRUE(esp::is_unit(u));
    EXPECT_EQ(u * esp::invert_unit(u), r.one());
  }
}

INSTANTIATE_TEST_SUITE_P(AllRings, RingProperties, ::testing::ValuesIn(kRings));

}  // namespace
