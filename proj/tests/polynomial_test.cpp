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

TEST(GradeDecompose, Examples) {
  Ring r = Ring::parse("poly:rat:[X,Y]");
  auto parts = esp::grade_decompose(el(r, "X^2*Y + 3*X + 5"));
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts[0], el(r, "5"));
  EXPECT_EQ(parts[1], el(r, "3*X"));
  EXPECT_EQ(parts[2], r.zero());
  EXPECT_EQ(parts[3], el(r, "X^2*Y"));
  EXPECT_TRUE(esp::grade_decompose(r.zero()).empty());
  auto xy = esp::grade_decompose(el(r, "X+Y"));
  ASSERT_EQ(xy.size(), 2u);
  EXPECT_EQ(xy[0], r.zero());
  EXPECT_EQ(xy[1], el(r, "X+Y"));
  EXPECT_ESP_ERROR(esp::grade_decompose(Ring::rationals().one()), Errc::not_polynomial_ring);
}

TEST(HomogenizeMap, Examples) {
  Ring r = Ring::parse("poly:rat:[X,Y]");
  Ring s = esp::homogenization_ring(r, "T");
  Element got = esp::homogenize_map(el(r, "X^2*Y + 3*X + 5"), s);
  Element want = s.variable("X").pow(2) * s.variable("Y") * s.variable("T").pow(3) +
                 s.from_int(3) * s.variable("X") * s.variable("T") + s.from_int(5);
  EXPECT_EQ(got, want);
  EXPECT_EQ(esp::homogenize_map(el(r, "5"), s), s.from_int(5));
  EXPECT_ESP_ERROR(esp::homogenize_map(el(r, "X"), "X"), Errc::variable_clash);
}

TEST(Substitute, Examples) {
  Ring r = Ring::parse("poly:zmod:5:[X]");
  Ring z5 = r.base();
  EXPECT_EQ(esp::substitute(el(r, "X^2+1"), {{"X", z5.from_int(2)}}), z5.zero());
  Ring q = Ring::parse("poly:rat:[X,Y]");
  EXPECT_EQ(esp::substitute(el(q, "X*Y"), {{"X", q.base().zero()}, {"Y", q.base().from_int(7)}}), q.base().zero());
  EXPECT_ESP_ERROR(esp::substitute(el(q, "X*Y"), {{"X", q.base().zero()}}), Errc::missing_variable);
}

// a_0 + a_1 + ... evaluated at T = t, term by term, as an independent oracle.
Element graded_at(const Element& a, const Element& t) {
  auto parts = esp::grade_decompose(a);
  Element acc = a.ring().zero();
  for (std::size_t i = 0; i < parts.size(); ++i) acc += parts[i] * t.pow(static_cast<unsigned>(i));
  return acc;
}

class HomogenizeProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(HomogenizeProperties, RingHomomorphismAndSections) {
  Ring r = Ring::parse(GetParam());
  Ring s = esp::homogenization_ring(r, "T");
  esp::Rng rng = esp::trial_rng(21, 0);
  for (int t = 0; t < 20; ++t) {
    Element a = esp::random_element(r, rng) * esp::random_element(r, rng) + esp::random_element(r, rng);
    Element b = esp::random_element(r, rng);
    Element fa = esp::homogenize_map(a, s);
    Element fb = esp::homogenize_map(b, s);
    EXPECT_EQ(esp::homogenize_map(a * b, s), fa * fb);
    EXPECT_EQ(esp::homogenize_map(a + b, s), fa + fb);
    EXPECT_EQ(esp::substitute(fa, {{"T", r.one()}}), a);
    EXPECT_EQ(esp::substitute(fa, {{"T", r.zero()}}), graded_at(a, r.zero()));
    // T = 2 against the graded sum.
    EXPECT_EQ(esp::substitute(fa, {{"T", r.from_int(2)}}), graded_at(a, r.from_int(2)));
  }
}

INSTANTIATE_TEST_SUITE_P(PolyRings, HomogenizeProperties,
                         ::testing::Values("poly:zmod:9:[X]", "poly:rat:[X,Y]", "poly:zloc:3:[X,Y,Z]"));

TEST(Tower, VariablesFromAnyLevel) {
  Ring r = Ring::parse("poly:poly:zmod:9:[X]:[Y]");
  Element x = r.variable("X");
  Element y = r.variable("Y");
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_ESP_ERROR(r.variable("Z"), Errc::missing_variable);
  // Substituting Y leaves an element of zmod:9[X].
  Element v = esp::substitute(x * y + y, {{"Y", r.base().from_int(2)}});
  EXPECT_EQ(v, el(r.base(), "2*X + 2"));
}

}  // namespace
