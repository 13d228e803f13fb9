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

#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using esp::ElementaryCertificate;
using esp::Element;
using esp::Errc;
using esp::Matrix;
using esp::Ring;
using testutil::el;
using testutil::mat;

// Product of the steps as explicit transvection matrices.
Matrix oracle_cert(const ElementaryCertificate& c) {
  Matrix acc = oracle::identity(c.ring(), c.size());
  for (const auto& s : c.steps()) {
    Matrix e = oracle::identity(c.ring(), c.size());
    e.set(s.i - 1, s.j - 1, s.a);
    acc = oracle::mul(acc, e);
  }
  return acc;
}

TEST(Certificate, Examples) {
  Ring r = Ring::parse("zmod:9");
  ElementaryCertificate empty(r, 3);
  EXPECT_TRUE(esp::cert_eval(empty).is_identity());
  ElementaryCertificate one(r, 3);
  one.push_back(1, 2, el(r, "4"));
  Matrix want = Matrix::identity(r, 3);
  want.set(0, 1, el(r, "4"));
  EXPECT_EQ(esp::cert_eval(one), want);
  EXPECT_ESP_ERROR(one.push_back(2, 2, r.one()), Errc::bad_indices);
  EXPECT_ESP_ERROR(one.push_back(1, 4, r.one()), Errc::bad_indices);
  EXPECT_ESP_ERROR(one.push_back(1, 2, Ring::parse("zmod:25").one()), Errc::owner_mismatch);
}

TEST(Certificate, EvalInverseConcat) {
  Ring r = Ring::parse("zmod:25");
  esp::Rng rng = esp::trial_rng(1, 0);
  for (int t = 0; t < 20; ++t) {
    ElementaryCertificate a(r, 4), b(r, 4);
    for (int s = 0; s < 6; ++s) {
      const auto i = static_cast<std::size_t>(esp::uniform_int(rng, 1, 4));
      const auto j = 1 + (i + static_cast<std::size_t>(esp::uniform_int(rng, 0, 2))) % 4;
      a.push_back(i, j, esp::random_element(r, rng));
      b.push_back(j, i, esp::random_element(r, rng));
    }
    EXPECT_EQ(a.eval(), oracle_cert(a));
    EXPECT_TRUE((a.eval() * a.inverse().eval()).is_identity());
    EXPECT_EQ(concat(a, b).eval(), a.eval() * b.eval());
    EXPECT_EQ(esp::det(a.eval()), r.one());
  }
}

TEST(Whitehead, Examples) {
  Ring r = Ring::parse("zmod:9");
  ElementaryCertificate w = esp::whitehead_factor(3, 1, 2, el(r, "2"));
  EXPECT_EQ(w.steps().size(), 6u);
  EXPECT_EQ(w.eval(), mat(r, {{"2", "0", "0"}, {"0", "5", "0"}, {"0", "0", "1"}}));
  EXPECT_EQ(oracle_cert(w), w.eval());
  EXPECT_TRUE(esp::whitehead_factor(3, 2, 3, r.one()).eval().is_identity());
  EXPECT_ESP_ERROR(esp::whitehead_factor(3, 1, 2, el(r, "3")), Errc::not_unit);
}

TEST(Whitehead, RandomUnits) {
  Ring r = Ring::parse("zloc:5");
  esp::Rng rng = esp::trial_rng(2, 0);
  for (int t = 0; t < 20; ++t) {
    Element u = esp::random_unit(r, rng);
    Matrix want = Matrix::identity(r, 4);
    want.set(3, 3, u);
    want.set(1, 1, esp::invert_unit(u));
    EXPECT_EQ(esp::whitehead_factor(4, 4, 2, u).eval(), want);
  }
}

TEST(SignedSwap, Examples) {
  Ring r = Ring::parse("zmod:9");
  Matrix s = esp::signed_swap(r, 2, 1, 2).eval();
  EXPECT_EQ(s, mat(r, {{"0", "1"}, {"-1", "0"}}));
  EXPECT_EQ(s * s, -Matrix::identity(r, 2));
  EXPECT_EQ(esp::det(s), r.one());
  Matrix s3 = esp::signed_swap(r, 3, 1, 3).eval();
  EXPECT_EQ(s3, mat(r, {{"0", "0", "1"}, {"0", "1", "0"}, {"-1", "0", "0"}}));
}

TEST(Reduce, PsiGivesIdentityCertificate) {
  for (const char* ring : {"zmod:9", "zloc:3"}) {
    Ring r = Ring::parse(ring);
    for (std::size_t n : {1u, 2u, 3u}) {
      auto c = esp::reduce_to_psi_corner(esp::make_psi(r, n));
      EXPECT_EQ(c.size(), 2 * n - 1);
      EXPECT_TRUE(c.eval().is_identity());
    }
  }
}

TEST(Reduce, RoundTripFromKnownCorner) {
  Ring r = Ring::parse("zmod:25");
  esp::Rng rng = esp::trial_rng(3, 0);
  for (int t = 0; t < 20; ++t) {
    Matrix eps = esp::random_elementary(r, 3, 10, rng);
    Matrix phi = esp::corner_congruence(esp::make_psi(r, 2), eps);
    auto c = esp::reduce_to_psi_corner(phi);
    Matrix p = esp::perp(Matrix::identity(r, 1), oracle_cert(c));
    EXPECT_EQ(oracle::mul(oracle::mul(oracle::transpose(p), oracle::psi(r, 2)), p), phi);
  }
}

TEST(Reduce, RoundTripOnRandomForms) {
  for (const char* ring : {"zmod:9", "zmod:25", "zmod:49", "zloc:3", "zmod:27", "rat"}) {
    Ring r = Ring::parse(ring);
    for (std::size_t n : {2u, 3u, 4u}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        esp::FormPtr f = esp::random_pf1_form(r, n, 3 * n, seed);
        auto c = esp::reduce_to_psi_corner(f->phi());
        EXPECT_EQ(esp::corner_congruence(esp::make_psi(r, n), c.eval()), f->phi()) << ring << " n=" << n;
        EXPECT_EQ(esp::det(c.eval()), r.one());
      }
    }
  }
}

TEST(Reduce, Errors) {
  Ring r = Ring::parse("zmod:9");
  Matrix d = Matrix::identity(r, 4);
  d.set(0, 0, r.from_int(2));
  Matrix phi = d.transpose() * esp::make_psi(r, 2) * d;
  ASSERT_EQ(oracle::pfaffian_matchings(phi), r.from_int(2));
  EXPECT_ESP_ERROR(esp::reduce_to_psi_corner(phi), Errc::pfaffian_not_one);
  EXPECT_ESP_ERROR(esp::reduce_to_psi_corner(esp::make_psi(Ring::parse("zmod:45"), 2)), Errc::not_local_ring);
  EXPECT_ESP_ERROR(esp::reduce_to_psi_corner(esp::make_psi(Ring::parse("poly:zmod:9:[X]"), 2)), Errc::not_local_ring);
  EXPECT_ESP_ERROR(esp::reduce_to_psi_corner(esp::make_psi(Ring::parse("zmod:8"), 2)), Errc::not_halvable);
  EXPECT_ESP_ERROR(esp::reduce_to_psi_corner(Matrix::identity(r, 4)), Errc::not_skew);
  EXPECT_ESP_ERROR(esp::reduce_to_psi_corner(Matrix(r, 3, 3)), Errc::odd_size);
}

TEST(Reduce, TransportedGeneratorsLandInSpPsi) {
  Ring r = Ring::parse("zmod:49");
  esp::Rng rng = esp::trial_rng(4, 0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    esp::FormPtr f = esp::random_pf1_form(r, 2, 6, seed);
    Matrix eps = esp::reduce_to_psi_corner(f->phi()).eval();
    esp::SkewForm psi = esp::SkewForm::standard(r, 2);
    Matrix c = f->C(esp::random_vector(r, 3, rng));
    // (1 + eps) C (1 + eps)^-1 lies in Sp(psi).
    Matrix p = esp::perp(Matrix::identity(r, 1), eps);
    EXPECT_TRUE(esp::sp_check(psi.phi(), p * c * esp::mat_inverse(p)));
  }
}

TEST(RandomPf1Form, Examples) {
  Ring r = Ring::parse("zmod:9");
  EXPECT_EQ(esp::random_pf1_form(r, 2, 0, 5)->phi(), esp::make_psi(r, 2));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    esp::FormPtr f = esp::random_pf1_form(r, 3, 6, seed);
    EXPECT_EQ(oracle::pfaffian_matchings(f->phi()), r.one());
    EXPECT_EQ(f->phi(), esp::random_pf1_form(r, 3, 6, seed)->phi());
  }
  EXPECT_NE(esp::random_pf1_form(r, 3, 6, 1)->phi(), esp::random_pf1_form(r, 3, 6, 2)->phi());
}

TEST(FactorSymplecticLocal, WordsRoundTrip) {
  for (const char* ring : {"zmod:9", "zmod:25", "zloc:3"}) {
    Ring r = Ring::parse(ring);
    esp::Rng rng = esp::trial_rng(5, 0);
    for (std::size_t n : {2u, 3u}) {
      esp::FormPtr psi = esp::make_standard_form(r, n);
      for (int t = 0; t < 10; ++t) {
        Matrix m = esp::random_word(psi, 6, rng).eval();
        esp::GroupWord w = esp::factor_symplectic_local(psi, m);
        EXPECT_EQ(w.eval(), m) << ring;
      }
    }
  }
  Ring r = Ring::parse("zmod:9");
  Matrix bad = Matrix::identity(r, 4);
  bad.set(0, 2, r.one());
  EXPECT_ESP_ERROR(esp::factor_symplectic_local(esp::make_standard_form(r, 2), bad), Errc::not_symplectic);
}

}  // namespace
