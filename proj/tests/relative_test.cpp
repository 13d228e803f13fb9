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

using esp::Atom;
using esp::AtomKind;
using esp::Element;
using esp::Errc;
using esp::FormPtr;
using esp::GroupWord;
using esp::Ideal;
using esp::Matrix;
using esp::RelativeWord;
using esp::Ring;
using esp::Vector;
using testutil::el;
using testutil::vec;

TEST(SpInverse, MatchesMatrixInverse) {
  Ring r = Ring::parse("zmod:25");
  esp::Rng rng = esp::trial_rng(1, 0);
  for (int t = 0; t < 20; ++t) {
    FormPtr f = esp::random_pf1_form(r, 2, 4, rng);
    Matrix m = esp::random_word(f, 4, rng).eval();
    EXPECT_EQ(esp::sp_inverse(*f, m), esp::mat_inverse(m));
  }
}

TEST(Shuffle, Examples) {
  Ring r = Ring::parse("zmod:9");
  FormPtr f = esp::random_pf1_form(r, 2, 4, 3);
  esp::Rng rng = esp::trial_rng(2, 0);
  GroupWord a1 = esp::random_word(f, 2, rng);
  GroupWord b1 = esp::random_word(f, 2, rng);
  auto one = esp::shuffle_identity({a1}, {b1});
  ASSERT_EQ(one.conjugates.size(), 1u);
  EXPECT_EQ(one.eval(), (a1 * b1).eval());

  std::vector<GroupWord> as, bs;
  for (int i = 0; i < 3; ++i) {
    as.push_back(esp::random_word(f, 2, rng));
    bs.push_back(GroupWord(f));
  }
  auto empty_b = esp::shuffle_identity(as, bs);
  EXPECT_EQ(empty_b.eval(), empty_b.tail.eval());
  EXPECT_EQ(empty_b.tail.eval(), (as[0] * as[1] * as[2]).eval());

  EXPECT_ESP_ERROR(esp::shuffle_identity(as, {bs[0]}), Errc::length_mismatch);
}

TEST(Shuffle, RandomListsUpToFive) {
  for (const char* ring : {"zmod:9", "poly:zmod:9:[X]"}) {
    Ring r = Ring::parse(ring);
    esp::Rng rng = esp::trial_rng(3, 0);
    for (int t = 0; t < 20; ++t) {
      FormPtr f = t % 2 ? esp::make_standard_form(r, 2) : esp::random_pf1_form(r, 2, 4, rng);
      const std::size_t len = 1 + t % 5;
      std::vector<GroupWord> as, bs;
      for (std::size_t i = 0; i < len; ++i) {
        as.push_back(esp::random_word(f, 1 + i % 3, rng));
        bs.push_back(esp::random_word(f, 1 + (i + 1) % 3, rng));
      }
      auto res = esp::shuffle_identity(as, bs);
      EXPECT_EQ(res.eval(), esp::interleave(as, bs).eval()) << ring;
      // A_i is the prefix a_1 ... a_i.
      Matrix prefix = Matrix::identity(r, 4);
      for (std::size_t i = 0; i < len; ++i) {
        prefix = prefix * as[i].eval();
        EXPECT_EQ(res.conjugates[i].conj.eval(), prefix);
      }
    }
  }
}

TEST(SplitVector, Examples) {
  Ring p = Ring::parse("poly:zmod:9:[X]");
  Ideal ix = Ideal::parse(p, "[X]");
  auto [u, w] = esp::split_vector(vec(p, {"X+1", "X^2"}), ix);
  EXPECT_EQ(u, vec(p, {"1", "0"}));
  EXPECT_EQ(w, vec(p, {"X", "X^2"}));
  Ring z9 = Ring::parse("zmod:9");
  auto [u2, w2] = esp::split_vector(vec(z9, {"3", "6", "0"}), Ideal::parse(z9, "[3]"));
  EXPECT_EQ(u2, Vector(3, z9.zero()));
  EXPECT_EQ(w2, vec(z9, {"3", "6", "0"}));
}

TEST(RelativeFactorize, SingleCore) {
  Ring r = Ring::parse("zmod:9");
  FormPtr f = esp::random_pf1_form(r, 2, 4, 8);
  Ideal I = Ideal::parse(r, "[3]");
  Vector v = vec(r, {"3", "6", "0"});
  GroupWord w(f, {Atom::C(v)});
  RelativeWord rw = esp::relative_factorize(w, I);
  ASSERT_EQ(rw.pairs().size(), 1u);
  EXPECT_TRUE(rw.pairs()[0].conj.eval().is_identity());
  EXPECT_EQ(rw.pairs()[0].core, Atom::C(v));
  EXPECT_EQ(rw.eval(), w.eval());
}

TEST(RelativeFactorize, CancellingResidual) {
  Ring r = Ring::parse("poly:zmod:9:[X]");
  FormPtr f = esp::random_pf1_form(r, 2, 4, 9);
  Ideal I = Ideal::parse(r, "[X]");
  // v - u in I^3, so the residual C(nf v) C(nf u)^-1 is the identity.
  Vector v = vec(r, {"X+1", "2", "X^2"});
  Vector u = vec(r, {"1", "2+X", "0"});
  GroupWord w(f, {Atom::C(v), Atom::inverse(Atom::C(u))});
  RelativeWord rw = esp::relative_factorize(w, I);
  EXPECT_EQ(rw.eval(), w.eval());
  for (const auto& p : rw.pairs()) EXPECT_TRUE(esp::payload_in(I, p.core));
  EXPECT_TRUE(esp::rsp_kernel_check(*f, rw.eval(), I));
  EXPECT_EQ(rw.expand().eval(), rw.eval());
}

TEST(RelativeFactorize, Errors) {
  Ring r = Ring::parse("zmod:9");
  FormPtr f = esp::random_pf1_form(r, 2, 4, 10);
  GroupWord w(f, {Atom::C(vec(r, {"1", "0", "0"}))});
  EXPECT_ESP_ERROR(esp::relative_factorize(w, Ideal::parse(r, "[3]")), Errc::hypothesis_not_met);
  Ring pxy = Ring::parse("poly:rat:[X,Y]");
  FormPtr g = esp::make_standard_form(pxy, 2);
  EXPECT_ESP_ERROR(esp::relative_factorize(GroupWord(g), Ideal::parse(pxy, "[X^2+Y, X*Y-1]")), Errc::undecidable_ideal);
  Ring z = Ring::integers();
  EXPECT_ESP_ERROR(esp::relative_factorize(GroupWord(esp::make_standard_form(z, 2)), Ideal::parse(z, "[3]")),
                   Errc::not_halvable);
}

// Words whose residual cancels. For a variable ideal the normal form is
// linear, so a perturbed palindrome works. Over Z/n the normal form of -x is
// not -nf(x); there n perturbed copies of one generator cancel instead.
GroupWord cancelling_word(const FormPtr& f, const Ideal& I, std::size_t len, esp::Rng& rng) {
  const Ring& r = f->ring();
  auto perturb = [&](Vector v) {
    Vector d = esp::random_vector_in(I, v.size(), rng);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += d[k];
    return v;
  };
  std::vector<Atom> front;
  for (std::size_t k = 0; k < len; ++k) {
    const AtomKind kind = esp::uniform_int(rng, 0, 1) ? AtomKind::C : AtomKind::R;
    front.push_back(Atom::vector_atom(kind, esp::random_vector(r, f->size() - 1, rng)));
  }
  GroupWord w(f);
  if (r.kind() == esp::RingKind::zmod) {
    const long copies = r.modulus().get_si();
    for (const auto& a : front) {
      for (long c = 0; c < copies; ++c) w.push_back(Atom::vector_atom(a.kind(), perturb(a.vec())));
    }
    return w;
  }
  for (const auto& a : front) w.push_back(Atom::vector_atom(a.kind(), perturb(a.vec())));
  for (auto it = front.rbegin(); it != front.rend(); ++it) {
    w.push_back(Atom::inverse(Atom::vector_atom(it->kind(), perturb(it->vec()))));
  }
  return w;
}

TEST(RelativeFactorize, RandomCancellingWords) {
  const std::pair<const char*, const char*> cases[] = {{"poly:zmod:9:[X]", "[X]"}, {"zmod:9", "[3]"}};
  for (auto [ring, ideal] : cases) {
    Ring r = Ring::parse(ring);
    Ideal I = Ideal::parse(r, ideal);
    esp::Rng rng = esp::trial_rng(4, 0);
    for (int t = 0; t < 15; ++t) {
      FormPtr f = esp::random_pf1_form(r, 2, 4, rng);
      GroupWord w = cancelling_word(f, I, 1 + t % 3, rng);
      RelativeWord rw = esp::relative_factorize(w, I);
      EXPECT_EQ(rw.eval(), w.eval()) << ring;
      for (const auto& p : rw.pairs()) EXPECT_TRUE(esp::payload_in(I, p.core)) << ring;
      EXPECT_TRUE(esp::rsp_kernel_check(*f, rw.eval(), I)) << ring;
    }
  }
}

TEST(RelativeWords, RejectCoresOutsideIdeal) {
  Ring r = Ring::parse("zmod:9");
  FormPtr f = esp::make_standard_form(r, 2);
  RelativeWord rw(f, Ideal::parse(r, "[3]"));
  EXPECT_ESP_ERROR(rw.push_back(GroupWord(f), Atom::se(2, 1, r.one())), Errc::ideal_violation);
  rw.push_back(GroupWord(f), Atom::se(2, 1, r.from_int(3)));
  EXPECT_EQ(rw.pairs().size(), 1u);
}

TEST(RspKernel, Examples) {
  Ring r = Ring::parse("zmod:9");
  FormPtr psi = esp::make_standard_form(r, 2);
  Ideal I = Ideal::parse(r, "[3]");
  EXPECT_FALSE(esp::rsp_kernel_check(*psi, esp::make_se(2, 2, 1, r.one()), I));
  EXPECT_TRUE(esp::rsp_kernel_check(*psi, Matrix::identity(r, 4), I));
  // Conjugates of mod-I-trivial generators stay trivial mod I.
  esp::Rng rng = esp::trial_rng(5, 0);
  for (int t = 0; t < 20; ++t) {
    RelativeWord rw(psi, I);
    for (int k = 0; k < 3; ++k) rw.push_back(esp::random_word(psi, 3, rng), esp::random_atom(*psi, rng, &I));
    EXPECT_TRUE(esp::rsp_kernel_check(*psi, rw.eval(), I));
  }
}

TEST(DilateWord, Sections) {
  Ring r = Ring::parse("zmod:9");
  esp::Rng rng = esp::trial_rng(6, 0);
  for (int t = 0; t < 50; ++t) {
    FormPtr f = t % 2 ? esp::make_standard_form(r, 2) : esp::random_pf1_form(r, 2, 4, rng);
    GroupWord w = esp::random_word(f, 1 + t % 4, rng);
    GroupWord d = esp::dilate_word(w, "X");
    Matrix theta = d.eval();
    EXPECT_EQ(esp::substitute_matrix(theta, {{"X", r.one()}}), w.eval());
    EXPECT_TRUE(esp::substitute_matrix(theta, {{"X", r.zero()}}).is_identity());
  }
  GroupWord empty(esp::make_standard_form(r, 2));
  EXPECT_TRUE(esp::dilate_word(empty, "X").empty());
  Ring p = Ring::parse("poly:zmod:9:[X]");
  EXPECT_ESP_ERROR(esp::dilate_word(GroupWord(esp::make_standard_form(p, 2)), "X"), Errc::variable_clash);
}

TEST(MultiDilate, TrivialConjugator) {
  Ring r = Ring::parse("zmod:9");
  FormPtr psi = esp::make_standard_form(r, 2);
  Ideal I = Ideal::parse(r, "[3]");
  Vector w = vec(r, {"3", "0", "6"});
  auto md = esp::multi_dilate_conjugated(Matrix::identity(r, 4), {{GroupWord(psi), AtomKind::C, w}}, psi, I);
  ASSERT_EQ(md.variables.size(), 1u);
  Vector xs;
  for (const auto& name : md.variables[0]) xs.push_back(md.ring.variable(name));
  EXPECT_EQ(md.theta, esp::lift_form(*psi, md.ring)->C(xs));
  EXPECT_EQ(esp::substitute_matrix(md.theta, md.at_items), psi->C(w));
  EXPECT_TRUE(esp::substitute_matrix(md.theta, md.at_zero).is_identity());
}

TEST(MultiDilate, RandomInstancesMatchDirectProduct) {
  Ring r = Ring::parse("zmod:9");
  Ideal I = Ideal::parse(r, "[3]");
  esp::Rng rng = esp::trial_rng(7, 0);
  for (int t = 0; t < 5; ++t) {
    FormPtr f = esp::random_pf1_form(r, 2, 4, rng);
    Matrix mu = esp::random_word(f, 2, rng).eval();
    std::vector<esp::DilationItem> items;
    for (int k = 0; k < 2; ++k) {
      items.push_back({esp::random_word(f, 2, rng), k ? AtomKind::R : AtomKind::C, esp::random_vector_in(I, 3, rng)});
    }
    auto md = esp::multi_dilate_conjugated(mu, items, f, I);
    EXPECT_EQ(esp::substitute_matrix(md.theta, md.at_items), esp::conjugated_product(mu, items, *f));
    EXPECT_TRUE(esp::substitute_matrix(md.theta, md.at_zero).is_identity());
    EXPECT_TRUE(esp::sp_check(f->phi(), md.theta));
  }
}

TEST(MultiDilate, Errors) {
  Ring r = Ring::parse("zmod:9");
  FormPtr psi = esp::make_standard_form(r, 2);
  Ideal I = Ideal::parse(r, "[3]");
  Matrix bad = Matrix::identity(r, 4);
  bad.set(0, 2, r.one());
  EXPECT_ESP_ERROR(esp::multi_dilate_conjugated(bad, {}, psi, I), Errc::not_symplectic);
  EXPECT_ESP_ERROR(esp::multi_dilate_conjugated(Matrix::identity(r, 4),
                                                {{GroupWord(psi), AtomKind::C, vec(r, {"1", "0", "0"})}}, psi, I),
                   Errc::ideal_violation);
}

TEST(HomogenizeMatrix, ConstantAndSections) {
  Ring p = Ring::parse("poly:zmod:9:[X]");
  Matrix c = esp::lift(esp::make_se(2, 1, 3, Ring::parse("zmod:9").from_int(4)), p);
  Matrix ct = esp::homogenize_matrix(c, "T");
  EXPECT_EQ(esp::substitute_matrix(ct, {{"T", p.zero()}}), c);
  EXPECT_EQ(esp::substitute_matrix(ct, {{"T", p.one()}}), c);
  EXPECT_ESP_ERROR(esp::homogenize_matrix(c, "X"), Errc::variable_clash);

  Ring r = Ring::parse("zmod:9");
  Ideal I = Ideal::parse(r, "[3]");
  esp::Rng rng = esp::trial_rng(8, 0);
  for (int t = 0; t < 3; ++t) {
    FormPtr f = esp::random_pf1_form(r, 2, 4, rng);
    std::vector<esp::DilationItem> items{{esp::random_word(f, 1, rng), AtomKind::C, esp::random_vector_in(I, 3, rng)}};
    auto md = esp::multi_dilate_conjugated(esp::random_word(f, 1, rng).eval(), items, f, I);
    Matrix tilde = esp::homogenize_matrix(md.theta, "T");
    const Ring& s = md.ring;
    EXPECT_EQ(esp::substitute_matrix(tilde, {{"T", s.one()}}), md.theta);
    EXPECT_EQ(esp::substitute_matrix(tilde, {{"T", s.zero()}}),
              esp::lift(esp::substitute_matrix(md.theta, md.at_zero), s));
    EXPECT_TRUE(esp::sp_check(f->phi(), tilde));
  }
}

TEST(NormalityWitness, GammaIdentityGivesDelta) {
  Ring r = Ring::parse("zmod:9");
  FormPtr f = esp::random_pf1_form(r, 2, 4, 12);
  esp::Rng rng = esp::trial_rng(9, 0);
  GroupWord delta = esp::random_word(f, 3, rng);
  esp::Json rep = esp::normality_witness(f, Matrix::identity(r, 4), delta, std::nullopt);
  EXPECT_EQ(esp::matrix_from_json(rep["conjugate"]), delta.eval());
  EXPECT_TRUE(rep["passed"].get<bool>());
}

TEST(NormalityWitness, RelativeOverNonLocalRing) {
  Ring r = Ring::parse("zmod:45");
  Ideal I = Ideal::parse(r, "[3]");
  esp::Rng rng = esp::trial_rng(10, 0);
  for (int t = 0; t < 5; ++t) {
    FormPtr f = esp::random_pf1_form(r, 2, 4, rng);
    GroupWord gamma = esp::random_word(f, 3, rng);
    RelativeWord delta(f, I);
    delta.push_back(esp::random_word(f, 2, rng), esp::random_atom(*f, rng, &I));
    esp::Json rep = esp::normality_witness(f, gamma, delta, I);
    EXPECT_TRUE(rep["passed"].get<bool>());
    EXPECT_TRUE(rep["checks"]["sp_check"].get<bool>());
    EXPECT_TRUE(rep["checks"]["rsp_kernel_check"].get<bool>());
    ASSERT_EQ(rep["checks"]["localized"].size(), 2u);
    for (const auto& loc : rep["checks"]["localized"]) EXPECT_TRUE(loc["sp_check"].get<bool>());
    EXPECT_FALSE(rep["checks"].contains("certificate"));
  }
}

TEST(NormalityWitness, CertificateModeOnLocalRing) {
  Ring r = Ring::parse("zmod:25");
  esp::Rng rng = esp::trial_rng(11, 0);
  for (int t = 0; t < 3; ++t) {
    FormPtr f = esp::random_pf1_form(r, 2, 4, rng);
    Matrix gamma = esp::random_word(f, 3, rng).eval();
    GroupWord delta = esp::random_word(f, 2, rng);
    esp::Json rep = esp::normality_witness(f, gamma, delta, std::nullopt);
    ASSERT_TRUE(rep["checks"].contains("certificate"));
    EXPECT_TRUE(rep["checks"]["certificate"]["eval_equal"].get<bool>());
    GroupWord cert = esp::word_from_json(rep["checks"]["certificate"]["word"]);
    EXPECT_EQ(cert.eval(), gamma * delta.eval() * esp::mat_inverse(gamma));
    for (const auto& a : cert.atoms()) EXPECT_NE(a.normalized().kind(), AtomKind::se);
  }
}

TEST(NormalityWitness, Errors) {
  Ring r = Ring::parse("zmod:9");
  FormPtr f = esp::make_standard_form(r, 2);
  Matrix bad = Matrix::identity(r, 4);
  bad.set(0, 2, r.one());
  EXPECT_ESP_ERROR(esp::normality_witness(f, bad, GroupWord(f), std::nullopt), Errc::not_symplectic);
  GroupWord delta(f, {Atom::se(2, 1, r.one())});
  EXPECT_ESP_ERROR(esp::normality_witness(f, Matrix::identity(r, 4), delta, Ideal::parse(r, "[3]")),
                   Errc::ideal_violation);
}

}  // namespace
