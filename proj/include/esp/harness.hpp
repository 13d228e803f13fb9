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

/**
 * @file harness.hpp
 * @brief Seeded property suites over a configured ring. Each trial draws from
 * its own generator, so reports depend only on (suite, ring, n, trials, seed).
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "esp/witness.hpp"

namespace esp {

struct TrialConfig {
  std::string ring = "zmod:9";
  std::size_t n = 2;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::size_t min_len = 1;
  std::size_t max_len = 4;
  /// Ideal text such as "[3]"; empty picks a default for the ring.
  std::string ideal;
};

inline const std::vector<std::string>& default_rings() {
  static const std::vector<std::string> rings{"zmod:9", "zmod:25", "zloc:3", "poly:zmod:9:[X]"};
  return rings;
}

/// A small nonzero proper ideal where one exists: (p) for zmod/zloc, the first
/// variable for polynomial rings, (3) in Z and the zero ideal in Q.
inline Ideal default_ideal(const Ring& r) {
  switch (r.kind()) {
    case RingKind::zmod: return Ideal::generated_by(r, {r.from_integer(r.modulus_factors().front().first)});
    case RingKind::zloc: return Ideal::generated_by(r, {r.from_integer(r.modulus())});
    case RingKind::polynomial: return Ideal::generated_by(r, {r.variable(r.variables().front())});
    case RingKind::integers: return Ideal::generated_by(r, {r.from_int(3)});
    case RingKind::rationals: return Ideal::generated_by(r, {r.zero()});
  }
  return Ideal::generated_by(r, {r.zero()});
}

inline Ideal config_ideal(const TrialConfig& cfg, const Ring& r) {
  return cfg.ideal.empty() ? default_ideal(r) : Ideal::parse(r, cfg.ideal);
}

/// Accumulates checks and violations for one suite run.
class SuiteRun {
 public:
  void check(bool ok, std::size_t trial, const std::string& what) {
    ++checks_;
    if (!ok) violations_.push_back("trial " + std::to_string(trial) + ": " + what);
  }
  std::size_t checks() const noexcept { return checks_; }
  std::vector<std::string> sorted_violations() const {
    auto v = violations_;
    std::sort(v.begin(), v.end());
    return v;
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> violations_;
};

namespace suites {

struct Ctx {
  const TrialConfig& cfg;
  Ring ring;
  SuiteRun& run;
  std::size_t trial;
  Rng rng;

  void check(bool ok, const std::string& what) { run.check(ok, trial, what); }
  std::size_t word_len() {
    return static_cast<std::size_t>(uniform_int(rng, static_cast<long>(cfg.min_len), static_cast<long>(cfg.max_len)));
  }
  FormPtr random_form() { return random_pf1_form(ring, cfg.n, 2 * cfg.n, rng); }
};

inline void require_half(const Ring& r) {
  if (!r.has_half()) throw Error(Errc::not_halvable, "suite needs 2 to be a unit in " + r.text());
}

inline void rings(Ctx& c) {
  const Ring& r = c.ring;
  Element a = random_element(r, c.rng), b = random_element(r, c.rng), d = random_element(r, c.rng);
  c.check((a + b) + d == a + (b + d), "additive associativity");
  c.check((a * b) * d == a * (b * d), "multiplicative associativity");
  c.check(a * (b + d) == a * b + a * d, "distributivity");
  c.check(a * b == b * a && a + b == b + a, "commutativity");
  c.check(r.parse_element(a.str()) == a, "print/parse round trip of " + a.str());
  if (r.has_half()) c.check(r.from_int(2) * halve(a) == a, "2 * halve(a) = a");
  Ideal I = default_ideal(r);
  Element x = random_in_ideal(I, c.rng), y = random_in_ideal(I, c.rng);
  c.check(I.contains(x + y) && I.contains(a * x), "ideal closure");
  c.check(I.contains(a - I.normal_form(a)), "normal form differs by an ideal element");
  if (r.kind() == RingKind::zmod) {
    for (const auto& mx : enumerate_max_ideals(r)) {
      Localization loc = localize_at(r, mx.prime);
      c.check(loc(a + b) == loc(a) + loc(b) && loc(a * b) == loc(a) * loc(b) && loc(r.one()).is_one(),
              "localization at " + mx.prime.get_str() + " is a unital homomorphism");
    }
  }
  if (r.is_polynomial()) {
    const Ring target = homogenization_ring(r, "T_");
    Element fa = homogenize_map(a, target), fb = homogenize_map(b, target);
    c.check(homogenize_map(a * b, target) == fa * fb && homogenize_map(a + b, target) == fa + fb,
            "homogenization is a ring homomorphism");
    Assignment one{{"T_", r.one()}}, zero{{"T_", r.zero()}};
    auto parts = grade_decompose(a);
    c.check(substitute(fa, one) == a, "T = 1 section");
    c.check(substitute(fa, zero) == (parts.empty() ? r.zero() : parts[0]), "T = 0 gives the degree-0 part");
  }
}

inline void pfaffian_suite(Ctx& c) {
  for (std::size_t size = 2; size <= 2 * c.cfg.n; size += 2) {
    Matrix a = random_skew(c.ring, size, c.rng);
    Element pf = pfaffian(a);
    c.check(pf * pf == det(a), "Pf^2 = det at size " + std::to_string(size));
    Matrix e = random_elementary(c.ring, size, size, c.rng);
    c.check(pfaffian(e.transpose() * a * e) == pf, "Pf(E^t A E) = Pf(A) at size " + std::to_string(size));
  }
  c.check(pfaffian(make_psi(c.ring, c.cfg.n)).is_one(), "Pf(psi_n) = 1");
}

inline void generators(Ctx& c) {
  const std::size_t n = c.cfg.n;
  const Matrix psi = make_psi(c.ring, n);
  for (std::size_t i = 1; i <= 2 * n; ++i) {
    for (std::size_t j = 1; j <= 2 * n; ++j) {
      if (i == j) continue;
      Element a = random_element(c.ring, c.rng);
      Matrix se = make_se(n, i, j, a);
      c.check(sp_check(psi, se), "se_" + std::to_string(i) + std::to_string(j) + " symplectic");
      c.check((se * make_se(n, i, j, -a)).is_identity(), "se_ij(a) se_ij(-a) = I");
    }
  }
  FormPtr f = c.random_form();
  Vector v = random_vector(c.ring, f->size() - 1, c.rng);
  Vector neg;
  for (const auto& x : v) neg.push_back(-x);
  c.check(sp_check(f->phi(), f->C(v)) && sp_check(f->phi(), f->R(v)), "C(v), R(v) symplectic");
  c.check((f->C(v) * f->C(neg)).is_identity() && (f->R(v) * f->R(neg)).is_identity(), "C(-v), R(-v) invert");
}

inline void blocks(Ctx& c) {
  FormPtr f = c.random_form();
  c.check(f->block_identities_hold(), "block identities");
  Vector v = random_vector(c.ring, f->size() - 1, c.rng), w = random_vector(c.ring, f->size() - 1, c.rng);
  Vector s;
  for (std::size_t k = 0; k < v.size(); ++k) s.push_back(v[k] + w[k]);
  c.check(f->alpha(v) * f->alpha(w) == f->alpha(s), "alpha additive");
  c.check(f->beta(v) * f->beta(w) == f->beta(s), "beta additive");
}

inline void commutators(Ctx& c) {
  require_half(c.ring);
  const std::size_t n = c.cfg.n;
  FormPtr psi = make_standard_form(c.ring, n);
  const std::size_t m = 2 * n;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (i != j && i != sigma(j)) {
        Element a = random_element(c.ring, c.rng), b = random_element(c.ring, c.rng);
        c.check(commutator_identity_check(psi, CommutatorCase::one, i, j, 0, a, b),
                "case 1 i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
      for (std::size_t k = 1; k <= m; ++k) {
        if (i != j && j != k && i != k && j != sigma(i) && k != sigma(i) && k != sigma(j)) {
          Element a = random_element(c.ring, c.rng), b = random_element(c.ring, c.rng);
          c.check(commutator_identity_check(psi, CommutatorCase::two, i, j, k, a, b),
                  "case 2 i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k));
        }
      }
    }
    for (std::size_t k = 1; k <= m; ++k) {
      if (k != i && k != sigma(i)) {
        Element a = random_element(c.ring, c.rng), b = random_element(c.ring, c.rng);
        c.check(commutator_identity_check(psi, CommutatorCase::three, i, 0, k, a, b),
                "case 3 i=" + std::to_string(i) + " k=" + std::to_string(k));
      }
    }
  }
  for (std::size_t i = 2; i <= m; ++i) {
    for (std::size_t j = 2; j <= m; ++j) {
      if (i == j) continue;
      Element a = random_element(c.ring, c.rng);
      GroupWord w = rewrite_se_off_corner(psi, i, j, a);
      bool corner_only = std::all_of(w.atoms().begin(), w.atoms().end(), is_corner_atom);
      c.check(corner_only && w.eval() == make_se(n, i, j, a),
              "rewrite se_" + std::to_string(i) + "," + std::to_string(j));
    }
  }
}

inline void decompose(Ctx& c) {
  FormPtr psi = make_standard_form(c.ring, c.cfg.n);
  Vector v = random_vector(c.ring, psi->size() - 1, c.rng);
  c.check(decompose_C_psi(psi, v).eval() == psi->C(v), "C_psi decomposition");
  c.check(decompose_R_psi(psi, v).eval() == psi->R(v), "R_psi decomposition");
}

inline void splitting(Ctx& c) {
  require_half(c.ring);
  FormPtr f = c.random_form();
  Vector v = random_vector(c.ring, f->size() - 1, c.rng), w = random_vector(c.ring, f->size() - 1, c.rng);
  Vector s;
  for (std::size_t k = 0; k < v.size(); ++k) s.push_back(v[k] + w[k]);
  c.check(split_generator(f, AtomKind::C, v, w).eval() == f->C(s), "C splitting");
  c.check(split_generator(f, AtomKind::R, v, w).eval() == f->R(s), "R splitting");
}

inline void shuffle(Ctx& c) {
  FormPtr f = c.random_form();
  const auto len = static_cast<std::size_t>(uniform_int(c.rng, 1, 5));
  std::vector<GroupWord> a, b;
  for (std::size_t k = 0; k < len; ++k) {
    a.push_back(random_word(f, c.word_len(), c.rng));
    b.push_back(random_word(f, c.word_len(), c.rng));
  }
  ShuffleResult s = shuffle_identity(a, b);
  c.check(s.eval() == interleave(a, b).eval(), "shuffle of length " + std::to_string(len));
}

inline void transport(Ctx& c) {
  FormPtr star = c.random_form();
  const std::size_t m = star->size() - 1;
  ElementaryCertificate eps_cert(c.ring, m);
  for (std::size_t k = 0; k < m; ++k) {
    auto i = static_cast<std::size_t>(uniform_int(c.rng, 1, static_cast<long>(m)));
    auto j = static_cast<std::size_t>(uniform_int(c.rng, 1, static_cast<long>(m) - 1));
    if (j >= i) ++j;
    eps_cert.push_back(i, j, random_element(c.ring, c.rng));
  }
  const Matrix eps = eps_cert.eval();
  FormPtr f = make_skewform(corner_congruence(star->phi(), eps));
  GroupWord w = random_word(star, c.word_len(), c.rng);
  Matrix moved = conjugate_transport(*f, *star, eps, w.eval());
  c.check(sp_check(f->phi(), moved), "transported word is symplectic");
  Matrix bad = Matrix::identity(c.ring, f->size()) + Matrix::basis_e(c.ring, f->size(), 1, 2);
  c.check(sp_check(star->phi(), bad) == sp_check(f->phi(), conjugate_transport(*f, *star, eps, bad)),
          "membership is preserved both ways");
  Vector v = random_vector(c.ring, m, c.rng);
  const Matrix eps_inv = eps_cert.inverse().eval();
  c.check(conjugate_transport(*f, *star, eps, star->C(v)) ==
              f->C((eps_inv * Matrix::column(c.ring, v)).column_vector(0)),
          "C transport law");
  c.check(conjugate_transport(*f, *star, eps, star->R(v)) ==
              f->R((eps.transpose() * Matrix::column(c.ring, v)).column_vector(0)),
          "R transport law");
}

inline std::vector<DilationItem> random_items(Ctx& c, const FormPtr& f, const Ideal& I, std::size_t count) {
  std::vector<DilationItem> items;
  for (std::size_t k = 0; k < count; ++k) {
    AtomKind kind = uniform_int(c.rng, 0, 1) == 0 ? AtomKind::C : AtomKind::R;
    items.push_back(DilationItem{random_word(f, c.word_len(), c.rng), kind, random_vector_in(I, f->size() - 1, c.rng)});
  }
  return items;
}

inline void homogenize(Ctx& c) {
  FormPtr f = c.random_form();
  const Ideal I = config_ideal(c.cfg, c.ring);
  auto items = random_items(c, f, I, 2);
  Matrix mu = random_word(f, c.word_len(), c.rng).eval();
  MultiDilation md = multi_dilate_conjugated(mu, items, f, I);
  c.check(substitute_matrix(md.theta, md.at_zero).is_identity(), "theta(0) = I");
  c.check(substitute_matrix(md.theta, md.at_items) == conjugated_product(mu, items, *f), "theta(w) = mu lambda mu^-1");
  Matrix th = homogenize_matrix(md.theta, "T");
  const Ring& s = md.ring;
  Matrix at1 = substitute_matrix(th, {{"T", s.one()}});
  Matrix at0 = substitute_matrix(th, {{"T", s.zero()}});
  c.check(at1 == md.theta, "homogenized at T = 1");
  c.check(at0 == lift(substitute_matrix(md.theta, md.at_zero), s), "homogenized at T = 0");
  c.check(sp_check(f->phi(), th), "homogenized matrix is symplectic");
  GroupWord w = random_word(f, c.word_len(), c.rng);
  GroupWord dw = dilate_word(w, "Y_");
  const Ring& dr = dw.form()->ring();
  c.check(substitute_matrix(dw.eval(), {{"Y_", dr.base().one()}}) == w.eval(), "dilation at 1");
  c.check(substitute_matrix(dw.eval(), {{"Y_", dr.base().zero()}}).is_identity(), "dilation at 0");
}

inline void reduce(Ctx& c) {
  FormPtr f = c.random_form();
  ElementaryCertificate eps = reduce_to_psi_corner(f->phi());
  Matrix e = eps.eval();
  c.check(corner_congruence(make_psi(c.ring, c.cfg.n), e) == f->phi(), "(1+eps)^t psi (1+eps) = phi");
  c.check(det(e).is_one(), "certificate has determinant 1");
  bool transvections = std::all_of(eps.steps().begin(), eps.steps().end(), [](const Transvection& t) { return t.i != t.j; });
  c.check(transvections, "every step is a transvection");
  Vector v = random_vector(c.ring, f->size() - 1, c.rng);
  FormPtr psi = make_standard_form(c.ring, c.cfg.n);
  Matrix moved = conjugate_transport(*f, *psi, e, psi->C(v));
  c.check(sp_check(f->phi(), moved), "transported C_psi lies in Sp(phi)");
}

/// Words gamma_1(u_1 + w_1) ... with prod gamma_i(u_i) = I by construction:
/// palindromes x x^-1 when normal forms commute with negation, otherwise
/// blocks of `order` repeated generators, otherwise u = 0.
inline GroupWord relative_input(Ctx& c, const FormPtr& f, const Ideal& I) {
  const Ring& r = c.ring;
  const std::size_t m = f->size() - 1;
  auto residual_vec = [&] {
    Vector u = random_vector(r, m, c.rng);
    for (auto& x : u) x = I.normal_form(x);
    return u;
  };
  auto perturb = [&](const Vector& u) {
    Vector v = u;
    for (auto& x : v) x += random_in_ideal(I, c.rng);
    return v;
  };
  const bool symmetric = I.ideal_class() == IdealClass::variables || I.ideal_class() == IdealClass::zero;
  GroupWord w(f);
  const std::size_t blocks = static_cast<std::size_t>(uniform_int(c.rng, 1, 3));
  if (symmetric) {
    std::vector<std::pair<AtomKind, Vector>> stack;
    for (std::size_t k = 0; k < blocks; ++k) {
      AtomKind kind = uniform_int(c.rng, 0, 1) ? AtomKind::C : AtomKind::R;
      Vector u = residual_vec();
      w.push_back(Atom::vector_atom(kind, perturb(u)));
      stack.emplace_back(kind, u);
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      w.push_back(Atom::inverse(Atom::vector_atom(it->first, perturb(it->second))));
    }
  } else if (r.kind() == RingKind::zmod && r.modulus() <= 64) {
    const long order = r.modulus().get_si();
    for (std::size_t k = 0; k < blocks; ++k) {
      AtomKind kind = uniform_int(c.rng, 0, 1) ? AtomKind::C : AtomKind::R;
      Vector u = residual_vec();
      for (long t = 0; t < order; ++t) w.push_back(Atom::vector_atom(kind, perturb(u)));
    }
  } else {
    for (std::size_t k = 0; k < blocks; ++k) {
      AtomKind kind = uniform_int(c.rng, 0, 1) ? AtomKind::C : AtomKind::R;
      w.push_back(Atom::vector_atom(kind, perturb(Vector(m, r.zero()))));
    }
  }
  return w;
}

inline void relative(Ctx& c) {
  require_half(c.ring);
  FormPtr f = c.random_form();
  const Ideal I = config_ideal(c.cfg, c.ring);
  GroupWord w = relative_input(c, f, I);
  RelativeWord rw = relative_factorize(w, I);
  const Matrix target = w.eval();
  c.check(rw.eval() == target, "relative factorization evaluates to the input");
  bool cores_in = std::all_of(rw.pairs().begin(), rw.pairs().end(), [&](const RelativePair& p) { return payload_in(I, p.core); });
  c.check(cores_in, "every core lies in the ideal");
  c.check(rsp_kernel_check(*f, rw.eval(), I), "relative word lies in the congruence kernel");
  RelativeWord random_rw(f, I);
  for (std::size_t k = 0; k < 2; ++k) {
    random_rw.push_back(random_word(f, c.word_len(), c.rng), random_atom(*f, c.rng, &I));
  }
  c.check(rsp_kernel_check(*f, random_rw.eval(), I), "random relative word lies in the congruence kernel");
}

inline void witness(Ctx& c) {
  FormPtr f = c.random_form();
  const Ideal I = config_ideal(c.cfg, c.ring);
  GroupWord gamma = random_word(f, c.word_len(), c.rng);
  GroupWord delta = random_word(f, c.word_len(), c.rng, &I);
  Json report = normality_witness(f, gamma.eval(), delta, I);
  c.check(report["passed"].get<bool>(), "normality witness");
}

using SuiteFn = std::function<void(Ctx&)>;

inline const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> table{
      {"blocks", blocks},       {"commutators", commutators}, {"decompose", decompose},
      {"generators", generators}, {"homogenize", homogenize}, {"pfaffian", pfaffian_suite},
      {"reduce", reduce},       {"relative", relative},       {"rings", rings},
      {"shuffle", shuffle},     {"splitting", splitting},     {"transport", transport},
      {"witness", witness}};
  return table;
}

}  // namespace suites

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites::registry()) names.push_back(name);
  return names;
}

/// Runs one suite. Configuration problems raise esp::Error; identity failures
/// are collected in "violations".
inline Json run_suite(const std::string& name, const TrialConfig& cfg) {
  const auto& table = suites::registry();
  auto it = table.find(name);
  if (it == table.end()) throw Error(Errc::parse_error, "unknown suite '" + name + "'");
  if (cfg.trials < 1) throw Error(Errc::parse_error, "trials must be >= 1");
  if (cfg.n < 1 || (cfg.n < 2 && name != "pfaffian" && name != "rings")) throw Error(Errc::out_of_range, "n must be >= 2");
  if (cfg.min_len > cfg.max_len) throw Error(Errc::parse_error, "min_len > max_len");
  const Ring r = Ring::parse(cfg.ring);
  if (name == "reduce" && (r.is_polynomial() || !r.is_local())) throw Error(Errc::not_local_ring, r.text());
  if (!cfg.ideal.empty()) (void)Ideal::parse(r, cfg.ideal);
  SuiteRun run;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    suites::Ctx ctx{cfg, r, run, t, trial_rng(cfg.seed, t)};
    it->second(ctx);
  }
  auto violations = run.sorted_violations();
  Json report = Json::object();
  report["suite"] = name;
  report["ring"] = r.text();
  report["n"] = cfg.n;
  report["trials"] = cfg.trials;
  report["seed"] = cfg.seed;
  report["checks"] = run.checks();
  report["passed"] = violations.empty();
  report["violations"] = violations;
  return report;
}

}  // namespace esp
