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
 * @file standard_form.hpp
 * @brief Reduction of Pfaffian-one skew forms over local rings to psi_n with
 * an elementary certificate, and symplectic elimination into se-words.
 */

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "esp/identities.hpp"
#include "esp/random.hpp"

namespace esp {

/// E_ij(a) = I + a e_ij with 1-based indices.
struct Transvection {
  std::size_t i;
  std::size_t j;
  Element a;

  friend bool operator==(const Transvection& x, const Transvection& y) {
    return x.i == y.i && x.j == y.j && x.a == y.a;
  }
};

/// Ordered product of transvections of a fixed size.
class ElementaryCertificate {
 public:
  ElementaryCertificate(Ring ring, std::size_t size) : ring_(std::move(ring)), size_(size) {}

  const Ring& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return size_; }
  const std::vector<Transvection>& steps() const noexcept { return steps_; }

  void push_back(std::size_t i, std::size_t j, Element a) {
    if (i == j || i < 1 || j < 1 || i > size_ || j > size_) throw Error(Errc::bad_indices, "certificate step");
    if (!(a.ring() == ring_)) throw Error(Errc::owner_mismatch, a.ring().text() + " vs " + ring_.text());
    steps_.push_back(Transvection{i, j, std::move(a)});
  }

  void append(const ElementaryCertificate& other) {
    if (other.size_ != size_) throw Error(Errc::dim_mismatch, "certificate sizes");
    for (const auto& s : other.steps_) push_back(s.i, s.j, s.a);
  }

  /// Reversed steps with negated entries.
  ElementaryCertificate inverse() const {
    ElementaryCertificate out(ring_, size_);
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) out.push_back(it->i, it->j, -it->a);
    return out;
  }

  /// Left-to-right product. Each factor touches one column, so this is O(steps * size).
  Matrix eval() const {
    Matrix m = Matrix::identity(ring_, size_);
    for (const auto& s : steps_) {
      for (std::size_t r = 0; r < size_; ++r) {
        const Element& x = m(r, s.i - 1);
        if (!x.is_zero()) m.set(r, s.j - 1, m(r, s.j - 1) + x * s.a);
      }
    }
    return m;
  }

  friend ElementaryCertificate concat(const ElementaryCertificate& a, const ElementaryCertificate& b) {
    ElementaryCertificate out = a;
    out.append(b);
    return out;
  }

  friend bool operator==(const ElementaryCertificate& a, const ElementaryCertificate& b) {
    return a.ring_ == b.ring_ && a.size_ == b.size_ && a.steps_ == b.steps_;
  }

 private:
  Ring ring_;
  std::size_t size_;
  std::vector<Transvection> steps_;
};

inline Matrix cert_eval(const ElementaryCertificate& c) { return c.eval(); }

/// diag(u at i, u^-1 at j) = E_ij(u) E_ji(-u^-1) E_ij(u) E_ij(-1) E_ji(1) E_ij(-1).
inline ElementaryCertificate whitehead_factor(std::size_t m, std::size_t i, std::size_t j, const Element& u) {
  if (m < 2) throw Error(Errc::out_of_range, "whitehead_factor needs m >= 2");
  const Element inv = invert_unit(u);
  const Ring& r = u.ring();
  ElementaryCertificate c(r, m);
  c.push_back(i, j, u);
  c.push_back(j, i, -inv);
  c.push_back(i, j, u);
  c.push_back(i, j, -r.one());
  c.push_back(j, i, r.one());
  c.push_back(i, j, -r.one());
  return c;
}

/// E_ij(1) E_ji(-1) E_ij(1): right multiplication sends column i to slot j and
/// minus column j to slot i.
inline ElementaryCertificate signed_swap(const Ring& r, std::size_t m, std::size_t i, std::size_t j) {
  ElementaryCertificate c(r, m);
  c.push_back(i, j, r.one());
  c.push_back(j, i, -r.one());
  c.push_back(i, j, r.one());
  return c;
}

namespace detail {

/// Congruence A <- (1 ⊥ P)^t A (1 ⊥ P) built one transvection at a time. The
/// vector d = -(A^-1)[1:, 0] is carried along as d <- P^-1 d.
class CornerReducer {
 public:
  CornerReducer(const Matrix& phi, Vector d) : a_(phi), d_(std::move(d)), cert_(phi.ring(), phi.rows() - 1) {}

  /// P-space step E_ij(x), 1-based over the indices 2..2n of A.
  void step(std::size_t i, std::size_t j, const Element& x) {
    if (x.is_zero()) return;
    cert_.push_back(i, j, x);
    const std::size_t m = a_.rows();
    // column j += x column i, then row j += x row i (global 0-based index = P index)
    for (std::size_t r = 0; r < m; ++r) a_.set(r, j, a_(r, j) + x * a_(r, i));
    for (std::size_t c = 0; c < m; ++c) a_.set(j, c, a_(j, c) + x * a_(i, c));
    d_[i - 1] = d_[i - 1] - x * d_[j - 1];
  }

  void steps(const ElementaryCertificate& c) {
    for (const auto& s : c.steps()) step(s.i, s.j, s.a);
  }

  const Matrix& a() const noexcept { return a_; }
  const Vector& d() const noexcept { return d_; }
  const ElementaryCertificate& certificate() const noexcept { return cert_; }

 private:
  Matrix a_;
  Vector d_;
  ElementaryCertificate cert_;
};

inline std::size_t first_unit(const Vector& v, std::size_t from) {
  for (std::size_t k = from; k < v.size(); ++k) {
    if (is_unit(v[k])) return k;
  }
  throw Error(Errc::not_invertible, "no unit pivot; the form is not invertible over a local ring");
}

inline void require_local_half(const Ring& r) {
  if (r.is_polynomial() || !r.is_local()) throw Error(Errc::not_local_ring, r.text() + " is not in the local-ring menu");
  if (!r.has_half()) throw Error(Errc::not_halvable, "2 is not a unit in " + r.text());
}

}  // namespace detail

/// eps0 with (1 ⊥ eps0)^t psi_n (1 ⊥ eps0) = phi, for phi skew of Pfaffian 1 over
/// a local ring with 2 invertible.
///
/// The reduction finds P with (1 ⊥ P)^t phi (1 ⊥ P) = psi_n and returns P^-1:
///   1. move d to -e_1 (unit pivot, signed swap, clearing, Whitehead scaling);
///      then nu d = 0 forces the first row and column of nu to vanish;
///   2. clear c below its first entry with E_1j steps;
///   3. reduce the trailing block pair by pair; the last pair is [[0,1],[-1,0]]
///      because the Pfaffian is 1.
inline ElementaryCertificate reduce_to_psi_corner(const Matrix& phi) {
  const Ring& r = phi.ring();
  const Element pf = pfaffian(phi);
  detail::require_local_half(r);
  if (!pf.is_one()) throw Error(Errc::pfaffian_not_one, "Pf = " + pf.str());
  const std::size_t m = phi.rows();
  const std::size_t k = m - 1;
  if (m == 2) return ElementaryCertificate(r, 1);

  Matrix inv = mat_inverse(phi);
  Vector d;
  for (std::size_t i = 1; i < m; ++i) d.push_back(-inv(i, 0));
  detail::CornerReducer red(phi, std::move(d));

  // 1. d -> -e_1
  std::size_t p = detail::first_unit(red.d(), 0) + 1;
  if (p != 1) red.steps(signed_swap(r, k, 1, p));
  for (std::size_t j = 2; j <= k; ++j) {
    if (!red.d()[j - 1].is_zero()) red.step(j, 1, red.d()[j - 1] * invert_unit(red.d()[0]));
  }
  if (!(red.d()[0] == -r.one())) red.steps(whitehead_factor(k, 1, 2, -red.d()[0]));

  // 2. first row of A becomes (0, 1, 0, ..., 0)
  for (std::size_t j = 2; j <= k; ++j) red.step(1, j, -red.a()(0, j) * invert_unit(red.a()(0, 1)));

  // 3. trailing block, pairs (s, s+1) in global 0-based indices s = 2, 4, ...
  for (std::size_t s = 2; s + 1 < m; s += 2) {
    Vector row;
    for (std::size_t t = 0; t < m; ++t) row.push_back(red.a()(s, t));
    std::size_t t = detail::first_unit(row, s + 1);
    if (t != s + 1) red.steps(signed_swap(r, k, t, s + 1));
    const Element u = red.a()(s, s + 1);
    const Element u_inv = invert_unit(u);
    for (std::size_t j = s + 2; j < m; ++j) red.step(s + 1, j, -red.a()(s, j) * u_inv);
    for (std::size_t j = s + 2; j < m; ++j) red.step(s, j, red.a()(s + 1, j) * u_inv);
    if (!u.is_one()) {
      if (s + 2 >= m) throw Error(Errc::pfaffian_not_one, "last pair is not normalized");
      red.steps(whitehead_factor(k, s + 2, s + 1, u));
    }
  }

  if (!(red.a() == make_psi(r, m / 2))) throw Error(Errc::not_invertible, "reduction did not reach psi_n");
  ElementaryCertificate eps0 = red.certificate().inverse();
  if (!(corner_congruence(make_psi(r, m / 2), eps0.eval()) == phi)) {
    throw Error(Errc::congruence_mismatch, "certificate does not reproduce the form");
  }
  return eps0;
}

/// phi = eps^t psi_n eps for a seeded random product eps of `steps` transvections.
inline FormPtr random_pf1_form(const Ring& r, std::size_t n, std::size_t steps, std::uint64_t seed) {
  Rng rng = trial_rng(seed, 0);
  Matrix eps = random_elementary(r, 2 * n, steps, rng);
  Matrix phi = eps.transpose() * make_psi(r, n) * eps;
  if (!pfaffian(phi).is_one()) throw Error(Errc::pfaffian_not_one, "random form");
  return make_skewform(phi);
}

/// Same as random_pf1_form but drawing from a caller-owned generator.
inline FormPtr random_pf1_form(const Ring& r, std::size_t n, std::size_t steps, Rng& rng) {
  Matrix eps = random_elementary(r, 2 * n, steps, rng);
  return make_skewform(eps.transpose() * make_psi(r, n) * eps);
}

/// An se-word for M in Sp(psi_n) over a local ring: symplectic elimination of
/// the columns pair by pair. The word is the inverse of the eliminating sequence.
inline GroupWord factor_symplectic_local(const FormPtr& psi, const Matrix& m) {
  detail::require_standard(*psi);
  const Ring& r = psi->ring();
  if (r.is_polynomial() || !r.is_local()) throw Error(Errc::not_local_ring, r.text());
  if (!sp_check(psi->phi(), m)) throw Error(Errc::not_symplectic, "factor_symplectic_local input");
  const std::size_t n = psi->n();
  const std::size_t size = 2 * n;
  Matrix cur = m;
  std::vector<Atom> ops;
  auto apply = [&](std::size_t i, std::size_t j, const Element& a) {
    if (a.is_zero()) return;
    cur = make_se(n, i, j, a) * cur;
    ops.push_back(Atom::se(i, j, a));
  };
  for (std::size_t p = 1; p < size; p += 2) {
    const std::size_t q = p + 1;
    // column p: unit at p
    if (!is_unit(cur(p - 1, p - 1))) {
      std::size_t hit = 0;
      for (std::size_t k = q; k <= size && !hit; ++k) {
        if (is_unit(cur(k - 1, p - 1))) hit = k;
      }
      if (!hit) throw Error(Errc::not_invertible, "no unit in column");
      apply(p, hit, r.one());
    }
    Element u_inv = invert_unit(cur(p - 1, p - 1));
    for (std::size_t k = q + 1; k <= size; ++k) apply(k, p, -cur(k - 1, p - 1) * u_inv);
    apply(q, p, -cur(q - 1, p - 1) * u_inv);
    const Element u = cur(p - 1, p - 1);
    if (!u.is_one()) {
      apply(q, p, r.one());
      apply(p, q, invert_unit(u) - r.one());
      apply(q, p, -u);
    }
    // column q
    for (std::size_t k = q + 1; k <= size; ++k) apply(k, q, -cur(k - 1, q - 1));
    apply(p, q, -cur(p - 1, q - 1));
  }
  if (!cur.is_identity()) throw Error(Errc::not_symplectic, "elimination did not reach the identity");
  GroupWord w(psi);
  for (auto it = ops.begin(); it != ops.end(); ++it) w.push_back(Atom::se(it->i(), it->j(), -it->scalar()));
  return w;
}

}  // namespace esp
