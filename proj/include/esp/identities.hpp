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
 * @file identities.hpp
 * @brief Relations among the generators: C/R over psi_n as se-words, the
 * three commutator identities, rewriting se_ij onto the first row/column,
 * and the halving split of C/R.
 *
 * Commutators are [x, y] = x y x^-1 y^-1.
 */

#pragma once

#include <string>

#include "esp/word.hpp"

namespace esp {

namespace detail {

inline void require_standard(const SkewForm& f) {
  if (!f.is_standard()) throw Error(Errc::context_mismatch, "operation needs the standard form psi_n");
}

inline Element sum_pair_products(const Vector& v) {
  // v_{2k} v_{2k+1} over 1-based positions, k = 1 .. n-1
  Element q = v.at(0).ring().zero();
  for (std::size_t k = 1; 2 * k < v.size(); ++k) q += v[2 * k - 1] * v[2 * k];
  return q;
}

inline void append_commutator(GroupWord& w, const Atom& x, const Atom& y) {
  w.push_back(x);
  w.push_back(y);
  w.push_back(x.normalized().inverted().normalized());
  w.push_back(y.normalized().inverted().normalized());
}

}  // namespace detail

/// C_psi(v) as se_21(v1 + q) se_31(v2) ... se_{2n,1}(v_{2n-1}), q = sum_k v_{2k} v_{2k+1}.
inline GroupWord decompose_C_psi(const FormPtr& psi, const Vector& v) {
  detail::require_standard(*psi);
  if (v.size() != psi->size() - 1) throw Error(Errc::dim_mismatch, "decompose_C_psi vector length");
  GroupWord w(psi);
  w.push_back(Atom::se(2, 1, v[0] + detail::sum_pair_products(v)));
  for (std::size_t i = 3; i <= psi->size(); ++i) w.push_back(Atom::se(i, 1, v[i - 2]));
  return w;
}

/// R_psi(v) as se_12(v1 - q) se_13(v2) ... se_{1,2n}(v_{2n-1}).
inline GroupWord decompose_R_psi(const FormPtr& psi, const Vector& v) {
  detail::require_standard(*psi);
  if (v.size() != psi->size() - 1) throw Error(Errc::dim_mismatch, "decompose_R_psi vector length");
  GroupWord w(psi);
  w.push_back(Atom::se(1, 2, v[0] - detail::sum_pair_products(v)));
  for (std::size_t i = 3; i <= psi->size(); ++i) w.push_back(Atom::se(1, i, v[i - 2]));
  return w;
}

enum class CommutatorCase { one = 1, two = 2, three = 3 };

/// Both sides of a commutator identity, as words over psi_n.
struct CommutatorSides {
  GroupWord lhs;
  GroupWord rhs;
};

/// Builds the two sides of identity `which`:
///   1: [se_{i s(i)}(a), se_{s(i) j}(b)] = se_ij(ab) se_{s(j) j}((-1)^(i+j) a b^2),  i != j, s(j)
///   2: [se_ik(a), se_kj(b)] = se_ij(ab),                    i, j, k distinct, j != s(i), k != s(i), s(j)
///   3: [se_ik(a), se_{k s(i)}(b)] = se_{i s(i)}(2ab),       k != i, s(i); j is ignored
inline CommutatorSides commutator_identity(const FormPtr& psi, CommutatorCase which, std::size_t i,
                                           std::size_t j, std::size_t k, const Element& a,
                                           const Element& b) {
  detail::require_standard(*psi);
  const std::size_t n = psi->n();
  auto in_range = [&](std::size_t x) { return x >= 1 && x <= 2 * n; };
  auto bad = [&](const std::string& why) { throw Error(Errc::bad_case, why); };
  GroupWord lhs(psi), rhs(psi);
  switch (which) {
    case CommutatorCase::one: {
      if (!in_range(i) || !in_range(j) || i == j || i == sigma(j)) bad("case 1 needs i != j, sigma(j)");
      const std::size_t si = sigma(i);
      detail::append_commutator(lhs, Atom::se(i, si, a), Atom::se(si, j, b));
      const bool even = (i + j) % 2 == 0;
      Element tail = a * b * b;
      rhs.push_back(Atom::se(i, j, a * b));
      rhs.push_back(Atom::se(sigma(j), j, even ? tail : -tail));
      break;
    }
    case CommutatorCase::two: {
      if (!in_range(i) || !in_range(j) || !in_range(k) || i == j || j == k || i == k ||
          j == sigma(i) || k == sigma(i) || k == sigma(j)) {
        bad("case 2 needs distinct i, j, k with j != sigma(i) and k != sigma(i), sigma(j)");
      }
      detail::append_commutator(lhs, Atom::se(i, k, a), Atom::se(k, j, b));
      rhs.push_back(Atom::se(i, j, a * b));
      break;
    }
    case CommutatorCase::three: {
      if (!in_range(i) || !in_range(k) || k == i || k == sigma(i)) bad("case 3 needs k != i, sigma(i)");
      const std::size_t si = sigma(i);
      detail::append_commutator(lhs, Atom::se(i, k, a), Atom::se(k, si, b));
      rhs.push_back(Atom::se(i, si, a.ring().from_int(2) * a * b));
      break;
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

inline bool commutator_identity_check(const FormPtr& psi, CommutatorCase which, std::size_t i,
                                      std::size_t j, std::size_t k, const Element& a, const Element& b) {
  auto sides = commutator_identity(psi, which, i, j, k, a, b);
  return sides.lhs.eval() == sides.rhs.eval();
}

/// True when the atom only touches the first row or column (se_1k or se_k1).
inline bool is_corner_atom(const Atom& atom) {
  const Atom a = atom.normalized();
  return a.kind() == AtomKind::se && (a.i() == 1 || a.j() == 1);
}

/// Rewrites se_ij(a), i, j != 1, as a word in se_1k(x) and se_k1(y) only.
///
/// Schedule, with pivot 1:
///   j = s(i)        identity 3: [se_i1(a/2), se_{1 s(i)}(1)]
///   i = 2           identity 1: [se_21(a), se_1j(1)] followed by the rewritten
///                   compensation se_{s(j) j}(-(-1)^j a)
///   j = 2           se_i2(a) equals the single atom se_{1 s(i)}(-(-1)^i a)
///   otherwise       identity 2: [se_i1(a), se_1j(1)]
inline GroupWord rewrite_se_off_corner(const FormPtr& psi, std::size_t i, std::size_t j, const Element& a) {
  detail::require_standard(*psi);
  const std::size_t n = psi->n();
  if (i < 2 || j < 2 || i > 2 * n || j > 2 * n || i == j) {
    throw Error(Errc::bad_indices, "off-corner rewrite needs 2 <= i != j <= 2n");
  }
  GroupWord w(psi);
  if (a.is_zero()) return w;
  const Ring& r = a.ring();
  if (j == sigma(i)) {
    detail::append_commutator(w, Atom::se(i, 1, halve(a)), Atom::se(1, j, r.one()));
  } else if (i == 2) {
    detail::append_commutator(w, Atom::se(2, 1, a), Atom::se(1, j, r.one()));
    w.append(rewrite_se_off_corner(psi, sigma(j), j, j % 2 == 0 ? -a : a));
  } else if (j == 2) {
    w.push_back(Atom::se(1, sigma(i), i % 2 == 0 ? -a : a));
  } else {
    detail::append_commutator(w, Atom::se(i, 1, a), Atom::se(1, j, r.one()));
  }
  return w;
}

/// The sandwich X(v/2) X(w) X(v/2) for X = C or R, which evaluates to X(v + w).
inline GroupWord split_generator(const FormPtr& form, AtomKind kind, const Vector& v, const Vector& w) {
  if (kind != AtomKind::C && kind != AtomKind::R) throw Error(Errc::context_mismatch, "split needs C or R");
  Vector half;
  half.reserve(v.size());
  for (const auto& x : v) half.push_back(halve(x));
  GroupWord out(form);
  out.push_back(Atom::vector_atom(kind, half));
  out.push_back(Atom::vector_atom(kind, w));
  out.push_back(Atom::vector_atom(kind, half));
  return out;
}

}  // namespace esp
