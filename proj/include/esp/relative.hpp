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
 * @file relative.hpp
 * @brief Relative words (products of conjugated cores with payloads in an
 * ideal), the product shuffle, relative factorization, congruence kernels and
 * the polynomial operators: dilation, multi-variable conjugates, homogenization.
 */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "esp/identities.hpp"
#include "esp/polynomial.hpp"

namespace esp {

/// Symplectic inverse phi^-1 M^t phi, valid for M in Sp(phi).
inline Matrix sp_inverse(const SkewForm& form, const Matrix& m) {
  Matrix phi = lift(form.phi(), m.ring());
  Matrix phi_inv = lift(form.phi_inv(), m.ring());
  return phi_inv * m.transpose() * phi;
}

// ---------------------------------------------------------------------------
// Shuffle
// ---------------------------------------------------------------------------

struct ConjugatedWord {
  GroupWord conj;
  GroupWord core;
};

struct ShuffleResult {
  std::vector<ConjugatedWord> conjugates;
  GroupWord tail;

  /// (prod A_i b_i A_i^-1) * tail
  Matrix eval() const {
    Matrix acc = tail.eval();
    Matrix out = Matrix::identity(acc.ring(), acc.rows());
    for (const auto& c : conjugates) out = out * (c.conj * c.core * c.conj.inverse()).eval();
    return out * acc;
  }
};

/// prod a_i b_i = (prod A_i b_i A_i^-1) * prod a_i with A_i = a_1 ... a_i.
inline ShuffleResult shuffle_identity(const std::vector<GroupWord>& a, const std::vector<GroupWord>& b) {
  if (a.size() != b.size()) throw Error(Errc::length_mismatch, "shuffle needs equally many a and b words");
  if (a.empty()) throw Error(Errc::length_mismatch, "shuffle needs at least one pair");
  GroupWord prefix(a[0].form());
  ShuffleResult out{{}, GroupWord(a[0].form())};
  for (std::size_t i = 0; i < a.size(); ++i) {
    prefix.append(a[i]);
    out.conjugates.push_back(ConjugatedWord{prefix, b[i]});
  }
  out.tail = prefix;
  return out;
}

/// The interleaved product a_1 b_1 a_2 b_2 ...
inline GroupWord interleave(const std::vector<GroupWord>& a, const std::vector<GroupWord>& b) {
  if (a.size() != b.size() || a.empty()) throw Error(Errc::length_mismatch, "interleave");
  GroupWord w(a[0].form());
  for (std::size_t i = 0; i < a.size(); ++i) {
    w.append(a[i]);
    w.append(b[i]);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Relative words
// ---------------------------------------------------------------------------

inline bool payload_in(const Ideal& I, const Atom& atom) {
  const Atom a = atom.normalized();
  for (const auto& x : a.vec()) {
    if (!I.contains(x)) return false;
  }
  return true;
}

struct RelativePair {
  GroupWord conj;
  Atom core;
};

/// prod conj_i core_i conj_i^-1 with every core payload in the ideal.
class RelativeWord {
 public:
  RelativeWord(FormPtr form, Ideal ideal) : form_(std::move(form)), ideal_(std::move(ideal)) {
    if (!(ideal_.ring() == form_->ring())) throw Error(Errc::context_mismatch, "ideal over another ring");
  }

  const FormPtr& form() const noexcept { return form_; }
  const Ideal& ideal() const noexcept { return ideal_; }
  const std::vector<RelativePair>& pairs() const noexcept { return pairs_; }

  void push_back(GroupWord conj, Atom core) {
    if (!conj.same_form(GroupWord(form_))) throw Error(Errc::context_mismatch, "conjugator over another form");
    GroupWord probe(form_);
    probe.push_back(core);
    if (!payload_in(ideal_, core)) throw Error(Errc::ideal_violation, "core payload outside " + ideal_.str());
    pairs_.push_back(RelativePair{std::move(conj), std::move(core)});
  }

  /// The expanded word conj_1 core_1 conj_1^-1 conj_2 ...
  GroupWord expand() const {
    GroupWord w(form_);
    for (const auto& p : pairs_) {
      w.append(p.conj);
      w.push_back(p.core);
      w.append(p.conj.inverse());
    }
    return w;
  }

  Matrix eval() const {
    Matrix acc = Matrix::identity(form_->ring(), form_->size());
    for (const auto& p : pairs_) {
      Matrix g = p.conj.eval();
      acc = acc * g * atom_eval(*form_, p.core) * p.conj.inverse().eval();
    }
    return acc;
  }

 private:
  FormPtr form_;
  Ideal ideal_;
  std::vector<RelativePair> pairs_;
};

/// v = u + w with u the entrywise normal form mod I and w in I^k.
inline std::pair<Vector, Vector> split_vector(const Vector& v, const Ideal& I) {
  Vector u, w;
  u.reserve(v.size());
  w.reserve(v.size());
  for (const auto& x : v) {
    Element nf = I.normal_form(x);
    w.push_back(x - nf);
    u.push_back(std::move(nf));
  }
  return {std::move(u), std::move(w)};
}

namespace detail {

inline Atom with_payload(const Atom& a, Vector v) {
  if (a.kind() == AtomKind::se) return Atom::se(a.i(), a.j(), std::move(v.at(0)));
  return Atom::vector_atom(a.kind(), std::move(v));
}

}  // namespace detail

/// Rewrites a word gamma = prod gamma_i(u_i + w_i) with w_i in I as a relative
/// word, provided prod gamma_i(u_i) = I. Each factor is split as
/// gamma_i(u_i/2) gamma_i(w_i) gamma_i(u_i/2) and the shuffle moves the cores
/// into conjugated position with A_i = gamma_1(u_1) ... gamma_{i-1}(u_{i-1}) gamma_i(u_i/2).
inline RelativeWord relative_factorize(const GroupWord& w, const Ideal& I) {
  const FormPtr& form = w.form();
  const Ring& r = form->ring();
  if (!I.decidable()) throw Error(Errc::undecidable_ideal, I.str());
  if (!r.has_half()) throw Error(Errc::not_halvable, "relative factorization halves payloads in " + r.text());

  std::vector<Atom> atoms, residual_atoms, halves, cores;
  for (const auto& raw : w.atoms()) atoms.push_back(raw.normalized());
  for (const auto& a : atoms) {
    auto [u, core] = split_vector(a.vec(), I);
    Vector half;
    for (const auto& x : u) half.push_back(halve(x));
    residual_atoms.push_back(detail::with_payload(a, u));
    halves.push_back(detail::with_payload(a, half));
    cores.push_back(detail::with_payload(a, core));
  }
  GroupWord residual(form, residual_atoms);
  if (!residual.eval().is_identity()) {
    throw Error(Errc::hypothesis_not_met, "the residual word prod gamma_i(u_i) is not the identity");
  }

  RelativeWord out(form, I);
  GroupWord prefix(form);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    GroupWord conj = prefix;
    conj.push_back(halves[i]);
    out.push_back(conj, cores[i]);
    prefix.push_back(residual_atoms[i]);
  }
  return out;
}

/// M in Sp(phi) and M = I modulo the ideal.
inline bool rsp_kernel_check(const SkewForm& form, const Matrix& m, const Ideal& I) {
  if (!I.decidable()) throw Error(Errc::undecidable_ideal, I.str());
  if (!sp_check(form.phi(), m)) return false;
  return mat_mod_ideal(m, I) == mat_mod_ideal(Matrix::identity(m.ring(), m.rows()), I);
}

// ---------------------------------------------------------------------------
// Polynomial operators
// ---------------------------------------------------------------------------

/// Entrywise substitution of the outermost variables; the result lives in the base ring.
inline Matrix substitute_matrix(const Matrix& m, const Assignment& values) {
  const Ring base = m.ring().base();
  return map_entries(m, base, [&](const Element& x) { return substitute(x, values); });
}

/// Assignment sending every outermost variable of `r` to `value`.
inline Assignment constant_assignment(const Ring& r, const Element& value) {
  Assignment a;
  for (const auto& v : r.variables()) a.emplace(v, value);
  return a;
}

inline FormPtr lift_form(const SkewForm& form, const Ring& target) {
  return std::make_shared<const SkewForm>(form.lifted(target));
}

/// delta(X): every payload a replaced by a X over R[X], against the lifted form.
inline GroupWord dilate_word(const GroupWord& w, const std::string& x) {
  const Ring& r = w.form()->ring();
  if (r.has_variable(x)) throw Error(Errc::variable_clash, "'" + x + "' already in " + r.text());
  const Ring target = Ring::polynomial(r, {x});
  const Element var = target.variable(x);
  return map_word(w, lift_form(*w.form(), target), [&](const Element& a) { return target.embed(a) * var; });
}

/// One factor gamma_i K(w_i) gamma_i^-1 of a multi-variable conjugate.
struct DilationItem {
  GroupWord conj;
  AtomKind kind;
  Vector w;
};

struct MultiDilation {
  Matrix theta;
  Ring ring;
  /// variables[i][k] names the indeterminate standing for entry k of w_i.
  std::vector<std::vector<std::string>> variables;
  /// X_i = w_i entrywise.
  Assignment at_items;
  /// All variables 0.
  Assignment at_zero;
};

/// theta = mu (prod gamma_i K_i(X_i) gamma_i^-1) mu^-1 over R[X{i}_{k}], where X_i is
/// a vector of fresh indeterminates, one per entry.
inline MultiDilation multi_dilate_conjugated(const Matrix& mu, const std::vector<DilationItem>& items,
                                             const FormPtr& form, const Ideal& I) {
  const Ring& r = form->ring();
  if (!sp_check(form->phi(), mu)) throw Error(Errc::not_symplectic, "mu is not in Sp(phi)");
  std::vector<std::vector<std::string>> names;
  std::vector<std::string> flat;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    if (it.kind != AtomKind::C && it.kind != AtomKind::R) throw Error(Errc::context_mismatch, "core kind");
    if (it.w.size() != form->size() - 1) throw Error(Errc::dim_mismatch, "core vector length");
    for (const auto& x : it.w) {
      if (!I.contains(x)) throw Error(Errc::ideal_violation, x.str() + " not in " + I.str());
    }
    std::vector<std::string> row;
    for (std::size_t k = 0; k < it.w.size(); ++k) {
      std::string v = "X" + std::to_string(i + 1) + "_" + std::to_string(k + 1);
      if (r.has_variable(v)) throw Error(Errc::variable_clash, v);
      row.push_back(v);
      flat.push_back(v);
    }
    names.push_back(std::move(row));
  }
  const Ring s = flat.empty() ? r : Ring::polynomial(r, flat);
  const FormPtr lifted = flat.empty() ? form : lift_form(*form, s);
  Matrix acc = Matrix::identity(s, form->size());
  Assignment at_items, at_zero;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Vector xs;
    for (std::size_t k = 0; k < names[i].size(); ++k) {
      xs.push_back(s.variable(names[i][k]));
      at_items.emplace(names[i][k], items[i].w[k]);
      at_zero.emplace(names[i][k], r.zero());
    }
    Matrix g = lift(items[i].conj.eval(), s);
    Matrix core = items[i].kind == AtomKind::C ? lifted->C(xs) : lifted->R(xs);
    acc = acc * g * core * lift(items[i].conj.inverse().eval(), s);
  }
  Matrix mu_s = lift(mu, s);
  Matrix theta = mu_s * acc * sp_inverse(*lifted, mu_s);
  return MultiDilation{std::move(theta), s, std::move(names), std::move(at_items), std::move(at_zero)};
}

/// mu (prod gamma_i K_i(w_i) gamma_i^-1) mu^-1 computed directly over R.
inline Matrix conjugated_product(const Matrix& mu, const std::vector<DilationItem>& items, const SkewForm& form) {
  Matrix acc = Matrix::identity(form.ring(), form.size());
  for (const auto& it : items) {
    Matrix core = it.kind == AtomKind::C ? form.C(it.w) : form.R(it.w);
    acc = acc * it.conj.eval() * core * it.conj.inverse().eval();
  }
  return mu * acc * sp_inverse(form, mu);
}

/// Entrywise a_0 + a_1 + ... |-> a_0 + a_1 T + ... over S[T].
inline Matrix homogenize_matrix(const Matrix& theta, const std::string& t) {
  const Ring target = homogenization_ring(theta.ring(), t);
  return map_entries(theta, target, [&](const Element& x) { return homogenize_map(x, target); });
}

}  // namespace esp
