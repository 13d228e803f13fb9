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
 * @file word.hpp
 * @brief Formal products of generators bound to one skew form.
 *
 * Atoms are se_ij(a) (standard forms only), C(v), R(v) and formal inverses.
 * Every payload is additive in its generator, so inverses evaluate in closed
 * form: se_ij(a)^-1 = se_ij(-a), C(v)^-1 = C(-v), R(v)^-1 = R(-v).
 */

#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "esp/symplectic.hpp"

namespace esp {

enum class AtomKind { se, C, R, inverse };

class Atom {
 public:
  static Atom se(std::size_t i, std::size_t j, Element a) {
    Atom x(AtomKind::se);
    x.i_ = i;
    x.j_ = j;
    x.payload_.push_back(std::move(a));
    return x;
  }
  static Atom C(Vector v) {
    Atom x(AtomKind::C);
    x.payload_ = std::move(v);
    return x;
  }
  static Atom R(Vector v) {
    Atom x(AtomKind::R);
    x.payload_ = std::move(v);
    return x;
  }
  /// Generator of the given kind (C or R) with payload `v`.
  static Atom vector_atom(AtomKind kind, Vector v) {
    if (kind != AtomKind::C && kind != AtomKind::R) throw Error(Errc::context_mismatch, "not a vector kind");
    return kind == AtomKind::C ? C(std::move(v)) : R(std::move(v));
  }
  static Atom inverse(Atom of) {
    Atom x(AtomKind::inverse);
    x.inner_ = std::make_shared<const Atom>(std::move(of));
    return x;
  }

  AtomKind kind() const noexcept { return kind_; }
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }
  const Element& scalar() const { return payload_.at(0); }
  const Vector& vec() const noexcept { return payload_; }
  const Atom& inner() const { return *inner_; }

  /// Inverse-free equivalent with negated payload.
  Atom normalized() const {
    if (kind_ != AtomKind::inverse) return *this;
    Atom x = inner_->normalized();
    for (auto& e : x.payload_) e = -e;
    return x;
  }

  /// The inverse atom; a formal inverse of an inverse collapses.
  Atom inverted() const { return kind_ == AtomKind::inverse ? *inner_ : inverse(*this); }

  /// The same generator with every payload entry mapped through `f`.
  Atom map_payload(const std::function<Element(const Element&)>& f) const {
    if (kind_ == AtomKind::inverse) return inverse(inner_->map_payload(f));
    Atom x = *this;
    for (auto& e : x.payload_) e = f(e);
    return x;
  }

  friend bool operator==(const Atom& a, const Atom& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == AtomKind::inverse) return *a.inner_ == *b.inner_;
    return a.i_ == b.i_ && a.j_ == b.j_ && a.payload_ == b.payload_;
  }

 private:
  explicit Atom(AtomKind k) : kind_(k) {}

  AtomKind kind_;
  std::size_t i_ = 0;
  std::size_t j_ = 0;
  Vector payload_;
  std::shared_ptr<const Atom> inner_;
};

/// Evaluates one atom against `form`.
inline Matrix atom_eval(const SkewForm& form, const Atom& atom) {
  Atom a = atom.normalized();
  switch (a.kind()) {
    case AtomKind::se: return make_se(form.n(), a.i(), a.j(), a.scalar());
    case AtomKind::C: return form.C(a.vec());
    case AtomKind::R: return form.R(a.vec());
    case AtomKind::inverse: break;
  }
  throw Error(Errc::context_mismatch, "unreachable atom kind");
}

class GroupWord {
 public:
  explicit GroupWord(FormPtr form) : form_(std::move(form)) {
    if (!form_) throw Error(Errc::context_mismatch, "word without a form");
  }
  GroupWord(FormPtr form, std::vector<Atom> atoms) : GroupWord(std::move(form)) {
    for (auto& a : atoms) push_back(std::move(a));
  }

  const FormPtr& form() const noexcept { return form_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  /// Appends after checking the atom belongs to this word's form.
  void push_back(Atom a) {
    validate(a);
    atoms_.push_back(std::move(a));
  }

  void append(const GroupWord& w) {
    require_same_form(w);
    atoms_.insert(atoms_.end(), w.atoms_.begin(), w.atoms_.end());
  }

  GroupWord inverse() const {
    GroupWord out(form_);
    out.atoms_.reserve(atoms_.size());
    for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) out.atoms_.push_back(it->inverted());
    return out;
  }

  /// Ordered product of the atoms; the empty word is the identity.
  Matrix eval() const {
    Matrix acc = Matrix::identity(form_->ring(), form_->size());
    for (const auto& a : atoms_) acc = acc * atom_eval(*form_, a);
    return acc;
  }

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    GroupWord out = a;
    out.append(b);
    return out;
  }

  bool same_form(const GroupWord& w) const { return form_ == w.form_ || *form_ == *w.form_; }

 private:
  void require_same_form(const GroupWord& w) const {
    if (!same_form(w)) throw Error(Errc::context_mismatch, "words over different forms");
  }

  void validate(const Atom& atom) const {
    const Atom& a = atom.kind() == AtomKind::inverse ? atom.inner() : atom;
    if (a.kind() == AtomKind::inverse) {
      validate(a);
      return;
    }
    for (const auto& x : a.vec()) {
      if (!(x.ring() == form_->ring())) {
        throw Error(Errc::context_mismatch, "atom over " + x.ring().text() + ", form over " + form_->ring().text());
      }
    }
    if (a.kind() == AtomKind::se) {
      if (!form_->is_standard()) throw Error(Errc::context_mismatch, "se atoms need the standard form");
      const std::size_t n = form_->n();
      if (a.i() == a.j() || a.i() < 1 || a.j() < 1 || a.i() > 2 * n || a.j() > 2 * n) {
        throw Error(Errc::bad_indices, "se atom indices");
      }
    } else if (a.vec().size() != form_->size() - 1) {
      throw Error(Errc::context_mismatch, "vector atom of wrong length");
    }
  }

  FormPtr form_;
  std::vector<Atom> atoms_;
};

inline Matrix word_eval(const GroupWord& w) { return w.eval(); }

/// The word over `target_form` obtained by mapping every payload through `f`.
inline GroupWord map_word(const GroupWord& w, FormPtr target_form,
                          const std::function<Element(const Element&)>& f) {
  GroupWord out(std::move(target_form));
  for (const auto& a : w.atoms()) out.push_back(a.map_payload(f));
  return out;
}

}  // namespace esp
