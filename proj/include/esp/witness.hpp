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
 * @file witness.hpp
 * @brief Normality witnesses: conjugate an elementary (or relative) word by a
 * symplectic matrix and check where the result lands.
 */

#pragma once

#include <optional>
#include <variant>

#include "esp/json_io.hpp"

namespace esp {

/// Explicit C/R word over phi for a matrix K in Sp(phi), phi of Pfaffian 1
/// over a local ring with 2 invertible. Route:
///   phi = (1 ⊥ eps)^t psi (1 ⊥ eps)            reduce_to_psi_corner
///   K* = (1 ⊥ eps) K (1 ⊥ eps)^-1 in Sp(psi)    se-word by elimination
///   off-corner se atoms -> se_1k / se_k1         rewrite_se_off_corner
///   se_k1(x) = C_psi(x e_{k-1}), se_1k(x) = R_psi(x e_{k-1})
///   C_psi(v) -> C_phi(eps^-1 v), R_psi(v) -> R_phi(eps^t v)
inline GroupWord elementary_certificate_word(const FormPtr& form, const Matrix& k) {
  const Ring& r = form->ring();
  ElementaryCertificate eps_cert = reduce_to_psi_corner(form->phi());
  const Matrix eps = eps_cert.eval();
  const Matrix eps_inv = eps_cert.inverse().eval();
  const Matrix p = perp(Matrix::identity(r, 1), eps);
  const Matrix p_inv = perp(Matrix::identity(r, 1), eps_inv);
  FormPtr psi = make_standard_form(r, form->n());
  GroupWord se_word = factor_symplectic_local(psi, p * k * p_inv);

  GroupWord corner(psi);
  for (const auto& atom : se_word.atoms()) {
    const Atom a = atom.normalized();
    if (a.i() == 1 || a.j() == 1) {
      corner.push_back(a);
    } else {
      corner.append(rewrite_se_off_corner(psi, a.i(), a.j(), a.scalar()));
    }
  }

  const std::size_t m = form->size() - 1;
  const Matrix eps_t = eps.transpose();
  GroupWord out(form);
  for (const auto& atom : corner.atoms()) {
    const Atom a = atom.normalized();
    Vector v(m, r.zero());
    if (a.j() == 1) {
      v[a.i() - 2] = a.scalar();
      out.push_back(Atom::C((eps_inv * Matrix::column(r, v)).column_vector(0)));
    } else {
      v[a.j() - 2] = a.scalar();
      out.push_back(Atom::R((eps_t * Matrix::column(r, v)).column_vector(0)));
    }
  }
  return out;
}

using GammaInput = std::variant<Matrix, GroupWord>;
using DeltaInput = std::variant<GroupWord, RelativeWord>;

/// Report for gamma delta gamma^-1: the conjugate, its symplectic check, the
/// congruence-kernel check when an ideal is given, localized checks at every
/// maximal ideal of Z/n, and for local rings with a matrix gamma an explicit
/// C/R word evaluating to the conjugate.
inline Json normality_witness(const FormPtr& form, const GammaInput& gamma_in, const DeltaInput& delta_in,
                              const std::optional<Ideal>& ideal) {
  const Ring& r = form->ring();
  const bool gamma_is_matrix = std::holds_alternative<Matrix>(gamma_in);
  const Matrix gamma = gamma_is_matrix ? std::get<Matrix>(gamma_in) : std::get<GroupWord>(gamma_in).eval();
  if (!gamma_is_matrix && !std::get<GroupWord>(gamma_in).same_form(GroupWord(form))) {
    throw Error(Errc::context_mismatch, "gamma word over another form");
  }
  if (!(gamma.ring() == r) || gamma.rows() != form->size()) throw Error(Errc::dim_mismatch, "gamma shape or ring");
  if (!sp_check(form->phi(), gamma)) throw Error(Errc::not_symplectic, "gamma is not in Sp(phi)");

  Matrix delta = Matrix::identity(r, form->size());
  if (const auto* w = std::get_if<GroupWord>(&delta_in)) {
    if (!w->same_form(GroupWord(form))) throw Error(Errc::context_mismatch, "delta over another form");
    if (ideal) {
      for (const auto& a : w->atoms()) {
        if (!payload_in(*ideal, a)) throw Error(Errc::ideal_violation, "delta payload outside " + ideal->str());
      }
    }
    delta = w->eval();
  } else {
    const auto& rw = std::get<RelativeWord>(delta_in);
    if (!(*rw.form() == *form)) throw Error(Errc::context_mismatch, "delta over another form");
    if (ideal) {
      for (const auto& p : rw.pairs()) {
        if (!payload_in(*ideal, p.core)) throw Error(Errc::ideal_violation, "delta core outside " + ideal->str());
      }
    }
    delta = rw.eval();
  }

  const Matrix conj = gamma * delta * sp_inverse(*form, gamma);
  bool passed = true;
  Json checks = Json::object();
  const bool sp = sp_check(form->phi(), conj);
  checks["sp_check"] = sp;
  passed = passed && sp;
  if (ideal) {
    const bool kernel = rsp_kernel_check(*form, conj, *ideal);
    checks["rsp_kernel_check"] = kernel;
    passed = passed && kernel;
  }

  Json report = Json::object();
  report["ring"] = r.text();
  report["n"] = form->n();
  if (ideal) report["ideal"] = ideal_to_json(*ideal);
  report["conjugate"] = matrix_to_json(conj);

  if (r.kind() == RingKind::zmod) {
    Json local = Json::array();
    for (const auto& mx : enumerate_max_ideals(r)) {
      Localization loc = localize_at(r, mx.prime);
      Matrix phi_p = map_entries(form->phi(), loc.target(), loc);
      Matrix conj_p = map_entries(conj, loc.target(), loc);
      Json entry = Json::object();
      entry["prime"] = mx.prime.get_str();
      entry["ring"] = loc.target().text();
      entry["conjugate"] = matrix_to_json(conj_p);
      const bool ok = sp_check(phi_p, conj_p);
      entry["sp_check"] = ok;
      passed = passed && ok;
      if (ideal) {
        std::vector<Element> gens;
        for (const auto& g : ideal->generators()) gens.push_back(loc(g));
        const Ideal ip = Ideal::generated_by(loc.target(), gens);
        const bool k = rsp_kernel_check(SkewForm(phi_p), conj_p, ip);
        entry["rsp_kernel_check"] = k;
        passed = passed && k;
      }
      local.push_back(std::move(entry));
    }
    checks["localized"] = std::move(local);
  }

  if (gamma_is_matrix && !r.is_polynomial() && r.is_local() && r.has_half() && form->n() >= 2) {
    GroupWord word = elementary_certificate_word(form, conj);
    const bool equal = word.eval() == conj;
    Json cert = Json::object();
    cert["word"] = word_to_json(word);
    cert["length"] = word.size();
    cert["eval_equal"] = equal;
    checks["certificate"] = std::move(cert);
    passed = passed && equal;
  }

  report["checks"] = std::move(checks);
  report["passed"] = passed;
  return report;
}

}  // namespace esp
