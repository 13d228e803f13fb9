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
 * @file ideal.hpp
 * @brief Ideals with decidable membership, maximal ideals of Z/n and
 * localization of Z/n at a prime.
 *
 * Supported classes: the zero and unit ideals, principal ideals of int, zmod
 * and zloc (membership by divisibility), and ideals of a polynomial ring
 * generated by a subset of its outermost variables. Anything else is kept as
 * `general` and every query on it raises UndecidableIdeal.
 */

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esp/ring.hpp"

namespace esp {

enum class IdealClass { zero, full, principal, variables, general };

class Ideal {
 public:
  static Ideal generated_by(const Ring& r, std::vector<Element> gens);

  /// Parses "[g1,g2,...]" with elements of `r`.
  static Ideal parse(const Ring& r, std::string_view text);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Element>& generators() const noexcept { return gens_; }
  IdealClass ideal_class() const noexcept { return class_; }
  bool decidable() const noexcept { return class_ != IdealClass::general; }

  /// Positive generator of a principal ideal: g for int/zmod, p^k for zloc.
  const mpz_class& principal_generator() const noexcept { return principal_; }
  /// Outermost-level variable indices of a variable-generated ideal.
  const std::vector<std::size_t>& variable_indices() const noexcept { return var_indices_; }

  /// Canonical lift of the class of `a` modulo the ideal; a - normal_form(a) lies in the ideal.
  Element normal_form(const Element& a) const;

  bool contains(const Element& a) const { return normal_form(a).is_zero(); }

  std::string str() const {
    std::string out = "[";
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if (k) out += ",";
      out += gens_[k].str();
    }
    return out + "]";
  }

 private:
  Ideal(Ring r, std::vector<Element> gens) : ring_(std::move(r)), gens_(std::move(gens)) {}

  void require_decidable() const {
    if (!decidable()) throw Error(Errc::undecidable_ideal, str() + " in " + ring_.text());
  }

  Ring ring_;
  std::vector<Element> gens_;
  IdealClass class_ = IdealClass::general;
  mpz_class principal_;
  std::vector<std::size_t> var_indices_;
};

inline Ideal Ideal::generated_by(const Ring& r, std::vector<Element> gens) {
  for (const auto& g : gens) {
    if (!(g.ring() == r)) throw Error(Errc::owner_mismatch, g.ring().text() + " vs " + r.text());
  }
  Ideal I(r, std::move(gens));
  std::vector<const Element*> nonzero;
  for (const auto& g : I.gens_) {
    if (!g.is_zero()) nonzero.push_back(&g);
  }
  if (nonzero.empty()) {
    I.class_ = IdealClass::zero;
    return I;
  }
  switch (r.kind()) {
    case RingKind::rationals: I.class_ = IdealClass::full; break;
    case RingKind::integers:
    case RingKind::zmod: {
      mpz_class g = r.kind() == RingKind::zmod ? r.modulus() : mpz_class(0);
      for (auto* x : nonzero) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x->integer().get_mpz_t());
      I.principal_ = g;
      I.class_ = g == 1 ? IdealClass::full : IdealClass::principal;
      break;
    }
    case RingKind::zloc: {
      const mpz_class& p = r.modulus();
      unsigned best = ~0u;
      for (auto* x : nonzero) {
        mpz_class num = abs(x->fraction().get_num());
        unsigned v = 0;
        while (num % p == 0) {
          num /= p;
          ++v;
        }
        best = std::min(best, v);
      }
      mpz_pow_ui(I.principal_.get_mpz_t(), p.get_mpz_t(), best);
      I.class_ = best == 0 ? IdealClass::full : IdealClass::principal;
      break;
    }
    case RingKind::polynomial: {
      bool all_vars = true;
      for (auto* x : nonzero) {
        if (is_unit(*x)) {
          I.class_ = IdealClass::full;
          return I;
        }
        const auto& ts = x->terms();
        std::size_t hit = 0, ones = 0;
        if (ts.size() == 1 && ts[0].coeff.is_one()) {
          for (std::size_t k = 0; k < ts[0].exponents.size(); ++k) {
            if (ts[0].exponents[k] == 1) {
              hit = k;
              ++ones;
            } else if (ts[0].exponents[k] != 0) {
              ones = 2;
            }
          }
        }
        if (ones != 1) {
          all_vars = false;
        } else if (std::find(I.var_indices_.begin(), I.var_indices_.end(), hit) ==
                   I.var_indices_.end()) {
          I.var_indices_.push_back(hit);
        }
      }
      std::sort(I.var_indices_.begin(), I.var_indices_.end());
      I.class_ = all_vars ? IdealClass::variables : IdealClass::general;
      break;
    }
  }
  return I;
}

inline Ideal Ideal::parse(const Ring& r, std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos || s[first] != '[' || s[last] != ']') {
    throw Error(Errc::parse_error, "ideal '" + s + "' must look like [g1,g2,...]");
  }
  std::string body = s.substr(first + 1, last - first - 1);
  std::vector<Element> gens;
  std::size_t start = 0;
  if (body.find_first_not_of(" \t") != std::string::npos) {
    while (true) {
      auto comma = body.find(',', start);
      gens.push_back(r.parse_element(body.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return generated_by(r, std::move(gens));
}

inline Element Ideal::normal_form(const Element& a) const {
  if (!(a.ring() == ring_)) throw Error(Errc::owner_mismatch, a.ring().text() + " vs " + ring_.text());
  require_decidable();
  switch (class_) {
    case IdealClass::zero: return a;
    case IdealClass::full: return ring_.zero();
    case IdealClass::principal: {
      mpz_class rep;
      if (ring_.kind() == RingKind::zloc) {
        mpz_class inv;
        mpz_class den = a.fraction().get_den();
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), principal_.get_mpz_t());
        mpz_class num = a.fraction().get_num() * inv;
        mpz_fdiv_r(rep.get_mpz_t(), num.get_mpz_t(), principal_.get_mpz_t());
      } else {
        mpz_fdiv_r(rep.get_mpz_t(), a.integer().get_mpz_t(), principal_.get_mpz_t());
      }
      return ring_.from_integer(rep);
    }
    case IdealClass::variables: {
      Element::Terms kept;
      for (const auto& t : a.terms()) {
        bool hit = false;
        for (auto k : var_indices_) hit = hit || t.exponents[k] != 0;
        if (!hit) kept.push_back(t);
      }
      return Element::make_polynomial(ring_, std::move(kept));
    }
    case IdealClass::general: break;
  }
  throw Error(Errc::undecidable_ideal, str());
}

/// One maximal ideal of Z/n: the prime p and the ideal (p).
struct MaximalIdeal {
  mpz_class prime;
  Ideal ideal;
};

/// All maximal ideals of a zmod ring, one per prime divisor of the modulus.
inline std::vector<MaximalIdeal> enumerate_max_ideals(const Ring& r) {
  if (r.kind() != RingKind::zmod) {
    throw Error(Errc::unsupported_ring, "maximal ideals are enumerated for zmod only, not " + r.text());
  }
  std::vector<MaximalIdeal> out;
  for (const auto& [p, e] : r.modulus_factors()) {
    out.push_back(MaximalIdeal{p, Ideal::generated_by(r, {r.from_integer(p)})});
  }
  return out;
}

/// Localization of Z/n at a prime p | n, realized as Z/p^v with v = v_p(n),
/// together with the canonical projection.
class Localization {
 public:
  Localization(const Ring& source, const mpz_class& p) : source_(source), target_(source), prime_(p) {
    if (source.kind() != RingKind::zmod) {
      throw Error(Errc::unsupported_ring, "localize_at expects zmod, got " + source.text());
    }
    for (const auto& [q, e] : source.modulus_factors()) {
      if (q == p) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        target_ = Ring::zmod(pe);
        return;
      }
    }
    throw Error(Errc::not_a_divisor, p.get_str() + " is not a prime divisor of " + source.modulus().get_str());
  }

  const Ring& source() const noexcept { return source_; }
  const Ring& target() const noexcept { return target_; }
  const mpz_class& prime() const noexcept { return prime_; }

  Element operator()(const Element& x) const {
    if (!(x.ring() == source_)) throw Error(Errc::owner_mismatch, x.ring().text());
    return target_.from_integer(x.integer());
  }

 private:
  Ring source_;
  Ring target_;
  mpz_class prime_;
};

inline Localization localize_at(const Ring& r, const mpz_class& p) { return Localization(r, p); }

}  // namespace esp
