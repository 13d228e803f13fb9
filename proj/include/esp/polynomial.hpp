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

#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "esp/ring.hpp"

namespace esp {

/// Variable assignment used by substitute(); values live in (a subring of) the base ring.
using Assignment = std::map<std::string, Element, std::less<>>;

namespace detail {

inline void require_polynomial(const Element& a) {
  if (!a.ring().is_polynomial()) throw Error(Errc::not_polynomial_ring, a.ring().text());
}

inline std::uint64_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

}  // namespace detail

/// Splits `a` into homogeneous components a_0, a_1, ... by total degree in the
/// outermost variables. Trailing zero components are omitted, so 0 gives {}.
inline std::vector<Element> grade_decompose(const Element& a) {
  detail::require_polynomial(a);
  const Ring& r = a.ring();
  if (a.is_zero()) return {};
  const auto top = detail::total_degree(a.terms().front().exponents);
  std::vector<Element::Terms> buckets(top + 1);
  for (const auto& t : a.terms()) buckets[detail::total_degree(t.exponents)].push_back(t);
  std::vector<Element> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Element::make_polynomial(r, std::move(b)));
  return out;
}

/// The ring S[T] used by homogenize_map for an element ring S.
inline Ring homogenization_ring(const Ring& r, const std::string& t) {
  if (r.has_variable(t)) throw Error(Errc::variable_clash, "'" + t + "' already in " + r.text());
  return Ring::polynomial(r, {t});
}

/// a_0 + a_1 + a_2 + ...  |->  a_0 + a_1 T + a_2 T^2 + ... in `target` = S[T].
inline Element homogenize_map(const Element& a, const Ring& target) {
  detail::require_polynomial(a);
  if (!(target.is_polynomial() && target.base() == a.ring() && target.num_variables() == 1)) {
    throw Error(Errc::owner_mismatch, target.text() + " is not " + a.ring().text() + "[T]");
  }
  auto parts = grade_decompose(a);
  Element::Terms terms;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].is_zero()) terms.push_back(Term{Monomial{static_cast<std::uint32_t>(i)}, parts[i]});
  }
  return Element::make_polynomial(target, std::move(terms));
}

inline Element homogenize_map(const Element& a, const std::string& t) {
  detail::require_polynomial(a);
  return homogenize_map(a, homogenization_ring(a.ring(), t));
}

/// Evaluates the outermost variables of `a`; the result lives in the base ring.
inline Element substitute(const Element& a, const Assignment& assignment) {
  detail::require_polynomial(a);
  const Ring& r = a.ring();
  const Ring base = r.base();
  std::vector<Element> values;
  values.reserve(r.num_variables());
  for (const auto& name : r.variables()) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw Error(Errc::missing_variable, name);
    values.push_back(base.embed(it->second));
  }
  Element acc = base.zero();
  for (const auto& t : a.terms()) {
    Element m = t.coeff;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (t.exponents[k]) m *= values[k].pow(t.exponents[k]);
    }
    acc += m;
  }
  return acc;
}

}  // namespace esp
