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
 * @file random.hpp
 * @brief Seeded samplers for ring elements, matrices and words.
 */

#pragma once

#include <cstdint>
#include <random>

#include "esp/ideal.hpp"
#include "esp/word.hpp"

namespace esp {

using Rng = std::mt19937_64;

/// One generator per (seed, trial) so trials are independent of each other.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

inline long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// A random element. Integers and fractions stay small; polynomials get at
/// most three terms of total degree <= 2 in the outermost variables.
inline Element random_element(const Ring& r, Rng& rng) {
  switch (r.kind()) {
    case RingKind::integers: return r.from_int(uniform_int(rng, -9, 9));
    case RingKind::rationals: {
      long den = uniform_int(rng, 1, 6);
      return r.from_rational(mpq_class(uniform_int(rng, -9, 9), den));
    }
    case RingKind::zmod: {
      mpz_class v;
      if (r.modulus() <= 1000000) {
        v = static_cast<long>(uniform_int(rng, 0, r.modulus().get_si() - 1));
      } else {
        v = static_cast<long>(rng() >> 1);
      }
      return r.from_integer(v);
    }
    case RingKind::zloc: {
      const long p = r.modulus().get_si();
      long den = uniform_int(rng, 1, 6);
      while (den % p == 0) ++den;
      return r.from_rational(mpq_class(uniform_int(rng, -2 * p * p, 2 * p * p), den));
    }
    case RingKind::polynomial: {
      const Ring base = r.base();
      const std::size_t nv = r.num_variables();
      Element::Terms terms;
      const long count = uniform_int(rng, 0, 3);
      for (long t = 0; t < count; ++t) {
        Monomial m(nv, 0);
        long deg = uniform_int(rng, 0, 2);
        for (long k = 0; k < deg; ++k) ++m[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(nv) - 1))];
        terms.push_back(Term{std::move(m), random_element(base, rng)});
      }
      return Element::make_polynomial(r, std::move(terms));
    }
  }
  return r.zero();
}

/// A random unit: retries until one is found.
inline Element random_unit(const Ring& r, Rng& rng) {
  const Ring& scalar = r;
  for (int tries = 0; tries < 1000; ++tries) {
    Element x = r.is_polynomial() ? r.embed(random_unit(r.base(), rng)) : random_element(scalar, rng);
    if (is_unit(x)) return x;
  }
  return r.one();
}

/// A random member of a decidable ideal: a combination of the generators.
inline Element random_in_ideal(const Ideal& I, Rng& rng) {
  const Ring& r = I.ring();
  Element acc = r.zero();
  for (const auto& g : I.generators()) acc += random_element(r, rng) * g;
  return acc;
}

inline Vector random_vector(const Ring& r, std::size_t len, Rng& rng) {
  Vector v;
  v.reserve(len);
  for (std::size_t k = 0; k < len; ++k) v.push_back(random_element(r, rng));
  return v;
}

inline Vector random_vector_in(const Ideal& I, std::size_t len, Rng& rng) {
  Vector v;
  v.reserve(len);
  for (std::size_t k = 0; k < len; ++k) v.push_back(random_in_ideal(I, rng));
  return v;
}

inline Matrix random_matrix(const Ring& r, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_element(r, rng));
  }
  return m;
}

inline Matrix random_skew(const Ring& r, std::size_t size, Rng& rng) {
  Matrix m(r, size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      Element x = random_element(r, rng);
      m.set(i, j, x);
      m.set(j, i, -x);
    }
  }
  return m;
}

/// Product of `steps` random transvections of size m.
inline Matrix random_elementary(const Ring& r, std::size_t m, std::size_t steps, Rng& rng) {
  Matrix acc = Matrix::identity(r, m);
  for (std::size_t s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(m)));
    auto j = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(m) - 1));
    if (j >= i) ++j;
    acc = acc * Matrix::transvection(m, i, j, random_element(r, rng));
  }
  return acc;
}

/// Random C/R atom (or, over a standard form, sometimes an se atom); inverses
/// appear with probability 1/4. Payload entries come from `I` when given.
inline Atom random_atom(const SkewForm& form, Rng& rng, const Ideal* I = nullptr) {
  const Ring& r = form.ring();
  auto scalar = [&] { return I ? random_in_ideal(*I, rng) : random_element(r, rng); };
  auto vec = [&] { return I ? random_vector_in(*I, form.size() - 1, rng) : random_vector(r, form.size() - 1, rng); };
  const long pick = uniform_int(rng, 0, form.is_standard() ? 2 : 1);
  Atom a = Atom::C({});
  if (pick == 2) {
    const long m = static_cast<long>(form.size());
    auto i = static_cast<std::size_t>(uniform_int(rng, 1, m));
    auto j = static_cast<std::size_t>(uniform_int(rng, 1, m - 1));
    if (j >= i) ++j;
    a = Atom::se(i, j, scalar());
  } else {
    a = Atom::vector_atom(pick == 0 ? AtomKind::C : AtomKind::R, vec());
  }
  if (uniform_int(rng, 0, 3) == 0) a = Atom::inverse(a);
  return a;
}

inline GroupWord random_word(const FormPtr& form, std::size_t len, Rng& rng, const Ideal* I = nullptr) {
  GroupWord w(form);
  for (std::size_t k = 0; k < len; ++k) w.push_back(random_atom(*form, rng, I));
  return w;
}

}  // namespace esp
