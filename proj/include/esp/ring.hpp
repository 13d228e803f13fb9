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
 * @file ring.hpp
 * @brief Exact commutative rings selected at run time.
 *
 * A Ring is a cheap, shareable handle describing one of
 *
 *   int             the integers
 *   rat             the rationals
 *   zmod:<n>        integers modulo n (n >= 2)
 *   zloc:<p>        integers localized at an odd prime p
 *   poly:<base>:[V1,...]  polynomials over another ring
 *
 * Elements carry their owning ring and are always stored in canonical form,
 * so structural equality is ring equality.
 */

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "esp/error.hpp"

namespace esp {

enum class RingKind { integers, rationals, zmod, zloc, polynomial };

class Ring;
class Element;
struct Term;

/// Exponent vector over the variables of one polynomial level.
using Monomial = std::vector<std::uint32_t>;

namespace detail {

struct RingData {
  RingKind kind{};
  mpz_class modulus;                              // n for zmod, p for zloc
  std::vector<std::pair<mpz_class, unsigned>> factors;  // zmod only
  std::shared_ptr<const RingData> base;           // polynomial only
  std::vector<std::string> vars;                  // polynomial only
  std::string text;
};

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

inline std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (p > 10000000) {
      throw Error(Errc::unsupported_ring, "modulus too large to factor");
    }
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Graded order: higher total degree first, then lexicographically larger.
inline bool monomial_greater(const Monomial& a, const Monomial& b) {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_greater(a, b); }
};

}  // namespace detail

class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring zmod(const mpz_class& n);
  static Ring zloc(const mpz_class& p);
  static Ring polynomial(const Ring& base, std::vector<std::string> vars);

  /// Parses the ring grammar, e.g. "zmod:9" or "poly:rat:[X,Y]".
  static Ring parse(std::string_view text);

  RingKind kind() const noexcept { return d_->kind; }
  bool is_polynomial() const noexcept { return d_->kind == RingKind::polynomial; }
  const mpz_class& modulus() const noexcept { return d_->modulus; }
  const std::vector<std::pair<mpz_class, unsigned>>& modulus_factors() const noexcept {
    return d_->factors;
  }
  Ring base() const {
    if (!is_polynomial()) throw Error(Errc::not_polynomial_ring, d_->text);
    return Ring(d_->base);
  }
  const std::vector<std::string>& variables() const noexcept { return d_->vars; }
  std::size_t num_variables() const noexcept { return d_->vars.size(); }
  std::optional<std::size_t> variable_index(std::string_view name) const {
    for (std::size_t k = 0; k < d_->vars.size(); ++k) {
      if (d_->vars[k] == name) return k;
    }
    return std::nullopt;
  }
  /// True when `name` is a variable at any level of the tower.
  bool has_variable(std::string_view name) const {
    for (auto d = d_; d; d = d->base) {
      for (const auto& v : d->vars) {
        if (v == name) return true;
      }
    }
    return false;
  }
  const std::string& text() const noexcept { return d_->text; }

  /// 2 is invertible.
  bool has_half() const {
    switch (kind()) {
      case RingKind::integers: return false;
      case RingKind::rationals: return true;
      case RingKind::zmod: return d_->modulus % 2 != 0;
      case RingKind::zloc: return true;
      case RingKind::polynomial: return base().has_half();
    }
    return false;
  }
  /// Member of the supported local-ring menu: rationals, zloc:p, zmod:p^k.
  bool is_local() const {
    switch (kind()) {
      case RingKind::rationals:
      case RingKind::zloc: return true;
      case RingKind::zmod: return d_->factors.size() == 1;
      default: return false;
    }
  }
  bool is_field() const {
    return kind() == RingKind::rationals ||
           (kind() == RingKind::zmod && d_->factors.size() == 1 && d_->factors[0].second == 1);
  }
  bool is_domain() const {
    switch (kind()) {
      case RingKind::integers:
      case RingKind::rationals:
      case RingKind::zloc: return true;
      case RingKind::zmod: return is_field();
      case RingKind::polynomial: return base().is_domain();
    }
    return false;
  }

  Element zero() const;
  Element one() const;
  Element from_int(long v) const;
  Element from_integer(const mpz_class& v) const;
  /// Image of a rational number; its denominator must be invertible here.
  Element from_rational(const mpq_class& q) const;
  /// The variable `name` from any level of the tower, as an element of this ring.
  Element variable(std::string_view name) const;
  /// The inverse of 2. Throws NotHalvable.
  Element half() const;
  /// Canonical image of an element of a subring of the tower (or of the integers).
  Element embed(const Element& x) const;
  /// Parses the element grammar, e.g. "3*X^2*Y - 1/2".
  Element parse_element(std::string_view text) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.d_ == b.d_ || a.d_->text == b.d_->text;
  }

 private:
  explicit Ring(std::shared_ptr<const detail::RingData> d) : d_(std::move(d)) {}

  std::shared_ptr<const detail::RingData> d_;
};

/// An element of a Ring in canonical form. Values are immutable.
class Element {
 public:
  using Terms = std::vector<Term>;

  const Ring& ring() const noexcept { return ring_; }

  /// Integer payload (int and zmod rings; residue in [0, n) for zmod).
  const mpz_class& integer() const { return std::get<mpz_class>(value_); }
  /// Reduced fraction payload (rat and zloc rings).
  const mpq_class& fraction() const { return std::get<mpq_class>(value_); }
  /// Terms sorted by decreasing graded order, no zero coefficients.
  const Terms& terms() const { return *std::get<std::shared_ptr<const Terms>>(value_); }

  bool is_zero() const;
  bool is_one() const;
  /// The degree-zero coefficient viewed in the base ring (polynomials only).
  Element constant_term() const;

  std::string str() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }
  friend bool operator==(const Element& a, const Element& b);

  Element pow(unsigned e) const;

  static Element make_integer(const Ring& r, mpz_class v);
  static Element make_fraction(const Ring& r, mpq_class v);
  /// Builds a polynomial from arbitrary terms: merges, drops zeros, sorts.
  static Element make_polynomial(const Ring& r, Terms terms);

 private:
  using Payload = std::variant<mpz_class, mpq_class, std::shared_ptr<const Terms>>;

  Element(Ring r, Payload v) : ring_(std::move(r)), value_(std::move(v)) {}

  static Element from_sorted_terms(const Ring& r, Terms terms) {
    return Element(r, std::make_shared<const Terms>(std::move(terms)));
  }

  Ring ring_;
  Payload value_;
};

struct Term {
  Monomial exponents;
  Element coeff;
};

// ---------------------------------------------------------------------------
// Ring construction
// ---------------------------------------------------------------------------

inline Ring Ring::integers() {
  auto d = std::make_shared<detail::RingData>();
  d->kind = RingKind::integers;
  d->text = "int";
  return Ring(std::move(d));
}

inline Ring Ring::rationals() {
  auto d = std::make_shared<detail::RingData>();
  d->kind = RingKind::rationals;
  d->text = "rat";
  return Ring(std::move(d));
}

inline Ring Ring::zmod(const mpz_class& n) {
  if (n < 2) throw Error(Errc::unsupported_ring, "zmod modulus must be >= 2");
  auto d = std::make_shared<detail::RingData>();
  d->kind = RingKind::zmod;
  d->modulus = n;
  d->factors = detail::factorize(n);
  d->text = "zmod:" + n.get_str();
  return Ring(std::move(d));
}

inline Ring Ring::zloc(const mpz_class& p) {
  if (p < 3 || p % 2 == 0 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw Error(Errc::unsupported_ring, "zloc needs an odd prime, got " + p.get_str());
  }
  auto d = std::make_shared<detail::RingData>();
  d->kind = RingKind::zloc;
  d->modulus = p;
  d->text = "zloc:" + p.get_str();
  return Ring(std::move(d));
}

inline Ring Ring::polynomial(const Ring& base, std::vector<std::string> vars) {
  if (vars.empty()) throw Error(Errc::parse_error, "polynomial ring needs variables");
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (!detail::is_identifier(vars[k])) {
      throw Error(Errc::parse_error, "bad variable name '" + vars[k] + "'");
    }
    if (base.has_variable(vars[k]) ||
        std::find(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(k), vars[k]) !=
            vars.begin() + static_cast<std::ptrdiff_t>(k)) {
      throw Error(Errc::variable_clash, "variable '" + vars[k] + "' already in use");
    }
  }
  auto d = std::make_shared<detail::RingData>();
  d->kind = RingKind::polynomial;
  d->base = base.d_;
  d->vars = std::move(vars);
  d->text = "poly:" + base.text() + ":[";
  for (std::size_t k = 0; k < d->vars.size(); ++k) {
    if (k) d->text += ",";
    d->text += d->vars[k];
  }
  d->text += "]";
  return Ring(std::move(d));
}

namespace detail {

class RingParser {
 public:
  explicit RingParser(std::string_view s) : s_(s) {}

  Ring parse_all() {
    Ring r = parse();
    if (pos_ != s_.size()) fail("trailing characters");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse_error, "ring '" + std::string(s_) + "': " + why);
  }

  std::string_view word() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  mpz_class number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Ring parse() {
    auto w = word();
    if (w == "int") return Ring::integers();
    if (w == "rat") return Ring::rationals();
    if (w == "zmod") {
      expect(':');
      return Ring::zmod(number());
    }
    if (w == "zloc") {
      expect(':');
      return Ring::zloc(number());
    }
    if (w == "poly") {
      expect(':');
      Ring base = parse();
      expect(':');
      expect('[');
      std::vector<std::string> vars;
      while (true) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']') ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        name.erase(0, name.find_first_not_of(' '));
        name.erase(name.find_last_not_of(' ') + 1);
        vars.push_back(name);
        if (pos_ >= s_.size()) fail("unterminated variable list");
        if (s_[pos_++] == ']') break;
      }
      return Ring::polynomial(base, std::move(vars));
    }
    fail("unknown ring '" + std::string(w) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Ring Ring::parse(std::string_view text) { return detail::RingParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Element construction
// ---------------------------------------------------------------------------

inline Element Element::make_integer(const Ring& r, mpz_class v) {
  switch (r.kind()) {
    case RingKind::integers: return Element(r, std::move(v));
    case RingKind::zmod: {
      mpz_class out;
      mpz_fdiv_r(out.get_mpz_t(), v.get_mpz_t(), r.modulus().get_mpz_t());
      return Element(r, std::move(out));
    }
    default: return r.from_integer(v);
  }
}

inline Element Element::make_fraction(const Ring& r, mpq_class v) {
  v.canonicalize();
  if (r.kind() == RingKind::zloc && v.get_den() % r.modulus() == 0) {
    throw Error(Errc::not_unit, "denominator of " + v.get_str() + " not invertible in " + r.text());
  }
  if (r.kind() != RingKind::rationals && r.kind() != RingKind::zloc) return r.from_rational(v);
  return Element(r, std::move(v));
}

inline Element Element::make_polynomial(const Ring& r, Terms terms) {
  std::map<Monomial, Element, detail::MonomialGreater> acc;
  const std::size_t nv = r.num_variables();
  for (auto& t : terms) {
    if (t.exponents.size() != nv) throw Error(Errc::dim_mismatch, "monomial arity");
    auto it = acc.find(t.exponents);
    if (it == acc.end()) {
      acc.emplace(std::move(t.exponents), std::move(t.coeff));
    } else {
      it->second += t.coeff;
    }
  }
  Terms out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back(Term{m, c});
  }
  return from_sorted_terms(r, std::move(out));
}

inline Element Ring::zero() const { return from_int(0); }
inline Element Ring::one() const { return from_int(1); }
inline Element Ring::from_int(long v) const { return from_integer(mpz_class(v)); }

inline Element Ring::from_integer(const mpz_class& v) const {
  switch (kind()) {
    case RingKind::integers:
    case RingKind::zmod: return Element::make_integer(*this, v);
    case RingKind::rationals:
    case RingKind::zloc: return Element::make_fraction(*this, mpq_class(v));
    case RingKind::polynomial: {
      Element::Terms t;
      t.push_back(Term{Monomial(num_variables(), 0), base().from_integer(v)});
      return Element::make_polynomial(*this, std::move(t));
    }
  }
  throw Error(Errc::unsupported_ring, text());
}

inline Element Ring::from_rational(const mpq_class& q_in) const {
  mpq_class q = q_in;
  q.canonicalize();
  switch (kind()) {
    case RingKind::integers:
      if (q.get_den() != 1) throw Error(Errc::not_unit, q.get_str() + " is not an integer");
      return Element::make_integer(*this, q.get_num());
    case RingKind::zmod: {
      mpz_class inv;
      mpz_class den = q.get_den();
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus().get_mpz_t()) == 0) {
        throw Error(Errc::not_unit, den.get_str() + " is not invertible in " + text());
      }
      return Element::make_integer(*this, q.get_num() * inv);
    }
    case RingKind::rationals:
    case RingKind::zloc: return Element::make_fraction(*this, q);
    case RingKind::polynomial: {
      Element::Terms t;
      t.push_back(Term{Monomial(num_variables(), 0), base().from_rational(q)});
      return Element::make_polynomial(*this, std::move(t));
    }
  }
  throw Error(Errc::unsupported_ring, text());
}

inline Element Ring::variable(std::string_view name) const {
  if (!is_polynomial()) {
    throw Error(Errc::missing_variable, "no variable '" + std::string(name) + "' in " + text());
  }
  if (auto k = variable_index(name)) {
    Monomial m(num_variables(), 0);
    m[*k] = 1;
    Element::Terms t;
    t.push_back(Term{std::move(m), base().one()});
    return Element::make_polynomial(*this, std::move(t));
  }
  return embed(base().variable(name));
}

inline Element Ring::half() const {
  if (!has_half()) throw Error(Errc::not_halvable, "2 is not a unit in " + text());
  return from_rational(mpq_class(1, 2));
}

inline Element Ring::embed(const Element& x) const {
  if (x.ring() == *this) return x;
  if (is_polynomial()) {
    Element::Terms t;
    t.push_back(Term{Monomial(num_variables(), 0), base().embed(x)});
    return Element::make_polynomial(*this, std::move(t));
  }
  if (x.ring().kind() == RingKind::integers) return from_integer(x.integer());
  throw Error(Errc::owner_mismatch, "cannot embed " + x.ring().text() + " into " + text());
}

// ---------------------------------------------------------------------------
// Element arithmetic
// ---------------------------------------------------------------------------

namespace detail {

inline void require_same_ring(const Element& a, const Element& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(Errc::owner_mismatch, a.ring().text() + " vs " + b.ring().text());
  }
}

}  // namespace detail

inline bool Element::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::integers:
    case RingKind::zmod: return integer() == 0;
    case RingKind::rationals:
    case RingKind::zloc: return fraction() == 0;
    case RingKind::polynomial: return terms().empty();
  }
  return false;
}

inline bool Element::is_one() const { return *this == ring_.one(); }

inline Element Element::constant_term() const {
  Ring b = ring_.base();
  const auto& ts = terms();
  if (!ts.empty()) {
    const auto& last = ts.back();
    if (std::all_of(last.exponents.begin(), last.exponents.end(), [](auto e) { return e == 0; })) {
      return last.coeff;
    }
  }
  return b.zero();
}

inline Element Element::operator-() const {
  switch (ring_.kind()) {
    case RingKind::integers:
    case RingKind::zmod: return make_integer(ring_, -integer());
    case RingKind::rationals:
    case RingKind::zloc: return Element(ring_, mpq_class(-fraction()));
    case RingKind::polynomial: {
      Terms out = terms();
      for (auto& t : out) t.coeff = -t.coeff;
      return from_sorted_terms(ring_, std::move(out));
    }
  }
  return *this;
}

inline Element operator+(const Element& a, const Element& b) {
  detail::require_same_ring(a, b);
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers:
    case RingKind::zmod: return Element::make_integer(r, a.integer() + b.integer());
    case RingKind::rationals:
    case RingKind::zloc: return Element(r, mpq_class(a.fraction() + b.fraction()));
    case RingKind::polynomial: {
      const auto& x = a.terms();
      const auto& y = b.terms();
      Element::Terms out;
      out.reserve(x.size() + y.size());
      std::size_t i = 0, j = 0;
      while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && detail::monomial_greater(x[i].exponents, y[j].exponents))) {
          out.push_back(x[i++]);
        } else if (i == x.size() || detail::monomial_greater(y[j].exponents, x[i].exponents)) {
          out.push_back(y[j++]);
        } else {
          Element c = x[i].coeff + y[j].coeff;
          if (!c.is_zero()) out.push_back(Term{x[i].exponents, std::move(c)});
          ++i;
          ++j;
        }
      }
      return Element::from_sorted_terms(r, std::move(out));
    }
  }
  return a;
}

inline Element operator-(const Element& a, const Element& b) { return a + (-b); }

inline Element operator*(const Element& a, const Element& b) {
  detail::require_same_ring(a, b);
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers:
    case RingKind::zmod: return Element::make_integer(r, a.integer() * b.integer());
    case RingKind::rationals:
    case RingKind::zloc: return Element(r, mpq_class(a.fraction() * b.fraction()));
    case RingKind::polynomial: {
      const auto& x = a.terms();
      const auto& y = b.terms();
      if (x.empty() || y.empty()) return r.zero();
      std::map<Monomial, Element, detail::MonomialGreater> acc;
      const std::size_t nv = r.num_variables();
      Monomial m(nv);
      for (const auto& s : x) {
        for (const auto& t : y) {
          for (std::size_t k = 0; k < nv; ++k) m[k] = s.exponents[k] + t.exponents[k];
          Element c = s.coeff * t.coeff;
          auto it = acc.find(m);
          if (it == acc.end()) {
            acc.emplace(m, std::move(c));
          } else {
            it->second += c;
          }
        }
      }
      Element::Terms out;
      out.reserve(acc.size());
      for (auto& [mono, c] : acc) {
        if (!c.is_zero()) out.push_back(Term{mono, c});
      }
      return Element::from_sorted_terms(r, std::move(out));
    }
  }
  return a;
}

inline bool operator==(const Element& a, const Element& b) {
  if (!(a.ring() == b.ring())) return false;
  switch (a.ring().kind()) {
    case RingKind::integers:
    case RingKind::zmod: return a.integer() == b.integer();
    case RingKind::rationals:
    case RingKind::zloc: return a.fraction() == b.fraction();
    case RingKind::polynomial: {
      const auto& x = a.terms();
      const auto& y = b.terms();
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].exponents != y[k].exponents || !(x[k].coeff == y[k].coeff)) return false;
      }
      return true;
    }
  }
  return false;
}

inline Element Element::pow(unsigned e) const {
  Element result = ring_.one();
  Element base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Printing and parsing
// ---------------------------------------------------------------------------

namespace detail {

inline bool displays_negative(const Element& x) {
  switch (x.ring().kind()) {
    case RingKind::integers: return x.integer() < 0;
    case RingKind::rationals:
    case RingKind::zloc: return x.fraction() < 0;
    case RingKind::zmod: return false;
    case RingKind::polynomial:
      return x.terms().size() == 1 && displays_negative(x.terms().front().coeff);
  }
  return false;
}

inline std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[k];
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

}  // namespace detail

inline std::string Element::str() const {
  switch (ring_.kind()) {
    case RingKind::integers:
    case RingKind::zmod: return integer().get_str();
    case RingKind::rationals:
    case RingKind::zloc: return fraction().get_str();
    case RingKind::polynomial: break;
  }
  const auto& ts = terms();
  if (ts.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const bool neg = detail::displays_negative(ts[k].coeff);
    const Element c = neg ? -ts[k].coeff : ts[k].coeff;
    const std::string mono = detail::monomial_str(ts[k].exponents, ring_.variables());
    std::string cs = c.str();
    if (c.ring().is_polynomial() && c.terms().size() > 1) cs = "(" + cs + ")";
    std::string body;
    if (mono.empty()) {
      body = cs;
    } else if (c.is_one()) {
      body = mono;
    } else {
      body = cs + "*" + mono;
    }
    if (k == 0) {
      out = (neg ? "-" : "") + body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

namespace detail {

/// Recursive-descent evaluator for the element grammar.
class ElementParser {
 public:
  ElementParser(const Ring& r, std::string_view s) : ring_(r), s_(s) {}

  Element parse_all() {
    Element e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse_error, "element '" + std::string(s_) + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Element expr() {
    Element acc = ring_.zero();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Element t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Element term() {
    Element acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Element factor() {
    Element base = atom();
    if (accept('^')) {
      mpz_class e(digits());
      if (!e.fits_uint_p()) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Element atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Element e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      std::size_t save = pos_;
      if (accept('/')) {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          mpz_class den(digits());
          if (den == 0) fail("zero denominator");
          try {
            return ring_.from_rational(mpq_class(num, den));
          } catch (const Error& e) {
            fail(e.what());
          }
        }
        pos_ = save;
        fail("'/' is only allowed inside a fraction literal");
      }
      return ring_.from_integer(num);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = s_.substr(start, pos_ - start);
      if (!ring_.has_variable(name)) fail("unknown variable '" + std::string(name) + "'");
      return ring_.variable(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Element Ring::parse_element(std::string_view text) const {
  return detail::ElementParser(*this, text).parse_all();
}

// ---------------------------------------------------------------------------
// Units, halving, exact division
// ---------------------------------------------------------------------------

/// Decides whether `a` is a unit. Polynomials are units only when constant.
inline bool is_unit(const Element& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers: return a.integer() == 1 || a.integer() == -1;
    case RingKind::rationals: return a.fraction() != 0;
    case RingKind::zmod: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.integer().get_mpz_t(), r.modulus().get_mpz_t());
      return g == 1;
    }
    case RingKind::zloc: return a.fraction().get_num() % r.modulus() != 0;
    case RingKind::polynomial: {
      const auto& ts = a.terms();
      if (ts.size() != 1) return false;
      for (auto e : ts[0].exponents) {
        if (e) return false;
      }
      return is_unit(ts[0].coeff);
    }
  }
  return false;
}

inline Element invert_unit(const Element& a) {
  if (!is_unit(a)) throw Error(Errc::not_unit, a.str() + " in " + a.ring().text());
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers: return a;
    case RingKind::rationals:
    case RingKind::zloc: return Element::make_fraction(r, mpq_class(1) / a.fraction());
    case RingKind::zmod: {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), a.integer().get_mpz_t(), r.modulus().get_mpz_t());
      return Element::make_integer(r, inv);
    }
    case RingKind::polynomial: return r.embed(invert_unit(a.terms()[0].coeff));
  }
  return a;
}

/// The unique b with 2b = a. Throws NotHalvable when 2 is not a unit.
inline Element halve(const Element& a) { return a * a.ring().half(); }

/// q with b*q = a when one exists in the ring. Intended for integral domains.
inline std::optional<Element> exact_divide(const Element& a, const Element& b) {
  detail::require_same_ring(a, b);
  if (b.is_zero()) return std::nullopt;
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers:
      if (a.integer() % b.integer() != 0) return std::nullopt;
      return Element::make_integer(r, a.integer() / b.integer());
    case RingKind::rationals: return Element::make_fraction(r, a.fraction() / b.fraction());
    case RingKind::zloc: {
      mpq_class q = a.fraction() / b.fraction();
      q.canonicalize();
      if (q.get_den() % r.modulus() == 0) return std::nullopt;
      return Element::make_fraction(r, q);
    }
    case RingKind::zmod:
      if (!is_unit(b)) return std::nullopt;
      return a * invert_unit(b);
    case RingKind::polynomial: {
      Element rem = a;
      Element::Terms quotient;
      const Term& lead = b.terms().front();
      while (!rem.is_zero()) {
        const Term& t = rem.terms().front();
        Monomial m(t.exponents.size());
        for (std::size_t k = 0; k < m.size(); ++k) {
          if (t.exponents[k] < lead.exponents[k]) return std::nullopt;
          m[k] = t.exponents[k] - lead.exponents[k];
        }
        auto c = exact_divide(t.coeff, lead.coeff);
        if (!c) return std::nullopt;
        Element::Terms single;
        single.push_back(Term{m, *c});
        Element step = Element::make_polynomial(r, single);
        quotient.push_back(Term{std::move(m), std::move(*c)});
        rem -= step * b;
      }
      return Element::make_polynomial(r, std::move(quotient));
    }
  }
  return std::nullopt;
}

}  // namespace esp
