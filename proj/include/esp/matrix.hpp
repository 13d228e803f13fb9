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
 * @file matrix.hpp
 * @brief Dense matrices over a run-time Ring.
 *
 * Storage is row-major and indices are 0-based. Helpers that mirror the
 * usual mathematical notation (basis_e, transvection) take 1-based indices
 * and say so.
 */

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esp/ideal.hpp"
#include "esp/ring.hpp"

namespace esp {

/// Column vector payloads (generator vectors, ideal splits).
using Vector = std::vector<Element>;

class Matrix {
 public:
  /// Zero matrix.
  Matrix(Ring r, std::size_t rows, std::size_t cols)
      : ring_(std::move(r)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

  static Matrix identity(const Ring& r, std::size_t n) {
    Matrix m(r, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, r.one());
    return m;
  }

  /// e_ij: 1 in position (i, j), 1-based.
  static Matrix basis_e(const Ring& r, std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > n || j > n) throw Error(Errc::out_of_range, "basis_e index");
    Matrix m(r, n, n);
    m.set(i - 1, j - 1, r.one());
    return m;
  }

  /// E_ij(a) = I + a e_ij, 1-based.
  static Matrix transvection(std::size_t n, std::size_t i, std::size_t j, const Element& a) {
    if (i == j || i < 1 || j < 1 || i > n || j > n) throw Error(Errc::bad_indices, "transvection index");
    Matrix m = identity(a.ring(), n);
    m.set(i - 1, j - 1, a);
    return m;
  }

  static Matrix from_rows(const Ring& r, const std::vector<std::vector<Element>>& rows) {
    if (rows.empty() || rows[0].empty()) throw Error(Errc::dim_mismatch, "empty matrix");
    Matrix m(r, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(Errc::dim_mismatch, "ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  static Matrix column(const Ring& r, const Vector& v) {
    Matrix m(r, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
    return m;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void set(std::size_t i, std::size_t j, Element v) {
    if (!(v.ring() == ring_)) throw Error(Errc::owner_mismatch, v.ring().text() + " vs " + ring_.text());
    data_[i * cols_ + j] = std::move(v);
  }

  Vector column_vector(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
  }

  /// Sub-block starting at (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(Errc::dim_mismatch, "block out of range");
    Matrix b(ring_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b.data_[i * nc + j] = (*this)(r0 + i, c0 + j);
    return b;
  }

  /// Matrix with row `skip_r` and column `skip_c` removed.
  Matrix minor(std::size_t skip_r, std::size_t skip_c) const {
    Matrix m(ring_, rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
      if (i == skip_r) continue;
      for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
        if (j == skip_c) continue;
        m.data_[ii * m.cols_ + jj] = (*this)(i, j);
        ++jj;
      }
      ++ii;
    }
    return m;
  }

  bool is_identity() const { return square() && *this == identity(ring_, rows_); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  Matrix operator-() const {
    Matrix c = *this;
    for (auto& x : c.data_) x = -x;
    return c;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.ring_ == b.ring_)) throw Error(Errc::owner_mismatch, a.ring_.text() + " vs " + b.ring_.text());
    if (a.cols_ != b.rows_) throw Error(Errc::dim_mismatch, "product shape");
    Matrix c(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Element& y = b(k, j);
          if (!y.is_zero()) c.data_[i * c.cols_ + j] += x * y;
        }
      }
    }
    return c;
  }

  friend Matrix operator*(const Element& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = s * x;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? "\n[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += (*this)(i, j).str();
      }
      out += "]";
    }
    return out;
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (!(ring_ == b.ring_)) throw Error(Errc::owner_mismatch, ring_.text() + " vs " + b.ring_.text());
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Errc::dim_mismatch, "shape");
  }

  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Block-diagonal A ⊥ B.
inline Matrix perp(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring())) throw Error(Errc::owner_mismatch, a.ring().text() + " vs " + b.ring().text());
  Matrix c(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.set(a.rows() + i, a.cols() + j, b(i, j));
  return c;
}

/// Applies `f` entrywise, producing a matrix over `target`.
inline Matrix map_entries(const Matrix& a, const Ring& target,
                          const std::function<Element(const Element&)>& f) {
  Matrix c(target, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, f(a(i, j)));
  return c;
}

/// Canonical image of `a` in an extension ring of its tower.
inline Matrix lift(const Matrix& a, const Ring& target) {
  if (a.ring() == target) return a;
  return map_entries(a, target, [&](const Element& x) { return target.embed(x); });
}

namespace detail {

inline Element det_cofactor(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Element acc = a.ring().zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    Element term = a(0, j) * det_cofactor(a.minor(0, j));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Laplace expansion along successive rows, memoized on the set of used
/// columns; exact over any commutative ring.
inline Element det_laplace(const Matrix& a) {
  const std::size_t n = a.rows();
  const Ring& r = a.ring();
  // minors[mask] = det of rows (n - popcount(mask) .. n-1) and columns not in mask
  std::vector<std::optional<Element>> memo(std::size_t{1} << n);
  std::function<Element(std::size_t, std::size_t)> go = [&](std::size_t row, std::size_t used) -> Element {
    if (row == n) return r.one();
    if (memo[used]) return *memo[used];
    Element acc = r.zero();
    std::size_t sign_count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (used & (std::size_t{1} << j)) continue;
      const Element& x = a(row, j);
      if (!x.is_zero()) {
        Element term = x * go(row + 1, used | (std::size_t{1} << j));
        acc = (sign_count % 2 == 0) ? acc + term : acc - term;
      }
      ++sign_count;
    }
    memo[used] = acc;
    return acc;
  };
  return go(0, 0);
}

/// Fraction-free (Bareiss) elimination; valid over integral domains.
inline Element det_bareiss(Matrix m) {
  const std::size_t n = m.rows();
  const Ring& r = m.ring();
  Element prev = r.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return r.zero();
      for (std::size_t j = 0; j < n; ++j) {
        Element t = m(k, j);
        m.set(k, j, m(p, j));
        m.set(p, j, t);
      }
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Element num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = exact_divide(num, prev);
        if (!q) throw Error(Errc::not_invertible, "inexact Bareiss step");
        m.set(i, j, *q);
      }
    }
    prev = m(k, k);
  }
  Element d = m(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace detail

/// Exact determinant: cofactor expansion up to size 4; above that, Bareiss
/// elimination over integral domains and memoized Laplace expansion otherwise.
inline Element det(const Matrix& a) {
  if (!a.square()) throw Error(Errc::not_square, std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  if (a.rows() <= 4) return detail::det_cofactor(a);
  if (a.ring().is_domain()) return detail::det_bareiss(a);
  return detail::det_laplace(a);
}

inline Matrix adjugate(const Matrix& a) {
  if (!a.square()) throw Error(Errc::not_square, "adjugate");
  const std::size_t n = a.rows();
  if (n == 1) return Matrix::identity(a.ring(), 1);
  Matrix adj(a.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element c = det(a.minor(j, i));
      adj.set(i, j, (i + j) % 2 == 0 ? c : -c);
    }
  }
  return adj;
}

/// Inverse via the adjugate; works over rings with zero divisors whenever
/// det(a) is a unit. Throws NotInvertible otherwise.
inline Matrix mat_inverse(const Matrix& a) {
  Element d = det(a);
  if (!is_unit(d)) throw Error(Errc::not_invertible, "determinant " + d.str() + " is not a unit");
  return invert_unit(d) * adjugate(a);
}

/// phi^t = -phi with zero diagonal.
inline bool is_skew(const Matrix& a) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (!(a(i, j) == -a(j, i))) return false;
    }
  }
  return true;
}

namespace detail {

inline Element pfaffian_rec(const Matrix& a, std::vector<std::size_t>& idx) {
  if (idx.empty()) return a.ring().one();
  const std::size_t first = idx.front();
  Element acc = a.ring().zero();
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const Element& x = a(first, idx[k]);
    if (x.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t m = 1; m < idx.size(); ++m) {
      if (m != k) rest.push_back(idx[m]);
    }
    Element term = x * pfaffian_rec(a, rest);
    // (-1)^j for the 1-based position j = k + 1 of the partner
    acc = (k % 2 == 1) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace detail

/// Pfaffian by expansion along the first row, normalized so that
/// Pf([[0, a], [-a, 0]]) = a.
inline Element pfaffian(const Matrix& a) {
  if (!is_skew(a)) throw Error(Errc::not_skew, "pfaffian needs a skew-symmetric matrix");
  if (a.rows() % 2 != 0) throw Error(Errc::odd_size, std::to_string(a.rows()));
  std::vector<std::size_t> idx(a.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pfaffian_rec(a, idx);
}

/// Entrywise normal form modulo `ideal`; a ≡ I (mod ideal) iff the result is the identity.
inline Matrix mat_mod_ideal(const Matrix& a, const Ideal& ideal) {
  return map_entries(a, a.ring(), [&](const Element& x) { return ideal.normal_form(x); });
}

}  // namespace esp
