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
 * @file symplectic.hpp
 * @brief Skew forms and the generators of their elementary symplectic groups.
 *
 * For an invertible skew-symmetric phi of size 2n written as
 *
 *     phi = [ 0  -c^t ]        phi^{-1} = [  0  d^t ]
 *           [ c   nu  ]                   [ -d  mu  ]
 *
 * the column generators are C(v) = [[1, 0], [v, I + d v^t nu]] and the row
 * generators R(v) = [[1, v^t], [0, I + mu v c^t]] for v of length 2n - 1.
 * Over the standard form psi_n the classical se_ij(a) are also available.
 * Index arguments that name matrix positions (se_ij, sigma) are 1-based.
 */

#pragma once

#include <memory>
#include <string>
#include <utility>

#include "esp/matrix.hpp"

namespace esp {

/// psi_n: n diagonal copies of [[0, 1], [-1, 0]].
inline Matrix make_psi(const Ring& r, std::size_t n) {
  if (n < 1) throw Error(Errc::out_of_range, "psi_n needs n >= 1");
  Matrix m(r, 2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    m.set(2 * k, 2 * k + 1, r.one());
    m.set(2 * k + 1, 2 * k, -r.one());
  }
  return m;
}

/// The pair swap 2i-1 <-> 2i on 1-based indices.
constexpr std::size_t sigma(std::size_t i) { return i % 2 == 1 ? i + 1 : i - 1; }

inline std::size_t sigma_checked(std::size_t n, std::size_t i) {
  if (i < 1 || i > 2 * n) throw Error(Errc::out_of_range, "sigma(" + std::to_string(i) + ")");
  return sigma(i);
}

/// Elementary symplectic generator for psi_n:
///   se_ij(a) = I + a e_ij                                   if i = sigma(j)
///   se_ij(a) = I + a e_ij - (-1)^(i+j) a e_{sigma(j) sigma(i)}  otherwise.
inline Matrix make_se(std::size_t n, std::size_t i, std::size_t j, const Element& a) {
  if (i == j || i < 1 || j < 1 || i > 2 * n || j > 2 * n) {
    throw Error(Errc::bad_indices, "se_" + std::to_string(i) + "," + std::to_string(j));
  }
  Matrix m = Matrix::identity(a.ring(), 2 * n);
  m.set(i - 1, j - 1, a);
  if (i != sigma(j)) {
    m.set(sigma(j) - 1, sigma(i) - 1, (i + j) % 2 == 0 ? -a : a);
  }
  return m;
}

/// M^t phi M == phi. `phi` is lifted when M lives over an extension ring.
inline bool sp_check(const Matrix& phi, const Matrix& m) {
  if (!phi.square() || !m.square() || phi.rows() != m.rows()) {
    throw Error(Errc::dim_mismatch, "sp_check shapes");
  }
  Matrix p = lift(phi, m.ring());
  return m.transpose() * p * m == p;
}

/// An invertible skew-symmetric form with its inverse and block data cached at
/// construction. Immutable.
class SkewForm {
 public:
  explicit SkewForm(Matrix phi) : phi_(std::move(phi)), phi_inv_(phi_) {
    if (!is_skew(phi_)) throw Error(Errc::not_skew, "form must be skew-symmetric");
    if (phi_.rows() < 2 || phi_.rows() % 2 != 0) {
      throw Error(Errc::not_invertible, "odd or empty skew matrices are singular");
    }
    phi_inv_ = mat_inverse(phi_);
    init_blocks();
  }

  static SkewForm standard(const Ring& r, std::size_t n) { return SkewForm(make_psi(r, n)); }

  const Ring& ring() const noexcept { return phi_.ring(); }
  std::size_t n() const noexcept { return phi_.rows() / 2; }
  std::size_t size() const noexcept { return phi_.rows(); }
  bool is_standard() const noexcept { return standard_; }

  const Matrix& phi() const noexcept { return phi_; }
  const Matrix& phi_inv() const noexcept { return phi_inv_; }
  const Matrix& c() const noexcept { return c_; }
  const Matrix& nu() const noexcept { return nu_; }
  const Matrix& d() const noexcept { return d_; }
  const Matrix& mu_block() const noexcept { return mu_; }

  /// c^t d = 1, nu d = 0, c^t mu = 0, c d^t + nu mu = I.
  bool block_identities_hold() const {
    const std::size_t m = size() - 1;
    const Ring& r = ring();
    return c_.transpose() * d_ == Matrix::identity(r, 1) && nu_ * d_ == Matrix(r, m, 1) &&
           c_.transpose() * mu_ == Matrix(r, 1, m) &&
           c_ * d_.transpose() + nu_ * mu_ == Matrix::identity(r, m);
  }

  /// alpha(v) = I + d v^t nu.
  Matrix alpha(const Vector& v) const {
    Matrix col = checked_column(v);
    return Matrix::identity(ring(), size() - 1) + d_ * (col.transpose() * nu_);
  }

  /// beta(v) = I + mu v c^t.
  Matrix beta(const Vector& v) const {
    Matrix col = checked_column(v);
    return Matrix::identity(ring(), size() - 1) + (mu_ * col) * c_.transpose();
  }

  /// C(v) = [[1, 0], [v, alpha(v)]].
  Matrix C(const Vector& v) const {
    Matrix a = alpha(v);
    Matrix out(ring(), size(), size());
    out.set(0, 0, ring().one());
    for (std::size_t i = 0; i + 1 < size(); ++i) {
      out.set(i + 1, 0, v[i]);
      for (std::size_t j = 0; j + 1 < size(); ++j) out.set(i + 1, j + 1, a(i, j));
    }
    return out;
  }

  /// R(v) = [[1, v^t], [0, beta(v)]].
  Matrix R(const Vector& v) const {
    Matrix b = beta(v);
    Matrix out(ring(), size(), size());
    out.set(0, 0, ring().one());
    for (std::size_t i = 0; i + 1 < size(); ++i) {
      out.set(0, i + 1, v[i]);
      for (std::size_t j = 0; j + 1 < size(); ++j) out.set(i + 1, j + 1, b(i, j));
    }
    return out;
  }

  /// Image of the form under a ring homomorphism `f` into `target`. The cached
  /// inverse and blocks are mapped rather than recomputed.
  SkewForm mapped(const Ring& target, const std::function<Element(const Element&)>& f) const {
    SkewForm out(map_entries(phi_, target, f), map_entries(phi_inv_, target, f), standard_);
    return out;
  }

  /// The same form over an extension ring of its tower.
  SkewForm lifted(const Ring& target) const {
    return mapped(target, [&](const Element& x) { return target.embed(x); });
  }

  friend bool operator==(const SkewForm& a, const SkewForm& b) { return a.phi_ == b.phi_; }

 private:
  SkewForm(Matrix phi, Matrix phi_inv, bool standard)
      : phi_(std::move(phi)), phi_inv_(std::move(phi_inv)) {
    init_blocks();
    standard_ = standard;
  }

  void init_blocks() {
    const std::size_t m = size() - 1;
    c_ = phi_.block(1, 0, m, 1);
    nu_ = phi_.block(1, 1, m, m);
    d_ = -phi_inv_.block(1, 0, m, 1);
    mu_ = phi_inv_.block(1, 1, m, m);
    standard_ = phi_ == make_psi(ring(), n());
    if (!(phi_ * phi_inv_).is_identity() || !block_identities_hold()) {
      throw Error(Errc::not_invertible, "inconsistent inverse");
    }
  }

  Matrix checked_column(const Vector& v) const {
    if (v.size() != size() - 1) {
      throw Error(Errc::dim_mismatch, "generator vector must have length " + std::to_string(size() - 1));
    }
    for (const auto& x : v) {
      if (!(x.ring() == ring())) throw Error(Errc::owner_mismatch, x.ring().text() + " vs " + ring().text());
    }
    return Matrix::column(ring(), v);
  }

  Matrix phi_;
  Matrix phi_inv_;
  Matrix c_{phi_};
  Matrix nu_{phi_};
  Matrix d_{phi_};
  Matrix mu_{phi_};
  bool standard_ = false;
};

using FormPtr = std::shared_ptr<const SkewForm>;

inline FormPtr make_skewform(const Matrix& phi) { return std::make_shared<const SkewForm>(phi); }

inline FormPtr make_standard_form(const Ring& r, std::size_t n) {
  return std::make_shared<const SkewForm>(make_psi(r, n));
}

/// (1 ⊥ eps)^t * phi_star * (1 ⊥ eps).
inline Matrix corner_congruence(const Matrix& phi_star, const Matrix& eps) {
  Matrix p = perp(Matrix::identity(eps.ring(), 1), eps);
  return p.transpose() * phi_star * p;
}

/// Transport along phi = (1 ⊥ eps)^t phi* (1 ⊥ eps): M |-> (1 ⊥ eps)^{-1} M (1 ⊥ eps).
/// Maps Sp(phi*) onto Sp(phi). Throws CongruenceMismatch when the forms are not related by eps.
inline Matrix conjugate_transport(const SkewForm& form, const SkewForm& form_star, const Matrix& eps,
                                  const Matrix& m) {
  if (eps.rows() + 1 != form.size() || !eps.square()) throw Error(Errc::dim_mismatch, "eps size");
  if (!(corner_congruence(form_star.phi(), eps) == form.phi())) {
    throw Error(Errc::congruence_mismatch, "phi != (1+eps)^t phi* (1+eps)");
  }
  Matrix p = perp(Matrix::identity(eps.ring(), 1), eps);
  return mat_inverse(p) * m * p;
}

}  // namespace esp
