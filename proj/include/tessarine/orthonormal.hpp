#pragma once

// Double-complex vectors and the swap-involution inner product
//   <x, y> = x* y = sum_i conj(x_i) y_i.
// The form is not definite: (1, j)^T is nonzero with <w, w> = 0. Orthonormal
// extension therefore draws random vectors and retries on zero norm.

#include <span>
#include <vector>

#include "tessarine/dcmatrix.hpp"
#include "tessarine/random.hpp"

namespace tess {

/// Column of tessarines; entry i is (u(i), v(i)) in idempotent coordinates.
class DCVector {
 public:
  DCVector() = default;
  DCVector(CVector u, CVector v);
  explicit DCVector(std::span<const DoubleComplex> entries);

  /// i-th standard basis vector of length d.
  static DCVector basis(Eigen::Index d, Eigen::Index i);
  static DCVector zero(Eigen::Index d);
  /// Full-support draw: every complex component i.i.d. standard normal.
  static DCVector random(Eigen::Index d, Rng& rng);

  Eigen::Index dim() const { return u_.size(); }
  const CVector& u() const { return u_; }
  const CVector& v() const { return v_; }
  CVector& u() { return u_; }
  CVector& v() { return v_; }
  DoubleComplex entry(Eigen::Index i) const { return {u_(i), v_(i)}; }

  DCVector& operator+=(const DCVector& o);
  DCVector& operator-=(const DCVector& o);
  friend DCVector operator+(DCVector x, const DCVector& y) { return x += y; }
  friend DCVector operator-(DCVector x, const DCVector& y) { return x -= y; }
  friend DCVector operator*(const DoubleComplex& s, const DCVector& x);

  double norm_inf() const;

 private:
  CVector u_;
  CVector v_;
};

DoubleComplex inner_product(const DCVector& x, const DCVector& y);

/// w - sum_{v in s} <v, w> v.
DCVector gram_schmidt_step(const DCVector& w, std::span<const DCVector> s);

/// <w, w> vanishes at tolerance: |sum u_i v_i| <= tol * ||u|| ||v||.
bool has_zero_norm(const DCVector& w, double tol = 1e-9);

/// w / sqrt(<w, w>) on the half-plane branch. Throws ZeroNorm.
DCVector normalize(const DCVector& w, double tol = 1e-9);

/// Pairwise <u_i, u_j> = delta_ij within tol.
bool is_orthonormal(std::span<const DCVector> s, double tol = 1e-8);

/// Column k of m as a vector: u = A(:, k), v = B(k, :)^T.
DCVector column(const DCMatrix& m, Eigen::Index k);
DCMatrix from_columns(std::span<const DCVector> cols);

struct ExtensionOptions {
  int max_retries = 16;
  double zero_norm_tol = 1e-9;
  /// Admissibility check on the input set.
  double orthonormal_tol = 1e-8;
  /// Gram-Schmidt sweeps per draw; the second pass removes rounding drift.
  int passes = 2;
};

struct Extension {
  std::vector<DCVector> basis;
  int draws = 0;
  /// Draws rejected for zero norm.
  int rejected = 0;
};

/// Extends s to an orthonormal basis of length d:
///   1. draw w at random with full support,
///   2. w' = w - sum <v, w> v over the current set,
///   3. if <w', w'> vanishes, go back to 1,
///   4. normalize w' and append.
/// Throws PreconditionFailed if s is not orthonormal or too large, and
/// RetryExhausted after max_retries consecutive zero-norm draws.
Extension extend_orthonormal(std::span<const DCVector> s, Eigen::Index d, Rng& rng,
                             const ExtensionOptions& options = {});

}  // namespace tess
