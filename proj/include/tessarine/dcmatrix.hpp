#pragma once

#include <Eigen/Dense>
#include <iosfwd>

#include "tessarine/dcnum.hpp"

namespace tess {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Default comparison tolerance for the structural predicates.
inline constexpr double kDefaultTol = 1e-9;

/// Entrywise max modulus; zero for an empty matrix.
double max_abs(const CMatrix& m);

/// A square double-complex matrix written as the bracket pair [A, B], meaning
/// A(1+j)/2 + B^T(1-j)/2.
///
/// The components are kept in bracket order, so the pair calculus holds
/// verbatim:
///   [A,B] + [C,D] = [A+C, B+D]
///   [A,B] [C,D]   = [AC, DB]
///   [A,B]*        = [B, A]
/// Entry (i, k) viewed as a tessarine is (A(i,k), B(k,i)).
class DCMatrix {
 public:
  DCMatrix() = default;
  /// Throws DimensionMismatch unless a and b are square of equal size.
  DCMatrix(CMatrix a, CMatrix b);

  static DCMatrix identity(Eigen::Index n);
  static DCMatrix zero(Eigen::Index n);
  /// 1x1 pair [p, q] (the tessarine p e + q e*).
  static DCMatrix scalar(const DoubleComplex& x);

  Eigen::Index size() const { return a_.rows(); }
  const CMatrix& a() const { return a_; }
  const CMatrix& b() const { return b_; }

  DoubleComplex entry(Eigen::Index i, Eigen::Index k) const { return {a_(i, k), b_(k, i)}; }
  void set_entry(Eigen::Index i, Eigen::Index k, const DoubleComplex& x);

  DCMatrix& operator+=(const DCMatrix& o);
  DCMatrix& operator-=(const DCMatrix& o);

  friend DCMatrix operator+(DCMatrix m, const DCMatrix& k) { return m += k; }
  friend DCMatrix operator-(DCMatrix m, const DCMatrix& k) { return m -= k; }
  friend DCMatrix operator*(const DCMatrix& m, const DCMatrix& k);
  friend DCMatrix operator*(const DoubleComplex& s, const DCMatrix& m);

  /// Entrywise max modulus over both components.
  double norm_inf() const;

 private:
  CMatrix a_;
  CMatrix b_;
};

DCMatrix add(const DCMatrix& m, const DCMatrix& k);
DCMatrix mul(const DCMatrix& m, const DCMatrix& k);
DCMatrix star(const DCMatrix& m);

/// ||m - k||_inf; throws DimensionMismatch on differing sizes.
double distance(const DCMatrix& m, const DCMatrix& k);

bool is_hermitian(const DCMatrix& m, double tol = kDefaultTol);
bool is_unitary(const DCMatrix& m, double tol = kDefaultTol);
bool is_diagonal(const DCMatrix& m, double tol = kDefaultTol);
/// [L, U] with L lower and U upper triangular.
bool is_lower_triangular(const DCMatrix& m, double tol = kDefaultTol);
/// [U, L] with U upper and L lower triangular.
bool is_upper_triangular(const DCMatrix& m, double tol = kDefaultTol);
/// Of the form [A, A^T].
bool is_complex(const DCMatrix& m, double tol = kDefaultTol);

/// [A, A^T]: the complex matrix A seen as a double-complex one.
DCMatrix embed_complex(const CMatrix& a);

/// Block-diagonal concatenation in both components.
DCMatrix direct_sum(const DCMatrix& m, const DCMatrix& k);

/// [A^{-1}, B^{-1}]; throws SingularComponent when either component is singular.
DCMatrix inverse(const DCMatrix& m);

std::ostream& operator<<(std::ostream& os, const DCMatrix& m);

}  // namespace tess
