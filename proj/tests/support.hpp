#pragma once

#include <gtest/gtest.h>

#include "tessarine/dcmatrix.hpp"
#include "tessarine/random.hpp"

namespace tess::test {

inline CMatrix mat(std::initializer_list<std::initializer_list<cplx>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = static_cast<Eigen::Index>(rows.begin()->size());
  CMatrix out(n, m);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index k = 0;
    for (const auto& x : row) out(i, k++) = x;
    ++i;
  }
  return out;
}

inline CMatrix diag(std::initializer_list<cplx> d) {
  CMatrix out = CMatrix::Zero(d.size(), d.size());
  Eigen::Index i = 0;
  for (const auto& x : d) {
    out(i, i) = x;
    ++i;
  }
  return out;
}

inline CMatrix eye(Eigen::Index n) { return CMatrix::Identity(n, n); }

inline DCMatrix random_pair(Eigen::Index n, Rng& rng) {
  return DCMatrix(gaussian_matrix(n, n, rng), gaussian_matrix(n, n, rng));
}

inline ::testing::AssertionResult near(const CMatrix& x, const CMatrix& y, double tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    return ::testing::AssertionFailure() << "shape " << x.rows() << "x" << x.cols() << " vs "
                                         << y.rows() << "x" << y.cols();
  }
  const double err = x.size() == 0 ? 0.0 : max_abs(x - y);
  if (err <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max |x - y| = " << err << " > " << tol << "\n"
                                       << x << "\nvs\n" << y;
}

inline ::testing::AssertionResult near(const DCMatrix& x, const DCMatrix& y, double tol) {
  auto a = near(x.a(), y.a(), tol);
  if (!a) return a << " (first component)";
  auto b = near(x.b(), y.b(), tol);
  if (!b) return b << " (second component)";
  return ::testing::AssertionSuccess();
}

}  // namespace tess::test
