#include "support.hpp"
#include "tessarine/error.hpp"

namespace tess {
namespace {

using namespace std::complex_literals;
using test::diag;
using test::eye;
using test::mat;
using test::near;

// Entry grid product computed with tessarine arithmetic only.
DCMatrix entrywise_product(const DCMatrix& m, const DCMatrix& k) {
  const Eigen::Index n = m.size();
  DCMatrix out = DCMatrix::zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index c = 0; c < n; ++c) {
      DoubleComplex acc(0.0, 0.0);
      for (Eigen::Index t = 0; t < n; ++t) acc += m.entry(i, t) * k.entry(t, c);
      out.set_entry(i, c, acc);
    }
  }
  return out;
}

TEST(DCMatrix, EntryViewTransposesSecondComponent) {
  const DCMatrix m(mat({{1, 2}, {3, 4}}), mat({{5, 6}, {7, 8}}));
  EXPECT_EQ(m.entry(0, 1), DoubleComplex(2.0, 7.0));
  EXPECT_EQ(m.entry(1, 0), DoubleComplex(3.0, 6.0));
}

TEST(DCMatrix, RejectsMismatchedComponents) {
  EXPECT_THROW(DCMatrix(eye(2), eye(3)), Error);
  EXPECT_THROW(DCMatrix(CMatrix::Zero(2, 3), CMatrix::Zero(2, 3)), Error);
  EXPECT_THROW(add(DCMatrix::identity(2), DCMatrix::identity(3)), Error);
  EXPECT_THROW(mul(DCMatrix::identity(2), DCMatrix::identity(3)), Error);
}

TEST(DCMatrix, Add) {
  EXPECT_TRUE(near(add(DCMatrix::identity(3), DCMatrix::identity(3)), DCMatrix(2.0 * eye(3), 2.0 * eye(3)), 0));
  Rng rng(1);
  const DCMatrix m = test::random_pair(3, rng);
  const DCMatrix k = test::random_pair(3, rng);
  EXPECT_TRUE(near(m + DCMatrix(-m.a(), -m.b()), DCMatrix::zero(3), 0));
  const DCMatrix s = add(m, k);
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index c = 0; c < 3; ++c) EXPECT_EQ(s.entry(i, c), add(m.entry(i, c), k.entry(i, c)));
  }
}

TEST(DCMatrix, MulReversesSecondComponent) {
  Rng rng(2);
  const DCMatrix m = test::random_pair(3, rng);
  EXPECT_TRUE(near(m * DCMatrix::identity(3), m, 0));

  const CMatrix b = mat({{0, 1}, {0, 0}});
  const CMatrix d = mat({{0, 0}, {1, 0}});
  const DCMatrix prod = mul(DCMatrix(eye(2), b), DCMatrix(eye(2), d));
  EXPECT_TRUE(near(prod.b(), mat({{0, 0}, {0, 1}}), 0));
}

TEST(DCMatrix, MulMatchesEntryGrid) {
  Rng rng(3);
  for (int n : {1, 2, 3, 5}) {
    const DCMatrix m = test::random_pair(n, rng);
    const DCMatrix k = test::random_pair(n, rng);
    EXPECT_TRUE(near(m * k, entrywise_product(m, k), 1e-12));
  }
}

TEST(DCMatrix, ScalarTimesMatrixMatchesEntries) {
  Rng rng(4);
  const DCMatrix m = test::random_pair(3, rng);
  const DoubleComplex s(1.0 + 2.0i, -0.5);
  const DCMatrix sm = s * m;
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index c = 0; c < 3; ++c) {
      EXPECT_TRUE(approx_equal(sm.entry(i, c), s * m.entry(i, c), 1e-14));
    }
  }
}

TEST(DCMatrix, Star) {
  Rng rng(5);
  const CMatrix a = gaussian_matrix(3, 3, rng);
  EXPECT_TRUE(near(star(DCMatrix(a, a)), DCMatrix(a, a), 0));
  const DCMatrix m = test::random_pair(3, rng);
  const DCMatrix k = test::random_pair(3, rng);
  EXPECT_TRUE(near(star(star(m)), m, 0));
  EXPECT_TRUE(near(star(m * k), star(k) * star(m), 1e-12));
  // Entrywise: (M*)_{ik} = conj(M_{ki}).
  const DCMatrix s = star(m);
  EXPECT_EQ(s.entry(0, 2), conj(m.entry(2, 0)));
}

TEST(DCMatrix, Associativity) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const DCMatrix x = test::random_pair(4, rng);
    const DCMatrix y = test::random_pair(4, rng);
    const DCMatrix z = test::random_pair(4, rng);
    EXPECT_TRUE(near((x * y) * z, x * (y * z), 1e-9));
  }
}

TEST(DCMatrix, Hermitian) {
  Rng rng(7);
  const CMatrix a = gaussian_matrix(3, 3, rng);
  EXPECT_TRUE(is_hermitian(DCMatrix(a, a)));
  EXPECT_FALSE(is_hermitian(DCMatrix(eye(2), 2.0 * eye(2))));
  CMatrix e = CMatrix::Zero(3, 3);
  e(1, 2) = 1.0;
  EXPECT_TRUE(is_hermitian(DCMatrix(a, a + 1e-10 * e), 1e-9));
  EXPECT_FALSE(is_hermitian(DCMatrix(a, a + 1e-8 * e), 1e-9));
}

TEST(DCMatrix, Unitary) {
  Rng rng(8);
  const CMatrix p = random_invertible(4, rng);
  EXPECT_TRUE(is_unitary(DCMatrix(p, p.inverse())));
  EXPECT_FALSE(is_unitary(DCMatrix(eye(2), 2.0 * eye(2))));
  // A complex rotation with complex angle: Q^T Q = I but Q^H Q != I.
  const cplx t = 0.7 + 0.4i;
  const CMatrix q = mat({{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}});
  EXPECT_TRUE(is_unitary(embed_complex(q)));
}

TEST(DCMatrix, HermitianUnitarySquaresToIdentity) {
  // A = A^-1: a reflection.
  const CMatrix a = mat({{0, 1}, {1, 0}});
  const DCMatrix m(a, a);
  ASSERT_TRUE(is_hermitian(m));
  ASSERT_TRUE(is_unitary(m));
  EXPECT_TRUE(near(m * m, DCMatrix::identity(2), 0));
}

TEST(DCMatrix, TriangularAndDiagonalFamilies) {
  EXPECT_TRUE(is_diagonal(DCMatrix(diag({1, 2}), diag({3, 4}))));
  EXPECT_FALSE(is_diagonal(DCMatrix(mat({{1, 1}, {0, 1}}), eye(2))));
  const CMatrix l = mat({{1, 0}, {2, 3}});
  const CMatrix u = mat({{4, 5}, {0, 6}});
  EXPECT_TRUE(is_lower_triangular(DCMatrix(l, u)));
  EXPECT_TRUE(is_upper_triangular(DCMatrix(u, l)));
  const CMatrix strict = mat({{0, 1}, {0, 0}});
  EXPECT_FALSE(is_lower_triangular(DCMatrix(strict, strict)));
  // Entrywise, [L, U] is lower triangular as a tessarine matrix.
  const DCMatrix m(l, u);
  EXPECT_EQ(m.entry(0, 1), DoubleComplex(0.0, 0.0));
}

TEST(DCMatrix, EmbedComplex) {
  EXPECT_TRUE(near(embed_complex(eye(3)), DCMatrix::identity(3), 0));
  Rng rng(9);
  const CMatrix a = gaussian_matrix(3, 3, rng);
  const CMatrix c = gaussian_matrix(3, 3, rng);
  EXPECT_TRUE(near(embed_complex(a) * embed_complex(c), embed_complex(a * c), 1e-12));
  EXPECT_TRUE(near(star(embed_complex(a)), embed_complex(a.transpose()), 0));
  EXPECT_TRUE(is_complex(embed_complex(a)));
  EXPECT_FALSE(is_complex(DCMatrix(a, a)));
  // Entries of [A, A^T] satisfy p = q: they are complex numbers.
  const DCMatrix m = embed_complex(a);
  EXPECT_EQ(m.entry(1, 2).p(), m.entry(1, 2).q());
}

TEST(DCMatrix, DirectSum) {
  const DCMatrix s = direct_sum(DCMatrix::scalar({1.0, 1.0}), DCMatrix::scalar({2.0, 2.0}));
  EXPECT_TRUE(near(s, DCMatrix(diag({1, 2}), diag({1, 2})), 0));
  Rng rng(10);
  const DCMatrix l1 = test::random_pair(2, rng), l2 = test::random_pair(2, rng);
  const DCMatrix k1 = test::random_pair(3, rng), k2 = test::random_pair(3, rng);
  const DCMatrix lhs = direct_sum(l1, k1) * direct_sum(l2, k2);
  EXPECT_EQ(lhs.size(), 5);
  EXPECT_TRUE(near(lhs, direct_sum(l1 * l2, k1 * k2), 1e-12));
}

TEST(DCMatrix, Inverse) {
  Rng rng(11);
  const DCMatrix m(random_invertible(3, rng), random_invertible(3, rng));
  EXPECT_TRUE(near(m * inverse(m), DCMatrix::identity(3), 1e-10));
  EXPECT_THROW(inverse(DCMatrix::scalar({1.0, 0.0})), Error);
}

TEST(DCMatrix, NormInf) {
  const DCMatrix m(mat({{1, -3}, {0, 2}}), mat({{0, 0}, {4.0i, 0}}));
  EXPECT_DOUBLE_EQ(m.norm_inf(), 4.0);
}

}  // namespace
}  // namespace tess
