#include "support.hpp"
#include "tessarine/error.hpp"
#include "tessarine/orthonormal.hpp"

namespace tess {
namespace {

using namespace std::complex_literals;
using test::near;

// (1, j)^T: entries 1 = (1, 1) and j = (1, -1).
DCVector one_j() {
  const std::vector<DoubleComplex> entries{DoubleComplex::one(), DoubleComplex::j()};
  return DCVector(entries);
}

DoubleComplex entrywise_inner(const DCVector& x, const DCVector& y) {
  DoubleComplex acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < x.dim(); ++i) acc += conj(x.entry(i)) * y.entry(i);
  return acc;
}

TEST(InnerProduct, ZeroNormWitness) {
  const DCVector w = one_j();
  EXPECT_EQ(inner_product(w, w), DoubleComplex(0.0, 0.0));
  EXPECT_TRUE(has_zero_norm(w));
  EXPECT_GT(w.norm_inf(), 0.0);
}

TEST(InnerProduct, StandardBasis) {
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index k = 0; k < 3; ++k) {
      const auto ip = inner_product(DCVector::basis(3, i), DCVector::basis(3, k));
      EXPECT_EQ(ip, i == k ? DoubleComplex::one() : DoubleComplex(0.0, 0.0));
    }
  }
}

TEST(InnerProduct, MatchesEntrywiseDefinition) {
  Rng rng(1);
  for (int d : {1, 2, 5, 9}) {
    const auto x = DCVector::random(d, rng);
    const auto y = DCVector::random(d, rng);
    EXPECT_TRUE(approx_equal(inner_product(x, y), entrywise_inner(x, y), 1e-12));
    EXPECT_TRUE(approx_equal(inner_product(y, x), conj(inner_product(x, y)), 1e-12));
  }
  EXPECT_THROW(inner_product(DCVector::zero(2), DCVector::zero(3)), Error);
}

TEST(GramSchmidt, Examples) {
  const DCVector e1 = DCVector::basis(3, 0), e2 = DCVector::basis(3, 1);
  const std::vector<DCVector> s{e1};
  EXPECT_TRUE(near(gram_schmidt_step(e2, s).u(), e2.u(), 0));
  const DCVector w = gram_schmidt_step(e1 + e2, s);
  EXPECT_TRUE(near(w.u(), e2.u(), 0));
  EXPECT_TRUE(near(w.v(), e2.v(), 0));
}

TEST(GramSchmidt, OrthogonalAndIdempotent) {
  Rng rng(2);
  const auto ext = extend_orthonormal({}, 5, rng);
  const std::vector<DCVector> s(ext.basis.begin(), ext.basis.begin() + 3);
  for (int t = 0; t < 20; ++t) {
    const auto w = DCVector::random(5, rng);
    const auto w1 = gram_schmidt_step(w, s);
    for (const auto& v : s) EXPECT_LE(distance(inner_product(v, w1), {0.0, 0.0}), 1e-9);
    const auto w2 = gram_schmidt_step(w1, s);
    EXPECT_LE((w2 - w1).norm_inf(), 1e-9);
  }
}

TEST(Normalize, Examples) {
  const DCVector e1 = DCVector::basis(3, 0);
  const DCVector n = normalize(DoubleComplex(2.0, 2.0) * e1);
  EXPECT_TRUE(near(n.u(), e1.u(), 1e-15));
  EXPECT_TRUE(near(n.v(), e1.v(), 1e-15));
  try {
    normalize(one_j());
    FAIL() << "expected ZeroNorm";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroNorm);
  }
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto w = normalize(DCVector::random(4, rng));
    EXPECT_TRUE(approx_equal(inner_product(w, w), DoubleComplex::one(), 1e-9));
  }
}

TEST(Extend, FromEmpty) {
  Rng rng(4);
  const auto ext = extend_orthonormal({}, 2, rng);
  ASSERT_EQ(ext.basis.size(), 2u);
  EXPECT_TRUE(is_orthonormal(ext.basis));
}

TEST(Extend, KeepsGivenVectorsFirst) {
  Rng rng(5);
  const std::vector<DCVector> s{DCVector::basis(3, 0)};
  const auto ext = extend_orthonormal(s, 3, rng);
  ASSERT_EQ(ext.basis.size(), 3u);
  EXPECT_TRUE(near(ext.basis[0].u(), s[0].u(), 0));
  EXPECT_TRUE(is_orthonormal(ext.basis, 1e-8));
  EXPECT_TRUE(is_unitary(from_columns(ext.basis), 1e-8));
}

TEST(Extend, RejectsZeroNormInput) {
  Rng rng(6);
  // Whatever scaling, (1, j)^T has zero norm, so no orthonormal set holds it.
  const std::vector<DCVector> s{DoubleComplex(0.5, 0.5) * one_j()};
  try {
    extend_orthonormal(s, 2, rng);
    FAIL() << "expected PreconditionFailed";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
  }
  EXPECT_THROW(extend_orthonormal(std::vector<DCVector>(3, DCVector::basis(2, 0)), 2, rng), Error);
}

TEST(Extend, RetryBoundSurfaces) {
  // With zero_norm_tol huge every draw counts as zero-norm.
  Rng rng(7);
  ExtensionOptions opts;
  opts.zero_norm_tol = 1e9;
  opts.max_retries = 3;
  try {
    extend_orthonormal({}, 2, rng, opts);
    FAIL() << "expected RetryExhausted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RetryExhausted);
  }
}

TEST(Columns, RoundTrip) {
  Rng rng(8);
  const DCMatrix m = test::random_pair(4, rng);
  std::vector<DCVector> cols;
  for (Eigen::Index k = 0; k < 4; ++k) cols.push_back(column(m, k));
  EXPECT_TRUE(near(from_columns(cols), m, 0));
  // Column k holds the entries m(i, k).
  EXPECT_EQ(cols[2].entry(1), m.entry(1, 2));
}

TEST(Columns, UnitaryMeansOrthonormalColumns) {
  Rng rng(9);
  const CMatrix p = random_invertible(3, rng);
  const DCMatrix u(p, p.inverse());
  std::vector<DCVector> cols;
  for (Eigen::Index k = 0; k < 3; ++k) cols.push_back(column(u, k));
  EXPECT_TRUE(is_orthonormal(cols, 1e-10));
}

}  // namespace
}  // namespace tess
