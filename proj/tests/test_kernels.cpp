#include <gtest/gtest.h>

#include <vector>

#include "tessarine/dcnum.hpp"
#include "tessarine/kernels.hpp"
#include "tessarine/random.hpp"

namespace tess {
namespace {

std::vector<cplx> draw(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<cplx> out(n);
  for (auto& x : out) x = {normal(rng), normal(rng)};
  return out;
}

double err(cplx x, cplx y) { return std::abs(x - y); }

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    simd_ = kernels::avx2_table();
    if (simd_ == nullptr) GTEST_SKIP() << "no AVX2 variant on this machine";
  }
  const kernels::KernelTable& ref_ = kernels::scalar_table();
  const kernels::KernelTable* simd_ = nullptr;
};

TEST_F(KernelEquivalence, Dotu) {
  Rng rng(1);
  for (std::size_t n = 0; n <= 37; ++n) {
    const auto x = draw(n, rng), y = draw(n, rng);
    const cplx a = ref_.dotu(x.data(), y.data(), n);
    const cplx b = simd_->dotu(x.data(), y.data(), n);
    EXPECT_LE(err(a, b), 1e-13 * (1.0 + n)) << "n=" << n;
  }
}

TEST_F(KernelEquivalence, Axpy) {
  Rng rng(2);
  const cplx alpha(0.3, -1.7);
  for (std::size_t n = 0; n <= 37; ++n) {
    const auto x = draw(n, rng);
    auto y1 = draw(n, rng);
    auto y2 = y1;
    ref_.axpy(alpha, x.data(), y1.data(), n);
    simd_->axpy(alpha, x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_LE(err(y1[i], y2[i]), 1e-14) << n << ":" << i;
  }
}

TEST_F(KernelEquivalence, Scale) {
  Rng rng(3);
  const cplx alpha(-2.5, 0.25);
  for (std::size_t n = 0; n <= 37; ++n) {
    auto x1 = draw(n, rng);
    auto x2 = x1;
    ref_.scale(alpha, x1.data(), n);
    simd_->scale(alpha, x2.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_LE(err(x1[i], x2[i]), 1e-14) << n << ":" << i;
  }
}

TEST_F(KernelEquivalence, TessarineMulAndConj) {
  Rng rng(4);
  for (std::size_t n = 0; n <= 37; ++n) {
    const auto pa = draw(2 * n, rng), pb = draw(2 * n, rng);
    std::vector<DoubleComplex> a(n), b(n), o1(n), o2(n), c1(n), c2(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = {pa[2 * i], pa[2 * i + 1]};
      b[i] = {pb[2 * i], pb[2 * i + 1]};
    }
    ref_.tessarine_mul(a.data(), b.data(), o1.data(), n);
    simd_->tessarine_mul(a.data(), b.data(), o2.data(), n);
    ref_.tessarine_conj(a.data(), c1.data(), n);
    simd_->tessarine_conj(a.data(), c2.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_LE(distance(o1[i], o2[i]), 1e-14) << n << ":" << i;
      EXPECT_EQ(c1[i], c2[i]);
    }
  }
}

TEST(KernelReference, MatchesDefinitions) {
  const auto& k = kernels::scalar_table();
  const std::vector<cplx> x{{1, 2}, {3, -1}, {0, 1}};
  const std::vector<cplx> y{{2, 0}, {1, 1}, {-1, 0}};
  // (1+2i)2 + (3-i)(1+i) + i(-1) = 2+4i + 4+2i - i
  EXPECT_EQ(k.dotu(x.data(), y.data(), 3), cplx(6, 5));
  std::vector<cplx> z = y;
  k.axpy({0, 1}, x.data(), z.data(), 3);
  EXPECT_EQ(z[0], cplx(0, 1));
  EXPECT_EQ(k.dotu(x.data(), y.data(), 0), cplx(0, 0));
}

TEST(KernelDispatch, ActiveIsAKnownTable) {
  const auto& active = kernels::active();
  EXPECT_TRUE(active.name == "scalar" || active.name == "avx2");
}

}  // namespace
}  // namespace tess
