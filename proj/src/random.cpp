#include "tessarine/random.hpp"

namespace tess {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix m(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(r, c) = {re, im};
    }
  }
  return m;
}

CVector gaussian_vector(Eigen::Index n, Rng& rng) { return gaussian_matrix(n, 1, rng).col(0); }

CMatrix random_invertible(Eigen::Index n, Rng& rng, double max_condition) {
  if (n == 0) return CMatrix(0, 0);
  for (;;) {
    CMatrix m = gaussian_matrix(n, n, rng);
    const Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv(n - 1) > 0.0 && sv(0) / sv(n - 1) <= max_condition) {
      return m / std::sqrt(sv(0) * sv(n - 1));
    }
  }
}

}  // namespace tess
