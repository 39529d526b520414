#include <algorithm>
#include <cmath>

#include "tessarine/complex_linalg.hpp"
#include "tessarine/error.hpp"

namespace tess::linalg {
namespace {

Eigen::Index count_above(const Eigen::VectorXd& sv, double tol, double noise_floor = 0.0) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = std::max(tol * sv(0), noise_floor);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return r;
}

}  // namespace

Eigen::Index rank(const CMatrix& a, double tol, double noise_floor) {
  if (a.size() == 0) return 0;
  const Eigen::JacobiSVD<CMatrix> svd(a);
  return count_above(svd.singularValues(), tol, noise_floor);
}

double spectral_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<CMatrix>(a).singularValues()(0);
}

SubspaceBasis null_space(const CMatrix& a, double tol) {
  const Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const Eigen::Index r = count_above(svd.singularValues(), tol);
  return {svd.matrixV().rightCols(a.cols() - r)};
}

SubspaceBasis column_space(const CMatrix& a, double tol) {
  const Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU);
  const Eigen::Index r = count_above(svd.singularValues(), tol);
  return {svd.matrixU().leftCols(r)};
}

bool contains(const SubspaceBasis& s, const CVector& x, double tol) {
  const CVector residual = x - s.vectors * (s.vectors.adjoint() * x);
  return residual.norm() <= tol * std::max(1.0, x.norm());
}

bool same_subspace(const SubspaceBasis& s, const SubspaceBasis& t, double tol) {
  if (s.ambient() != t.ambient()) return false;
  for (Eigen::Index k = 0; k < s.dim(); ++k) {
    if (!contains(t, s.vectors.col(k), tol)) return false;
  }
  for (Eigen::Index k = 0; k < t.dim(); ++k) {
    if (!contains(s, t.vectors.col(k), tol)) return false;
  }
  return true;
}

CMatrix invert(const CMatrix& a, double tol) {
  if (rank(a, tol) < a.rows()) {
    throw Error(ErrorKind::SingularComponent, "invert: matrix is singular at rank tolerance");
  }
  return a.partialPivLu().inverse();
}

bool same_blocks(const std::vector<JordanBlock>& x, const std::vector<JordanBlock>& y,
                 double abs_tol) {
  if (x.size() != y.size()) return false;
  std::vector<bool> used(y.size(), false);
  for (const auto& bx : x) {
    bool matched = false;
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (!used[k] && y[k].size == bx.size && std::abs(y[k].eigenvalue - bx.eigenvalue) <= abs_tol) {
        used[k] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool similar(const CMatrix& a, const CMatrix& b, double tol, const JordanOptions& options) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "similar: sizes differ");
  }
  const JordanForm ja = jordan_decomposition(a, options);
  const JordanForm jb = jordan_decomposition(b, options);
  const double scale = std::max({max_abs(a), max_abs(b), 1e-300});
  return same_blocks(ja.blocks, jb.blocks, tol * scale);
}

bool has_nontrivial_nilpotent(const std::vector<JordanBlock>& blocks) {
  return std::any_of(blocks.begin(), blocks.end(), [](const JordanBlock& b) {
    return b.eigenvalue == cplx(0.0) && b.size >= 2;
  });
}

bool nilpotent_sizes_admit_root(std::vector<int> sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  if (sizes.size() % 2 == 1) sizes.push_back(0);
  for (std::size_t k = 0; k < sizes.size(); k += 2) {
    if (sizes[k] - sizes[k + 1] > 1) return false;
  }
  return true;
}

bool has_square_root(const CMatrix& a, const JordanOptions& options) {
  const JordanForm jf = jordan_decomposition(a, options);
  std::vector<int> nilpotent;
  for (const auto& b : jf.blocks) {
    if (b.eigenvalue == cplx(0.0)) nilpotent.push_back(b.size);
  }
  return nilpotent_sizes_admit_root(std::move(nilpotent));
}

CMatrix jordan_matrix(const std::vector<JordanBlock>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.size;
  CMatrix j = CMatrix::Zero(n, n);
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size; ++i) {
      j(offset + i, offset + i) = b.eigenvalue;
      if (i + 1 < b.size) j(offset + i, offset + i + 1) = 1.0;
    }
    offset += b.size;
  }
  return j;
}

CMatrix sqrt_via_jordan(const CMatrix& a, const SqrtOptions& options) {
  const JordanForm jf = jordan_decomposition(a, options.jordan);
  const auto n = jf.size();
  CMatrix root_j = CMatrix::Zero(n, n);
  Eigen::Index offset = 0;
  for (const auto& b : jf.blocks) {
    if (b.eigenvalue == cplx(0.0)) {
      if (b.size >= 2) {
        throw Error(ErrorKind::NilpotentBlock,
                    "sqrt: nilpotent Jordan block of size " + std::to_string(b.size));
      }
      offset += 1;
      continue;
    }
    // sqrt(lambda + N) = sum_k binom(1/2, k) lambda^{1/2 - k} N^k, finite since N^size = 0.
    const cplx root = sqrt_halfplane(b.eigenvalue, options.jordan.snap);
    cplx coeff = root;
    double binom = 1.0;
    for (int k = 0; k < b.size; ++k) {
      for (int i = 0; i + k < b.size; ++i) {
        root_j(offset + i, offset + i + k) = coeff;
      }
      binom *= (0.5 - k) / (k + 1.0);
      coeff = binom * root / std::pow(b.eigenvalue, k + 1);
    }
    offset += b.size;
  }
  CMatrix r = jf.p * root_j * jf.p_inverse;
  const double scale = std::max(max_abs(a), 1e-300);
  if (max_abs(r * r - a) > options.verify_tol * scale) {
    throw Error(ErrorKind::VerificationFailed, "sqrt: r^2 does not reproduce the input");
  }
  return r;
}

CMatrix pinv_complex(const CMatrix& a, double tol) {
  const Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Eigen::Index r = count_above(sv, tol);
  CMatrix out = CMatrix::Zero(a.cols(), a.rows());
  for (Eigen::Index k = 0; k < r; ++k) {
    out += svd.matrixV().col(k) * (1.0 / sv(k)) * svd.matrixU().col(k).adjoint();
  }
  return out;
}

CMatrix jordan_pinv(const std::vector<JordanBlock>& blocks) {
  CMatrix j = jordan_matrix(blocks);
  CMatrix out = CMatrix::Zero(j.rows(), j.cols());
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    if (b.eigenvalue == cplx(0.0)) {
      if (b.size >= 2) {
        throw Error(ErrorKind::NilpotentBlock, "jordan_pinv: non-trivially nilpotent block");
      }
      offset += 1;
      continue;
    }
    // (lambda I + N)^{-1} = sum_k (-1)^k N^k / lambda^{k+1}.
    cplx coeff = 1.0 / b.eigenvalue;
    for (int k = 0; k < b.size; ++k) {
      for (int i = 0; i + k < b.size; ++i) {
        out(offset + i, offset + i + k) = coeff;
      }
      coeff *= -1.0 / b.eigenvalue;
    }
    offset += b.size;
  }
  return out;
}

std::vector<std::size_t> canonical_permutation(const std::vector<JordanBlock>& blocks,
                                               double tie_tol) {
  // Real parts within tie_tol of their neighbour share a group, so the order
  // does not depend on rounding noise in otherwise equal real parts.
  std::vector<std::size_t> by_re(blocks.size());
  for (std::size_t k = 0; k < by_re.size(); ++k) by_re[k] = k;
  std::sort(by_re.begin(), by_re.end(), [&](std::size_t x, std::size_t y) {
    return blocks[x].eigenvalue.real() < blocks[y].eigenvalue.real();
  });
  std::vector<std::size_t> group(blocks.size(), 0);
  for (std::size_t k = 1; k < by_re.size(); ++k) {
    const double gap =
        blocks[by_re[k]].eigenvalue.real() - blocks[by_re[k - 1]].eigenvalue.real();
    group[by_re[k]] = group[by_re[k - 1]] + (gap > tie_tol ? 1 : 0);
  }
  std::vector<std::size_t> order = by_re;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (group[x] != group[y]) return group[x] < group[y];
    if (blocks[x].eigenvalue.imag() != blocks[y].eigenvalue.imag()) {
      return blocks[x].eigenvalue.imag() < blocks[y].eigenvalue.imag();
    }
    return blocks[x].size > blocks[y].size;
  });
  return order;
}

std::vector<JordanBlock> canonical_order(const std::vector<JordanBlock>& blocks,
                                         double tie_tol) {
  std::vector<JordanBlock> out;
  out.reserve(blocks.size());
  for (auto k : canonical_permutation(blocks, tie_tol)) out.push_back(blocks[k]);
  return out;
}

std::vector<Eigen::Index> JordanForm::block_offsets() const {
  std::vector<Eigen::Index> offsets;
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    offsets.push_back(offset);
    offset += b.size;
  }
  return offsets;
}

}  // namespace tess::linalg
