// Jordan normal form for small dense complex matrices.
//
//  1. Eigenvalues from the complex Schur form.
//  2. Eigenvalues are grouped: a group of k values is one eigenvalue when its
//     diameter is at most scale * cluster_eps^(1/k). Wider groups are split
//     at the radius for k-1; a group that cannot be split is ambiguous.
//  3. Per group, with M = a - mean*I, the kernel chain K_1 < K_2 < ... with
//     K_k = {x : M x in K_{k-1}} gives the Weyr characteristic, which must be
//     non-increasing and sum to the group size.
//  4. Chain tops are taken top-down from the complement of
//     K_{k-1} + M(higher chains) inside K_k; each top t of level k yields the
//     Jordan chain M^{k-1} t, ..., M t, t.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tessarine/complex_linalg.hpp"
#include "tessarine/error.hpp"

namespace tess::linalg {
namespace {

using Index = Eigen::Index;

[[noreturn]] void ambiguous(const std::string& why) {
  throw Error(ErrorKind::ClusterAmbiguity, why);
}

double diameter(const CVector& ev, const std::vector<Index>& members) {
  double d = 0.0;
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) {
      d = std::max(d, std::abs(ev(members[x]) - ev(members[y])));
    }
  }
  return d;
}

std::vector<std::vector<Index>> linked_components(const CVector& ev,
                                                  const std::vector<Index>& members,
                                                  double threshold) {
  std::vector<int> label(members.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < members.size(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < members.size(); ++y) {
        if (label[y] < 0 && std::abs(ev(members[x]) - ev(members[y])) <= threshold) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(next));
  for (std::size_t s = 0; s < members.size(); ++s) {
    out[static_cast<std::size_t>(label[s])].push_back(members[s]);
  }
  return out;
}

void split_clusters(const CVector& ev, const std::vector<Index>& members, double scale,
                    double eps, std::vector<std::vector<Index>>& out) {
  const auto k = static_cast<double>(members.size());
  if (members.size() == 1 || diameter(ev, members) <= scale * std::pow(eps, 1.0 / k)) {
    out.push_back(members);
    return;
  }
  const double finer = scale * std::pow(eps, 1.0 / (k - 1.0));
  auto parts = linked_components(ev, members, finer);
  if (parts.size() == 1) {
    ambiguous("eigenvalues chained within " + std::to_string(finer) +
              " but spread wider than one eigenvalue allows");
  }
  for (const auto& part : parts) split_clusters(ev, part, scale, eps, out);
}

CMatrix kernel_abs(const CMatrix& x, double abs_tol) {
  const Eigen::JacobiSVD<CMatrix> svd(x, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Index r = 0;
  while (r < sv.size() && sv(r) > abs_tol) ++r;
  return svd.matrixV().rightCols(x.cols() - r);
}

// Orthonormal basis of the span of `cols`, which must have full column rank.
CMatrix orthonormal_span(const CMatrix& cols, const char* what) {
  if (cols.cols() == 0) return cols;
  CMatrix normalized = cols;
  for (Index k = 0; k < normalized.cols(); ++k) {
    const double nk = normalized.col(k).norm();
    if (nk == 0.0) ambiguous(std::string(what) + ": zero chain vector");
    normalized.col(k) /= nk;
  }
  const Eigen::JacobiSVD<CMatrix> svd(normalized, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-8) ambiguous(std::string(what) + ": chains not independent");
  return svd.matrixU();
}

// Orthonormal basis of the range of a Hermitian projector by pivoted
// Cholesky: depends only on the subspace, not on how it was computed, and
// each vector is real positive at its pivot entry. Ties go to the lowest index.
std::vector<CVector> canonical_basis(CMatrix projector, Index count) {
  std::vector<CVector> out;
  for (Index step = 0; step < count; ++step) {
    const Eigen::VectorXd diag = projector.diagonal().real();
    const double top = diag.maxCoeff();
    Index pivot = 0;
    while (diag(pivot) < top * (1.0 - 1e-9)) ++pivot;
    CVector t = projector.col(pivot) / std::sqrt(diag(pivot));
    projector -= t * t.adjoint();
    out.push_back(t / t.norm());
  }
  return out;
}

struct Chain {
  std::vector<CVector> from_top;  // t, M t, M^2 t, ...
};

std::vector<Chain> build_chains(const CMatrix& a, cplx lambda, Index multiplicity, double scale,
                                const JordanOptions& opt) {
  const Index n = a.rows();
  const CMatrix m = a - lambda * CMatrix::Identity(n, n);
  const double abs_tol = std::max(opt.rank_tol * scale, opt.noise_floor);

  std::vector<CMatrix> kernels{CMatrix(n, 0)};
  while (kernels.back().cols() < multiplicity) {
    const CMatrix& q = kernels.back();
    const CMatrix projected = m - q * (q.adjoint() * m);
    CMatrix next = kernel_abs(projected, abs_tol);
    if (next.cols() <= q.cols()) break;
    kernels.push_back(std::move(next));
  }
  if (kernels.back().cols() != multiplicity) {
    ambiguous("generalized eigenspace of dimension " + std::to_string(kernels.back().cols()) +
              " for a cluster of " + std::to_string(multiplicity) + " eigenvalues");
  }

  const auto levels = static_cast<Index>(kernels.size()) - 1;
  std::vector<Index> weyr(static_cast<std::size_t>(levels + 1), 0);
  for (Index k = 1; k <= levels; ++k) {
    weyr[k] = kernels[k].cols() - kernels[k - 1].cols();
    if (k > 1 && weyr[k] > weyr[k - 1]) ambiguous("Weyr characteristic increases");
  }

  std::vector<Chain> chains;
  std::vector<CVector> carried;  // current-level vector of every chain so far
  for (Index k = levels; k >= 1; --k) {
    const Index fresh = weyr[k] - static_cast<Index>(carried.size());
    if (fresh < 0) ambiguous("more chains than kernel growth allows");
    if (fresh > 0) {
      CMatrix base(n, kernels[k - 1].cols() + static_cast<Index>(carried.size()));
      base.leftCols(kernels[k - 1].cols()) = kernels[k - 1];
      for (std::size_t c = 0; c < carried.size(); ++c) {
        base.col(kernels[k - 1].cols() + static_cast<Index>(c)) = carried[c];
      }
      const CMatrix q = orthonormal_span(base, "chain base");
      const CMatrix complement = kernels[k] - q * (q.adjoint() * kernels[k]);
      const Eigen::JacobiSVD<CMatrix> svd(complement, Eigen::ComputeThinU);
      if (svd.singularValues()(fresh - 1) <= 1e-6) ambiguous("no complement for chain tops");
      const CMatrix zb = svd.matrixU().leftCols(fresh);
      for (auto& top : canonical_basis(zb * zb.adjoint(), fresh)) {
        chains.push_back({});
        carried.push_back(std::move(top));
      }
    }
    for (std::size_t c = 0; c < chains.size(); ++c) {
      chains[c].from_top.push_back(carried[c]);
      carried[c] = m * carried[c];
    }
  }
  return chains;
}

cplx snapped(cplx x, double tol) {
  const double re = std::abs(x.real()) <= tol ? 0.0 : x.real();
  const double im = std::abs(x.imag()) <= tol ? 0.0 : x.imag();
  return {re, im};
}

}  // namespace

JordanForm jordan_decomposition(const CMatrix& a, const JordanOptions& opt) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "jordan: not square");
  const Index n = a.rows();
  JordanForm out;
  if (n == 0) return out;

  const Eigen::JacobiSVD<CMatrix> svd(a);
  const double scale = svd.singularValues()(0);
  if (scale <= opt.noise_floor || scale == 0.0) {
    out.p = out.p_inverse = CMatrix::Identity(n, n);
    out.j = CMatrix::Zero(n, n);
    out.blocks.assign(static_cast<std::size_t>(n), JordanBlock{0.0, 1});
    return out;
  }

  const Eigen::ComplexEigenSolver<CMatrix> eig(a, false);
  const CVector ev = eig.eigenvalues();
  std::vector<Index> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), Index{0});
  std::vector<std::vector<Index>> clusters;
  split_clusters(ev, all, scale, opt.cluster_eps, clusters);

  struct Piece {
    JordanBlock block;
    std::vector<CVector> columns;  // eigenvector first
  };
  std::vector<Piece> pieces;
  for (const auto& cluster : clusters) {
    cplx mean = 0.0;
    for (auto i : cluster) mean += ev(i);
    mean /= static_cast<double>(cluster.size());
    const cplx lambda = snapped(mean, std::max(opt.snap * scale, opt.noise_floor));
    for (auto& chain : build_chains(a, lambda, static_cast<Index>(cluster.size()), scale, opt)) {
      Piece piece{{lambda, static_cast<int>(chain.from_top.size())}, {}};
      piece.columns.assign(chain.from_top.rbegin(), chain.from_top.rend());
      pieces.push_back(std::move(piece));
    }
  }

  std::vector<JordanBlock> blocks;
  for (const auto& piece : pieces) blocks.push_back(piece.block);
  const auto order = canonical_permutation(blocks, opt.snap * scale);

  out.p = CMatrix(n, n);
  Index col = 0;
  for (auto k : order) {
    out.blocks.push_back(pieces[k].block);
    for (const auto& v : pieces[k].columns) out.p.col(col++) = v;
  }
  out.j = jordan_matrix(out.blocks);

  const Eigen::JacobiSVD<CMatrix> psvd(out.p);
  const auto& psv = psvd.singularValues();
  if (psv(n - 1) == 0.0 || psv(0) / psv(n - 1) > opt.max_condition) {
    ambiguous("Jordan basis is numerically singular; eigenvalues look defective");
  }
  out.p_inverse = out.p.partialPivLu().inverse();
  out.residual = max_abs(out.p * out.j * out.p_inverse - a) / max_abs(a);
  if (out.residual > opt.residual_tol) {
    throw Error(ErrorKind::VerificationFailed,
                "jordan: reconstruction residual " + std::to_string(out.residual));
  }
  return out;
}

}  // namespace tess::linalg
