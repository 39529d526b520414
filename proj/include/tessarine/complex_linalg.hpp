#pragma once

// Complex-matrix kernels needed by the double-complex decompositions: rank
// and subspaces, a clustered Jordan normal form, the half-plane matrix square
// root, and the complex Moore-Penrose pseudoinverse.
//
// Everything here is desk-scale (n <= 8). The Jordan form is numerically
// ill-posed in general; the clustering contract below is what makes it
// well-defined, and every failure of that contract is an error.

#include <vector>

#include "tessarine/dcmatrix.hpp"

namespace tess::linalg {

struct JordanBlock {
  cplx eigenvalue;
  int size = 1;

  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// a = p * j * p^{-1}, with j block diagonal and blocks in canonical order:
/// eigenvalue ascending by (re, im), then size descending.
struct JordanForm {
  CMatrix p;
  CMatrix p_inverse;
  CMatrix j;
  std::vector<JordanBlock> blocks;
  /// ||p j p^{-1} - a||_inf / ||a||_inf.
  double residual = 0.0;

  Eigen::Index size() const { return j.rows(); }
  /// First column of every block.
  std::vector<Eigen::Index> block_offsets() const;
};

/// Orthonormal columns spanning a subspace of C^n.
struct SubspaceBasis {
  CMatrix vectors;

  Eigen::Index dim() const { return vectors.cols(); }
  Eigen::Index ambient() const { return vectors.rows(); }
};

struct JordanOptions {
  /// A group of k numerically computed eigenvalues is accepted as a single
  /// eigenvalue when its diameter is at most scale * cluster_eps^(1/k). For
  /// pairs this is 1e-6 * scale; a defective block of size k smears its
  /// eigenvalue by roughly eps^(1/k), hence the root.
  double cluster_eps = 1e-12;
  /// Singular values <= rank_tol * scale count as zero in the kernel chains.
  double rank_tol = 1e-9;
  /// Real and imaginary parts of eigenvalues below snap * scale become 0.
  double snap = 1e-10;
  /// Maximum accepted ||p j p^{-1} - a|| / ||a||.
  double residual_tol = 1e-6;
  /// Eigenvector matrices worse conditioned than this mean the clustering
  /// split a defective eigenvalue.
  double max_condition = 1e9;
  /// Absolute rounding level of the input. Singular values and eigenvalue
  /// parts below it are zero, and an input whose norm is below it is the zero
  /// matrix. Products such as AB pass a multiple of ||A|| ||B||.
  double noise_floor = 0.0;
};

/// Number of singular values above max(tol * sigma_max, noise_floor); rank(0) = 0.
Eigen::Index rank(const CMatrix& a, double tol = kDefaultTol, double noise_floor = 0.0);

/// Largest singular value.
double spectral_norm(const CMatrix& a);

SubspaceBasis null_space(const CMatrix& a, double tol = kDefaultTol);
SubspaceBasis column_space(const CMatrix& a, double tol = kDefaultTol);

/// ||(I - Q Q^H) x|| <= tol * max(1, ||x||).
bool contains(const SubspaceBasis& s, const CVector& x, double tol = 1e-8);
/// Mutual containment.
bool same_subspace(const SubspaceBasis& s, const SubspaceBasis& t, double tol = 1e-8);

/// Inverse via partial-pivot LU; throws SingularComponent when a is singular
/// at rank tolerance `tol`.
CMatrix invert(const CMatrix& a, double tol = kDefaultTol);

/// Throws ClusterAmbiguity when eigenvalues cannot be grouped unambiguously
/// or the Jordan chains are inconsistent with the grouping, and
/// VerificationFailed when the reconstruction residual exceeds
/// options.residual_tol.
JordanForm jordan_decomposition(const CMatrix& a, const JordanOptions& options = {});

/// True iff the canonical block multisets of a and b match, eigenvalues
/// compared at tol * max(||a||, ||b||).
bool similar(const CMatrix& a, const CMatrix& b, double tol = 1e-6,
             const JordanOptions& options = {});

/// Matches block multisets (sizes equal, eigenvalues within abs_tol).
bool same_blocks(const std::vector<JordanBlock>& x, const std::vector<JordanBlock>& y,
                 double abs_tol);

/// Some block has eigenvalue exactly zero and size >= 2.
bool has_nontrivial_nilpotent(const std::vector<JordanBlock>& blocks);

/// Square-root solvability from the nilpotent block sizes: sorted descending,
/// consecutive pairs (s1, s2), (s3, s4), ... (padded with 0) must differ by at
/// most one.
bool nilpotent_sizes_admit_root(std::vector<int> sizes);
bool has_square_root(const CMatrix& a, const JordanOptions& options = {});

struct SqrtOptions {
  JordanOptions jordan;
  /// Maximum accepted ||r^2 - a|| / ||a||.
  double verify_tol = 1e-8;
};

/// The square root of a through its Jordan form: each invertible block
/// lambda I + N maps to sqrt(lambda) (I + N/lambda)^{1/2} via the terminating
/// binomial series, on the half-plane branch; 1x1 zero blocks map to zero.
/// Throws NilpotentBlock for nilpotent blocks of size >= 2.
CMatrix sqrt_via_jordan(const CMatrix& a, const SqrtOptions& options = {});

/// General complex Moore-Penrose pseudoinverse from the SVD; singular values
/// below tol * sigma_max are treated as zero.
CMatrix pinv_complex(const CMatrix& a, double tol = kDefaultTol);

/// j^+ for a Jordan matrix whose blocks are all invertible or 1x1 zero,
/// computed blockwise. Throws NilpotentBlock otherwise.
CMatrix jordan_pinv(const std::vector<JordanBlock>& blocks);

/// Builds the Jordan matrix for a block list.
CMatrix jordan_matrix(const std::vector<JordanBlock>& blocks);

/// Canonical ordering of block lists: eigenvalue by (re, im), then size
/// descending. Real parts within tie_tol of their neighbour compare equal.
std::vector<std::size_t> canonical_permutation(const std::vector<JordanBlock>& blocks,
                                               double tie_tol = 0.0);
std::vector<JordanBlock> canonical_order(const std::vector<JordanBlock>& blocks,
                                         double tie_tol = 0.0);

}  // namespace tess::linalg
