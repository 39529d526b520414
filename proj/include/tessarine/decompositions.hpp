#pragma once

// Decompositions of square double-complex matrices M = [A, B]:
//  - the naive double-complex SVD, M = [P, P^-1][D, D][Q, Q^-1]*,
//  - the Jordan SVD, M = U [J, J] V* with U, V unitary,
//  - polar decomposition M = U P and its conversion back to a Jordan SVD,
//  - the Moore-Penrose pseudoinverse, built two independent ways,
//  - existence tests.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "tessarine/complex_linalg.hpp"
#include "tessarine/orthonormal.hpp"

namespace tess {

struct DecompositionOptions {
  /// Relative singular-value cutoff for every rank decision.
  double rank_tol = 1e-9;
  /// Maximum accepted ||M - product of factors||_inf / ||M||_inf.
  double recon_tol = 1e-7;
  /// A column of U' = M V S^+ is zero when its max entry is below this
  /// fraction of ||U'||_inf.
  double zero_column_tol = 1e-9;
  /// Maximum accepted normalized Penrose residual for pinv outputs.
  double penrose_tol = 1e-8;
  linalg::JordanOptions jordan;
  ExtensionOptions extension{.max_retries = 16,
                             .zero_norm_tol = 1e-9,
                             .orthonormal_tol = 1e-6,
                             .passes = 2};
};

struct RankProfile {
  Eigen::Index rank_a = 0;
  Eigen::Index rank_b = 0;
  Eigen::Index rank_ab = 0;
  Eigen::Index rank_ba = 0;

  /// rank(AB) = rank(A) = rank(B) = rank(BA).
  bool pinv_exists() const {
    return rank_ab == rank_a && rank_a == rank_b && rank_b == rank_ba;
  }
};

/// 1e-12 ||A||_2 ||B||_2: the level below which AB and BA are rounding noise.
double product_noise_floor(const DCMatrix& m);

RankProfile rank_profile(const DCMatrix& m, double tol = kDefaultTol);
bool pinv_exists(const DCMatrix& m, double tol = kDefaultTol);

/// Kernel of M = [A, B] acting on columns (u, v) -> (A u, B^T v): the pair
/// ker(A), ker(B^T) in idempotent coordinates.
struct DCSubspace {
  linalg::SubspaceBasis e;
  linalg::SubspaceBasis e_star;
};

DCSubspace kernel(const DCMatrix& m, double tol = kDefaultTol);
bool same_subspace(const DCSubspace& x, const DCSubspace& y, double tol = 1e-8);

enum class JsvdStatus { Exists, NotExists, Unknown };
std::string_view to_string(JsvdStatus status);

struct JordanSVD;

struct ExistenceReport {
  RankProfile ranks;
  bool pinv_exists = false;
  /// rank(A) = rank(B), sqrt(AB) exists, sqrt(BA) exists.
  std::array<bool, 3> jsvd_necessary{};
  JsvdStatus jsvd_status = JsvdStatus::Unknown;
  /// Why the status is not Exists, or empty.
  std::string reason;
  /// Reconstruction residual of the verified Jordan SVD when Exists.
  double residual = 0.0;
  /// The verified factors when Exists.
  std::shared_ptr<const JordanSVD> factors;
};

/// Necessary conditions for a Jordan SVD. Conditions 2 and 3 use the Jordan
/// structure of AB and BA; ClusterAmbiguity propagates.
std::array<bool, 3> jsvd_necessary(const DCMatrix& m, const DecompositionOptions& options = {});

/// Ranks, necessary conditions, and an attempted construction. Never throws
/// for numerical reasons: failures land in jsvd_status = Unknown.
ExistenceReport existence_report(const DCMatrix& m, Rng& rng,
                                 const DecompositionOptions& options = {});

struct NaiveSVD {
  DCMatrix u;  ///< [P, P^-1]
  DCMatrix s;  ///< [D, D]
  DCMatrix v;  ///< [Q, Q^-1]
  CMatrix p;
  CMatrix q;
  CMatrix d;
  double residual = 0.0;
};

/// AB = P D^2 P^-1 with D the half-plane roots of the eigenvalues, and
/// Q = A^-1 P D. Throws NotDiagonalizable when AB is defective and
/// SingularComponent when A or B is singular.
NaiveSVD naive_dc_svd(const DCMatrix& m, const DecompositionOptions& options = {});

struct JordanSVD {
  enum class Route { Pseudoinverse, Hermitian, Polar };

  DCMatrix u;
  DCMatrix s;  ///< [J, J]
  DCMatrix v;
  std::vector<linalg::JordanBlock> blocks;
  double residual = 0.0;
  Route route = Route::Pseudoinverse;
  /// Columns of U filled by orthonormal extension, and the draws it took.
  int extended_columns = 0;
  int extension_draws = 0;

  CMatrix j() const { return s.a(); }
};

std::string_view to_string(JordanSVD::Route route);

/// ||m - u s v*||_inf / ||m||_inf (absolute when m = 0).
double reconstruction_residual(const DCMatrix& m, const DCMatrix& u, const DCMatrix& s,
                               const DCMatrix& v);

/// Jordan SVD with half-plane eigenvalues in J.
///
/// When the pseudoinverse exists this is the constructive route: take the
/// half-plane root of BA, Jordan-decompose it as P J P^-1, set V = [P, P^-1],
/// S = [J, J], U' = M V S^+, and fill the zero columns of U' by orthonormal
/// extension. A Hermitian M = [A, A] is otherwise handled through the Jordan
/// form of A. Anything else throws PreconditionFailed. The product is
/// re-verified (VerificationFailed).
JordanSVD jordan_svd(const DCMatrix& m, Rng& rng, const DecompositionOptions& options = {});

/// Only the constructive pseudoinverse route; throws PreconditionFailed when
/// the rank condition fails.
JordanSVD jordan_svd_constructive(const DCMatrix& m, Rng& rng,
                                  const DecompositionOptions& options = {});

struct PenroseResult {
  /// M K M = M, K M K = K, (K M)* = K M, (M K)* = M K.
  std::array<bool, 4> axioms{};
  /// Normalized residuals of ACA = A, BDB = B, CAC = C, DBD = D, DB = AC,
  /// BD = CA, each ||lhs - rhs||_inf / max(1, ||rhs||_inf).
  std::array<double, 6> residuals{};

  bool all() const { return axioms[0] && axioms[1] && axioms[2] && axioms[3]; }
  double worst() const;
};

/// Expanded Penrose equations for M = [A, B], K = [C, D].
PenroseResult penrose_check(const DCMatrix& m, const DCMatrix& k, double tol = 1e-8);

/// M^+ = V [J^+, J^+] U* from the constructive Jordan SVD. Throws
/// NoPseudoinverse when the rank condition fails.
DCMatrix pinv(const DCMatrix& m, Rng& rng, const DecompositionOptions& options = {});

/// M^+ = [C, D] from the subspace diagrams: C inverts A : Im(B) -> Im(A) and
/// vanishes on ker(B); D inverts B : Im(A) -> Im(B) and vanishes on ker(A).
/// Throws NoPseudoinverse when the direct sums Im(B) + ker(A) or
/// Im(A) + ker(B) are not the whole space.
DCMatrix pinv_via_diagrams(const DCMatrix& m, double tol = kDefaultTol);

/// pinv(l) (+) pinv(k).
DCMatrix block_pinv(const DCMatrix& l, const DCMatrix& k, Rng& rng,
                    const DecompositionOptions& options = {});

struct PolarDecomposition {
  DCMatrix unitary_factor;
  DCMatrix hermitian_factor;
  double residual = 0.0;
};

/// From a Jordan SVD W [J, J] V*: U = W V*, P = V [J, J] V*.
PolarDecomposition polar(const DCMatrix& m, Rng& rng, const DecompositionOptions& options = {});
PolarDecomposition polar_from_jsvd(const DCMatrix& m, const JordanSVD& jsvd);

/// From M = U [A, A] with A = Q J Q^-1: factors U [Q, Q^-1], [J, J], [Q, Q^-1].
/// Eigenvalues of J are normalized into the half-plane.
JordanSVD polar_to_jsvd(const PolarDecomposition& pd, const DecompositionOptions& options = {});

}  // namespace tess
