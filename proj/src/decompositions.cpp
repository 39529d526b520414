#include "tessarine/decompositions.hpp"

#include <algorithm>

#include "tessarine/error.hpp"

namespace tess {

using Eigen::Index;
using linalg::JordanBlock;

namespace {

// Factors of a Hermitian [A, A] = [L, L^-1] [J, J] [R, R^-1]* with the
// eigenvalues of J in the half-plane and its blocks in canonical order.
//
// For a block lambda I + N with lambda outside the half-plane, write
// lambda I + N = -D (lambda' I + N) D with lambda' = -lambda and
// D = diag(1, -1, 1, ...). With S = -1 on flipped blocks, A = Q S D J' D Q^-1,
// so L = Q S D and R = Q D.
struct HermitianFactors {
  CMatrix l, l_inverse, r, r_inverse, j;
  std::vector<JordanBlock> blocks;
};

HermitianFactors hermitian_factors(const CMatrix& a, const linalg::JordanOptions& options) {
  const auto jf = linalg::jordan_decomposition(a, options);
  const Index n = jf.size();

  std::vector<JordanBlock> blocks = jf.blocks;
  Eigen::VectorXd sign = Eigen::VectorXd::Ones(n);  // S D
  Eigen::VectorXd alt = Eigen::VectorXd::Ones(n);   // D
  const auto offsets = jf.block_offsets();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (in_halfplane(blocks[k].eigenvalue)) continue;
    blocks[k].eigenvalue = -blocks[k].eigenvalue;
    for (int i = 0; i < blocks[k].size; ++i) {
      const double d = (i % 2 == 0) ? 1.0 : -1.0;
      alt(offsets[k] + i) = d;
      sign(offsets[k] + i) = -d;
    }
  }

  const auto order = linalg::canonical_permutation(blocks, options.snap * max_abs(a));
  Eigen::VectorXi perm(n);  // new column c comes from old column perm(c)
  std::vector<JordanBlock> sorted;
  Index c = 0;
  for (auto k : order) {
    sorted.push_back(blocks[k]);
    for (int i = 0; i < blocks[k].size; ++i) perm(c++) = static_cast<int>(offsets[k] + i);
  }

  HermitianFactors out;
  out.l.resize(n, n);
  out.r.resize(n, n);
  out.l_inverse.resize(n, n);
  out.r_inverse.resize(n, n);
  for (Index col = 0; col < n; ++col) {
    const Index old = perm(col);
    out.l.col(col) = jf.p.col(old) * sign(old);
    out.r.col(col) = jf.p.col(old) * alt(old);
    out.l_inverse.row(col) = jf.p_inverse.row(old) * sign(old);
    out.r_inverse.row(col) = jf.p_inverse.row(old) * alt(old);
  }
  out.blocks = std::move(sorted);
  out.j = linalg::jordan_matrix(out.blocks);
  return out;
}

JordanSVD hermitian_route(const DCMatrix& m, const DecompositionOptions& options) {
  const CMatrix a = (m.a() + m.b()) / 2.0;
  auto f = hermitian_factors(a, options.jordan);
  JordanSVD out;
  out.u = DCMatrix(f.l, f.l_inverse);
  out.s = DCMatrix(f.j, f.j);
  out.v = DCMatrix(f.r, f.r_inverse);
  out.blocks = std::move(f.blocks);
  out.route = JordanSVD::Route::Hermitian;
  return out;
}

void verify(const DCMatrix& m, JordanSVD& svd, const DecompositionOptions& options) {
  svd.residual = reconstruction_residual(m, svd.u, svd.s, svd.v);
  if (!(svd.residual <= options.recon_tol)) {
    throw Error(ErrorKind::VerificationFailed,
                "Jordan SVD reconstruction residual " + std::to_string(svd.residual));
  }
}

bool hermitian_input(const DCMatrix& m, const DecompositionOptions& options) {
  return is_hermitian(m, options.rank_tol * std::max(1.0, m.norm_inf()));
}

}  // namespace

std::string_view to_string(JsvdStatus status) {
  switch (status) {
    case JsvdStatus::Exists: return "Exists";
    case JsvdStatus::NotExists: return "NotExists";
    case JsvdStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(JordanSVD::Route route) {
  switch (route) {
    case JordanSVD::Route::Pseudoinverse: return "pseudoinverse";
    case JordanSVD::Route::Hermitian: return "hermitian";
    case JordanSVD::Route::Polar: return "polar";
  }
  return "?";
}

double product_noise_floor(const DCMatrix& m) {
  return 1e-12 * linalg::spectral_norm(m.a()) * linalg::spectral_norm(m.b());
}

RankProfile rank_profile(const DCMatrix& m, double tol) {
  // A product that cancels to rounding level has rank zero, not the rank of
  // its rounding noise.
  const double ref = product_noise_floor(m);
  const CMatrix ab = m.a() * m.b();
  const CMatrix ba = m.b() * m.a();
  return {linalg::rank(m.a(), tol), linalg::rank(m.b(), tol), linalg::rank(ab, tol, ref),
          linalg::rank(ba, tol, ref)};
}

bool pinv_exists(const DCMatrix& m, double tol) { return rank_profile(m, tol).pinv_exists(); }

DCSubspace kernel(const DCMatrix& m, double tol) {
  return {linalg::null_space(m.a(), tol), linalg::null_space(m.b().transpose(), tol)};
}

bool same_subspace(const DCSubspace& x, const DCSubspace& y, double tol) {
  return linalg::same_subspace(x.e, y.e, tol) && linalg::same_subspace(x.e_star, y.e_star, tol);
}

std::array<bool, 3> jsvd_necessary(const DCMatrix& m, const DecompositionOptions& options) {
  const auto ranks = rank_profile(m, options.rank_tol);
  auto jordan = options.jordan;
  jordan.noise_floor = std::max(jordan.noise_floor, product_noise_floor(m));
  return {ranks.rank_a == ranks.rank_b, linalg::has_square_root(m.a() * m.b(), jordan),
          linalg::has_square_root(m.b() * m.a(), jordan)};
}

double reconstruction_residual(const DCMatrix& m, const DCMatrix& u, const DCMatrix& s,
                               const DCMatrix& v) {
  const double err = distance(m, u * s * star(v));
  const double scale = m.norm_inf();
  return scale > 0.0 ? err / scale : err;
}

NaiveSVD naive_dc_svd(const DCMatrix& m, const DecompositionOptions& options) {
  const CMatrix& a = m.a();
  const CMatrix& b = m.b();
  const CMatrix ab = a * b;
  const auto jf = linalg::jordan_decomposition(ab, options.jordan);
  for (const auto& blk : jf.blocks) {
    if (blk.size > 1) throw Error(ErrorKind::NotDiagonalizable, "AB has a defective eigenvalue");
  }
  const auto ranks = rank_profile(m, options.rank_tol);
  const Index n = m.size();
  if (ranks.rank_a < n || ranks.rank_b < n) {
    throw Error(ErrorKind::SingularComponent, "naive SVD needs invertible A and B");
  }

  const double snap = options.jordan.snap;
  NaiveSVD out;
  out.p = jf.p;
  out.d = CMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) out.d(i, i) = sqrt_halfplane(jf.j(i, i), snap);
  out.q = linalg::invert(a, options.rank_tol) * out.p * out.d;
  const CMatrix q_inverse = linalg::invert(out.q, options.rank_tol);
  out.u = DCMatrix(out.p, jf.p_inverse);
  out.s = DCMatrix(out.d, out.d);
  out.v = DCMatrix(out.q, q_inverse);

  const CMatrix d2 = out.d * out.d;
  const CMatrix ba = b * a;
  const double e_ab = max_abs(ab - out.p * d2 * jf.p_inverse) / std::max(1.0, max_abs(ab));
  const double e_ba = max_abs(ba - out.q * d2 * q_inverse) / std::max(1.0, max_abs(ba));
  out.residual = reconstruction_residual(m, out.u, out.s, out.v);
  if (!(std::max(e_ab, e_ba) <= 1e-8) || !(out.residual <= options.recon_tol)) {
    throw Error(ErrorKind::VerificationFailed, "naive SVD does not reproduce AB and BA");
  }
  return out;
}

JordanSVD jordan_svd_constructive(const DCMatrix& m, Rng& rng,
                                  const DecompositionOptions& options) {
  if (!pinv_exists(m, options.rank_tol)) {
    throw Error(ErrorKind::PreconditionFailed, "rank condition fails");
  }
  const Index n = m.size();
  const CMatrix ba = m.b() * m.a();

  // M* M = [BA, BA] = V S^2 V* with S the Jordan form of sqrt(BA).
  linalg::SqrtOptions sqrt_options;
  sqrt_options.jordan = options.jordan;
  const CMatrix root = linalg::sqrt_via_jordan(ba, sqrt_options);
  const auto jf = linalg::jordan_decomposition(root, options.jordan);
  const CMatrix j_plus = linalg::jordan_pinv(jf.blocks);

  JordanSVD out;
  out.s = DCMatrix(jf.j, jf.j);
  out.v = DCMatrix(jf.p, jf.p_inverse);
  out.blocks = jf.blocks;
  out.route = JordanSVD::Route::Pseudoinverse;

  const DCMatrix u_prime = m * out.v * DCMatrix(j_plus, j_plus);
  const double cutoff = options.zero_column_tol * u_prime.norm_inf();
  std::vector<DCVector> kept;
  std::vector<Index> zero_at;
  std::vector<DCVector> cols(n);
  for (Index k = 0; k < n; ++k) {
    cols[k] = column(u_prime, k);
    if (cols[k].norm_inf() <= cutoff) {
      zero_at.push_back(k);
    } else {
      kept.push_back(cols[k]);
    }
  }
  if (!zero_at.empty()) {
    const auto ext = extend_orthonormal(kept, n, rng, options.extension);
    for (std::size_t i = 0; i < zero_at.size(); ++i) {
      cols[zero_at[i]] = ext.basis[kept.size() + i];
    }
    out.extended_columns = static_cast<int>(zero_at.size());
    out.extension_draws = ext.draws;
  }
  out.u = from_columns(cols);
  verify(m, out, options);
  return out;
}

JordanSVD jordan_svd(const DCMatrix& m, Rng& rng, const DecompositionOptions& options) {
  if (hermitian_input(m, options)) {
    auto out = hermitian_route(m, options);
    verify(m, out, options);
    return out;
  }
  return jordan_svd_constructive(m, rng, options);
}

PolarDecomposition polar_from_jsvd(const DCMatrix& m, const JordanSVD& jsvd) {
  PolarDecomposition out;
  const DCMatrix v_star = star(jsvd.v);
  out.unitary_factor = jsvd.u * v_star;
  out.hermitian_factor = jsvd.v * jsvd.s * v_star;
  const double err = distance(m, out.unitary_factor * out.hermitian_factor);
  const double scale = m.norm_inf();
  out.residual = scale > 0.0 ? err / scale : err;
  return out;
}

PolarDecomposition polar(const DCMatrix& m, Rng& rng, const DecompositionOptions& options) {
  auto out = polar_from_jsvd(m, jordan_svd(m, rng, options));
  if (!(out.residual <= options.recon_tol)) {
    throw Error(ErrorKind::VerificationFailed,
                "polar reconstruction residual " + std::to_string(out.residual));
  }
  return out;
}

JordanSVD polar_to_jsvd(const PolarDecomposition& pd, const DecompositionOptions& options) {
  const DCMatrix& h = pd.hermitian_factor;
  if (!hermitian_input(h, options)) {
    throw Error(ErrorKind::PreconditionFailed, "polar factor is not Hermitian");
  }
  auto out = hermitian_route(h, options);
  out.u = pd.unitary_factor * out.u;
  out.route = JordanSVD::Route::Polar;
  verify(pd.unitary_factor * h, out, options);
  return out;
}

ExistenceReport existence_report(const DCMatrix& m, Rng& rng,
                                 const DecompositionOptions& options) {
  ExistenceReport report;
  report.ranks = rank_profile(m, options.rank_tol);
  report.pinv_exists = report.ranks.pinv_exists();
  try {
    report.jsvd_necessary = jsvd_necessary(m, options);
  } catch (const Error& e) {
    report.reason = e.what();
    return report;
  }
  for (int k = 0; k < 3; ++k) {
    if (!report.jsvd_necessary[k]) {
      report.jsvd_status = JsvdStatus::NotExists;
      report.reason = "necessary condition " + std::to_string(k + 1) + " fails";
      return report;
    }
  }
  try {
    auto svd = std::make_shared<const JordanSVD>(jordan_svd(m, rng, options));
    report.jsvd_status = JsvdStatus::Exists;
    report.residual = svd->residual;
    report.factors = std::move(svd);
  } catch (const Error& e) {
    report.reason = e.what();
  }
  return report;
}

}  // namespace tess
