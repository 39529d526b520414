#include <algorithm>

#include "tessarine/decompositions.hpp"
#include "tessarine/error.hpp"

namespace tess {

namespace {

double rel(const CMatrix& lhs, const CMatrix& rhs) {
  return max_abs(lhs - rhs) / std::max(1.0, max_abs(rhs));
}

double smallest_singular_value(const CMatrix& a) {
  if (a.size() == 0) return 1.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues().minCoeff();
}

// Inverse of x |-> m x from span(from) onto span(to), extended by zero on
// span(kernel): [from F^-1, 0] [to kernel]^-1 with F = to^H m from.
CMatrix reverse_arrow(const CMatrix& m, const CMatrix& from, const CMatrix& to,
                      const CMatrix& kernel, double tol) {
  const Eigen::Index n = m.rows();
  const Eigen::Index r = from.cols();
  CMatrix frame(n, n);
  frame << to, kernel;
  if (smallest_singular_value(frame) <= 1e-8) {
    throw Error(ErrorKind::NoPseudoinverse, "image and kernel do not span the space");
  }
  const CMatrix f = to.adjoint() * m * from;
  if (linalg::rank(f, tol) < r) {
    throw Error(ErrorKind::NoPseudoinverse, "restriction is not invertible");
  }
  CMatrix left = CMatrix::Zero(n, n);
  left.leftCols(r) = from * f.inverse();
  return left * frame.inverse();
}

}  // namespace

double PenroseResult::worst() const { return *std::max_element(residuals.begin(), residuals.end()); }

PenroseResult penrose_check(const DCMatrix& m, const DCMatrix& k, double tol) {
  if (m.size() != k.size()) throw Error(ErrorKind::DimensionMismatch, "penrose_check");
  const CMatrix& a = m.a();
  const CMatrix& b = m.b();
  const CMatrix& c = k.a();
  const CMatrix& d = k.b();
  const CMatrix ac = a * c;
  const CMatrix bd = b * d;
  const CMatrix ca = c * a;
  const CMatrix db = d * b;

  PenroseResult out;
  out.residuals = {rel(ac * a, a), rel(bd * b, b),  rel(ca * c, c),
                   rel(db * d, d), rel(db, ac), rel(bd, ca)};
  const auto ok = [&](int i) { return out.residuals[i] <= tol; };
  out.axioms = {ok(0) && ok(1), ok(2) && ok(3), ok(5), ok(4)};
  return out;
}

DCMatrix pinv(const DCMatrix& m, Rng& rng, const DecompositionOptions& options) {
  if (!pinv_exists(m, options.rank_tol)) {
    throw Error(ErrorKind::NoPseudoinverse, "rank(AB) = rank(A) = rank(B) = rank(BA) fails");
  }
  const auto svd = jordan_svd_constructive(m, rng, options);
  const CMatrix j_plus = linalg::jordan_pinv(svd.blocks);
  DCMatrix k = svd.v * DCMatrix(j_plus, j_plus) * star(svd.u);
  const auto check = penrose_check(m, k, options.penrose_tol);
  if (!check.all()) {
    throw Error(ErrorKind::VerificationFailed,
                "Penrose residual " + std::to_string(check.worst()));
  }
  return k;
}

DCMatrix pinv_via_diagrams(const DCMatrix& m, double tol) {
  const CMatrix& a = m.a();
  const CMatrix& b = m.b();
  const auto im_a = linalg::column_space(a, tol);
  const auto im_b = linalg::column_space(b, tol);
  if (im_a.dim() != im_b.dim()) {
    throw Error(ErrorKind::NoPseudoinverse, "rank(A) != rank(B)");
  }
  const auto ker_a = linalg::null_space(a, tol);
  const auto ker_b = linalg::null_space(b, tol);
  // C undoes A : Im(B) -> Im(A) on Im(A) (+) ker(B); D undoes B : Im(A) -> Im(B)
  // on Im(B) (+) ker(A).
  CMatrix c = reverse_arrow(a, im_b.vectors, im_a.vectors, ker_b.vectors, tol);
  CMatrix d = reverse_arrow(b, im_a.vectors, im_b.vectors, ker_a.vectors, tol);
  return DCMatrix(std::move(c), std::move(d));
}

DCMatrix block_pinv(const DCMatrix& l, const DCMatrix& k, Rng& rng,
                    const DecompositionOptions& options) {
  return direct_sum(pinv(l, rng, options), pinv(k, rng, options));
}

}  // namespace tess
