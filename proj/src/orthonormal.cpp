#include "tessarine/orthonormal.hpp"

#include <algorithm>
#include <string>

#include "tessarine/error.hpp"
#include "tessarine/kernels.hpp"

namespace tess {

DCVector::DCVector(CVector u, CVector v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_.size() != v_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "DCVector components differ in length");
  }
}

DCVector::DCVector(std::span<const DoubleComplex> entries)
    : u_(static_cast<Eigen::Index>(entries.size())), v_(static_cast<Eigen::Index>(entries.size())) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    u_(static_cast<Eigen::Index>(i)) = entries[i].p();
    v_(static_cast<Eigen::Index>(i)) = entries[i].q();
  }
}

DCVector DCVector::basis(Eigen::Index d, Eigen::Index i) {
  DCVector e = zero(d);
  e.u_(i) = 1.0;
  e.v_(i) = 1.0;
  return e;
}

DCVector DCVector::zero(Eigen::Index d) { return {CVector::Zero(d), CVector::Zero(d)}; }

DCVector DCVector::random(Eigen::Index d, Rng& rng) {
  CVector u = gaussian_vector(d, rng);
  CVector v = gaussian_vector(d, rng);
  return {std::move(u), std::move(v)};
}

DCVector& DCVector::operator+=(const DCVector& o) {
  if (dim() != o.dim()) throw Error(ErrorKind::DimensionMismatch, "vector add");
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

DCVector& DCVector::operator-=(const DCVector& o) {
  if (dim() != o.dim()) throw Error(ErrorKind::DimensionMismatch, "vector subtract");
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

DCVector operator*(const DoubleComplex& s, const DCVector& x) {
  DCVector out = x;
  const auto& k = kernels::active();
  k.scale(s.p(), out.u().data(), static_cast<std::size_t>(out.dim()));
  k.scale(s.q(), out.v().data(), static_cast<std::size_t>(out.dim()));
  return out;
}

double DCVector::norm_inf() const {
  if (dim() == 0) return 0.0;
  return std::max(u_.cwiseAbs().maxCoeff(), v_.cwiseAbs().maxCoeff());
}

DoubleComplex inner_product(const DCVector& x, const DCVector& y) {
  if (x.dim() != y.dim()) throw Error(ErrorKind::DimensionMismatch, "inner_product");
  // conj(x_i) = (x.v_i, x.u_i), so the e-part pairs x.v with y.u.
  const auto& k = kernels::active();
  const auto n = static_cast<std::size_t>(x.dim());
  return {k.dotu(x.v().data(), y.u().data(), n), k.dotu(x.u().data(), y.v().data(), n)};
}

DCVector gram_schmidt_step(const DCVector& w, std::span<const DCVector> s) {
  DCVector out = w;
  const auto& k = kernels::active();
  const auto n = static_cast<std::size_t>(w.dim());
  // Coefficients are taken against the original w (classical Gram-Schmidt).
  for (const auto& v : s) {
    const DoubleComplex c = inner_product(v, w);
    k.axpy(-c.p(), v.u().data(), out.u().data(), n);
    k.axpy(-c.q(), v.v().data(), out.v().data(), n);
  }
  return out;
}

bool has_zero_norm(const DCVector& w, double tol) {
  const double bound = w.u().norm() * w.v().norm();
  if (bound == 0.0) return true;
  return std::abs(inner_product(w, w).p()) <= tol * bound;
}

DCVector normalize(const DCVector& w, double tol) {
  if (has_zero_norm(w, tol)) {
    throw Error(ErrorKind::ZeroNorm, "normalize: <w, w> vanishes");
  }
  const DoubleComplex root = sqrt_halfplane(inner_product(w, w));
  return inverse(root) * w;
}

bool is_orthonormal(std::span<const DCVector> s, double tol) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      const DoubleComplex expected = i == j ? DoubleComplex::one() : DoubleComplex{};
      if (distance(inner_product(s[i], s[j]), expected) > tol) return false;
    }
  }
  return true;
}

DCVector column(const DCMatrix& m, Eigen::Index k) {
  return {m.a().col(k), m.b().row(k).transpose()};
}

DCMatrix from_columns(std::span<const DCVector> cols) {
  const auto n = static_cast<Eigen::Index>(cols.size());
  CMatrix a(n, n);
  CMatrix b(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& c = cols[static_cast<std::size_t>(k)];
    if (c.dim() != n) throw Error(ErrorKind::DimensionMismatch, "from_columns: not square");
    a.col(k) = c.u();
    b.row(k) = c.v().transpose();
  }
  return {std::move(a), std::move(b)};
}

Extension extend_orthonormal(std::span<const DCVector> s, Eigen::Index d, Rng& rng,
                             const ExtensionOptions& options) {
  if (static_cast<Eigen::Index>(s.size()) > d) {
    throw Error(ErrorKind::PreconditionFailed, "extend: set larger than the dimension");
  }
  for (const auto& v : s) {
    if (v.dim() != d) throw Error(ErrorKind::DimensionMismatch, "extend: vector dimension");
  }
  if (!is_orthonormal(s, options.orthonormal_tol)) {
    throw Error(ErrorKind::PreconditionFailed, "extend: input set is not orthonormal");
  }

  Extension out;
  out.basis.assign(s.begin(), s.end());
  while (static_cast<Eigen::Index>(out.basis.size()) < d) {
    int failures = 0;
    for (;;) {
      ++out.draws;
      DCVector w = DCVector::random(d, rng);
      for (int pass = 0; pass < options.passes; ++pass) w = gram_schmidt_step(w, out.basis);
      if (!has_zero_norm(w, options.zero_norm_tol)) {
        out.basis.push_back(normalize(w, options.zero_norm_tol));
        break;
      }
      ++out.rejected;
      if (++failures >= options.max_retries) {
        throw Error(ErrorKind::RetryExhausted,
                    "extend: " + std::to_string(failures) + " consecutive zero-norm draws");
      }
    }
  }
  return out;
}

}  // namespace tess
