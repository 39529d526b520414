#include "tessarine/dcmatrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "tessarine/error.hpp"

namespace tess {
namespace {

void require_same_size(const DCMatrix& m, const DCMatrix& k, const char* op) {
  if (m.size() != k.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": " + std::to_string(m.size()) +
                                                  " vs " + std::to_string(k.size()));
  }
}

bool lower_within(const CMatrix& m, double tol) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = i + 1; k < m.cols(); ++k) {
      if (std::abs(m(i, k)) > tol) return false;
    }
  }
  return true;
}

bool upper_within(const CMatrix& m, double tol) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < i; ++k) {
      if (std::abs(m(i, k)) > tol) return false;
    }
  }
  return true;
}

bool diagonal_within(const CMatrix& m, double tol) {
  return lower_within(m, tol) && upper_within(m, tol);
}

CMatrix block_diag(const CMatrix& x, const CMatrix& y) {
  CMatrix out = CMatrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
  out.topLeftCorner(x.rows(), x.cols()) = x;
  out.bottomRightCorner(y.rows(), y.cols()) = y;
  return out;
}

}  // namespace

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

DCMatrix::DCMatrix(CMatrix a, CMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != a_.cols() || b_.rows() != b_.cols() || a_.rows() != b_.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "bracket components must be square of equal size");
  }
}

DCMatrix DCMatrix::identity(Eigen::Index n) {
  return {CMatrix::Identity(n, n), CMatrix::Identity(n, n)};
}

DCMatrix DCMatrix::zero(Eigen::Index n) { return {CMatrix::Zero(n, n), CMatrix::Zero(n, n)}; }

DCMatrix DCMatrix::scalar(const DoubleComplex& x) {
  return {CMatrix::Constant(1, 1, x.p()), CMatrix::Constant(1, 1, x.q())};
}

void DCMatrix::set_entry(Eigen::Index i, Eigen::Index k, const DoubleComplex& x) {
  a_(i, k) = x.p();
  b_(k, i) = x.q();
}

DCMatrix& DCMatrix::operator+=(const DCMatrix& o) {
  require_same_size(*this, o, "add");
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

DCMatrix& DCMatrix::operator-=(const DCMatrix& o) {
  require_same_size(*this, o, "subtract");
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

DCMatrix operator*(const DCMatrix& m, const DCMatrix& k) {
  require_same_size(m, k, "mul");
  // Second component reverses: [A,B][C,D] = [AC, DB].
  return {m.a_ * k.a_, k.b_ * m.b_};
}

DCMatrix operator*(const DoubleComplex& s, const DCMatrix& m) {
  return {s.p() * m.a_, s.q() * m.b_};
}

double DCMatrix::norm_inf() const { return std::max(max_abs(a_), max_abs(b_)); }

DCMatrix add(const DCMatrix& m, const DCMatrix& k) { return m + k; }

DCMatrix mul(const DCMatrix& m, const DCMatrix& k) { return m * k; }

DCMatrix star(const DCMatrix& m) { return {m.b(), m.a()}; }

double distance(const DCMatrix& m, const DCMatrix& k) {
  require_same_size(m, k, "distance");
  return std::max(max_abs(m.a() - k.a()), max_abs(m.b() - k.b()));
}

bool is_hermitian(const DCMatrix& m, double tol) { return max_abs(m.a() - m.b()) <= tol; }

bool is_unitary(const DCMatrix& m, double tol) {
  const auto n = m.size();
  const CMatrix id = CMatrix::Identity(n, n);
  return max_abs(m.a() * m.b() - id) <= tol && max_abs(m.b() * m.a() - id) <= tol;
}

bool is_diagonal(const DCMatrix& m, double tol) {
  return diagonal_within(m.a(), tol) && diagonal_within(m.b(), tol);
}

bool is_lower_triangular(const DCMatrix& m, double tol) {
  return lower_within(m.a(), tol) && upper_within(m.b(), tol);
}

bool is_upper_triangular(const DCMatrix& m, double tol) {
  return upper_within(m.a(), tol) && lower_within(m.b(), tol);
}

bool is_complex(const DCMatrix& m, double tol) {
  return max_abs(m.b() - m.a().transpose()) <= tol;
}

DCMatrix embed_complex(const CMatrix& a) { return {a, a.transpose()}; }

DCMatrix direct_sum(const DCMatrix& m, const DCMatrix& k) {
  return {block_diag(m.a(), k.a()), block_diag(m.b(), k.b())};
}

DCMatrix inverse(const DCMatrix& m) {
  const Eigen::FullPivLU<CMatrix> lu_a(m.a());
  const Eigen::FullPivLU<CMatrix> lu_b(m.b());
  const auto n = m.size();
  if (lu_a.rank() < n || lu_b.rank() < n) {
    throw Error(ErrorKind::SingularComponent, "inverse: a bracket component is singular");
  }
  return {lu_a.inverse(), lu_b.inverse()};
}

std::ostream& operator<<(std::ostream& os, const DCMatrix& m) {
  return os << "[A =\n" << m.a() << ",\n B =\n" << m.b() << "]";
}

}  // namespace tess
