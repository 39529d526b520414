#include "tessarine/dcnum.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "tessarine/error.hpp"
#include "tessarine/kernels.hpp"

namespace tess {

DoubleComplex add(const DoubleComplex& a, const DoubleComplex& b) { return a + b; }

DoubleComplex mul(const DoubleComplex& a, const DoubleComplex& b) { return a * b; }

DoubleComplex conj(const DoubleComplex& a) { return {a.q(), a.p()}; }

DoubleComplex inverse(const DoubleComplex& a) {
  if (a.p() == 0.0 || a.q() == 0.0) {
    throw Error(ErrorKind::ZeroDivisor, "an idempotent component is zero");
  }
  return {1.0 / a.p(), 1.0 / a.q()};
}

bool is_zero_divisor(const DoubleComplex& a) {
  const bool p_zero = a.p() == 0.0;
  const bool q_zero = a.q() == 0.0;
  return p_zero != q_zero;
}

double distance(const DoubleComplex& a, const DoubleComplex& b) {
  return std::max(std::abs(a.p() - b.p()), std::abs(a.q() - b.q()));
}

bool approx_equal(const DoubleComplex& a, const DoubleComplex& b, double tol) {
  return distance(a, b) <= tol;
}

bool in_halfplane(cplx x) { return x.real() > 0.0 || (x.real() == 0.0 && x.imag() >= 0.0); }

cplx sqrt_halfplane(cplx x, double snap) {
  if (x == 0.0) {
    return 0.0;
  }
  cplx r = std::sqrt(x);
  if (snap > 0.0 && std::abs(r.real()) <= snap * std::abs(r)) {
    r = {0.0, std::abs(r.imag())};
  }
  // std::sqrt already returns Re >= 0; only the imaginary axis needs fixing.
  if (r.real() == 0.0 && r.imag() < 0.0) {
    r = -r;
  }
  if (r.real() < 0.0) {
    r = -r;
  }
  return r;
}

DoubleComplex sqrt_halfplane(const DoubleComplex& a, double snap) {
  return {sqrt_halfplane(a.p(), snap), sqrt_halfplane(a.q(), snap)};
}

void multiply(std::span<const DoubleComplex> a, std::span<const DoubleComplex> b,
              std::span<DoubleComplex> out) {
  if (a.size() != b.size() || a.size() != out.size()) {
    throw Error(ErrorKind::DimensionMismatch, "multiply: spans differ in length");
  }
  kernels::active().tessarine_mul(a.data(), b.data(), out.data(), a.size());
}

void conjugate(std::span<const DoubleComplex> a, std::span<DoubleComplex> out) {
  if (a.size() != out.size()) {
    throw Error(ErrorKind::DimensionMismatch, "conjugate: spans differ in length");
  }
  kernels::active().tessarine_conj(a.data(), out.data(), a.size());
}

std::ostream& operator<<(std::ostream& os, const DoubleComplex& a) {
  return os << "(" << a.p() << ", " << a.q() << ")";
}

}  // namespace tess
