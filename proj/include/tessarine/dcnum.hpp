#pragma once

#include <complex>
#include <iosfwd>
#include <span>

namespace tess {

using cplx = std::complex<double>;

/// A double-complex (tessarine) number w + z j with j^2 = 1.
///
/// Stored in the idempotent basis e = (1+j)/2, e* = (1-j)/2 as p e + q e*.
/// In that basis multiplication is componentwise and the swap involution
/// exchanges p and q. The layout is exactly four doubles (p.re, p.im, q.re,
/// q.im) so that arrays of DoubleComplex can be fed to the batch kernels.
class DoubleComplex {
 public:
  constexpr DoubleComplex() = default;
  constexpr DoubleComplex(cplx p, cplx q) : p_(p), q_(q) {}
  /// Real or complex scalar embedded as (x, x).
  constexpr explicit DoubleComplex(cplx x) : p_(x), q_(x) {}

  static DoubleComplex from_wz(cplx w, cplx z) { return {w + z, w - z}; }
  static constexpr DoubleComplex e() { return {1.0, 0.0}; }
  static constexpr DoubleComplex e_star() { return {0.0, 1.0}; }
  static constexpr DoubleComplex j() { return {1.0, -1.0}; }
  static constexpr DoubleComplex one() { return {1.0, 1.0}; }

  constexpr cplx p() const { return p_; }
  constexpr cplx q() const { return q_; }
  cplx w() const { return 0.5 * (p_ + q_); }
  cplx z() const { return 0.5 * (p_ - q_); }

  DoubleComplex& operator+=(const DoubleComplex& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  DoubleComplex& operator-=(const DoubleComplex& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  DoubleComplex& operator*=(const DoubleComplex& o) {
    p_ *= o.p_;
    q_ *= o.q_;
    return *this;
  }

  friend DoubleComplex operator+(DoubleComplex a, const DoubleComplex& b) { return a += b; }
  friend DoubleComplex operator-(DoubleComplex a, const DoubleComplex& b) { return a -= b; }
  friend DoubleComplex operator*(DoubleComplex a, const DoubleComplex& b) { return a *= b; }
  friend DoubleComplex operator-(const DoubleComplex& a) { return {-a.p_, -a.q_}; }
  friend bool operator==(const DoubleComplex&, const DoubleComplex&) = default;

 private:
  cplx p_{};
  cplx q_{};
};

static_assert(sizeof(DoubleComplex) == 4 * sizeof(double));

DoubleComplex add(const DoubleComplex& a, const DoubleComplex& b);
DoubleComplex mul(const DoubleComplex& a, const DoubleComplex& b);

/// The swap involution (p, q)* = (q, p).
DoubleComplex conj(const DoubleComplex& a);

/// Componentwise reciprocal. Throws Error(ZeroDivisor) when p or q is zero.
DoubleComplex inverse(const DoubleComplex& a);

/// Nonzero and not invertible: exactly one idempotent component vanishes.
bool is_zero_divisor(const DoubleComplex& a);

/// |a - b| measured as the larger of the component moduli.
double distance(const DoubleComplex& a, const DoubleComplex& b);
bool approx_equal(const DoubleComplex& a, const DoubleComplex& b, double tol = 1e-9);

/// Square root on the half-plane branch: the result has positive real part,
/// or zero real part and non-negative imaginary part.
///
/// `snap` treats real parts of the root with modulus <= snap*|root| as zero
/// before the branch is chosen; it exists for roots of numerically computed
/// eigenvalues lying next to the negative real axis. Zero keeps the exact rule.
cplx sqrt_halfplane(cplx x, double snap = 0.0);
DoubleComplex sqrt_halfplane(const DoubleComplex& a, double snap = 0.0);

bool in_halfplane(cplx x);

/// out[i] = a[i] * b[i]; dispatched to the active SIMD kernel table.
void multiply(std::span<const DoubleComplex> a, std::span<const DoubleComplex> b,
              std::span<DoubleComplex> out);
/// out[i] = conj(a[i]).
void conjugate(std::span<const DoubleComplex> a, std::span<DoubleComplex> out);

std::ostream& operator<<(std::ostream& os, const DoubleComplex& a);

}  // namespace tess
