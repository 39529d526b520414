#include "tessarine/dcnum.hpp"
#include "tessarine/kernels.hpp"

namespace tess::kernels {
namespace {

cplx dotu_scalar(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += alpha * x[i];
  }
}

void scale_scalar(cplx alpha, cplx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    x[i] *= alpha;
  }
}

void tessarine_mul_scalar(const DoubleComplex* a, const DoubleComplex* b, DoubleComplex* out,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = DoubleComplex(a[i].p() * b[i].p(), a[i].q() * b[i].q());
  }
}

void tessarine_conj_scalar(const DoubleComplex* a, DoubleComplex* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = DoubleComplex(a[i].q(), a[i].p());
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar",           dotu_scalar,          axpy_scalar,
                                 scale_scalar,       tessarine_mul_scalar, tessarine_conj_scalar};
  return table;
}

}  // namespace tess::kernels
