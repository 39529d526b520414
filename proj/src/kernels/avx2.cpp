// Compiled with -mavx2 -mfma. Only reached through avx2_table() after a CPUID
// check, so nothing here may be inlined into code that runs unconditionally.

#include <immintrin.h>

#include "tessarine/dcnum.hpp"
#include "tessarine/kernels.hpp"

namespace tess::kernels {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d complex_mul(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d b_swap = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_swap));
}

inline __m256d scalar_mul(__m256d alpha_re, __m256d alpha_im, __m256d x) {
  const __m256d x_swap = _mm256_permute_pd(x, 0x5);
  return _mm256_fmaddsub_pd(alpha_re, x, _mm256_mul_pd(alpha_im, x_swap));
}

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

cplx dotu_avx2(const cplx* x, const cplx* y, std::size_t n) {
  __m256d acc_direct = _mm256_setzero_pd();  // [xr*yr, xi*yi, ...]
  __m256d acc_cross = _mm256_setzero_pd();   // [xr*yi, xi*yr, ...]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(as_doubles(x + i));
    const __m256d yv = _mm256_loadu_pd(as_doubles(y + i));
    acc_direct = _mm256_fmadd_pd(xv, yv, acc_direct);
    acc_cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), acc_cross);
  }
  alignas(32) double direct[4];
  alignas(32) double cross[4];
  _mm256_store_pd(direct, acc_direct);
  _mm256_store_pd(cross, acc_cross);
  double re = (direct[0] - direct[1]) + (direct[2] - direct[3]);
  double im = (cross[0] + cross[1]) + (cross[2] + cross[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(as_doubles(x + i));
    const __m256d yv = _mm256_loadu_pd(as_doubles(y + i));
    _mm256_storeu_pd(as_doubles(y + i), _mm256_add_pd(yv, scalar_mul(ar, ai, xv)));
  }
  for (; i < n; ++i) {
    const double re = alpha.real() * x[i].real() - alpha.imag() * x[i].imag();
    const double im = alpha.real() * x[i].imag() + alpha.imag() * x[i].real();
    y[i] = {y[i].real() + re, y[i].imag() + im};
  }
}

void scale_avx2(cplx alpha, cplx* x, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(as_doubles(x + i));
    _mm256_storeu_pd(as_doubles(x + i), scalar_mul(ar, ai, xv));
  }
  for (; i < n; ++i) {
    x[i] = {alpha.real() * x[i].real() - alpha.imag() * x[i].imag(),
            alpha.real() * x[i].imag() + alpha.imag() * x[i].real()};
  }
}

// One tessarine (p, q) fills a register, so the componentwise product is a
// pair of complex products.
void tessarine_mul_avx2(const DoubleComplex* a, const DoubleComplex* b, DoubleComplex* out,
                        std::size_t n) {
  const auto* ad = reinterpret_cast<const double*>(a);
  const auto* bd = reinterpret_cast<const double*>(b);
  auto* od = reinterpret_cast<double*>(out);
  for (std::size_t i = 0; i < n; ++i) {
    const __m256d av = _mm256_loadu_pd(ad + 4 * i);
    const __m256d bv = _mm256_loadu_pd(bd + 4 * i);
    _mm256_storeu_pd(od + 4 * i, complex_mul(av, bv));
  }
}

void tessarine_conj_avx2(const DoubleComplex* a, DoubleComplex* out, std::size_t n) {
  const auto* ad = reinterpret_cast<const double*>(a);
  auto* od = reinterpret_cast<double*>(out);
  for (std::size_t i = 0; i < n; ++i) {
    const __m256d av = _mm256_loadu_pd(ad + 4 * i);
    _mm256_storeu_pd(od + 4 * i, _mm256_permute2f128_pd(av, av, 0x01));
  }
}

}  // namespace

const KernelTable& avx2_table_impl() {
  static const KernelTable table{"avx2",     dotu_avx2,          axpy_avx2,
                                 scale_avx2, tessarine_mul_avx2, tessarine_conj_avx2};
  return table;
}

}  // namespace tess::kernels
