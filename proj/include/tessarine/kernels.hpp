#pragma once

// Data-parallel inner loops shared by the vector and scalar-batch code.
//
// Each kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant compiled in its own translation unit. The table is picked
// once at startup from CPUID; TESSARINE_KERNELS=scalar forces the reference
// path. Tests compare every variant against the scalar one.

#include <complex>
#include <cstddef>
#include <string_view>

namespace tess {
class DoubleComplex;
}

namespace tess::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  /// sum_i x[i] * y[i] (bilinear, no conjugation).
  cplx (*dotu)(const cplx* x, const cplx* y, std::size_t n);
  /// y[i] += alpha * x[i].
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  /// x[i] *= alpha.
  void (*scale)(cplx alpha, cplx* x, std::size_t n);
  /// out[i] = a[i] * b[i] for tessarines (componentwise in p, q).
  void (*tessarine_mul)(const DoubleComplex* a, const DoubleComplex* b, DoubleComplex* out,
                        std::size_t n);
  /// out[i] = swap(a[i]).
  void (*tessarine_conj)(const DoubleComplex* a, DoubleComplex* out, std::size_t n);
};

const KernelTable& scalar_table();

/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_table();

/// The table used by library code.
const KernelTable& active();

}  // namespace tess::kernels
