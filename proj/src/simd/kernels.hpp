#pragma once

#include <cstddef>

#include "simd/cpu.hpp"

// Data-parallel float32 inner loops with scalar reference implementations
// and AVX2 variants selected at runtime. The scalar versions define the
// semantics; the SIMD ones must agree within float reassociation tolerance
// (FMA contraction and lane-split reductions), which the kernel tests check.
//
// Accumulation order over the contraction index is fixed per output element
// in every path, so a given (binary, host) pair is bit-reproducible.

namespace nsrd::simd {

// C (MxN, row-major, leading dim ldc) = A (MxK, lda) * B (KxN, ldb),
// adding into C when accumulate is set.
void gemm_nn(int m, int n, int k, const float* a, int lda, const float* b, int ldb,
             float* c, int ldc, bool accumulate);

// C (MxN) = A (MxK, lda) * B^T, with B stored row-major (NxK, ldb).
void gemm_nt(int m, int n, int k, const float* a, int lda, const float* b, int ldb,
             float* c, int ldc, bool accumulate);

void vec_add(float* dst, const float* a, const float* b, size_t n);   // dst = a + b
void vec_mul(float* dst, const float* a, const float* b, size_t n);   // dst = a * b
void vec_axpy(float* y, float a, const float* x, size_t n);           // y += a * x
void vec_scale(float* y, float a, size_t n);                          // y *= a

// Bias-corrected Adam update for one contiguous parameter block.
// bc1 = 1 - beta1^t, bc2 = 1 - beta2^t (precomputed by the caller).
void adam_update(float* w, const float* g, float* m, float* v, size_t n,
                 float lr, float beta1, float beta2, float eps, float bc1, float bc2);

// Per-kernel entry points, exposed for the equivalence tests.
namespace scalar {
void gemm_nn(int m, int n, int k, const float* a, int lda, const float* b, int ldb,
             float* c, int ldc, bool accumulate);
void gemm_nt(int m, int n, int k, const float* a, int lda, const float* b, int ldb,
             float* c, int ldc, bool accumulate);
void vec_add(float* dst, const float* a, const float* b, size_t n);
void vec_mul(float* dst, const float* a, const float* b, size_t n);
void vec_axpy(float* y, float a, const float* x, size_t n);
void vec_scale(float* y, float a, size_t n);
void adam_update(float* w, const float* g, float* m, float* v, size_t n,
                 float lr, float beta1, float beta2, float eps, float bc1, float bc2);
}  // namespace scalar

#if NSRD_HAVE_AVX2_TU
namespace avx2 {
void gemm_nn(int m, int n, int k, const float* a, int lda, const float* b, int ldb,
             float* c, int ldc, bool accumulate);
void gemm_nt(int m, int n, int k, const float* a, int lda, const float* b, int ldb,
             float* c, int ldc, bool accumulate);
void vec_add(float* dst, const float* a, const float* b, size_t n);
void vec_mul(float* dst, const float* a, const float* b, size_t n);
void vec_axpy(float* y, float a, const float* x, size_t n);
void vec_scale(float* y, float a, size_t n);
void adam_update(float* w, const float* g, float* m, float* v, size_t n,
                 float lr, float beta1, float beta2, float eps, float bc1, float bc2);
}  // namespace avx2
#endif

}  // namespace nsrd::simd
