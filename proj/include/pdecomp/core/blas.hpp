#pragma once

#include <cstdint>

// Thin typed wrapper over CBLAS GEMM so the NN code can be instantiated for
// float (production) and double (finite-difference gradient checks).

namespace pdecomp::blas {

// C[m,n] = alpha * op(A) @ op(B) + beta * C, row-major.
// op(A) is A[m,k] when trans_a is false, A[k,m]^T otherwise.
void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
          float alpha, const float* a, int64_t lda, const float* b,
          int64_t ldb, float beta, float* c, int64_t ldc);

void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
          double alpha, const double* a, int64_t lda, const double* b,
          int64_t ldb, double beta, double* c, int64_t ldc);

// Forces single-threaded BLAS; called once at startup for determinism.
void use_single_thread();

}  // namespace pdecomp::blas
