#ifndef DYNA_KERNELS_HPP
#define DYNA_KERNELS_HPP

#include <cstdint>
#include <functional>
#include <span>

#include "dyna/matrix.hpp"
#include "dyna/sparse.hpp"

namespace dyna::kern {

// OpenMP-parallel compute kernels. Every kernel is deterministic regardless
// of thread count: each output element (or fixed chunk partial) is produced
// by exactly one serial loop, and chunked reductions are combined in a fixed
// chunk order. kern::ref holds the plain serial implementations; the unit
// tests check the pair against each other and tools/bench_kernels times them.

// out = A * X  (CSR n x n times dense n x c)
void spmm(const CsrMatrix& A, const Matrix& X, Matrix& out);

// out = A * B  (m x p times p x c)
void matmul(const Matrix& A, const Matrix& B, Matrix& out);

// out = A^T * B  (A is m x p, B is m x c, out is p x c)
void matmul_tn(const Matrix& A, const Matrix& B, Matrix& out);

// out = A * B^T  (A is m x p, B is c x p, out is m x c)
void matmul_nt(const Matrix& A, const Matrix& B, Matrix& out);

// out = max(x, 0), elementwise; in place allowed (&x == &out)
void relu(const Matrix& x, Matrix& out);

// grad_in = grad_out where pre > 0, else 0 (subgradient 0 at the kink)
void relu_backward(const Matrix& pre, const Matrix& grad_out, Matrix& grad_in);

// out += x
void add_inplace(Matrix& out, const Matrix& x);

// out += A (sparse into dense, shapes n x n)
void add_sparse_inplace(Matrix& out, const CsrMatrix& A);

// per-column mean and biased variance over rows
void column_mean_var(const Matrix& x, std::span<double> mean, std::span<double> var);

// Deterministic parallel sum of f(i) for i in [0, count): fixed-size chunks
// are reduced serially and the chunk partials are combined in index order,
// so the result does not depend on the thread count.
double chunked_sum(int64_t count, const std::function<double(int64_t, int64_t)>& range_sum);

// sum over u of  -log(1 - exp(-max(F_u . F_v, eps)))  for CSR entries v>u
// (i.e. each unordered edge once); adjacency comes as the graph CSR arrays.
double edge_nll_sum(std::span<const int64_t> row_ptr, std::span<const int32_t> cols,
                    const Matrix& F, double eps);

// column sums of F (k accumulators), deterministic
void column_sums(const Matrix& F, std::span<double> out);

// sum over rows of F_u . F_u
double self_dot_sum(const Matrix& F);

// sum of F_u . F_v over CSR entries with v > u (each unordered edge once)
double edge_dot_sum(std::span<const int64_t> row_ptr, std::span<const int32_t> cols,
                    const Matrix& F);

namespace ref {
// Serial reference implementations, kept for testing and benchmarking.
void spmm(const CsrMatrix& A, const Matrix& X, Matrix& out);
void matmul(const Matrix& A, const Matrix& B, Matrix& out);
void matmul_tn(const Matrix& A, const Matrix& B, Matrix& out);
void matmul_nt(const Matrix& A, const Matrix& B, Matrix& out);
void relu(const Matrix& x, Matrix& out);
void column_mean_var(const Matrix& x, std::span<double> mean, std::span<double> var);
double edge_nll_sum(std::span<const int64_t> row_ptr, std::span<const int32_t> cols,
                    const Matrix& F, double eps);
double edge_dot_sum(std::span<const int64_t> row_ptr, std::span<const int32_t> cols,
                    const Matrix& F);
}  // namespace ref

}  // namespace dyna::kern

#endif
