#include "dyna/kernels.hpp"

#include <cassert>
#include <cmath>
#include <vector>

namespace dyna::kern {

namespace {
constexpr int64_t kChunk = 2048;  // rows per reduction chunk; fixed, not thread-dependent
}

void spmm(const CsrMatrix& A, const Matrix& X, Matrix& out) {
    assert(A.n == X.rows() && out.rows() == A.n && out.cols() == X.cols());
    const int64_t c = X.cols();
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < A.n; ++i) {
        double* o = out.data() + i * c;
        std::fill(o, o + c, 0.0);
        for (int64_t e = A.row_ptr[i]; e < A.row_ptr[i + 1]; ++e) {
            const double a = A.vals[e];
            const double* x = X.data() + static_cast<int64_t>(A.cols[e]) * c;
            for (int64_t j = 0; j < c; ++j) o[j] += a * x[j];
        }
    }
}

void matmul(const Matrix& A, const Matrix& B, Matrix& out) {
    assert(A.cols() == B.rows() && out.rows() == A.rows() && out.cols() == B.cols());
    const int64_t p = A.cols(), c = B.cols();
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < A.rows(); ++i) {
        double* o = out.data() + i * c;
        std::fill(o, o + c, 0.0);
        const double* a = A.data() + i * p;
        for (int64_t k = 0; k < p; ++k) {
            const double aik = a[k];
            if (aik == 0.0) continue;
            const double* b = B.data() + k * c;
            for (int64_t j = 0; j < c; ++j) o[j] += aik * b[j];
        }
    }
}

void matmul_tn(const Matrix& A, const Matrix& B, Matrix& out) {
    assert(A.rows() == B.rows() && out.rows() == A.cols() && out.cols() == B.cols());
    const int64_t m = A.rows(), p = A.cols(), c = B.cols();
    const int64_t nchunks = (m + kChunk - 1) / kChunk;
    out.fill(0.0);
    if (nchunks <= 1) {
        for (int64_t i = 0; i < m; ++i) {
            const double* a = A.data() + i * p;
            const double* b = B.data() + i * c;
            for (int64_t k = 0; k < p; ++k) {
                double* o = out.data() + k * c;
                const double aik = a[k];
                if (aik == 0.0) continue;
                for (int64_t j = 0; j < c; ++j) o[j] += aik * b[j];
            }
        }
        return;
    }
    // chunk partials combined in index order so the result is thread-count independent
    std::vector<Matrix> partials(nchunks);
#pragma omp parallel for schedule(static)
    for (int64_t ch = 0; ch < nchunks; ++ch) {
        Matrix& part = partials[ch];
        part = Matrix(p, c, 0.0);
        const int64_t lo = ch * kChunk, hi = std::min(m, lo + kChunk);
        for (int64_t i = lo; i < hi; ++i) {
            const double* a = A.data() + i * p;
            const double* b = B.data() + i * c;
            for (int64_t k = 0; k < p; ++k) {
                double* o = part.data() + k * c;
                const double aik = a[k];
                if (aik == 0.0) continue;
                for (int64_t j = 0; j < c; ++j) o[j] += aik * b[j];
            }
        }
    }
    for (int64_t ch = 0; ch < nchunks; ++ch) add_inplace(out, partials[ch]);
}

void matmul_nt(const Matrix& A, const Matrix& B, Matrix& out) {
    assert(A.cols() == B.cols() && out.rows() == A.rows() && out.cols() == B.rows());
    const int64_t p = A.cols(), c = B.rows();
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < A.rows(); ++i) {
        const double* a = A.data() + i * p;
        double* o = out.data() + i * c;
        for (int64_t j = 0; j < c; ++j) {
            const double* b = B.data() + j * p;
            double s = 0.0;
            for (int64_t k = 0; k < p; ++k) s += a[k] * b[k];
            o[j] = s;
        }
    }
}

void relu(const Matrix& x, Matrix& out) {
    assert(x.same_shape(out));
    const int64_t sz = x.size();
    const double* in = x.data();
    double* o = out.data();
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < sz; ++i) o[i] = in[i] > 0.0 ? in[i] : 0.0;
}

void relu_backward(const Matrix& pre, const Matrix& grad_out, Matrix& grad_in) {
    assert(pre.same_shape(grad_out) && pre.same_shape(grad_in));
    const int64_t sz = pre.size();
    const double* p = pre.data();
    const double* go = grad_out.data();
    double* gi = grad_in.data();
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < sz; ++i) gi[i] = p[i] > 0.0 ? go[i] : 0.0;
}

void add_inplace(Matrix& out, const Matrix& x) {
    assert(out.same_shape(x));
    const int64_t sz = out.size();
    double* o = out.data();
    const double* in = x.data();
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < sz; ++i) o[i] += in[i];
}

void add_sparse_inplace(Matrix& out, const CsrMatrix& A) {
    assert(out.rows() == A.n && out.cols() == A.n);
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < A.n; ++i) {
        double* o = out.data() + i * A.n;
        for (int64_t e = A.row_ptr[i]; e < A.row_ptr[i + 1]; ++e) o[A.cols[e]] += A.vals[e];
    }
}

void column_mean_var(const Matrix& x, std::span<double> mean, std::span<double> var) {
    assert(static_cast<int64_t>(mean.size()) == x.cols() &&
           static_cast<int64_t>(var.size()) == x.cols());
    const int64_t n = x.rows(), c = x.cols();
    const double inv_n = 1.0 / static_cast<double>(n);
#pragma omp parallel for schedule(static)
    for (int64_t j = 0; j < c; ++j) {
        double s = 0.0;
        for (int64_t i = 0; i < n; ++i) s += x(i, j);
        const double mu = s * inv_n;
        double v = 0.0;
        for (int64_t i = 0; i < n; ++i) {
            const double d = x(i, j) - mu;
            v += d * d;
        }
        mean[j] = mu;
        var[j] = v * inv_n;
    }
}

double chunked_sum(int64_t count, const std::function<double(int64_t, int64_t)>& range_sum) {
    const int64_t nchunks = (count + kChunk - 1) / kChunk;
    if (nchunks <= 1) return count > 0 ? range_sum(0, count) : 0.0;
    std::vector<double> partial(nchunks);
#pragma omp parallel for schedule(static)
    for (int64_t ch = 0; ch < nchunks; ++ch) {
        const int64_t lo = ch * kChunk, hi = std::min(count, lo + kChunk);
        partial[ch] = range_sum(lo, hi);
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

namespace {

inline double pair_nll(const double* fu, const double* fv, int64_t k, double eps) {
    double x = 0.0;
    for (int64_t j = 0; j < k; ++j) x += fu[j] * fv[j];
    if (x < eps) x = eps;
    // 1 - exp(-x) = -expm1(-x), accurate for tiny x
    return -std::log(-std::expm1(-x));
}

}  // namespace

double edge_nll_sum(std::span<const int64_t> row_ptr, std::span<const int32_t> cols,
                    const Matrix& F, double eps) {
    const int64_t n = static_cast<int64_t>(row_ptr.size()) - 1;
    const int64_t k = F.cols();
    return chunked_sum(n, [&](int64_t lo, int64_t hi) {
        double s = 0.0;
        for (int64_t u = lo; u < hi; ++u) {
            const double* fu = F.data() + u * k;
            for (int64_t e = row_ptr[u]; e < row_ptr[u + 1]; ++e) {
                const int32_t v = cols[e];
                if (v <= u) continue;  // each unordered edge once
                s += pair_nll(fu, F.data() + static_cast<int64_t>(v) * k, k, eps);
            }
        }
        return s;
    });
}

void column_sums(const Matrix& F, std::span<double> out) {
    assert(static_cast<int64_t>(out.size()) == F.cols());
    const int64_t n = F.rows(), k = F.cols();
#pragma omp parallel for schedule(static)
    for (int64_t j = 0; j < k; ++j) {
        double s = 0.0;
        for (int64_t i = 0; i < n; ++i) s += F(i, j);
        out[j] = s;
    }
}

double self_dot_sum(const Matrix& F) {
    const int64_t k = F.cols();
    return chunked_sum(F.rows(), [&](int64_t lo, int64_t hi) {
        double s = 0.0;
        for (int64_t i = lo; i < hi; ++i) {
            const double* f = F.data() + i * k;
            for (int64_t j = 0; j < k; ++j) s += f[j] * f[j];
        }
        return s;
    });
}

double edge_dot_sum(std::span<const int64_t> row_ptr, std::span<const int32_t> cols,
                    const Matrix& F) {
    const int64_t n = static_cast<int64_t>(row_ptr.size()) - 1;
    const int64_t k = F.cols();
    return chunked_sum(n, [&](int64_t lo, int64_t hi) {
        double s = 0.0;
        for (int64_t u = lo; u < hi; ++u) {
            const double* fu = F.data() + u * k;
            for (int64_t e = row_ptr[u]; e < row_ptr[u + 1]; ++e) {
                const int32_t v = cols[e];
                if (v <= u) continue;
                const double* fv = F.data() + static_cast<int64_t>(v) * k;
                double x = 0.0;
                for (int64_t j = 0; j < k; ++j) x += fu[j] * fv[j];
                s += x;
            }
        }
        return s;
    });
}

namespace ref {

void spmm(const CsrMatrix& A, const Matrix& X, Matrix& out) {
    const int64_t c = X.cols();
    for (int64_t i = 0; i < A.n; ++i) {
        double* o = out.data() + i * c;
        std::fill(o, o + c, 0.0);
        for (int64_t e = A.row_ptr[i]; e < A.row_ptr[i + 1]; ++e) {
            const double a = A.vals[e];
            const double* x = X.data() + static_cast<int64_t>(A.cols[e]) * c;
            for (int64_t j = 0; j < c; ++j) o[j] += a * x[j];
        }
    }
}

void matmul(const Matrix& A, const Matrix& B, Matrix& out) {
    const int64_t p = A.cols(), c = B.cols();
    for (int64_t i = 0; i < A.rows(); ++i) {
        double* o = out.data() + i * c;
        std::fill(o, o + c, 0.0);
        for (int64_t k = 0; k < p; ++k) {
            const double aik = A(i, k);
            if (aik == 0.0) continue;
            const double* b = B.data() + k * c;
            for (int64_t j = 0; j < c; ++j) o[j] += aik * b[j];
        }
    }
}

void matmul_tn(const Matrix& A, const Matrix& B, Matrix& out) {
    const int64_t m = A.rows(), p = A.cols(), c = B.cols();
    out.fill(0.0);
    for (int64_t i = 0; i < m; ++i) {
        const double* b = B.data() + i * c;
        for (int64_t k = 0; k < p; ++k) {
            const double aik = A(i, k);
            if (aik == 0.0) continue;
            double* o = out.data() + k * c;
            for (int64_t j = 0; j < c; ++j) o[j] += aik * b[j];
        }
    }
}

void matmul_nt(const Matrix& A, const Matrix& B, Matrix& out) {
    const int64_t p = A.cols(), c = B.rows();
    for (int64_t i = 0; i < A.rows(); ++i) {
        for (int64_t j = 0; j < c; ++j) {
            double s = 0.0;
            for (int64_t k = 0; k < p; ++k) s += A(i, k) * B(j, k);
            out(i, j) = s;
        }
    }
}

void relu(const Matrix& x, Matrix& out) {
    for (int64_t i = 0; i < x.size(); ++i)
        out.data()[i] = x.data()[i] > 0.0 ? x.data()[i] : 0.0;
}

void column_mean_var(const Matrix& x, std::span<double> mean, std::span<double> var) {
    const int64_t n = x.rows(), c = x.cols();
    for (int64_t j = 0; j < c; ++j) {
        double s = 0.0;
        for (int64_t i = 0; i < n; ++i) s += x(i, j);
        const double mu = s / static_cast<double>(n);
        double v = 0.0;
        for (int64_t i = 0; i < n; ++i) {
            const double d = x(i, j) - mu;
            v += d * d;
        }
        mean[j] = mu;
        var[j] = v / static_cast<double>(n);
    }
}

double edge_nll_sum(std::span<const int64_t> row_ptr, std::span<const int32_t> cols,
                    const Matrix& F, double eps) {
    const int64_t n = static_cast<int64_t>(row_ptr.size()) - 1;
    const int64_t k = F.cols();
    double s = 0.0;
    for (int64_t u = 0; u < n; ++u) {
        const double* fu = F.data() + u * k;
        for (int64_t e = row_ptr[u]; e < row_ptr[u + 1]; ++e) {
            const int32_t v = cols[e];
            if (v <= u) continue;
            s += pair_nll(fu, F.data() + static_cast<int64_t>(v) * k, k, eps);
        }
    }
    return s;
}

double edge_dot_sum(std::span<const int64_t> row_ptr, std::span<const int32_t> cols,
                    const Matrix& F) {
    const int64_t n = static_cast<int64_t>(row_ptr.size()) - 1;
    const int64_t k = F.cols();
    double s = 0.0;
    for (int64_t u = 0; u < n; ++u) {
        const double* fu = F.data() + u * k;
        for (int64_t e = row_ptr[u]; e < row_ptr[u + 1]; ++e) {
            const int32_t v = cols[e];
            if (v <= u) continue;
            const double* fv = F.data() + static_cast<int64_t>(v) * k;
            double x = 0.0;
            for (int64_t j = 0; j < k; ++j) x += fu[j] * fv[j];
            s += x;
        }
    }
    return s;
}

}  // namespace ref

}  // namespace dyna::kern
