#include "spinwit/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spinwit {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

bool DenseMatrix::is_hermitian(double tol) const {
    for (int r = 0; r < dim; ++r)
        for (int c = r; c < dim; ++c)
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
    return true;
}

double DenseMatrix::max_abs_imag() const {
    double m = 0.0;
    for (const cplx& z : a) m = std::max(m, std::abs(z.imag()));
    return m;
}

DenseMatrix matmul(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.dim != y.dim) throw std::invalid_argument("matmul: dimension mismatch");
    int n = x.dim;
    DenseMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            cplx xv = x.at(r, k);
            if (xv == cplx{}) continue;
            const cplx* yrow = &y.a[static_cast<std::size_t>(k) * n];
            cplx* orow = &out.a[static_cast<std::size_t>(r) * n];
            for (int c = 0; c < n; ++c) orow[c] += xv * yrow[c];
        }
    }
    return out;
}

DenseMatrix commutator(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix out = matmul(x, y);
    DenseMatrix yx = matmul(y, x);
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= yx.a[i];
    return out;
}

void axpy(DenseMatrix& y, cplx alpha, const DenseMatrix& x) {
    if (y.dim != x.dim) throw std::invalid_argument("axpy: dimension mismatch");
    for (std::size_t i = 0; i < y.a.size(); ++i) y.a[i] += alpha * x.a[i];
}

double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.dim != y.dim) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

double max_abs(const DenseMatrix& x) {
    double m = 0.0;
    for (const cplx& z : x.a) m = std::max(m, std::abs(z));
    return m;
}

std::vector<cplx> apply(const DenseMatrix& m, const std::vector<cplx>& v) {
    if (static_cast<int>(v.size()) != m.dim) throw std::invalid_argument("apply: size mismatch");
    std::vector<cplx> out(v.size());
    for (int r = 0; r < m.dim; ++r) {
        cplx acc = 0.0;
        const cplx* row = &m.a[static_cast<std::size_t>(r) * m.dim];
        for (int c = 0; c < m.dim; ++c) acc += row[c] * v[c];
        out[r] = acc;
    }
    return out;
}

double norm(const std::vector<cplx>& v) {
    double acc = 0.0;
    for (const cplx& z : v) acc += std::norm(z);
    return std::sqrt(acc);
}

cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner: size mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

double expectation(const DenseMatrix& m, const std::vector<cplx>& v) {
    return inner(v, apply(m, v)).real();
}

JacobiResult jacobi_eigh(std::vector<double> matrix, int n, bool want_vectors,
                         double rel_tol, int max_sweeps) {
    if (n < 0 || static_cast<std::size_t>(n) * n != matrix.size())
        throw std::invalid_argument("jacobi_eigh: bad dimensions");
    auto at = [&](int r, int c) -> double& { return matrix[static_cast<std::size_t>(r) * n + c]; };

    std::vector<double> vec;
    if (want_vectors) {
        vec.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) vec[static_cast<std::size_t>(i) * n + i] = 1.0;
    }

    double fro = 0.0;
    for (double x : matrix) fro += x * x;
    fro = std::sqrt(fro);
    double stop = rel_tol * std::max(fro, 1.0);

    for (int sweep = 0; sweep < max_sweeps && n > 1; ++sweep) {
        double off = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) off += 2.0 * at(r, c) * at(r, c);
        if (std::sqrt(off) <= stop) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        double vkp = vec[static_cast<std::size_t>(k) * n + p];
                        double vkq = vec[static_cast<std::size_t>(k) * n + q];
                        vec[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
                        vec[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    JacobiResult result;
    result.dim = n;
    result.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) result.eigenvalues[i] = at(i, i);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return result.eigenvalues[x] < result.eigenvalues[y];
    });
    std::vector<double> sorted_vals(n);
    for (int i = 0; i < n; ++i) sorted_vals[i] = result.eigenvalues[order[i]];
    result.eigenvalues = std::move(sorted_vals);
    if (want_vectors) {
        result.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < n; ++row)
                result.vectors[static_cast<std::size_t>(row) * n + col] =
                    vec[static_cast<std::size_t>(row) * n + order[col]];
    }
    return result;
}

}  // namespace spinwit
