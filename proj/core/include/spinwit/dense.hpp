#pragma once

#include <complex>
#include <vector>

namespace spinwit {

using cplx = std::complex<double>;

// Dense square complex matrix, row major. Used for operators on small
// product spaces; hermiticity is a property to verify, not an assumption
// baked into the storage.
struct DenseMatrix {
    int dim = 0;
    std::vector<cplx> a;

    DenseMatrix() = default;
    explicit DenseMatrix(int n) : dim(n), a(static_cast<std::size_t>(n) * n) {}

    cplx& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
    const cplx& at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }

    static DenseMatrix identity(int n);

    bool is_hermitian(double tol = 1e-12) const;
    double max_abs_imag() const;
};

DenseMatrix matmul(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix commutator(const DenseMatrix& x, const DenseMatrix& y);  // xy - yx
void axpy(DenseMatrix& y, cplx alpha, const DenseMatrix& x);         // y += alpha x
double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y);
double max_abs(const DenseMatrix& x);

std::vector<cplx> apply(const DenseMatrix& m, const std::vector<cplx>& v);
double norm(const std::vector<cplx>& v);
cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y);  // conj(x) . y

// <v|m|v> for hermitian m; returns the real part.
double expectation(const DenseMatrix& m, const std::vector<cplx>& v);

// Eigenvalues (ascending) and, optionally, matching eigenvectors in the
// columns of `vectors` (row-major n x n). Cyclic Jacobi on a real symmetric
// matrix; off-diagonal mass is driven below rel_tol * frobenius.
struct JacobiResult {
    std::vector<double> eigenvalues;
    std::vector<double> vectors;
    int dim = 0;

    double vector_entry(int row, int col) const {
        return vectors[static_cast<std::size_t>(row) * dim + col];
    }
};

JacobiResult jacobi_eigh(std::vector<double> matrix, int n, bool want_vectors,
                         double rel_tol = 1e-12, int max_sweeps = 100);

}  // namespace spinwit
