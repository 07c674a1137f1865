#ifndef KRON3D_LINALG_HPP
#define KRON3D_LINALG_HPP

#include <complex>
#include <vector>

namespace kron3d {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Dense complex matrix, row-major storage.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex &operator()(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Complex &operator()(int r, int c) const {
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }

    const std::vector<Complex> &entries() const { return entries_; }
    std::vector<Complex> &entries() { return entries_; }

    ComplexVector column(int c) const;
    ComplexMatrix adjoint() const;

    bool all_finite() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> entries_;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues; // sorted descending
    ComplexMatrix eigenvectors;      // column j pairs with eigenvalues[j]
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &x);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);

// Kronecker product: block (i,j) of the result is a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
// Column-vector Kronecker product: (a ⊗ b)[i*len(b)+j] = a[i]*b[j].
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);

double frobenius_norm(const ComplexMatrix &m);
double max_abs_entry(const ComplexMatrix &m);
double hermitian_deviation(const ComplexMatrix &m); // max entrywise |m - m^H|

Complex inner_product(const ComplexVector &a, const ComplexVector &b); // a^H b
double norm2(const ComplexVector &v);
void normalize(ComplexVector &v);

// Eigendecomposition of a Hermitian matrix via cyclic Jacobi rotations.
// Inputs must be Hermitian within 1e-9 entrywise; throws NotHermitianError
// otherwise, NoConvergenceError if 100 sweeps do not reach an off-diagonal
// Frobenius norm below 1e-12 relative to the matrix norm.
EigenDecomposition hermitian_eig(const ComplexMatrix &m);

// Hermitian square root of a PSD matrix. Eigenvalues below -1e-8 * lambda_max
// raise NotPsdError; small negatives inside that window are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix &m);

// lambda_max / lambda_min for a Hermitian positive definite matrix.
// Throws SingularError when lambda_min <= 1e-14 * lambda_max.
double condition_number(const ComplexMatrix &m);

} // namespace kron3d

#endif
