#include "kron3d/linalg.hpp"

#include "kron3d/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kron3d {

namespace {

constexpr double kHermitianTol = 1e-9;   // entrywise symmetry pre-check
constexpr double kJacobiTol = 1e-12;     // off-diagonal Frobenius, relative
constexpr int kJacobiMaxSweeps = 100;
constexpr double kPsdClampTol = 1e-8;    // relative to lambda_max
constexpr double kSingularTol = 1e-14;   // relative to lambda_max

void require_square(const ComplexMatrix &m, const char *op) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw DimensionMismatchError(std::string(op) + ": matrix must be square, got " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0.0;
    for (int p = 0; p < a.rows(); ++p) {
        for (int q = p + 1; q < a.cols(); ++q) {
            sum += std::norm(a(p, q));
        }
    }
    return std::sqrt(2.0 * sum);
}

} // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) {
        throw InvalidArgumentError("ComplexMatrix: dimensions must be positive");
    }
    entries_.assign(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexVector ComplexMatrix::column(int c) const {
    ComplexVector v(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        v[static_cast<size_t>(r)] = (*this)(r, c);
    }
    return v;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatchError("matrix multiply: inner dimensions differ");
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) {
                continue;
            }
            for (int j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &x) {
    if (static_cast<size_t>(a.cols()) != x.size()) {
        throw DimensionMismatchError("matrix-vector multiply: dimensions differ");
    }
    ComplexVector y(static_cast<size_t>(a.rows()), Complex(0.0, 0.0));
    for (int i = 0; i < a.rows(); ++i) {
        Complex acc(0.0, 0.0);
        for (int k = 0; k < a.cols(); ++k) {
            acc += a(i, k) * x[static_cast<size_t>(k)];
        }
        y[static_cast<size_t>(i)] = acc;
    }
    return y;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("matrix subtract: dimensions differ");
    }
    ComplexMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) - b(i, j);
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (int r = 0; r < b.rows(); ++r) {
                for (int s = 0; s < b.cols(); ++s) {
                    c(i * b.rows() + r, j * b.cols() + s) = aij * b(r, s);
                }
            }
        }
    }
    return c;
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector c(a.size() * b.size());
    size_t idx = 0;
    for (const Complex &ai : a) {
        for (const Complex &bj : b) {
            c[idx++] = ai * bj;
        }
    }
    return c;
}

double frobenius_norm(const ComplexMatrix &m) {
    double sum = 0.0;
    for (const Complex &z : m.entries()) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

double max_abs_entry(const ComplexMatrix &m) {
    double mx = 0.0;
    for (const Complex &z : m.entries()) {
        mx = std::max(mx, std::abs(z));
    }
    return mx;
}

double hermitian_deviation(const ComplexMatrix &m) {
    double mx = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            mx = std::max(mx, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return mx;
}

Complex inner_product(const ComplexVector &a, const ComplexVector &b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError("inner product: lengths differ");
    }
    Complex acc(0.0, 0.0);
    for (size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double norm2(const ComplexVector &v) {
    double sum = 0.0;
    for (const Complex &z : v) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

void normalize(ComplexVector &v) {
    const double n = norm2(v);
    if (n <= 0.0) {
        throw InvalidArgumentError("normalize: zero vector");
    }
    for (Complex &z : v) {
        z /= n;
    }
}

EigenDecomposition hermitian_eig(const ComplexMatrix &m) {
    require_square(m, "hermitian_eig");
    if (!m.all_finite()) {
        throw InvalidArgumentError("hermitian_eig: matrix has non-finite entries");
    }
    const double dev = hermitian_deviation(m);
    if (dev > kHermitianTol) {
        throw NotHermitianError("hermitian_eig: max |m - m^H| = " + std::to_string(dev));
    }

    const int n = m.rows();
    // Work on the exact Hermitian average so the diagonal stays real.
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(frobenius_norm(a), 1e-300);
    bool converged = (n == 1);
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        if (off_diagonal_norm(a) <= kJacobiTol * scale) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double absg = std::abs(g);
                if (absg == 0.0) {
                    continue;
                }
                // Unitary 2x2 rotation zeroing a(p,q): columns
                // (c, -s*conj(w)) and (s*w, c) with w = g/|g|.
                const Complex w = g / absg;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * absg);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                a(p, p) = app * c * c + aqq * s * s - 2.0 * c * s * absg;
                a(q, q) = app * s * s + aqq * c * c + 2.0 * c * s * absg;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) {
                        continue;
                    }
                    const Complex aip = a(i, p);
                    const Complex aiq = a(i, q);
                    a(i, p) = c * aip - s * std::conj(w) * aiq;
                    a(i, q) = s * w * aip + c * aiq;
                    a(p, i) = std::conj(a(i, p));
                    a(q, i) = std::conj(a(i, q));
                }
                for (int i = 0; i < n; ++i) {
                    const Complex vip = v(i, p);
                    const Complex viq = v(i, q);
                    v(i, p) = c * vip - s * std::conj(w) * viq;
                    v(i, q) = s * w * vip + c * viq;
                }
            }
        }
    }
    if (!converged && off_diagonal_norm(a) > kJacobiTol * scale) {
        throw NoConvergenceError("hermitian_eig: Jacobi iteration did not converge in " +
                                 std::to_string(kJacobiMaxSweeps) + " sweeps");
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(static_cast<size_t>(n));
    out.eigenvectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        const int src = order[static_cast<size_t>(j)];
        out.eigenvalues[static_cast<size_t>(j)] = a(src, src).real();
        for (int i = 0; i < n; ++i) {
            out.eigenvectors(i, j) = v(i, src);
        }
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
    EigenDecomposition eig = hermitian_eig(m);
    const int n = m.rows();
    const double lambda_max = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
    const double clamp_floor = -kPsdClampTol * std::max(lambda_max, 0.0);
    std::vector<double> roots(eig.eigenvalues.size());
    for (size_t i = 0; i < eig.eigenvalues.size(); ++i) {
        const double lambda = eig.eigenvalues[i];
        if (lambda < clamp_floor) {
            throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lambda) +
                              " below PSD tolerance");
        }
        roots[i] = std::sqrt(std::max(lambda, 0.0));
    }
    // S = U diag(sqrt(lambda)) U^H, assembled from the upper triangle so the
    // result is Hermitian exactly.
    ComplexMatrix s(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Complex acc(0.0, 0.0);
            for (int k = 0; k < n; ++k) {
                acc += eig.eigenvectors(i, k) * roots[static_cast<size_t>(k)] *
                       std::conj(eig.eigenvectors(j, k));
            }
            if (i == j) {
                s(i, i) = acc.real();
            } else {
                s(i, j) = acc;
                s(j, i) = std::conj(acc);
            }
        }
    }
    return s;
}

double condition_number(const ComplexMatrix &m) {
    EigenDecomposition eig = hermitian_eig(m);
    const double lambda_max = eig.eigenvalues.front();
    const double lambda_min = eig.eigenvalues.back();
    if (lambda_max <= 0.0 || lambda_min <= kSingularTol * lambda_max) {
        throw SingularError("condition_number: smallest eigenvalue " +
                            std::to_string(lambda_min) + " is numerically singular");
    }
    return lambda_max / lambda_min;
}

} // namespace kron3d
