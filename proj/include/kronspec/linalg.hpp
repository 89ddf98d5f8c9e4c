#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace kronspec::linalg {

using cd = std::complex<double>;

/// Dense square complex matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("matrix dimension must be non-negative");
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return n_; }

    cd& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const cd& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Matrix& operator+=(const Matrix& o) {
        check_same_dim(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_dim(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix& operator*=(cd s) {
        for (cd& v : a_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, cd s) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check_same_dim(b);
        const int n = a.n_;
        Matrix out(n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const cd aik = a(i, k);
                if (aik == cd{}) continue;
                for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
            }
        }
        return out;
    }

    Matrix adjoint() const {
        Matrix out(n_);
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
        }
        return out;
    }

    cd trace() const {
        cd t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cd& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const cd& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    void check_same_dim(const Matrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    }

    int n_ = 0;
    std::vector<cd> a_;
};

/// Kronecker product of square matrices.
inline Matrix tensor_product(const Matrix& a, const Matrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    Matrix out(na * nb);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) {
            const cd aij = a(i, j);
            if (aij == cd{}) continue;
            for (int k = 0; k < nb; ++k) {
                for (int l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
            }
        }
    }
    return out;
}

inline Matrix tensor_power(const Matrix& a, int k) {
    if (k < 1) throw std::invalid_argument("tensor power must be at least 1");
    Matrix out = a;
    for (int i = 1; i < k; ++i) out = tensor_product(out, a);
    return out;
}

/// tr(A B) without forming the product.
inline cd trace_product(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    cd t = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) t += a(i, j) * b(j, i);
    }
    return t;
}

/// Eigenvalues of a Hermitian matrix by the cyclic Jacobi method, sorted
/// non-increasing. Stops when the off-diagonal Frobenius mass drops below
/// off_tol (relative to the matrix norm for norms above 1), or after
/// max_sweeps sweeps.
inline std::vector<double> hermitian_eigenvalues(Matrix a, double off_tol = 1e-13,
                                                 int max_sweeps = 100) {
    const int n = a.dim();
    if (n == 0) return {};
    const double scale = std::max(1.0, a.frobenius_norm());

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) off += 2.0 * std::norm(a(i, j));
        }
        if (std::sqrt(off) < off_tol * scale) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cd apq = a(p, q);
                const double g = std::abs(apq);
                if (g == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cd u = apq / g;  // phase of the pivot entry

                const double tau = (aqq - app) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- J^dagger A J with J_pp = c, J_pq = s, J_qp = -s conj(u), J_qq = c conj(u)
                for (int i = 0; i < n; ++i) {
                    const cd aip = a(i, p);
                    const cd aiq = a(i, q);
                    a(i, p) = c * aip - s * std::conj(u) * aiq;
                    a(i, q) = s * aip + c * std::conj(u) * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const cd apj = a(p, j);
                    const cd aqj = a(q, j);
                    a(p, j) = c * apj - s * u * aqj;
                    a(q, j) = s * apj + c * u * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<double> eigs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eigs[static_cast<std::size_t>(i)] = a(i, i).real();
    std::sort(eigs.begin(), eigs.end(), std::greater<>());
    return eigs;
}

/// Singular values, non-increasing (square matrices only).
inline std::vector<double> singular_values(const Matrix& m) {
    const Matrix gram = m.adjoint() * m;
    std::vector<double> eigs = hermitian_eigenvalues(gram);
    for (double& e : eigs) e = std::sqrt(std::max(e, 0.0));
    return eigs;
}

inline double operator_norm(const Matrix& m) {
    const auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
}

/// Count of singular values above rel_tol times the largest one.
inline int numerical_rank(const Matrix& m, double rel_tol = 1e-8) {
    const auto sv = singular_values(m);
    if (sv.empty() || sv.front() == 0.0) return 0;
    int rank = 0;
    for (double s : sv) {
        if (s > rel_tol * sv.front()) ++rank;
    }
    return rank;
}

}  // namespace kronspec::linalg
