#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "kronspec/linalg.hpp"
#include "kronspec/quantum.hpp"

namespace kronspec {

/// Deterministic random source. Gaussian variates come from an explicit
/// Box-Muller transform over mt19937_64 output, so sequences are identical
/// across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    linalg::cd complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

/// Hilbert-Schmidt random density matrix: G G^dagger normalized to unit trace.
inline quantum::DensityMatrix random_density_matrix(Rng& rng, int dim,
                                                    std::optional<std::pair<int, int>> bipartition = {}) {
    linalg::Matrix g(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
    }
    linalg::Matrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    rho *= linalg::cd(1.0 / tr);
    return quantum::DensityMatrix(std::move(rho), bipartition);
}

/// Haar-ish random unitary via Gram-Schmidt on a complex Gaussian matrix.
inline linalg::Matrix random_unitary(Rng& rng, int dim) {
    linalg::Matrix g(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
    }
    // orthonormalize columns
    for (int c = 0; c < dim; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            linalg::cd overlap = 0.0;
            for (int i = 0; i < dim; ++i) overlap += std::conj(g(i, prev)) * g(i, c);
            for (int i = 0; i < dim; ++i) g(i, c) -= overlap * g(i, prev);
        }
        double norm = 0.0;
        for (int i = 0; i < dim; ++i) norm += std::norm(g(i, c));
        norm = std::sqrt(norm);
        for (int i = 0; i < dim; ++i) g(i, c) /= norm;
    }
    return g;
}

/// Random orthogonal projector of the given rank: U diag(1..1,0..0) U^dagger.
inline linalg::Matrix random_projector(Rng& rng, int dim, int rank) {
    const linalg::Matrix u = random_unitary(rng, dim);
    linalg::Matrix p(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            linalg::cd sum = 0.0;
            for (int r = 0; r < rank; ++r) sum += u(i, r) * std::conj(u(j, r));
            p(i, j) = sum;
        }
    }
    return p;
}

}  // namespace kronspec
