#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kronspec/characters.hpp"
#include "kronspec/dimensions.hpp"
#include "kronspec/entropy.hpp"
#include "kronspec/kronecker.hpp"
#include "kronspec/linalg.hpp"
#include "kronspec/partition.hpp"
#include "kronspec/symfunc.hpp"

namespace kronspec::quantum {

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

/// Non-increasing probability vector summing to 1.
class Spectrum {
public:
    explicit Spectrum(std::vector<double> probabilities) : p_(std::move(probabilities)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (p_[i] < -kPsdTol)
                throw std::invalid_argument("spectrum entry " + std::to_string(p_[i]) +
                                            " below PSD tolerance -1e-10");
            p_[i] = std::clamp(p_[i], 0.0, 1.0);
            if (i > 0 && p_[i] > p_[i - 1] + 1e-12)
                throw std::invalid_argument("spectrum entries must be non-increasing");
            sum += p_[i];
        }
        if (std::abs(sum - 1.0) > kTraceTol)
            throw std::invalid_argument("spectrum sums to " + std::to_string(sum) +
                                        ", residual exceeds 1e-10");
    }

    const std::vector<double>& probabilities() const { return p_; }
    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }

private:
    std::vector<double> p_;
};

/// Complex Hermitian PSD unit-trace matrix, optionally bipartite (m x n).
class DensityMatrix {
public:
    explicit DensityMatrix(linalg::Matrix mat, std::optional<std::pair<int, int>> bipartition = {})
        : mat_(std::move(mat)), bipartition_(bipartition) {
        if (mat_.dim() < 1) throw std::invalid_argument("density matrix must be non-empty");
        if (bipartition_) {
            const auto [m, n] = *bipartition_;
            if (m < 1 || n < 1 || m * n != mat_.dim())
                throw std::invalid_argument("bipartition " + std::to_string(m) + "x" +
                                            std::to_string(n) + " does not factor dimension " +
                                            std::to_string(mat_.dim()));
        }
        double herm_residual = 0.0;
        for (int i = 0; i < mat_.dim(); ++i) {
            for (int j = 0; j < mat_.dim(); ++j)
                herm_residual = std::max(herm_residual,
                                         std::abs(mat_(i, j) - std::conj(mat_(j, i))));
        }
        if (herm_residual > kHermitianTol)
            throw std::invalid_argument("density matrix not Hermitian: residual " +
                                        std::to_string(herm_residual) + " exceeds 1e-10");
        const double trace_residual = std::abs(mat_.trace() - linalg::cd(1.0));
        if (trace_residual > kTraceTol)
            throw std::invalid_argument("density matrix trace differs from 1: residual " +
                                        std::to_string(trace_residual) + " exceeds 1e-10");
        const auto eigs = linalg::hermitian_eigenvalues(hermitized());
        if (!eigs.empty() && eigs.back() < -kPsdTol)
            throw std::invalid_argument("density matrix not PSD: minimum eigenvalue " +
                                        std::to_string(eigs.back()) + " below -1e-10");
    }

    int dim() const { return mat_.dim(); }
    const linalg::Matrix& matrix() const { return mat_; }
    const std::optional<std::pair<int, int>>& bipartition() const { return bipartition_; }

    linalg::Matrix hermitized() const {
        linalg::Matrix h(mat_.dim());
        for (int i = 0; i < mat_.dim(); ++i) {
            for (int j = 0; j < mat_.dim(); ++j) h(i, j) = 0.5 * (mat_(i, j) + std::conj(mat_(j, i)));
        }
        return h;
    }

private:
    linalg::Matrix mat_;
    std::optional<std::pair<int, int>> bipartition_;
};

inline DensityMatrix maximally_mixed(int dim, std::optional<std::pair<int, int>> bipartition = {}) {
    linalg::Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0 / dim;
    return DensityMatrix(std::move(m), bipartition);
}

inline DensityMatrix diagonal_state(const std::vector<double>& probabilities,
                                    std::optional<std::pair<int, int>> bipartition = {}) {
    linalg::Matrix m(static_cast<int>(probabilities.size()));
    for (std::size_t i = 0; i < probabilities.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = probabilities[i];
    return DensityMatrix(std::move(m), bipartition);
}

inline DensityMatrix pure_state(const std::vector<linalg::cd>& amplitudes,
                                std::optional<std::pair<int, int>> bipartition = {}) {
    double norm2 = 0.0;
    for (const auto& a : amplitudes) norm2 += std::norm(a);
    if (norm2 <= 0.0) throw std::invalid_argument("pure state amplitudes must be nonzero");
    linalg::Matrix m(static_cast<int>(amplitudes.size()));
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        for (std::size_t j = 0; j < amplitudes.size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = amplitudes[i] * std::conj(amplitudes[j]) / norm2;
    }
    return DensityMatrix(std::move(m), bipartition);
}

inline DensityMatrix bell_state() {
    const double s = 1.0 / std::sqrt(2.0);
    return pure_state({s, 0.0, 0.0, s}, std::make_pair(2, 2));
}

enum class Subsystem { A, B };

/// Marginal of a bipartite state: keeps subsystem A (dimension m) or B (n).
inline DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    if (!rho.bipartition())
        throw std::invalid_argument("partial trace requires a bipartition");
    const auto [m, n] = *rho.bipartition();
    const auto& full = rho.matrix();
    if (keep == Subsystem::A) {
        linalg::Matrix out(m);
        for (int a = 0; a < m; ++a) {
            for (int a2 = 0; a2 < m; ++a2) {
                linalg::cd sum = 0.0;
                for (int b = 0; b < n; ++b) sum += full(a * n + b, a2 * n + b);
                out(a, a2) = sum;
            }
        }
        return DensityMatrix(std::move(out));
    }
    linalg::Matrix out(n);
    for (int b = 0; b < n; ++b) {
        for (int b2 = 0; b2 < n; ++b2) {
            linalg::cd sum = 0.0;
            for (int a = 0; a < m; ++a) sum += full(a * n + b, a * n + b2);
            out(b, b2) = sum;
        }
    }
    return DensityMatrix(std::move(out));
}

/// Eigenvalues sorted non-increasing, clipped to [0,1] after the -1e-10
/// tolerance check.
inline Spectrum spectrum(const DensityMatrix& rho) {
    return Spectrum(linalg::hermitian_eigenvalues(rho.hermitized()));
}

inline double shannon_entropy(const Spectrum& s) {
    return kronspec::shannon_entropy(std::span<const double>(s.probabilities()));
}
inline double shannon_entropy(const NormalizedWeights& w) {
    return kronspec::shannon_entropy(std::span<const double>(w.entries()));
}

inline double kl_divergence(const NormalizedWeights& p, const Spectrum& q) {
    return kronspec::kl_divergence(std::span<const double>(p.entries()),
                                   std::span<const double>(q.probabilities()));
}

/// L1 distance with zero padding to a common length.
inline double l1_distance(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = std::max(a.size(), b.size());
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        d += std::abs((i < a.size() ? a[i] : 0.0) - (i < b.size() ? b[i] : 0.0));
    return d;
}

struct YoungWeight {
    Partition frame;
    double weight = 0.0;
};

/// Outcome distribution of the Young-frame measurement on rho^(tensor k):
/// weight(lambda) = dim U_lambda * s_lambda(spec rho).
inline std::vector<YoungWeight> young_distribution(const DensityMatrix& rho, int k) {
    const Spectrum r = spectrum(rho);
    const symfunc::SymPoint point{std::vector<double>(r.probabilities())};
    std::vector<YoungWeight> out;
    for (const Partition& lambda : enumerate_partitions(k, rho.dim())) {
        out.push_back({lambda, to_double(dims::dim_u(lambda)) * symfunc::schur(lambda, point)});
    }
    return out;
}

struct FrameBound {
    Partition frame;
    double weight = 0.0;
    double bound = 0.0;  // (k+1)^{d(d-1)/2} exp(-k D(normalized frame || spec))
    bool pass = false;
};

struct KwBoundReport {
    int k = 0;
    int d = 0;
    double eps = 0.0;
    std::vector<FrameBound> frames;
    double tail_weight = 0.0;  // total weight outside the eps-ball
    double tail_bound = 0.0;   // (k+1)^{d(d+1)/2} exp(-k min_outside D)
    bool tail_pass = false;
    bool all_pass = false;
};

/// Per-frame large-deviation bound, plus the aggregated bound for the
/// complement of the eps-ball around the spectrum.
inline KwBoundReport kw_bound_check(const DensityMatrix& rho, int k, double eps = 0.2) {
    if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
    KwBoundReport report;
    report.k = k;
    report.d = rho.dim();
    report.eps = eps;

    const Spectrum r = spectrum(rho);
    const double frame_prefactor =
        std::pow(static_cast<double>(k + 1), report.d * (report.d - 1) / 2.0);
    const double tail_prefactor =
        std::pow(static_cast<double>(k + 1), report.d * (report.d + 1) / 2.0);
    const double slack = 1e-12;

    double min_outside_divergence = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (const YoungWeight& yw : young_distribution(rho, k)) {
        FrameBound fb;
        fb.frame = yw.frame;
        fb.weight = yw.weight;
        const NormalizedWeights bar = normalize(yw.frame);
        const double div = kl_divergence(bar, r);
        fb.bound = std::isinf(div) ? 0.0 : frame_prefactor * std::exp(-k * div);
        fb.pass = fb.weight <= fb.bound + slack;
        ok = ok && fb.pass;
        if (l1_distance(bar.entries(), r.probabilities()) >= eps) {
            report.tail_weight += yw.weight;
            min_outside_divergence = std::min(min_outside_divergence, div);
        }
        report.frames.push_back(std::move(fb));
    }
    report.tail_bound = std::isinf(min_outside_divergence)
                            ? 0.0
                            : tail_prefactor * std::exp(-k * min_outside_divergence);
    report.tail_pass = report.tail_weight <= report.tail_bound + slack;
    report.all_pass = ok && report.tail_pass;
    return report;
}

/// Total Young-distribution weight of frames whose normalization lies
/// strictly inside the eps-ball around the spectrum.
inline double ball_probability(const DensityMatrix& rho, int k, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
    const Spectrum r = spectrum(rho);
    double total = 0.0;
    for (const YoungWeight& yw : young_distribution(rho, k)) {
        if (l1_distance(normalize(yw.frame).entries(), r.probabilities()) < eps) total += yw.weight;
    }
    return total;
}

struct CompatEntry {
    int k = 0;
    Partition lambda;
    Partition mu;
    Partition nu;
    double distance = 0.0;  // total L1 distance of the normalized triple to the spectra
    Int g;
};

using CompatReport = std::vector<CompatEntry>;

/// For each k, the triple (lambda, mu, nu) with nonzero Kronecker coefficient
/// minimizing the total L1 distance to (spec rho^AB, spec rho^A, spec rho^B).
/// Candidate lambdas are pruned to the eps-ball around spec rho^AB, widening
/// eps until a triple qualifies. Ties break to the earliest triple in
/// decreasing lexicographic order of (lambda, mu, nu).
inline CompatReport compat_search(const DensityMatrix& rho, std::span<const int> k_list, double eps,
                                  int kron_cap = kronecker::kDefaultCap) {
    if (!rho.bipartition()) throw std::invalid_argument("compat search requires a bipartition");
    if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
    const auto [m, n] = *rho.bipartition();

    const Spectrum r_ab = spectrum(rho);
    const Spectrum r_a = spectrum(partial_trace(rho, Subsystem::A));
    const Spectrum r_b = spectrum(partial_trace(rho, Subsystem::B));

    CompatReport report;
    for (int k : k_list) {
        if (k < 1) throw std::invalid_argument("compat search requires k >= 1");
        if (k > kron_cap)
            throw std::invalid_argument("compat search k = " + std::to_string(k) +
                                        " exceeds Kronecker cap " + std::to_string(kron_cap));
        characters::CharacterCache cache(k);

        const auto lambdas = enumerate_partitions(k, m * n);
        const auto mus = enumerate_partitions(k, m);
        const auto nus = enumerate_partitions(k, n);
        auto distances = [](const std::vector<Partition>& ps, const Spectrum& target) {
            std::vector<double> d;
            d.reserve(ps.size());
            for (const Partition& p : ps)
                d.push_back(l1_distance(normalize(p).entries(), target.probabilities()));
            return d;
        };
        const std::vector<double> d_lambda = distances(lambdas, r_ab);
        const std::vector<double> d_mu = distances(mus, r_a);
        const std::vector<double> d_nu = distances(nus, r_b);

        std::optional<CompatEntry> best;
        for (double ball = eps; !best; ball *= 2.0) {
            for (std::size_t li = 0; li < lambdas.size(); ++li) {
                if (d_lambda[li] >= ball) continue;
                if (best && d_lambda[li] >= best->distance) continue;
                for (std::size_t mi = 0; mi < mus.size(); ++mi) {
                    if (best && d_lambda[li] + d_mu[mi] >= best->distance) continue;
                    for (std::size_t ni = 0; ni < nus.size(); ++ni) {
                        const double total = d_lambda[li] + d_mu[mi] + d_nu[ni];
                        if (best && total >= best->distance) continue;
                        Int g = kronecker::kron(cache, lambdas[li], mus[mi], nus[ni]);
                        if (g == 0) continue;
                        best = CompatEntry{k, lambdas[li], mus[mi], nus[ni], total, std::move(g)};
                    }
                }
            }
            if (!best && ball > 2.0)
                throw std::invalid_argument("no compatible triple found at k = " + std::to_string(k));
        }
        report.push_back(std::move(*best));
    }
    return report;
}

struct EntropyInequalityReport {
    double s_ab = 0.0;
    double s_a = 0.0;
    double s_b = 0.0;
    bool subadditive = false;      // S(AB) <= S(A) + S(B)
    bool triangle = false;         // S(AB) >= |S(A) - S(B)|
    CompatEntry triple;            // best compat triple at the probe degree
    bool dim_inequality = false;   // dim U(lambda) <= dim U(mu) dim U(nu)
};

/// Entropy inequalities for a bipartite state, plus the dimension-inequality
/// route through the best compatible triple at the probe degree.
inline EntropyInequalityReport entropy_inequality_report(const DensityMatrix& rho, int probe_k = 4,
                                                         double eps = 0.5,
                                                         int kron_cap = kronecker::kDefaultCap) {
    if (!rho.bipartition()) throw std::invalid_argument("entropy report requires a bipartition");
    EntropyInequalityReport report;
    report.s_ab = shannon_entropy(spectrum(rho));
    report.s_a = shannon_entropy(spectrum(partial_trace(rho, Subsystem::A)));
    report.s_b = shannon_entropy(spectrum(partial_trace(rho, Subsystem::B)));
    const double tol = 1e-10;
    report.subadditive = report.s_ab <= report.s_a + report.s_b + tol;
    report.triangle = report.s_ab >= std::abs(report.s_a - report.s_b) - tol;

    const int ks[] = {probe_k};
    report.triple = compat_search(rho, ks, eps, kron_cap).front();
    report.dim_inequality = dims::dim_u(report.triple.lambda) <=
                            dims::dim_u(report.triple.mu) * dims::dim_u(report.triple.nu);
    return report;
}

}  // namespace kronspec::quantum
