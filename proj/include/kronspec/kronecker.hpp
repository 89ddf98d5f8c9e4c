#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "kronspec/bigint.hpp"
#include "kronspec/characters.hpp"
#include "kronspec/dimensions.hpp"
#include "kronspec/entropy.hpp"
#include "kronspec/errors.hpp"
#include "kronspec/partition.hpp"

namespace kronspec::kronecker {

inline constexpr int kDefaultCap = 12;

namespace detail {

inline bool is_single_row(const Partition& p) { return p.rows() == 1; }

// Class-weighted character sum, divided by k! with an exact divisibility
// assertion. Source is anything exposing degree()/class_sizes()/row().
template <typename Source>
Int kron_from_rows(Source& source, const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int k = source.degree();
    if (lambda.weight() != k || mu.weight() != k || nu.weight() != k)
        throw std::invalid_argument("Kronecker weight mismatch");
    const auto& row_l = source.row(lambda);
    const auto& row_m = source.row(mu);
    const auto& row_n = source.row(nu);
    const auto& sizes = source.class_sizes();
    Int sum = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c) sum += sizes[c] * row_l[c] * row_m[c] * row_n[c];
    const Int kf = factorial(k);
    if (sum % kf != 0)
        throw internal_consistency_error("Kronecker class sum not divisible by k! for (" +
                                         lambda.to_string() + ")x(" + mu.to_string() + ")x(" +
                                         nu.to_string() + ")");
    Int g = sum / kf;
    if (g < 0)
        throw internal_consistency_error("negative Kronecker coefficient for (" + lambda.to_string() +
                                         ")x(" + mu.to_string() + ")x(" + nu.to_string() + ")");
    return g;
}

struct TableRows {
    const characters::CharacterTable& table;
    int degree() const { return table.degree; }
    const std::vector<Int>& class_sizes() const { return table.class_sizes; }
    const std::vector<Int>& row(const Partition& p) const { return table.row(p); }
};

}  // namespace detail

inline Int kron(characters::CharacterCache& cache, const Partition& lambda, const Partition& mu,
                const Partition& nu) {
    return detail::kron_from_rows(cache, lambda, mu, nu);
}

inline Int kron(const characters::CharacterTable& table, const Partition& lambda, const Partition& mu,
                const Partition& nu) {
    detail::TableRows rows{table};
    return detail::kron_from_rows(rows, lambda, mu, nu);
}

/// One-shot evaluation; builds the character rows it needs.
inline Int kron(const Partition& lambda, const Partition& mu, const Partition& nu,
                int cap = kDefaultCap) {
    if (lambda.weight() != mu.weight() || mu.weight() != nu.weight())
        throw std::invalid_argument("Kronecker weight mismatch");
    if (lambda.weight() > cap)
        throw std::invalid_argument("Kronecker weight " + std::to_string(lambda.weight()) +
                                    " exceeds cap " + std::to_string(cap));
    characters::CharacterCache cache(lambda.weight());
    return kron(cache, lambda, mu, nu);
}

struct KroneckerTriple {
    Partition lambda;
    Partition mu;
    Partition nu;
    Int g;
};

/// All triples with nonzero g under the row restrictions, in decreasing
/// lexicographic order of (lambda, mu, nu). Triples containing the trivial
/// representation are resolved by the identity g_{lambda,mu,(k)} = delta
/// without evaluating the sum.
inline std::vector<KroneckerTriple> kron_table(characters::CharacterCache& cache,
                                               std::array<int, 3> max_rows_each) {
    const int k = cache.degree();
    const auto lambdas = enumerate_partitions(k, max_rows_each[0]);
    const auto mus = enumerate_partitions(k, max_rows_each[1]);
    const auto nus = enumerate_partitions(k, max_rows_each[2]);
    std::vector<KroneckerTriple> out;
    for (const Partition& lambda : lambdas) {
        for (const Partition& mu : mus) {
            for (const Partition& nu : nus) {
                Int g;
                if (detail::is_single_row(nu)) {
                    g = lambda == mu ? 1 : 0;
                } else if (detail::is_single_row(mu)) {
                    g = lambda == nu ? 1 : 0;
                } else if (detail::is_single_row(lambda)) {
                    g = mu == nu ? 1 : 0;
                } else {
                    g = kron(cache, lambda, mu, nu);
                }
                if (g != 0) out.push_back({lambda, mu, nu, std::move(g)});
            }
        }
    }
    return out;
}

inline std::vector<KroneckerTriple> kron_table(int k, std::array<int, 3> max_rows_each,
                                               int cap = kDefaultCap) {
    if (k > cap)
        throw std::invalid_argument("Kronecker weight " + std::to_string(k) + " exceeds cap " +
                                    std::to_string(cap));
    characters::CharacterCache cache(k);
    return kron_table(cache, max_rows_each);
}

/// Clebsch-Gordan dimension identity for S_k:
/// dim_u(mu) * dim_u(nu) == sum_lambda g_{lambda,mu,nu} dim_u(lambda), exactly.
inline bool cg_dimension_check(characters::CharacterCache& cache, const Partition& mu,
                               const Partition& nu) {
    const int k = cache.degree();
    if (mu.weight() != k || nu.weight() != k) throw std::invalid_argument("Kronecker weight mismatch");
    Int rhs = 0;
    for (const Partition& lambda : enumerate_partitions(k, k))
        rhs += kron(cache, lambda, mu, nu) * dims::dim_u(lambda);
    return dims::dim_u(mu) * dims::dim_u(nu) == rhs;
}

inline bool cg_dimension_check(const Partition& mu, const Partition& nu, int cap = kDefaultCap) {
    if (mu.weight() > cap)
        throw std::invalid_argument("Kronecker weight " + std::to_string(mu.weight()) +
                                    " exceeds cap " + std::to_string(cap));
    characters::CharacterCache cache(mu.weight());
    return cg_dimension_check(cache, mu, nu);
}

struct StretchCheck {
    int n = 0;
    Partition lambda;
    Partition mu;
    Partition nu;
    Int g;
    bool nonzero = false;
};

/// Empirical test of the stretching property: g != 0 should imply
/// g_{N lambda, N mu, N nu} != 0 for every N.
inline std::vector<StretchCheck> stretch_nonvanishing_check(const Partition& lambda,
                                                            const Partition& mu, const Partition& nu,
                                                            int n_max, int cap = kDefaultCap) {
    if (n_max < 1) throw std::invalid_argument("stretch factor bound must be positive");
    if (n_max * lambda.weight() > cap)
        throw std::invalid_argument("stretched weight " + std::to_string(n_max * lambda.weight()) +
                                    " exceeds cap " + std::to_string(cap));
    if (kron(lambda, mu, nu, cap) == 0)
        throw std::invalid_argument("stretch check requires a triple with nonzero Kronecker coefficient");
    std::vector<StretchCheck> out;
    for (int n = 1; n <= n_max; ++n) {
        StretchCheck check;
        check.n = n;
        check.lambda = stretch(lambda, n);
        check.mu = stretch(mu, n);
        check.nu = stretch(nu, n);
        check.g = kron(check.lambda, check.mu, check.nu, cap);
        check.nonzero = check.g != 0;
        out.push_back(std::move(check));
    }
    return out;
}

struct EntropyTripleReport {
    Int g;
    bool applicable = false;  // g != 0
    double h_lambda = 0.0;
    double h_mu = 0.0;
    double h_nu = 0.0;
    bool holds = true;  // all three cyclic assignments, slack 1e-12
};

/// When g != 0, checks H(normalized lambda) <= H(normalized mu) + H(normalized nu)
/// under all three cyclic assignments.
inline EntropyTripleReport entropy_triple_check(const Partition& lambda, const Partition& mu,
                                                const Partition& nu, int cap = kDefaultCap) {
    EntropyTripleReport report;
    report.g = kron(lambda, mu, nu, cap);
    report.applicable = report.g != 0;
    report.h_lambda = shannon_entropy(normalize(lambda).entries());
    report.h_mu = shannon_entropy(normalize(mu).entries());
    report.h_nu = shannon_entropy(normalize(nu).entries());
    if (report.applicable) {
        const double slack = 1e-12;
        report.holds = report.h_lambda <= report.h_mu + report.h_nu + slack &&
                       report.h_mu <= report.h_nu + report.h_lambda + slack &&
                       report.h_nu <= report.h_lambda + report.h_mu + slack;
    }
    return report;
}

}  // namespace kronspec::kronecker
