#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "kronspec/characters.hpp"
#include "kronspec/dimensions.hpp"
#include "kronspec/errors.hpp"
#include "kronspec/linalg.hpp"
#include "kronspec/partition.hpp"
#include "kronspec/quantum.hpp"

namespace kronspec::oracle {

inline constexpr int kDefaultDimCap = 4096;
inline constexpr int kCentralProjectorDegreeCap = 6;  // k! terms per projector

using OperatorMatrix = linalg::Matrix;

/// Young tableau: a frame filled with 1..k, increasing along rows and down
/// columns.
struct Tableau {
    Partition frame;
    std::vector<std::vector<int>> entries;

    /// Canonical filling: boxes numbered row by row, left to right.
    static Tableau row_major(const Partition& frame) {
        Tableau t;
        t.frame = frame;
        int next = 1;
        for (int p : frame.parts()) {
            std::vector<int> row(static_cast<std::size_t>(p));
            std::iota(row.begin(), row.end(), next);
            next += p;
            t.entries.push_back(std::move(row));
        }
        return t;
    }

    bool is_standard() const {
        const int k = frame.weight();
        if (static_cast<int>(entries.size()) != frame.rows()) return false;
        std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (static_cast<int>(entries[i].size()) != frame.parts()[i]) return false;
            for (std::size_t j = 0; j < entries[i].size(); ++j) {
                const int v = entries[i][j];
                if (v < 1 || v > k || seen[static_cast<std::size_t>(v)]) return false;
                seen[static_cast<std::size_t>(v)] = true;
                if (j > 0 && entries[i][j - 1] >= v) return false;
                if (i > 0 && entries[i - 1][j] >= v) return false;
            }
        }
        return true;
    }
};

namespace detail {

inline long long checked_power_dim(int d, int k, int dim_cap) {
    long long dim = 1;
    for (int i = 0; i < k; ++i) {
        dim *= d;
        if (dim > dim_cap)
            throw std::invalid_argument("tensor space dimension " + std::to_string(d) + "^" +
                                        std::to_string(k) + " exceeds cap " + std::to_string(dim_cap));
    }
    return dim;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& pi) {
    std::vector<int> inv(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) inv[static_cast<std::size_t>(pi[i])] = static_cast<int>(i);
    return inv;
}

inline CycleType cycle_type_of(const std::vector<int>& pi) {
    const int k = static_cast<int>(pi.size());
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    std::vector<int> cycles;
    for (int start = 0; start < k; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int len = 0;
        int cur = start;
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            cur = pi[static_cast<std::size_t>(cur)];
            ++len;
        }
        cycles.push_back(len);
    }
    return CycleType(std::move(cycles));
}

inline int permutation_sign(const std::vector<int>& pi) { return cycle_type_of(pi).sign(); }

// Destination basis index under the slot action of pi: slot t of the image
// carries digit i_{pi^{-1}(t)}.
inline int permuted_index(int index, const std::vector<int>& inv, int d, int k) {
    std::vector<int> digits(static_cast<std::size_t>(k));
    int rem = index;
    for (int t = k - 1; t >= 0; --t) {
        digits[static_cast<std::size_t>(t)] = rem % d;
        rem /= d;
    }
    int out = 0;
    for (int t = 0; t < k; ++t) out = out * d + digits[static_cast<std::size_t>(inv[static_cast<std::size_t>(t)])];
    return out;
}

// Permutations fixing each row (or each column) of the tableau setwise,
// as 0-based permutations of {0..k-1}.
inline std::vector<std::vector<int>> stabilizer_group(const std::vector<std::vector<int>>& blocks,
                                                      int k) {
    std::vector<std::vector<std::vector<int>>> per_block;
    for (const auto& block : blocks) {
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::vector<int>> arrangements;
        std::vector<int> arr = sorted;
        do {
            arrangements.push_back(arr);
        } while (std::next_permutation(arr.begin(), arr.end()));
        per_block.push_back(std::move(arrangements));
        (void)sorted;
    }

    std::vector<std::vector<int>> group;
    std::vector<std::size_t> pick(per_block.size(), 0);
    while (true) {
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            std::vector<int> sorted = blocks[b];
            std::sort(sorted.begin(), sorted.end());
            const auto& arr = per_block[b][pick[b]];
            for (std::size_t i = 0; i < sorted.size(); ++i)
                perm[static_cast<std::size_t>(sorted[i] - 1)] = arr[i] - 1;
        }
        group.push_back(std::move(perm));
        std::size_t b = 0;
        for (; b < per_block.size(); ++b) {
            if (++pick[b] < per_block[b].size()) break;
            pick[b] = 0;
        }
        if (b == per_block.size()) break;
    }
    return group;
}

}  // namespace detail

/// 0/1 matrix permuting the computational basis of (C^d)^(tensor k) by the
/// slot action of pi (0-based images).
inline OperatorMatrix perm_operator(const std::vector<int>& pi, int d, int dim_cap = kDefaultDimCap) {
    const int k = static_cast<int>(pi.size());
    const long long dim = detail::checked_power_dim(d, k, dim_cap);
    const auto inv = detail::inverse_permutation(pi);
    OperatorMatrix m(static_cast<int>(dim));
    for (int col = 0; col < dim; ++col) m(detail::permuted_index(col, inv, d, k), col) = 1.0;
    return m;
}

struct SymmetrizerResult {
    OperatorMatrix e;  // e(T) = (column antisymmetrizer) (row symmetrizer)
    double r = 0.0;    // scalar with e^2 = r e, integral
    OperatorMatrix p;  // e / r, an idempotent
    int rank = 0;      // numerical rank of p == dim V_frame
};

/// Builds the Young symmetry operator for T on (C^d)^(tensor k), measures the
/// scalar r with e^2 = r e, and verifies r is a positive integer and the
/// normalized projection has rank dim V.
inline SymmetrizerResult young_symmetrizer(const Tableau& t, int d, int dim_cap = kDefaultDimCap) {
    if (!t.is_standard()) throw std::invalid_argument("non-standard tableau");
    const int k = t.frame.weight();
    detail::checked_power_dim(d, k, dim_cap);

    std::vector<std::vector<int>> columns;
    for (int j = 0; j < t.frame.part(0); ++j) {
        std::vector<int> col;
        for (const auto& row : t.entries) {
            if (j < static_cast<int>(row.size())) col.push_back(row[static_cast<std::size_t>(j)]);
        }
        columns.push_back(std::move(col));
    }

    const auto row_group = detail::stabilizer_group(t.entries, k);
    const auto col_group = detail::stabilizer_group(columns, k);

    const int dim = static_cast<int>(detail::checked_power_dim(d, k, dim_cap));
    OperatorMatrix row_sum(dim);
    for (const auto& sigma : row_group) row_sum += perm_operator(sigma, d, dim_cap);
    OperatorMatrix col_sum(dim);
    for (const auto& pi : col_group) {
        OperatorMatrix m = perm_operator(pi, d, dim_cap);
        if (detail::permutation_sign(pi) < 0) m *= -1.0;
        col_sum += m;
    }

    SymmetrizerResult result;
    result.e = col_sum * row_sum;
    const OperatorMatrix e2 = result.e * result.e;

    double inner_ee = 0.0;
    double inner_e_e2 = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            inner_ee += std::norm(result.e(i, j));
            inner_e_e2 += (std::conj(result.e(i, j)) * e2(i, j)).real();
        }
    }
    if (inner_ee == 0.0) throw internal_consistency_error("Young symmetrizer vanished");
    result.r = inner_e_e2 / inner_ee;

    OperatorMatrix residual = e2;
    residual -= result.e * linalg::cd(result.r);
    const double res_norm = residual.frobenius_norm();
    if (res_norm > 1e-8 * std::max(1.0, e2.frobenius_norm()))
        throw internal_consistency_error("e(T)^2 != r e(T): residual " + std::to_string(res_norm));
    if (std::abs(result.r - std::llround(result.r)) > 1e-8 || result.r < 0.5)
        throw internal_consistency_error("Young symmetrizer scalar is not a positive integer: r = " +
                                         std::to_string(result.r));

    result.p = result.e;
    result.p *= linalg::cd(1.0 / result.r);
    result.rank = linalg::numerical_rank(result.p);
    const Int expected = dims::dim_v(t.frame, d);
    if (Int(result.rank) != expected)
        throw internal_consistency_error("Young projection rank " + std::to_string(result.rank) +
                                         " differs from dim V = " + expected.str());
    return result;
}

/// Central projector P_lambda = (dim U / k!) sum_pi chi_lambda(class pi) M(pi)
/// onto U_lambda x V_lambda. Sums over all k! permutations, so the degree is
/// capped at 6.
inline OperatorMatrix central_projector(const characters::CharacterTable& table,
                                        const Partition& lambda, int d,
                                        int dim_cap = kDefaultDimCap) {
    const int k = lambda.weight();
    if (k != table.degree) throw std::invalid_argument("partition weight does not match character table");
    if (k < 1 || k > kCentralProjectorDegreeCap)
        throw std::invalid_argument("central projector degree " + std::to_string(k) +
                                    " outside 1.." + std::to_string(kCentralProjectorDegreeCap));
    const int dim = static_cast<int>(detail::checked_power_dim(d, k, dim_cap));

    const auto& row = table.row(lambda);
    OperatorMatrix p(dim);
    std::vector<int> pi(static_cast<std::size_t>(k));
    std::iota(pi.begin(), pi.end(), 0);
    do {
        const CycleType tau = detail::cycle_type_of(pi);
        const double chi = to_double(row[static_cast<std::size_t>(table.index_of(tau.cycles()))]);
        if (chi == 0.0) continue;
        const auto inv = detail::inverse_permutation(pi);
        for (int col = 0; col < dim; ++col) p(detail::permuted_index(col, inv, d, k), col) += chi;
    } while (std::next_permutation(pi.begin(), pi.end()));

    const double scale = to_double(dims::dim_u(lambda)) / to_double(factorial(k));
    p *= scale;
    return p;
}

inline OperatorMatrix central_projector(const Partition& lambda, int d, int dim_cap = kDefaultDimCap) {
    const characters::CharacterTable table = characters::character_table(lambda.weight());
    return central_projector(table, lambda, d, dim_cap);
}

/// tr(P_lambda rho^(tensor k)) by direct matrix computation.
inline double exact_trace(const quantum::DensityMatrix& rho, const Partition& lambda,
                          int dim_cap = kDefaultDimCap) {
    const int k = lambda.weight();
    detail::checked_power_dim(rho.dim(), k, dim_cap);
    const OperatorMatrix p = central_projector(lambda, rho.dim(), dim_cap);
    const OperatorMatrix rho_k = linalg::tensor_power(rho.matrix(), k);
    return linalg::trace_product(p, rho_k).real();
}

inline double exact_trace(const OperatorMatrix& projector, const quantum::DensityMatrix& rho, int k) {
    const OperatorMatrix rho_k = linalg::tensor_power(rho.matrix(), k);
    return linalg::trace_product(projector, rho_k).real();
}

/// Index map from the interleaved basis of ((C^m x C^n))^(tensor k), local
/// index a*n + b, to the blocked basis of (C^m)^(tensor k) x (C^n)^(tensor k).
inline std::vector<int> interleaved_to_split_map(int m, int n, int k) {
    const long long dim = detail::checked_power_dim(m * n, k, std::numeric_limits<int>::max());
    long long n_pow = 1;
    for (int i = 0; i < k; ++i) n_pow *= n;
    std::vector<int> map(static_cast<std::size_t>(dim));
    for (long long idx = 0; idx < dim; ++idx) {
        long long rem = idx;
        std::vector<int> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
        for (int t = k - 1; t >= 0; --t) {
            const int local = static_cast<int>(rem % (m * n));
            rem /= m * n;
            a[static_cast<std::size_t>(t)] = local / n;
            b[static_cast<std::size_t>(t)] = local % n;
        }
        long long ai = 0, bi = 0;
        for (int t = 0; t < k; ++t) {
            ai = ai * m + a[static_cast<std::size_t>(t)];
            bi = bi * n + b[static_cast<std::size_t>(t)];
        }
        map[static_cast<std::size_t>(idx)] = static_cast<int>(ai * n_pow + bi);
    }
    return map;
}

/// Conjugation by the basis relabelling index_map: out(i, j) = in(map[i], map[j]).
inline OperatorMatrix conjugate_by_index_map(const OperatorMatrix& in, const std::vector<int>& map) {
    OperatorMatrix out(in.dim());
    for (int i = 0; i < in.dim(); ++i) {
        for (int j = 0; j < in.dim(); ++j)
            out(i, j) = in(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]);
    }
    return out;
}

inline std::vector<int> inverse_index_map(const std::vector<int>& map) {
    std::vector<int> inv(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) inv[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
    return inv;
}

/// Whether (P^A_mu x P^B_nu) P^AB_lambda is nonzero (operator norm > 1e-10);
/// equivalent to g_{lambda,mu,nu} != 0.
inline bool overlap_check(const Partition& lambda, int m, int n, const Partition& mu,
                          const Partition& nu, int dim_cap = kDefaultDimCap) {
    const int k = lambda.weight();
    if (mu.weight() != k || nu.weight() != k) throw std::invalid_argument("Kronecker weight mismatch");
    detail::checked_power_dim(m * n, k, dim_cap);

    const OperatorMatrix p_ab = central_projector(lambda, m * n, dim_cap);
    const OperatorMatrix p_a = central_projector(mu, m, dim_cap);
    const OperatorMatrix p_b = central_projector(nu, n, dim_cap);

    const OperatorMatrix split = linalg::tensor_product(p_a, p_b);
    const auto map = interleaved_to_split_map(m, n, k);
    const OperatorMatrix pair_in_ab = conjugate_by_index_map(split, map);

    return linalg::operator_norm(pair_in_ab * p_ab) > 1e-10;
}

}  // namespace kronspec::oracle
