#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kronspec/characters.hpp"
#include "kronspec/kronecker.hpp"
#include "kronspec/partition.hpp"

namespace kronspec::symfunc {

/// Evaluation point x_1, ..., x_d for symmetric polynomials.
struct SymPoint {
    std::vector<double> values;

    SymPoint() = default;
    explicit SymPoint(std::vector<double> v) : values(std::move(v)) {
        for (double x : values) {
            if (!std::isfinite(x)) throw std::invalid_argument("symmetric point entries must be finite");
        }
    }
    SymPoint(std::initializer_list<double> v) : SymPoint(std::vector<double>(v)) {}

    static SymPoint parse(const std::string& text) {
        std::vector<double> vals;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            const std::string token = text.substr(pos, next - pos);
            try {
                std::size_t used = 0;
                vals.push_back(std::stod(token, &used));
                if (used != token.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed point string: '" + text + "'");
            }
            pos = next + 1;
        }
        return SymPoint(std::move(vals));
    }

    int size() const { return static_cast<int>(values.size()); }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out += ',';
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
            out += buf;
        }
        return out;
    }
};

/// p_r(x) = sum_i x_i^r.
inline double power_sum(int r, const SymPoint& x) {
    if (r < 1) throw std::invalid_argument("power sum degree must be at least 1");
    double s = 0.0;
    for (double v : x.values) s += std::pow(v, r);
    return s;
}

/// p_tau(x) = prod over cycle lengths of p_r(x).
inline double power_sum(const CycleType& tau, const SymPoint& x) {
    double prod = 1.0;
    for (int part : tau.cycles().parts()) prod *= power_sum(part, x);
    return prod;
}

/// Complete homogeneous sum h_r(x), via the degree-by-variable recursion
/// h(r, i) = h(r, i-1) + x_i h(r-1, i). h_0 = 1; h_r = 0 for r < 0.
inline double homog(int r, const SymPoint& x) {
    if (r < 0) return 0.0;
    if (r == 0) return 1.0;
    std::vector<double> h(static_cast<std::size_t>(r) + 1, 0.0);
    h[0] = 1.0;
    for (double xi : x.values) {
        for (int j = 1; j <= r; ++j) h[static_cast<std::size_t>(j)] += xi * h[static_cast<std::size_t>(j - 1)];
    }
    return h[static_cast<std::size_t>(r)];
}

namespace detail {

// Schur evaluation by the branching recursion
//   s_lambda(x_1..x_l) = sum over interlacing mu of x_l^{|lambda|-|mu|} s_mu(x_1..x_{l-1}).
// Every term is a plain product, so non-negative points never cancel; this
// stays accurate for two-row frames at weights in the hundreds, where the
// Jacobi-Trudi determinant loses all significant digits.
inline double schur_branching(const std::vector<int>& lambda, int level, const SymPoint& x,
                              std::map<std::pair<int, std::vector<int>>, double>& memo) {
    if (static_cast<int>(lambda.size()) > level) return 0.0;
    if (lambda.empty()) return 1.0;
    if (level == 1) return std::pow(x.values[0], lambda[0]);
    const auto key = std::make_pair(level, lambda);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const double xl = x.values[static_cast<std::size_t>(level - 1)];
    const int rows = static_cast<int>(lambda.size());
    int weight = 0;
    for (int p : lambda) weight += p;

    double total = 0.0;
    std::vector<int> mu(static_cast<std::size_t>(rows));
    auto rec = [&](auto&& self, int i, int mu_weight) -> void {
        if (i == rows) {
            std::vector<int> trimmed(mu.begin(), mu.begin() + rows);
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            if (static_cast<int>(trimmed.size()) > level - 1) return;
            total += std::pow(xl, weight - mu_weight) * schur_branching(trimmed, level - 1, x, memo);
            return;
        }
        const int lo = i + 1 < rows ? lambda[static_cast<std::size_t>(i + 1)] : 0;
        const int hi = lambda[static_cast<std::size_t>(i)];
        for (int v = hi; v >= lo; --v) {
            mu[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, mu_weight + v);
        }
    };
    rec(rec, 0, 0);
    memo.emplace(key, total);
    return total;
}

}  // namespace detail

/// Schur function s_lambda(x); 0 when lambda has more rows than x has entries.
inline double schur(const Partition& lambda, const SymPoint& x) {
    if (lambda.empty()) return 1.0;
    if (lambda.rows() > x.size()) return 0.0;
    std::map<std::pair<int, std::vector<int>>, double> memo;
    return detail::schur_branching(lambda.parts(), x.size(), x, memo);
}

/// Same quantity through the Jacobi-Trudi determinant det(h_{lambda_i - i + j}),
/// by partial-pivot elimination. Kept as an independent route for cross-checks;
/// accurate at desk-scale degrees, not for long thin frames.
inline double schur_jacobi_trudi(const Partition& lambda, const SymPoint& x) {
    if (lambda.empty()) return 1.0;
    const int q = lambda.rows();
    std::vector<std::vector<double>> m(static_cast<std::size_t>(q),
                                       std::vector<double>(static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                homog(lambda.parts()[static_cast<std::size_t>(i)] - (i + 1) + (j + 1), x);
        }
    }
    double det = 1.0;
    for (int col = 0; col < q; ++col) {
        int pivot = col;
        for (int r = col + 1; r < q; ++r) {
            if (std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
                std::abs(m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)]))
                pivot = r;
        }
        if (m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
            det = -det;
        }
        const double diag = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= diag;
        for (int r = col + 1; r < q; ++r) {
            const double f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / diag;
            for (int c = col; c < q; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    return det;
}

/// Residual of the character expansion p_tau(x) = sum_lambda chi_lambda(tau) s_lambda(x).
inline double frobenius_check(const CycleType& tau, const SymPoint& x,
                              const characters::CharacterTable& table) {
    if (tau.degree() != table.degree)
        throw std::invalid_argument("cycle type degree does not match character table");
    const int col = table.index_of(tau.cycles());
    double rhs = 0.0;
    for (int r = 0; r < table.size(); ++r) {
        const double chi = to_double(table.value(r, col));
        if (chi != 0.0) rhs += chi * schur(table.labels[static_cast<std::size_t>(r)], x);
    }
    return std::abs(power_sum(tau, x) - rhs);
}

/// All pairwise products x_i y_j, sorted non-increasing.
inline SymPoint product_point(const SymPoint& x, const SymPoint& y) {
    std::vector<double> prod;
    prod.reserve(x.values.size() * y.values.size());
    for (double a : x.values) {
        for (double b : y.values) prod.push_back(a * b);
    }
    std::sort(prod.begin(), prod.end(), std::greater<>());
    return SymPoint(std::move(prod));
}

/// Residual of the content expansion
/// s_lambda(xy) = sum_{mu,nu} g_{lambda,mu,nu} s_mu(x) s_nu(y),
/// with mu over at most len(x) rows and nu over at most len(y) rows.
inline double content_expansion_check(const Partition& lambda, const SymPoint& x, const SymPoint& y,
                                      const characters::CharacterTable& table) {
    const int k = lambda.weight();
    if (k != table.degree) throw std::invalid_argument("partition weight does not match character table");
    if (lambda.rows() > x.size() * y.size())
        throw std::invalid_argument("lambda has more rows than the product point has entries");
    const double lhs = schur(lambda, product_point(x, y));
    double rhs = 0.0;
    for (const Partition& mu : enumerate_partitions(k, x.size())) {
        const double sx = schur(mu, x);
        for (const Partition& nu : enumerate_partitions(k, y.size())) {
            const Int g = kronecker::kron(table, lambda, mu, nu);
            if (g != 0) rhs += to_double(g) * sx * schur(nu, y);
        }
    }
    return std::abs(lhs - rhs);
}

}  // namespace kronspec::symfunc
