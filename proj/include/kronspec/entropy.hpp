#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace kronspec {

/// Shannon entropy -sum p log p in nats, with 0 log 0 = 0.
inline double shannon_entropy(std::span<const double> p) {
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) h -= v * std::log(v);
    }
    return h;
}

/// Kullback-Leibler divergence sum p_i (log p_i - log q_i). Vectors are
/// zero-padded to a common length; +infinity when some q_i = 0 < p_i.
inline double kl_divergence(std::span<const double> p, std::span<const double> q) {
    const std::size_t n = std::max(p.size(), q.size());
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pi = i < p.size() ? p[i] : 0.0;
        const double qi = i < q.size() ? q[i] : 0.0;
        if (pi > 0.0) {
            if (qi <= 0.0) return std::numeric_limits<double>::infinity();
            s += pi * (std::log(pi) - std::log(qi));
        }
    }
    return s;
}

}  // namespace kronspec
