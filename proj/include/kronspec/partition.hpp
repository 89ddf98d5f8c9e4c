#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "kronspec/bigint.hpp"
#include "kronspec/errors.hpp"

namespace kronspec {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (weight 0) is the canonical zero value. Construction canonicalizes by
/// sorting and dropping zero parts, so there is one representation per frame.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p < 0) throw std::invalid_argument("partition parts must be non-negative");
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "3,1"; the empty string gives the empty partition.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            const std::string token = text.substr(pos, next - pos);
            if (token.empty()) throw std::invalid_argument("malformed partition string: '" + text + "'");
            try {
                std::size_t used = 0;
                const int value = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument("");
                parts.push_back(value);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed partition string: '" + text + "'");
            }
            pos = next + 1;
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Part with implicit zero padding beyond the last row.
    int part(int i) const { return i >= 0 && i < rows() ? parts_[static_cast<std::size_t>(i)] : 0; }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// A partition read as the cycle lengths of a conjugacy class of S_k.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}
    explicit CycleType(std::vector<int> cycles) : cycles_(Partition(std::move(cycles))) {}

    static CycleType parse(const std::string& text) { return CycleType(Partition::parse(text)); }

    const Partition& cycles() const { return cycles_; }
    int degree() const { return cycles_.weight(); }
    int num_cycles() const { return cycles_.rows(); }

    /// Sign of the class: (-1)^(k - number of cycles).
    int sign() const { return (degree() - num_cycles()) % 2 == 0 ? 1 : -1; }

    std::string to_string() const { return cycles_.to_string(); }

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend std::strong_ordering operator<=>(const CycleType&, const CycleType&) = default;

private:
    Partition cycles_;
};

inline CycleType identity_class(int k) {
    return CycleType(std::vector<int>(static_cast<std::size_t>(k), 1));
}

/// Non-negative reals summing to 1, non-increasing (a normalized partition
/// or a sorted probability vector).
class NormalizedWeights {
public:
    explicit NormalizedWeights(std::vector<double> entries) : entries_(std::move(entries)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!(entries_[i] >= 0.0)) throw std::invalid_argument("normalized weights must be non-negative");
            if (i > 0 && entries_[i] > entries_[i - 1] + 1e-15)
                throw std::invalid_argument("normalized weights must be non-increasing");
            sum += entries_[i];
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("normalized weights must sum to 1");
    }

    const std::vector<double>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }

private:
    std::vector<double> entries_;
};

/// Every partition of k with at most max_rows parts, in decreasing
/// lexicographic order. k = 0 yields the empty partition only.
inline std::vector<Partition> enumerate_partitions(int k, int max_rows) {
    if (k < 0) throw std::invalid_argument("partition weight must be non-negative");
    if (max_rows < 1) throw std::invalid_argument("max_rows must be at least 1");
    std::vector<Partition> out;
    std::vector<int> current;

    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(current));
            return;
        }
        const int rows_left = max_rows - static_cast<int>(current.size());
        if (rows_left == 0) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            if (static_cast<long long>(p) * rows_left < remaining) break;
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

/// True iff nu is majorized by lambda: every prefix sum of nu is bounded by
/// the corresponding prefix sum of lambda (parts padded with zeros).
inline bool is_majorized_by(const Partition& nu, const Partition& lambda) {
    if (nu.weight() != lambda.weight()) throw std::invalid_argument("incomparable weights");
    const int rows = std::max(nu.rows(), lambda.rows());
    long long prefix_nu = 0;
    long long prefix_lambda = 0;
    for (int i = 0; i < rows; ++i) {
        prefix_nu += nu.part(i);
        prefix_lambda += lambda.part(i);
        if (prefix_nu > prefix_lambda) return false;
    }
    return true;
}

inline NormalizedWeights normalize(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("normalization undefined for the empty partition");
    const double k = static_cast<double>(lambda.weight());
    std::vector<double> entries;
    entries.reserve(lambda.parts().size());
    for (int p : lambda.parts()) entries.push_back(static_cast<double>(p) / k);
    return NormalizedWeights(std::move(entries));
}

/// Size of the conjugacy class with the given cycle type:
/// k! / prod_j (j^{m_j} * m_j!) where m_j counts cycles of length j.
inline Int class_size(const CycleType& tau) {
    const int k = tau.degree();
    Int denom = 1;
    int run_length = 0;
    int run_value = 0;
    auto flush = [&]() {
        if (run_length > 0) denom *= factorial(run_length) * int_pow(Int(run_value), run_length);
    };
    for (int part : tau.cycles().parts()) {
        if (part == run_value) {
            ++run_length;
        } else {
            flush();
            run_value = part;
            run_length = 1;
        }
    }
    flush();
    Int kf = factorial(k);
    if (kf % denom != 0) throw internal_consistency_error("class size is not an integer");
    return kf / denom;
}

inline Partition stretch(const Partition& lambda, int n) {
    if (n <= 0) throw std::invalid_argument("stretch factor must be positive");
    std::vector<int> parts = lambda.parts();
    for (int& p : parts) p *= n;
    return Partition(std::move(parts));
}

/// Transposed Young frame; an involution.
inline Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition();
    std::vector<int> conj(static_cast<std::size_t>(lambda.parts()[0]), 0);
    for (int p : lambda.parts()) {
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj));
}

}  // namespace kronspec
