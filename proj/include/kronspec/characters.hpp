#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kronspec/bigint.hpp"
#include "kronspec/errors.hpp"
#include "kronspec/partition.hpp"

namespace kronspec::characters {

inline constexpr int kDefaultTableCap = 20;

namespace detail {

struct MnKey {
    std::vector<int> lambda;
    std::vector<int> cycles;
    friend bool operator==(const MnKey&, const MnKey&) = default;
};

struct MnKeyHash {
    std::size_t operator()(const MnKey& key) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        auto mix = [&h](std::size_t v) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        for (int v : key.lambda) mix(static_cast<std::size_t>(v));
        mix(0xfffful);
        for (int v : key.cycles) mix(static_cast<std::size_t>(v));
        return h;
    }
};

using MnMemo = std::unordered_map<MnKey, Int, MnKeyHash>;

// Murnaghan-Nakayama border-strip recursion over beta numbers. Cycles arrive
// sorted non-increasing; the largest remaining cycle is removed first.
inline Int mn_character(const std::vector<int>& lambda, std::span<const int> cycles, MnMemo& memo) {
    if (lambda.empty()) return Int(1);
    MnKey key{lambda, {cycles.begin(), cycles.end()}};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int strip = cycles[0];
    const auto rest = cycles.subspan(1);
    const int q = static_cast<int>(lambda.size());

    // beta[i] = lambda_i + (q - 1 - i): strictly decreasing first-column hooks.
    std::vector<int> beta(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (q - 1 - i);

    Int acc = 0;
    for (int i = 0; i < q; ++i) {
        const int target = beta[static_cast<std::size_t>(i)] - strip;
        if (target < 0) continue;
        bool occupied = false;
        int crossings = 0;  // beta entries jumped over = strip height
        for (int j = 0; j < q; ++j) {
            if (j == i) continue;
            const int b = beta[static_cast<std::size_t>(j)];
            if (b == target) {
                occupied = true;
                break;
            }
            if (b > target && b < beta[static_cast<std::size_t>(i)]) ++crossings;
        }
        if (occupied) continue;

        std::vector<int> new_beta = beta;
        new_beta[static_cast<std::size_t>(i)] = target;
        std::sort(new_beta.begin(), new_beta.end(), std::greater<>());
        std::vector<int> smaller(static_cast<std::size_t>(q));
        for (int j = 0; j < q; ++j)
            smaller[static_cast<std::size_t>(j)] = new_beta[static_cast<std::size_t>(j)] - (q - 1 - j);
        while (!smaller.empty() && smaller.back() == 0) smaller.pop_back();

        const Int sub = mn_character(smaller, rest, memo);
        if (crossings % 2 == 1) {
            acc -= sub;
        } else {
            acc += sub;
        }
    }
    memo.emplace(std::move(key), acc);
    return acc;
}

}  // namespace detail

/// Exact irreducible character chi_lambda(tau) of S_k.
inline Int character(const Partition& lambda, const CycleType& tau) {
    if (lambda.weight() != tau.degree())
        throw std::invalid_argument("character weight mismatch between partition and cycle type");
    detail::MnMemo memo;
    return detail::mn_character(lambda.parts(), std::span<const int>(tau.cycles().parts()), memo);
}

/// Lazy per-row character values for one degree k. Rows share a single
/// recursion memo, so sweeps that touch few representations stay cheap.
class CharacterCache {
public:
    explicit CharacterCache(int degree)
        : degree_(degree), classes_(enumerate_partitions(degree, degree)) {
        if (degree < 1) throw std::invalid_argument("character degree must be at least 1");
        class_sizes_.reserve(classes_.size());
        for (const Partition& c : classes_) class_sizes_.push_back(class_size(CycleType(c)));
    }

    int degree() const { return degree_; }
    const std::vector<Partition>& class_labels() const { return classes_; }
    const std::vector<Int>& class_sizes() const { return class_sizes_; }

    const std::vector<Int>& row(const Partition& lambda) {
        if (lambda.weight() != degree_)
            throw std::invalid_argument("character weight mismatch between partition and cycle type");
        if (auto it = rows_.find(lambda); it != rows_.end()) return it->second;
        std::vector<Int> values;
        values.reserve(classes_.size());
        for (const Partition& c : classes_)
            values.push_back(detail::mn_character(lambda.parts(), std::span<const int>(c.parts()), memo_));
        return rows_.emplace(lambda, std::move(values)).first->second;
    }

private:
    int degree_;
    std::vector<Partition> classes_;
    std::vector<Int> class_sizes_;
    std::map<Partition, std::vector<Int>> rows_;
    detail::MnMemo memo_;
};

/// Complete exact character table of S_k. Rows and columns are labelled by
/// the same partition list in decreasing lexicographic order.
struct CharacterTable {
    int degree = 0;
    std::vector<Partition> labels;
    std::vector<Int> class_sizes;
    std::vector<std::vector<Int>> values;  // values[row][col] = chi_{labels[row]}(labels[col])

    int size() const { return static_cast<int>(labels.size()); }

    int index_of(const Partition& p) const {
        for (int i = 0; i < size(); ++i) {
            if (labels[static_cast<std::size_t>(i)] == p) return i;
        }
        throw std::invalid_argument("partition '" + p.to_string() + "' is not a label of this table");
    }

    const Int& value(int row, int col) const {
        return values[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    }

    const std::vector<Int>& row(const Partition& lambda) const {
        return values[static_cast<std::size_t>(index_of(lambda))];
    }

    /// First orthogonality: sum_tau |tau| chi_lambda(tau) chi_mu(tau) == k! delta.
    bool first_orthogonality_holds() const {
        const Int kf = factorial(degree);
        for (int r1 = 0; r1 < size(); ++r1) {
            for (int r2 = r1; r2 < size(); ++r2) {
                Int sum = 0;
                for (int c = 0; c < size(); ++c)
                    sum += class_sizes[static_cast<std::size_t>(c)] * value(r1, c) * value(r2, c);
                if (sum != (r1 == r2 ? kf : Int(0))) return false;
            }
        }
        return true;
    }
};

inline CharacterTable character_table(int k, int cap = kDefaultTableCap) {
    if (k < 1) throw std::invalid_argument("character table degree must be at least 1");
    if (k > cap) throw std::invalid_argument("table too large: k = " + std::to_string(k) +
                                             " exceeds cap " + std::to_string(cap));
    CharacterCache cache(k);
    CharacterTable table;
    table.degree = k;
    table.labels = cache.class_labels();
    table.class_sizes = cache.class_sizes();
    table.values.reserve(table.labels.size());
    for (const Partition& lambda : table.labels) table.values.push_back(cache.row(lambda));
    return table;
}

inline std::filesystem::path table_cache_file(int k, const std::filesystem::path& dir) {
    return dir / ("chartable_k" + std::to_string(k) + ".json");
}

inline void save_character_table(const CharacterTable& table, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    nlohmann::json j;
    j["k"] = table.degree;
    for (const Partition& p : table.labels) j["labels"].push_back(p.to_string());
    for (const Int& s : table.class_sizes) j["class_sizes"].push_back(s.str());
    for (const auto& row : table.values) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const Int& v : row) jrow.push_back(v.str());
        j["values"].push_back(std::move(jrow));
    }
    std::ofstream out(table_cache_file(table.degree, dir));
    if (!out) throw std::runtime_error("cannot write character table cache in '" + dir.string() + "'");
    out << j.dump(1) << '\n';
}

/// Loads a cached table and verifies it against first orthogonality; returns
/// nothing when no cache file exists, throws when the file is inconsistent.
inline std::optional<CharacterTable> load_character_table(int k, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    const fs::path file = table_cache_file(k, dir);
    if (!fs::exists(file)) return std::nullopt;
    std::ifstream in(file);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("corrupt character table cache '" + file.string() + "': " + e.what());
    }
    CharacterTable table;
    table.degree = j.at("k").get<int>();
    if (table.degree != k)
        throw std::runtime_error("character table cache '" + file.string() + "' has wrong degree");
    for (const auto& s : j.at("labels")) table.labels.push_back(Partition::parse(s.get<std::string>()));
    for (const auto& s : j.at("class_sizes")) table.class_sizes.emplace_back(s.get<std::string>());
    for (const auto& jrow : j.at("values")) {
        std::vector<Int> row;
        for (const auto& v : jrow) row.emplace_back(v.get<std::string>());
        table.values.push_back(std::move(row));
    }
    const auto expected_labels = enumerate_partitions(k, k);
    if (table.labels != expected_labels || table.values.size() != table.labels.size() ||
        table.class_sizes.size() != table.labels.size())
        throw std::runtime_error("character table cache '" + file.string() + "' has malformed labels");
    for (const auto& row : table.values) {
        if (row.size() != table.labels.size())
            throw std::runtime_error("character table cache '" + file.string() + "' is not square");
    }
    if (!table.first_orthogonality_holds())
        throw std::runtime_error("character table cache '" + file.string() +
                                 "' failed the orthogonality check");
    return table;
}

/// Memoizes completed tables across degrees for the lifetime of a session,
/// optionally backed by an on-disk cache directory. Completed tables are
/// immutable and may be shared across threads.
class TableSession {
public:
    explicit TableSession(int cap = kDefaultTableCap) : cap_(cap) {}
    TableSession(int cap, std::filesystem::path cache_dir)
        : cap_(cap), cache_dir_(std::move(cache_dir)) {}

    int cap() const { return cap_; }

    std::shared_ptr<const CharacterTable> table(int k) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = tables_.find(k); it != tables_.end()) return it->second;
        if (k > cap_) throw std::invalid_argument("table too large: k = " + std::to_string(k) +
                                                  " exceeds cap " + std::to_string(cap_));
        std::shared_ptr<const CharacterTable> built;
        if (cache_dir_) {
            if (auto loaded = load_character_table(k, *cache_dir_)) {
                built = std::make_shared<const CharacterTable>(std::move(*loaded));
            }
        }
        if (!built) {
            built = std::make_shared<const CharacterTable>(character_table(k, cap_));
            if (cache_dir_) save_character_table(*built, *cache_dir_);
        }
        tables_.emplace(k, built);
        return built;
    }

private:
    int cap_;
    std::optional<std::filesystem::path> cache_dir_;
    std::mutex mutex_;
    std::map<int, std::shared_ptr<const CharacterTable>> tables_;
};

}  // namespace kronspec::characters
