#pragma once

#include <hurwitz/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

/// Weakly decreasing list of positive integers. Labels a conjugacy class of
/// the symmetric group and the unordered multiset of pole orders.
class Partition {
public:
    Partition() = default;

    /// Accepts parts in any order; rejects nonpositive parts.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p < 1) throw InvalidInput("partition parts must be positive");
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// k, the sum of the parts.
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    /// n, the number of parts.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Multiplicity of each part value, ascending by value.
    std::vector<std::pair<int, int>> multiplicities() const {
        std::vector<std::pair<int, int>> out;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
            if (!out.empty() && out.back().first == *it) {
                ++out.back().second;
            } else {
                out.emplace_back(*it, 1);
            }
        }
        return out;
    }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

/// Ordered pole orders (k_1..k_n). Positions are the pole labels 1..n.
class PoleProfile {
public:
    PoleProfile() = default;
    explicit PoleProfile(std::vector<int> orders) : orders_(std::move(orders)) {
        for (int k : orders_) {
            if (k < 1) throw InvalidInput("pole orders must be positive");
        }
    }
    PoleProfile(std::initializer_list<int> orders) : PoleProfile(std::vector<int>(orders)) {}
    explicit PoleProfile(const Partition& mu) : orders_(mu.parts()) {}

    const std::vector<int>& orders() const noexcept { return orders_; }
    int operator[](std::size_t i) const { return orders_[i]; }
    int sheets() const noexcept { return std::accumulate(orders_.begin(), orders_.end(), 0); }
    int length() const noexcept { return static_cast<int>(orders_.size()); }
    bool empty() const noexcept { return orders_.empty(); }

    Partition sorted() const { return Partition(orders_); }

    bool operator==(const PoleProfile&) const = default;

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(orders_[i]);
        }
        return s;
    }

private:
    std::vector<int> orders_;
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All partitions of k in lexicographically descending order:
/// (3), (2,1), (1,1,1). k = 0 yields the single empty partition.
inline std::vector<Partition> partitions_of(int k) {
    if (k < 0) throw InvalidInput("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::partitions_rec(k, k, prefix, out);
    return out;
}

/// Product of factorials of value multiplicities.
inline Integer aut_count(const Partition& mu) {
    Integer r = 1;
    for (auto [value, mult] : mu.multiplicities()) r *= factorial(static_cast<std::uint64_t>(mult));
    return r;
}

inline Integer aut_count(const PoleProfile& profile) { return aut_count(profile.sorted()); }

/// Centralizer order z_mu = prod_i i^{m_i} m_i!.
inline Integer z_order(const Partition& mu) {
    Integer r = 1;
    for (auto [value, mult] : mu.multiplicities()) {
        r *= ipow(value, static_cast<std::uint64_t>(mult)) * factorial(static_cast<std::uint64_t>(mult));
    }
    return r;
}

/// Number of standard Young tableaux of shape lambda (hook length formula).
inline Integer irrep_dimension(const Partition& lambda) {
    const auto& rows = lambda.parts();
    Integer hooks = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < rows[i]; ++j) {
            int arm = rows[i] - j - 1;
            int leg = 0;
            for (std::size_t below = i + 1; below < rows.size() && rows[below] > j; ++below) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return Integer(factorial(static_cast<std::uint64_t>(lambda.size())) / hooks);
}

/// Sum of contents (column - row) over the cells of lambda. This is the
/// eigenvalue of the class sum of all transpositions on the irreducible
/// representation lambda.
inline long content_eigenvalue(const Partition& lambda) {
    long total = 0;
    const auto& rows = lambda.parts();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < rows[i]; ++j) total += j - static_cast<long>(i);
    }
    return total;
}

/// Memoized Murnaghan-Nakayama evaluation of irreducible characters.
///
/// The recursion strips a border strip of length mu[0] from lambda and
/// recurses on the tail of mu. Border strips are handled on beta-sets: a
/// strip of length r is a bead moving from position x to a free position
/// x - r, with sign (-1)^{beads strictly between}. Reads and writes of the
/// memo table are serialized by a shared mutex, so one cache may be shared
/// between threads.
class CharacterCache {
public:
    Integer value(const Partition& lambda, const Partition& mu) {
        if (lambda.size() != mu.size()) {
            throw InvalidInput("character_value: |lambda| = " + std::to_string(lambda.size()) +
                               " but |mu| = " + std::to_string(mu.size()));
        }
        return eval(lambda.parts(), std::span<const int>(mu.parts()));
    }

    std::size_t memo_size() const {
        std::shared_lock lock(mutex_);
        return memo_.size();
    }

private:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    Integer eval(const std::vector<int>& lambda, std::span<const int> mu) {
        if (mu.empty()) return lambda.empty() ? 1 : 0;
        Key key{lambda, std::vector<int>(mu.begin(), mu.end())};
        {
            std::shared_lock lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }

        const int strip = mu.front();
        const int len = static_cast<int>(lambda.size());
        // beta[i] = lambda_i + (len - 1 - i), strictly decreasing.
        std::vector<int> beta(lambda.size());
        for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);

        Integer total = 0;
        for (int i = 0; i < len; ++i) {
            const int target = beta[i] - strip;
            if (target < 0) continue;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int between = 0;
            for (int b : beta) {
                if (b > target && b < beta[i]) ++between;
            }
            std::vector<int> moved = beta;
            moved[i] = target;
            std::sort(moved.begin(), moved.end(), std::greater<>());
            std::vector<int> reduced;
            for (int r = 0; r < len; ++r) {
                int part = moved[r] - (len - 1 - r);
                if (part > 0) reduced.push_back(part);
            }
            Integer sub = eval(reduced, mu.subspan(1));
            if (between % 2) total -= sub; else total += sub;
        }

        std::unique_lock lock(mutex_);
        memo_.emplace(std::move(key), total);
        return total;
    }

    mutable std::shared_mutex mutex_;
    std::map<Key, Integer> memo_;
};

inline CharacterCache& default_character_cache() {
    static CharacterCache cache;
    return cache;
}

/// chi^lambda evaluated on the conjugacy class of cycle type mu.
inline Integer character_value(const Partition& lambda, const Partition& mu) {
    return default_character_cache().value(lambda, mu);
}

}  // namespace hurwitz
