#pragma once

#include <hurwitz/rational.hpp>
#include <hurwitz/symgroup.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hurwitz {

// Normalization used throughout:
//
//   h_{g;mu} = (1/k!) * #{ (t_1, ..., t_r) : t_i transpositions of the k
//              sheets, <t_1..t_r> transitive, t_r ... t_1 of cycle type mu }
//
// with r = k + n + 2g - 2. Products compose right to left (t_1 acts first).

/// Limits on the work each engine may do. Exceeding one throws Infeasible.
struct WorkBounds {
    int brute_max_sheets = 5;
    /// Cap on (#transpositions)^r, the number of tuples brute force accounts for.
    Integer brute_max_tuples = Integer("1000000000000");
    int frobenius_max_sheets = 10;
    int max_transpositions = 40;
    int cutjoin_max_weight = 10;
};

enum class Engine { brute, frobenius, cutjoin };

inline std::string_view engine_name(Engine e) {
    switch (e) {
        case Engine::brute: return "brute";
        case Engine::frobenius: return "frobenius";
        case Engine::cutjoin: return "cutjoin";
    }
    return "?";
}

inline std::optional<Engine> parse_engine(std::string_view s) {
    if (s == "brute") return Engine::brute;
    if (s == "frobenius") return Engine::frobenius;
    if (s == "cutjoin") return Engine::cutjoin;
    return std::nullopt;
}

/// d = k + n + 2g - 2, the number of simple branch points.
inline int ramification_count(int genus, const PoleProfile& profile) {
    if (genus < 0) throw InvalidInput("genus must be nonnegative");
    if (profile.empty()) throw InvalidInput("profile must have at least one pole");
    int d = profile.sheets() + profile.length() + 2 * genus - 2;
    if (d < 0) throw InvalidInput("negative ramification count");
    return d;
}

/// Genus of a connected covering with r simple branch points over a pole
/// partition, or nullopt when r - k - n + 2 is odd or negative.
inline std::optional<int> implied_genus(const Partition& mu, int r) {
    int twice = r - mu.size() - mu.length() + 2;
    if (twice < 0 || twice % 2) return std::nullopt;
    return twice / 2;
}

struct HurwitzKey {
    int genus = 0;
    Partition mu;

    int transpositions() const { return mu.size() + mu.length() + 2 * genus - 2; }
    auto operator<=>(const HurwitzKey&) const = default;
    bool operator==(const HurwitzKey&) const = default;
};

/// Computed Hurwitz numbers with the engine that produced each.
class HurwitzTable {
public:
    struct Entry {
        Rational value;
        Engine engine;
    };

    /// Rejects values that are negative or whose k!-multiple is not an integer.
    void insert(const HurwitzKey& key, const Rational& value, Engine engine) {
        if (value < 0) throw ConsistencyFailure("negative Hurwitz number at " + key.mu.str());
        Rational scaled = value * Rational(factorial(static_cast<std::uint64_t>(key.mu.size())));
        if (!is_integer(scaled)) {
            throw ConsistencyFailure("h * k! is not an integer at g=" + std::to_string(key.genus) +
                                     " mu=" + key.mu.str());
        }
        entries_.insert_or_assign(key, Entry{value, engine});
    }

    const Entry* find(const HurwitzKey& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    const std::map<HurwitzKey, Entry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::map<HurwitzKey, Entry> entries_;
};

// ---------------------------------------------------------------------------
// Brute force: exhaustive accounting of transposition tuples.

namespace detail {

// Tuples are accounted for by aggregating prefixes with equal state. The
// state is the running product together with the orbit partition of the
// group generated so far; both are what a literal enumeration would compute
// at the same point, so each of the (#T)^r tuples is counted exactly once.
struct BruteState {
    std::vector<std::int8_t> product;  // product[x] = image of sheet x
    std::vector<std::int8_t> orbit;    // canonical orbit label per sheet

    auto operator<=>(const BruteState&) const = default;
};

inline void merge_orbits(std::vector<std::int8_t>& orbit, int a, int b) {
    std::int8_t from = orbit[b], to = orbit[a];
    if (from == to) return;
    for (auto& o : orbit) {
        if (o == from) o = to;
    }
    // Relabel by first occurrence so equal partitions compare equal.
    std::vector<std::int8_t> relabel(orbit.size(), -1);
    std::int8_t next = 0;
    for (auto& o : orbit) {
        if (relabel[o] < 0) relabel[o] = next++;
        o = relabel[o];
    }
}

inline Partition cycle_type(const std::vector<std::int8_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cycles;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
            seen[x] = true;
            ++len;
        }
        cycles.push_back(len);
    }
    return Partition(cycles);
}

}  // namespace detail

namespace detail {

// Transitive tuple counts of length r on k sheets, by cycle type of the product.
inline std::map<Partition, Integer> transitive_tuple_counts(int k, int r) {
    static std::shared_mutex mutex;
    static std::map<std::pair<int, int>, std::map<Partition, Integer>> memo;
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find({k, r}); it != memo.end()) return it->second;
    }

    std::vector<std::pair<int, int>> transpositions;
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) transpositions.emplace_back(a, b);
    }

    BruteState start;
    start.product.resize(static_cast<std::size_t>(k));
    start.orbit.resize(static_cast<std::size_t>(k));
    for (int x = 0; x < k; ++x) {
        start.product[x] = static_cast<std::int8_t>(x);
        start.orbit[x] = static_cast<std::int8_t>(x);
    }
    std::map<BruteState, Integer> layer{{start, Integer(1)}};

    for (int step = 0; step < r; ++step) {
        std::map<BruteState, Integer> next;
        for (const auto& [state, count] : layer) {
            for (auto [a, b] : transpositions) {
                BruteState s = state;
                // new product = (a b) o old product
                for (auto& img : s.product) {
                    if (img == a) img = static_cast<std::int8_t>(b);
                    else if (img == b) img = static_cast<std::int8_t>(a);
                }
                merge_orbits(s.orbit, a, b);
                next[std::move(s)] += count;
            }
        }
        layer = std::move(next);
    }

    std::map<Partition, Integer> counts;
    for (const auto& [state, count] : layer) {
        bool one_orbit = std::all_of(state.orbit.begin(), state.orbit.end(), [](std::int8_t o) { return o == 0; });
        if (one_orbit) counts[cycle_type(state.product)] += count;
    }
    std::unique_lock lock(mutex);
    memo.emplace(std::make_pair(k, r), counts);
    return counts;
}

}  // namespace detail

/// Hurwitz number by accounting for every transposition tuple; transitivity
/// is decided from the orbits of the generated group. Independent of
/// character theory.
inline Rational brute_force_hurwitz(int genus, const PoleProfile& profile,
                                    const WorkBounds& bounds = {}) {
    const int r = ramification_count(genus, profile);
    const int k = profile.sheets();
    if (k > bounds.brute_max_sheets) {
        throw Infeasible("brute force: " + std::to_string(k) + " sheets exceeds brute_max_sheets = " +
                         std::to_string(bounds.brute_max_sheets));
    }
    const int num_transpositions = k * (k - 1) / 2;
    if (ipow(num_transpositions, static_cast<std::uint64_t>(r)) > bounds.brute_max_tuples) {
        throw Infeasible("brute force: " + std::to_string(num_transpositions) + "^" + std::to_string(r) +
                         " tuples exceeds brute_max_tuples = " + bounds.brute_max_tuples.get_str());
    }
    const auto counts = detail::transitive_tuple_counts(k, r);
    auto it = counts.find(profile.sorted());
    Integer transitive = it == counts.end() ? Integer(0) : it->second;
    return make_rational(transitive, factorial(static_cast<std::uint64_t>(k)));
}

// ---------------------------------------------------------------------------
// Frobenius / class algebra.

namespace detail {

template <typename Key, typename Value>
class SharedMemo {
public:
    std::optional<Value> find(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void put(const Key& key, const Value& value) {
        std::unique_lock lock(mutex_);
        map_.emplace(key, value);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> map_;
};

inline SharedMemo<std::pair<Partition, int>, Rational>& disconnected_memo() {
    static SharedMemo<std::pair<Partition, int>, Rational> memo;
    return memo;
}

inline SharedMemo<std::pair<Partition, int>, Rational>& labeled_connected_memo() {
    static SharedMemo<std::pair<Partition, int>, Rational> memo;
    return memo;
}

inline void check_frobenius_bounds(int k, int r, const WorkBounds& bounds) {
    if (k > bounds.frobenius_max_sheets) {
        throw Infeasible("frobenius: " + std::to_string(k) + " sheets exceeds frobenius_max_sheets = " +
                         std::to_string(bounds.frobenius_max_sheets));
    }
    if (r > bounds.max_transpositions) {
        throw Infeasible("frobenius: " + std::to_string(r) + " transpositions exceeds max_transpositions = " +
                         std::to_string(bounds.max_transpositions));
    }
}

}  // namespace detail

/// Possibly disconnected count H(mu, r) = (1/k!) #{r-tuples of transpositions
/// whose product has cycle type mu}, via
///   H = (1/z_mu) sum_lambda (dim lambda / k!) chi^lambda(mu) cont(lambda)^r.
inline Rational frobenius_disconnected(const Partition& mu, int r, const WorkBounds& bounds = {}) {
    if (mu.empty()) throw InvalidInput("frobenius_disconnected needs |mu| >= 1");
    if (r < 0) throw InvalidInput("negative transposition count");
    detail::check_frobenius_bounds(mu.size(), r, bounds);
    auto key = std::make_pair(mu, r);
    if (auto hit = detail::disconnected_memo().find(key)) return *hit;

    const int k = mu.size();
    Integer sum = 0;
    for (const auto& lambda : partitions_of(k)) {
        Integer chi = character_value(lambda, mu);
        if (chi == 0) continue;
        sum += irrep_dimension(lambda) * chi * ipow(Integer(content_eigenvalue(lambda)), static_cast<std::uint64_t>(r));
    }
    Rational value = make_rational(sum, z_order(mu) * factorial(static_cast<std::uint64_t>(k)));
    detail::disconnected_memo().put(key, value);
    return value;
}

namespace detail {

// Labeled disconnected count: poles carry labels, so multiply by #Aut.
inline Rational labeled_disconnected(const std::vector<int>& poles, int r, const WorkBounds& bounds) {
    if (poles.empty()) return r == 0 ? Rational(1) : Rational(0);
    Partition mu(poles);
    return Rational(aut_count(mu)) * frobenius_disconnected(mu, r, bounds);
}

// Labeled connected count h_lab(P, r) = #Aut(P) * h(P, r). Obtained from
//   H_lab(P, r) = sum_{S containing pole 0} sum_{r_S} C(r, r_S)
//                 h_lab(P|S, r_S) H_lab(P|S^c, r - r_S)
// by isolating the S = P, r_S = r term.
inline Rational labeled_connected(const std::vector<int>& poles, int r, const WorkBounds& bounds) {
    Partition mu(poles);
    if (!implied_genus(mu, r)) return 0;
    auto key = std::make_pair(mu, r);
    if (auto hit = labeled_connected_memo().find(key)) return *hit;

    const std::vector<int>& sorted = mu.parts();
    const int n = static_cast<int>(sorted.size());
    Rational value = labeled_disconnected(sorted, r, bounds);

    // Proper subsets S that contain pole 0, encoded as bitmasks over poles 1..n-1.
    const unsigned full = (1u << (n - 1)) - 1u;
    for (unsigned mask = 0; mask < full; ++mask) {
        std::vector<int> inside{sorted[0]}, outside;
        for (int i = 1; i < n; ++i) {
            if (mask & (1u << (i - 1))) inside.push_back(sorted[i]);
            else outside.push_back(sorted[i]);
        }
        Partition in_part(inside);
        for (int r_in = 0; r_in <= r; ++r_in) {
            if (!implied_genus(in_part, r_in)) continue;
            Rational rest = labeled_disconnected(outside, r - r_in, bounds);
            if (rest == 0) continue;
            value -= Rational(binomial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(r_in))) *
                     labeled_connected(inside, r_in, bounds) * rest;
        }
    }
    labeled_connected_memo().put(key, value);
    return value;
}

}  // namespace detail

/// Connected Hurwitz number from class-algebra counts and labeled-pole
/// inclusion-exclusion over the component containing the first pole.
inline Rational connected_hurwitz(int genus, const PoleProfile& profile, const WorkBounds& bounds = {}) {
    const int r = ramification_count(genus, profile);
    detail::check_frobenius_bounds(profile.sheets(), r, bounds);
    Partition mu = profile.sorted();
    return detail::labeled_connected(mu.parts(), r, bounds) / Rational(aut_count(mu));
}

// ---------------------------------------------------------------------------
// Cut-and-join.

/// Truncated polynomial in p_1, p_2, ...; monomial p_mu keyed by mu.
class PSeriesLayer {
public:
    explicit PSeriesLayer(int max_weight = 0) : max_weight_(max_weight) {}

    int max_weight() const noexcept { return max_weight_; }

    /// Adds c * p_mu; silently drops monomials above the truncation weight.
    void add(const Partition& mu, const Rational& c) {
        if (mu.size() > max_weight_ || c == 0) return;
        auto [it, fresh] = terms_.try_emplace(mu, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Partition& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::map<Partition, Rational>& terms() const noexcept { return terms_; }

    bool operator==(const PSeriesLayer& other) const { return terms_ == other.terms_; }

private:
    int max_weight_;
    std::map<Partition, Rational> terms_;
};

namespace detail {

inline std::vector<int> without_one(const std::vector<int>& parts, int value) {
    std::vector<int> out = parts;
    out.erase(std::find(out.begin(), out.end(), value));
    return out;
}

inline int multiplicity(const std::vector<int>& parts, int value) {
    return static_cast<int>(std::count(parts.begin(), parts.end(), value));
}

}  // namespace detail

/// Next layer of the generating series F = sum_r F_r u^r / r!:
///   F_r = CJ(F_{r-1}) + 1/2 sum_{i,j} i j p_{i+j}
///         sum_a C(r-1, a) dF_a/dp_i dF_{r-1-a}/dp_j,
///   CJ(G) = 1/2 sum_{i,j} [(i+j) p_i p_j dG/dp_{i+j} + i j p_{i+j} d2G/dp_i dp_j].
/// previous holds F_0..F_{r-1} (r >= 1), all with the same truncation.
template <class Layers>
PSeriesLayer cut_and_join_layer(const Layers& previous) {
    if (previous.empty()) throw InvalidInput("cut_and_join_layer needs at least F_0");
    const int r = static_cast<int>(previous.size());
    const int max_weight = previous.front().max_weight();
    const Rational half(1, 2);
    PSeriesLayer next(max_weight);

    // Linear part on F_{r-1}.
    for (const auto& [mu, c] : previous.back().terms()) {
        const auto& parts = mu.parts();
        for (auto [m, mult] : mu.multiplicities()) {
            // cut: p_i p_j d/dp_m, i + j = m
            std::vector<int> rest = detail::without_one(parts, m);
            for (int i = 1; i < m; ++i) {
                std::vector<int> out = rest;
                out.push_back(i);
                out.push_back(m - i);
                next.add(Partition(out), c * half * mult * m);
            }
        }
        // join: p_{i+j} d2/dp_i dp_j over ordered (i, j)
        auto mults = mu.multiplicities();
        for (auto [i, mi] : mults) {
            for (auto [j, mj] : mults) {
                int ways = (i == j) ? mi * (mi - 1) : mi * mj;
                if (ways == 0) continue;
                std::vector<int> out = detail::without_one(detail::without_one(parts, i), j);
                out.push_back(i + j);
                next.add(Partition(out), c * half * i * j * ways);
            }
        }
    }

    // Quadratic part.
    for (int a = 0; a <= r - 1; ++a) {
        const auto& left = previous[static_cast<std::size_t>(a)];
        const auto& right = previous[static_cast<std::size_t>(r - 1 - a)];
        Rational binom(binomial(static_cast<std::uint64_t>(r - 1), static_cast<std::uint64_t>(a)));
        for (const auto& [mu, c1] : left.terms()) {
            for (const auto& [nu, c2] : right.terms()) {
                if (mu.size() + nu.size() > max_weight) continue;
                for (auto [i, mi] : mu.multiplicities()) {
                    for (auto [j, nj] : nu.multiplicities()) {
                        std::vector<int> out = detail::without_one(mu.parts(), i);
                        for (int p : detail::without_one(nu.parts(), j)) out.push_back(p);
                        out.push_back(i + j);
                        next.add(Partition(out), half * binom * c1 * c2 * mi * nj * i * j);
                    }
                }
            }
        }
    }
    return next;
}

/// Layers F_0 = p_1, F_1, ... of the connected series, extended on demand.
/// Thread-safe.
class CutJoinSeries {
public:
    explicit CutJoinSeries(int max_weight) : max_weight_(max_weight) {
        PSeriesLayer first(max_weight);
        first.add(Partition{1}, 1);
        layers_.push_back(std::move(first));
    }

    int max_weight() const noexcept { return max_weight_; }

    /// The reference stays valid for the lifetime of the series.
    const PSeriesLayer& layer(int r) {
        std::lock_guard lock(mutex_);
        while (static_cast<int>(layers_.size()) <= r) layers_.push_back(cut_and_join_layer(layers_));
        return layers_[static_cast<std::size_t>(r)];
    }

private:
    int max_weight_;
    std::mutex mutex_;
    std::deque<PSeriesLayer> layers_;
};

namespace detail {

inline CutJoinSeries& cut_join_series(int weight) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CutJoinSeries>> by_weight;
    std::lock_guard lock(mutex);
    auto& slot = by_weight[weight];
    if (!slot) slot = std::make_unique<CutJoinSeries>(weight);
    return *slot;
}

}  // namespace detail

/// Coefficient of p_mu in F_r, r = ramification_count(g, mu). Truncation
/// drops only monomials heavier than the one requested, so the series is
/// built at weight |mu|.
inline Rational cut_and_join_hurwitz(int genus, const Partition& mu, const WorkBounds& bounds = {}) {
    if (mu.empty()) throw InvalidInput("empty partition");
    const int r = ramification_count(genus, PoleProfile(mu));
    if (mu.size() > bounds.cutjoin_max_weight) {
        throw Infeasible("cut-and-join: truncation weight " + std::to_string(bounds.cutjoin_max_weight) +
                         " is smaller than |mu| = " + std::to_string(mu.size()));
    }
    if (r > bounds.max_transpositions) {
        throw Infeasible("cut-and-join: " + std::to_string(r) + " transpositions exceeds max_transpositions = " +
                         std::to_string(bounds.max_transpositions));
    }
    return detail::cut_join_series(mu.size()).layer(r).coefficient(mu);
}

/// Genus-zero evaluation of the Hodge-integral formula:
/// d! k^{n-3} prod(k_i^{k_i} / k_i!) / #Aut.
inline Rational genus_zero_closed_form(const PoleProfile& profile) {
    const int d = ramification_count(0, profile);
    const int k = profile.sheets();
    Rational value = Rational(factorial(static_cast<std::uint64_t>(d))) * rpow(k, profile.length() - 3);
    for (int ki : profile.orders()) {
        value *= make_rational(ipow(ki, static_cast<std::uint64_t>(ki)), factorial(static_cast<std::uint64_t>(ki)));
    }
    return value / Rational(aut_count(profile));
}

/// Dispatches to one engine.
inline Rational hurwitz_number(Engine engine, int genus, const PoleProfile& profile, const WorkBounds& bounds = {}) {
    switch (engine) {
        case Engine::brute: return brute_force_hurwitz(genus, profile, bounds);
        case Engine::frobenius: return connected_hurwitz(genus, profile, bounds);
        case Engine::cutjoin: return cut_and_join_hurwitz(genus, profile.sorted(), bounds);
    }
    throw InvalidInput("unknown engine");
}

}  // namespace hurwitz
