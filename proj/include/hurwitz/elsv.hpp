#pragma once

#include <hurwitz/engines.hpp>
#include <hurwitz/linsolve.hpp>
#include <hurwitz/rational.hpp>
#include <hurwitz/symgroup.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

// Hurwitz numbers as Hodge integrals:
//
//   h_{g;k} = d!/#Aut(k) * prod k_i^{k_i}/k_i!
//             * int_{Mbar_{g,n}} (1 - l_1 + l_2 - ... +- l_g) / prod (1 - k_i psi_i)
//
// Only classes of degree 3g - 3 + n contribute, so the integral is a
// polynomial in k_1..k_n whose coefficients are the integrals <psi^b l_j>.

/// Stability 2g - 2 + n > 0.
inline bool is_stable(int genus, int points) { return genus >= 0 && points >= 1 && 2 * genus - 2 + points > 0; }

inline int moduli_dimension(int genus, int points) { return 3 * genus - 3 + points; }

/// Index of <psi_1^{b_1} ... psi_n^{b_n} lambda_j>_{g,n}; b is kept ascending.
struct HodgeKey {
    int genus = 0;
    int points = 0;
    int lambda_index = 0;
    std::vector<int> psi;

    HodgeKey() = default;
    HodgeKey(int g, int n, std::vector<int> b, int j) : genus(g), points(n), lambda_index(j), psi(std::move(b)) {
        if (!is_stable(g, n)) throw InvalidInput("unstable moduli space (g, n)");
        if (static_cast<int>(psi.size()) != n) throw InvalidInput("psi exponent count must equal n");
        if (j < 0 || j > g) throw InvalidInput("lambda index out of range [0, g]");
        int total = j;
        for (int e : psi) {
            if (e < 0) throw InvalidInput("negative psi exponent");
            total += e;
        }
        if (total != moduli_dimension(g, n)) throw InvalidInput("degree does not match moduli dimension");
        std::sort(psi.begin(), psi.end());
    }

    std::string str() const {
        std::string s = "g=" + std::to_string(genus) + " n=" + std::to_string(points) + " b=(";
        for (std::size_t i = 0; i < psi.size(); ++i) s += (i ? "," : "") + std::to_string(psi[i]);
        return s + ") j=" + std::to_string(lambda_index);
    }

    // Ordered by (g, n, j, b).
    auto operator<=>(const HodgeKey& o) const {
        if (auto c = genus <=> o.genus; c != 0) return c;
        if (auto c = points <=> o.points; c != 0) return c;
        if (auto c = lambda_index <=> o.lambda_index; c != 0) return c;
        return psi <=> o.psi;
    }
    bool operator==(const HodgeKey&) const = default;
};

/// Every key that can appear in the expansion for (g, n), in table order.
inline std::vector<HodgeKey> required_hodge_keys(int genus, int points) {
    if (!is_stable(genus, points)) throw InvalidInput("unstable moduli space (g, n)");
    std::vector<HodgeKey> keys;
    for (int j = 0; j <= genus; ++j) {
        const int degree = moduli_dimension(genus, points) - j;
        if (degree < 0) continue;
        // Ascending exponent vectors of length n summing to degree.
        std::vector<int> b(static_cast<std::size_t>(points), 0);
        std::function<void(int, int, int)> fill = [&](int pos, int remaining, int min_value) {
            if (pos == points - 1) {
                if (remaining >= min_value) {
                    b[static_cast<std::size_t>(pos)] = remaining;
                    keys.emplace_back(genus, points, b, j);
                }
                return;
            }
            for (int v = min_value; v * (points - pos) <= remaining; ++v) {
                b[static_cast<std::size_t>(pos)] = v;
                fill(pos + 1, remaining - v, v);
            }
        };
        fill(0, degree, 0);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

struct GridInfo {
    int bound = 0;
    std::size_t points = 0;
    std::size_t unknowns = 0;
    std::size_t surplus = 0;
    bool residual_zero = false;
};

/// Hodge integrals keyed by HodgeKey, plus how they were obtained.
class HodgeTable {
public:
    void set(const HodgeKey& key, const Rational& value) { values_.insert_or_assign(key, value); }

    const Rational* find(const HodgeKey& key) const {
        auto it = values_.find(key);
        return it == values_.end() ? nullptr : &it->second;
    }

    /// Looks up with b in any order.
    Rational at(int genus, int points, std::vector<int> psi, int j) const {
        HodgeKey key(genus, points, std::move(psi), j);
        if (const Rational* v = find(key)) return *v;
        throw std::out_of_range("Hodge table has no entry " + key.str());
    }

    void merge(const HodgeTable& other) {
        for (const auto& [k, v] : other.values_) values_.insert_or_assign(k, v);
    }

    const std::map<HodgeKey, Rational>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    GridInfo grid;

private:
    std::map<HodgeKey, Rational> values_;
};

/// Whether the lambda classes enter with alternating signs or, as in the
/// literal total Chern class, all with plus.
enum class SignConvention { alternating, all_plus };

inline int lambda_sign(int j, SignConvention convention) {
    return (convention == SignConvention::alternating && j % 2) ? -1 : 1;
}

/// Bridge provider signature: (genus, profile) -> connected Hurwitz number.
using HurwitzProvider = std::function<Rational(int, const PoleProfile&)>;

inline HurwitzProvider frobenius_provider(WorkBounds bounds = {}) {
    return [bounds](int g, const PoleProfile& p) { return connected_hurwitz(g, p, bounds); };
}

/// d!/#Aut * prod k_i^{k_i}/k_i!.
inline Rational prefactor(int genus, const PoleProfile& profile) {
    const int d = ramification_count(genus, profile);
    Rational value = make_rational(factorial(static_cast<std::uint64_t>(d)), aut_count(profile));
    for (int k : profile.orders()) {
        value *= make_rational(ipow(k, static_cast<std::uint64_t>(k)), factorial(static_cast<std::uint64_t>(k)));
    }
    return value;
}

/// Quasihomogeneity factor prod k_i^{k_i}/(k_i - 1)!.
inline Rational weight_w(const PoleProfile& profile) {
    if (profile.empty()) throw InvalidInput("empty profile");
    Rational value = 1;
    for (int k : profile.orders()) {
        value *= make_rational(ipow(k, static_cast<std::uint64_t>(k)), factorial(static_cast<std::uint64_t>(k - 1)));
    }
    return value;
}

/// Degree of the Lyashko-Looijenga map, h * #Aut * prod k_i. A finite map
/// has a nonnegative integer degree; anything else means h is wrong.
inline Rational degree_LL(int genus, const PoleProfile& profile, const Rational& h) {
    (void)ramification_count(genus, profile);
    Rational value = h * Rational(aut_count(profile));
    for (int k : profile.orders()) value *= k;
    if (!is_integer(value) || value < 0) {
        throw ConsistencyFailure("deg LL = " + to_string(value) + " is not a nonnegative integer for g=" +
                                 std::to_string(genus) + " profile " + profile.str());
    }
    return value;
}

struct ElsvNormalizedValue {
    int genus = 0;
    PoleProfile profile;
    Rational value;
};

/// h / prefactor, the value of the Hodge integral in the formula.
inline ElsvNormalizedValue normalized_value(int genus, const PoleProfile& profile, const HurwitzProvider& hurwitz) {
    if (!is_stable(genus, profile.length())) {
        throw InvalidInput("normalized_value: (g, n) = (" + std::to_string(genus) + ", " +
                           std::to_string(profile.length()) + ") is unstable");
    }
    return {genus, profile, hurwitz(genus, profile) / prefactor(genus, profile)};
}

/// Sum over the distinct rearrangements b' of b of prod k_i^{b'_i}.
inline Rational monomial_symmetric(std::vector<int> b, const std::vector<int>& k) {
    std::sort(b.begin(), b.end());
    Integer total = 0;
    do {
        Integer term = 1;
        for (std::size_t i = 0; i < b.size(); ++i) term *= ipow(k[i], static_cast<std::uint64_t>(b[i]));
        total += term;
    } while (std::next_permutation(b.begin(), b.end()));
    return Rational(total);
}

/// Nondecreasing tuples in {1..bound}^n, lexicographic.
inline std::vector<std::vector<int>> sorted_grid(int points, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(points), 1);
    if (points <= 0 || bound < 1) return out;
    while (true) {
        out.push_back(cur);
        int pos = points - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == bound) --pos;
        if (pos < 0) break;
        int v = cur[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < points; ++i) cur[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

/// Coefficient matrix of the extraction system: one row per sorted grid
/// point, one column per Hodge key.
inline RationalMatrix extraction_matrix(const std::vector<HodgeKey>& keys, const std::vector<std::vector<int>>& grid,
                                        SignConvention convention = SignConvention::alternating) {
    RationalMatrix a(grid.size(), keys.size());
    for (std::size_t row = 0; row < grid.size(); ++row) {
        for (std::size_t col = 0; col < keys.size(); ++col) {
            a(row, col) = lambda_sign(keys[col].lambda_index, convention) * monomial_symmetric(keys[col].psi, grid[row]);
        }
    }
    return a;
}

/// Smallest B whose sorted grid has at least #unknowns + n points and on
/// which the unknowns are determined (full column rank). The count alone is
/// not enough: on {1..4}^3 the degree-6 monomials of (g, n) = (2, 3) are
/// dependent.
inline int minimal_grid_bound(int genus, int points) {
    const auto keys = required_hodge_keys(genus, points);
    const std::size_t need = keys.size() + static_cast<std::size_t>(points);
    for (int bound = 1;; ++bound) {
        auto grid = sorted_grid(points, bound);
        if (grid.size() < need) continue;
        if (matrix_rank(extraction_matrix(keys, grid)) == keys.size()) return bound;
    }
}

/// Right-hand side of the formula for one profile given a table.
inline Rational hodge_polynomial(int genus, const PoleProfile& profile, const HodgeTable& table,
                                 SignConvention convention = SignConvention::alternating) {
    const int n = profile.length();
    std::vector<std::string> missing;
    Rational total = 0;
    for (const auto& key : required_hodge_keys(genus, n)) {
        const Rational* v = table.find(key);
        if (!v) {
            missing.push_back(key.str());
            continue;
        }
        total += lambda_sign(key.lambda_index, convention) * *v * monomial_symmetric(key.psi, profile.orders());
    }
    if (!missing.empty()) {
        std::string msg = "Hodge table is missing keys:";
        for (const auto& m : missing) msg += " [" + m + "]";
        throw std::out_of_range(msg);
    }
    return total;
}

/// Forward evaluation of the formula.
inline Rational hurwitz_via_elsv(int genus, const PoleProfile& profile, const HodgeTable& table,
                                 SignConvention convention = SignConvention::alternating) {
    if (!is_stable(genus, profile.length())) throw InvalidInput("hurwitz_via_elsv: unstable (g, n)");
    return prefactor(genus, profile) * hodge_polynomial(genus, profile, table, convention);
}

/// Solves for every <psi^b lambda_j>_{g,n} from Hurwitz numbers on the
/// sorted grid {1..bound}^n. Surplus rows must have zero residual.
inline HodgeTable extract_hodge_integrals(int genus, int points, int bound, const HurwitzProvider& hurwitz,
                                          SignConvention convention = SignConvention::alternating) {
    if (!is_stable(genus, points)) {
        throw InvalidInput("extract_hodge_integrals: (g, n) = (" + std::to_string(genus) + ", " +
                           std::to_string(points) + ") is unstable");
    }
    const auto keys = required_hodge_keys(genus, points);
    const auto grid = sorted_grid(points, bound);
    if (grid.size() <= keys.size()) {
        throw RankDeficient("grid too small: " + std::to_string(grid.size()) + " grid points for " +
                            std::to_string(keys.size()) + " unknowns at bound " + std::to_string(bound));
    }

    RationalMatrix a = extraction_matrix(keys, grid, convention);
    std::vector<Rational> rhs(grid.size());
    for (std::size_t row = 0; row < grid.size(); ++row) {
        rhs[row] = normalized_value(genus, PoleProfile(grid[row]), hurwitz).value;
    }

    LinearSolution sol;
    try {
        sol = solve_exact(a, rhs);
    } catch (const RankDeficient& e) {
        throw RankDeficient(std::string("grid too small: ") + e.what());
    }
    if (!sol.residual_is_zero()) {
        for (std::size_t row = 0; row < grid.size(); ++row) {
            if (sol.residual[row] != 0) {
                throw ConsistencyFailure("nonzero residual " + to_string(sol.residual[row]) + " at grid point " +
                                         PoleProfile(grid[row]).str() + " for (g, n) = (" + std::to_string(genus) +
                                         ", " + std::to_string(points) + ")");
            }
        }
    }

    HodgeTable table;
    for (std::size_t col = 0; col < keys.size(); ++col) table.set(keys[col], sol.x[col]);
    table.grid = GridInfo{bound, grid.size(), keys.size(), grid.size() - sol.rank, true};
    return table;
}

}  // namespace hurwitz
