// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Every comparison is exact rational equality; there are no tolerances.

#include <hurwitz/elsv.hpp>
#include <hurwitz/engines.hpp>
#include <hurwitz/series.hpp>
#include <hurwitz/symgroup.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hurwitz;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> failures;
    std::string note;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
    void expect_eq(const Rational& actual, const Rational& expected, const std::string& what) {
        expect(actual == expected, what + ": expected " + to_string(expected) + ", got " + to_string(actual));
    }
};

WorkBounds wide_bounds() {
    WorkBounds b;
    b.frobenius_max_sheets = 18;
    return b;
}

// Every value produced while checking criteria 1-3, for criteria 4 and 9.
std::vector<std::pair<HurwitzKey, Rational>> raw_values;

Rational keep(int g, const Partition& mu, const Rational& v) {
    raw_values.push_back({HurwitzKey{g, mu}, v});
    return v;
}

std::string tag(int g, const Partition& mu) { return "g=" + std::to_string(g) + " " + mu.str(); }

void criterion_anchor_values(Criterion& c) {
    struct Anchor {
        int g;
        Partition mu;
        Rational value;
    };
    const std::vector<Anchor> anchors{
        {0, {1, 1, 1}, 4}, {0, {2, 1}, 4},       {0, {3}, 1},           {0, {4}, 4},
        {0, {2, 2}, 12},   {0, {1, 1, 1, 1}, 120}, {1, {1}, 0},          {1, {2}, Rational(1, 2)},
        {1, {1, 1}, Rational(1, 2)}, {1, {1, 1, 1}, 40}, {2, {1}, 0},    {2, {2}, Rational(1, 2)},
        {2, {3}, 81},
    };
    for (const auto& a : anchors) {
        const PoleProfile p(a.mu);
        c.expect_eq(keep(a.g, a.mu, brute_force_hurwitz(a.g, p)), a.value, "brute " + tag(a.g, a.mu));
        c.expect_eq(keep(a.g, a.mu, connected_hurwitz(a.g, p)), a.value,
                    "frobenius " + tag(a.g, a.mu));
        c.expect_eq(keep(a.g, a.mu, cut_and_join_hurwitz(a.g, a.mu)), a.value,
                    "cutjoin " + tag(a.g, a.mu));
    }
    c.note = std::to_string(anchors.size()) + " anchors x 3 engines";
}

void criterion_engine_agreement(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    int three_way = 0, two_way = 0;
    for (int k = 1; k <= 5; ++k) {
        for (const auto& mu : partitions_of(k)) {
            for (int g = 0; mu.size() + mu.length() + 2 * g - 2 <= 12; ++g) {
                const PoleProfile p(mu);
                Rational b = keep(g, mu, brute_force_hurwitz(g, p));
                Rational f = keep(g, mu, connected_hurwitz(g, p));
                Rational j = keep(g, mu, cut_and_join_hurwitz(g, mu));
                c.expect(b == f && f == j, tag(g, mu) + ": brute " + to_string(b) + ", frobenius " + to_string(f) +
                                               ", cutjoin " + to_string(j));
                ++three_way;
            }
        }
    }
    for (int k = 1; k <= 6; ++k) {
        for (const auto& mu : partitions_of(k)) {
            for (int g = 0; g <= 2; ++g) {
                Rational f = keep(g, mu, connected_hurwitz(g, PoleProfile(mu)));
                Rational j = keep(g, mu, cut_and_join_hurwitz(g, mu));
                c.expect_eq(j, f, "cutjoin vs frobenius " + tag(g, mu));
                ++two_way;
            }
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < 300.0, "runtime " + std::to_string(seconds) + " s exceeds 300 s");
    std::ostringstream note;
    note << three_way << " three-way keys, " << two_way << " two-way keys, " << seconds << " s";
    c.note = note.str();
}

void criterion_genus_zero(Criterion& c) {
    int count = 0;
    for (int k = 1; k <= 8; ++k) {
        for (const auto& mu : partitions_of(k)) {
            const PoleProfile p(mu);
            c.expect_eq(keep(0, mu, connected_hurwitz(0, p)), genus_zero_closed_form(p), tag(0, mu));
            ++count;
        }
    }
    c.note = std::to_string(count) + " partitions";
}

void criterion_degree_ll(Criterion& c) {
    for (const auto& [key, value] : raw_values) {
        Rational degree = value * Rational(aut_count(key.mu));
        for (int k : key.mu.parts()) degree *= k;
        c.expect(is_integer(degree) && degree >= 0, "deg LL = " + to_string(degree) + " at " + tag(key.genus, key.mu));
        try {
            (void)degree_LL(key.genus, PoleProfile(key.mu), value);
        } catch (const ConsistencyFailure& e) {
            c.expect(false, e.what());
        }
    }
    c.note = std::to_string(raw_values.size()) + " values";
}

HodgeTable g11, g03, g21;

void criterion_extraction(Criterion& c) {
    const auto provider = frobenius_provider();
    g11 = extract_hodge_integrals(1, 1, minimal_grid_bound(1, 1), provider);
    g03 = extract_hodge_integrals(0, 3, minimal_grid_bound(0, 3), provider);
    g21 = extract_hodge_integrals(2, 1, minimal_grid_bound(2, 1), provider);
    c.expect_eq(g11.at(1, 1, {1}, 0), Rational(1, 24), "<psi_1>_{1,1}");
    c.expect_eq(g11.at(1, 1, {0}, 1), Rational(1, 24), "<lambda_1>_{1,1}");
    c.expect_eq(g03.at(0, 3, {0, 0, 0}, 0), 1, "<1>_{0,3}");
    c.expect_eq(g21.at(2, 1, {4}, 0), Rational(1, 1152), "<psi^4>_{2,1}");
    c.expect_eq(g21.at(2, 1, {3}, 1), Rational(1, 480), "<psi^3 lambda_1>_{2,1}");
    c.expect_eq(g21.at(2, 1, {2}, 2), Rational(7, 5760), "<psi^2 lambda_2>_{2,1}");
    for (const auto* t : {&g11, &g03, &g21}) {
        c.expect(t->grid.residual_zero && t->grid.surplus >= 1, "grid B=" + std::to_string(t->grid.bound) +
                                                                    " lacks a zero-residual surplus row");
    }
    c.note = "surplus rows " + std::to_string(g11.grid.surplus) + "/" + std::to_string(g03.grid.surplus) + "/" +
             std::to_string(g21.grid.surplus);
}

void criterion_round_trip(Criterion& c) {
    const WorkBounds bounds = wide_bounds();
    const auto provider = frobenius_provider(bounds);
    int checked = 0, outside = 0;
    for (int g = 0; g <= 2; ++g) {
        for (int n = 1; n <= 3; ++n) {
            if (!is_stable(g, n)) continue;
            const int bound = minimal_grid_bound(g, n);
            const HodgeTable table = extract_hodge_integrals(g, n, bound, provider);
            auto profiles = sorted_grid(n, 4);
            // One shell beyond the grid, as far as the sheet bound allows.
            for (const auto& p : sorted_grid(n, bound + 1)) {
                int sheets = 0;
                for (int k : p) sheets += k;
                if (p.back() > bound && p.back() > 4 && sheets <= bounds.frobenius_max_sheets) profiles.push_back(p);
            }
            for (const auto& p : profiles) {
                const PoleProfile profile(p);
                const bool off_grid = p.back() > bound;
                c.expect_eq(hurwitz_via_elsv(g, profile, table), connected_hurwitz(g, profile, bounds),
                            "g=" + std::to_string(g) + " profile " + profile.str());
                ++checked;
                if (off_grid) ++outside;
            }
        }
    }
    c.expect(outside >= 3, "only " + std::to_string(outside) + " profiles outside the extraction grid");
    c.note = std::to_string(checked) + " profiles, " + std::to_string(outside) + " outside the grid";
}

void criterion_sine_identity(Criterion& c) {
    HodgeTable tables = g11;
    tables.merge(g21);
    for (int k = 1; k <= 5; ++k) {
        const Series kernel = sine_kernel(k, 6);
        const Rational t2 = make_rational(k + 1, 24);
        const Rational t4 = make_rational((k + 1) * (5 * k + 7), 5760);
        c.expect_eq(kernel[2], t2, "t^2 coefficient k=" + std::to_string(k));
        c.expect_eq(kernel[4], t4, "t^4 coefficient k=" + std::to_string(k));
        c.expect_eq(hodge_side_coefficient(1, k, tables), t2, "Hodge side g=1 k=" + std::to_string(k));
        c.expect_eq(hodge_side_coefficient(2, k, tables), t4, "Hodge side g=2 k=" + std::to_string(k));
    }
    c.expect(verify_faber_pandharipande(2, {1, 2, 3, 4, 5}, tables).all_passed(), "verify_faber_pandharipande report");
}

void criterion_sign_convention(Criterion& c) {
    const Rational alternating = hurwitz_via_elsv(1, {1}, g11, SignConvention::alternating);
    const Rational plus = hurwitz_via_elsv(1, {1}, g11, SignConvention::all_plus);
    c.expect_eq(alternating, 0, "alternating h_{1;1}");
    c.expect_eq(plus, Rational(1, 6), "all-plus h_{1;1}");
    c.expect(plus != connected_hurwitz(1, {1}), "all-plus reading should contradict h_{1;1} = 0");
    c.note = "alternating " + to_string(alternating) + ", all-plus " + to_string(plus);
}

void criterion_properties(Criterion& c) {
    // Normalization integrality.
    for (const auto& [key, value] : raw_values) {
        Rational scaled = value * Rational(factorial(static_cast<std::uint64_t>(key.mu.size())));
        c.expect(is_integer(scaled) && scaled >= 0, "h*k! = " + to_string(scaled) + " at " + tag(key.genus, key.mu));
    }
    // Profile permutation invariance: every ordering of every profile with k <= 6.
    for (int k = 1; k <= 6; ++k) {
        for (const auto& mu : partitions_of(k)) {
            std::vector<int> orders = mu.parts();
            std::sort(orders.begin(), orders.end());
            for (int g = 0; g <= 1; ++g) {
                const Rational reference = connected_hurwitz(g, PoleProfile(mu));
                do {
                    c.expect_eq(connected_hurwitz(g, PoleProfile(orders)), reference,
                                "ordering " + PoleProfile(orders).str() + " g=" + std::to_string(g));
                } while (std::next_permutation(orders.begin(), orders.end()));
            }
        }
    }
    // Cut-and-join parity vanishing: no monomial of F_r violates the genus constraint.
    CutJoinSeries series(6);
    for (int r = 0; r <= 14; ++r) {
        for (const auto& [mu, coeff] : series.layer(r).terms()) {
            c.expect(implied_genus(mu, r).has_value(), "F_" + std::to_string(r) + " has " + mu.str());
        }
    }
    for (int k = 1; k <= 6; ++k) {
        for (const auto& mu : partitions_of(k)) {
            for (int r = 0; r <= 10; ++r) {
                if (!implied_genus(mu, r)) {
                    c.expect_eq(series.layer(r).coefficient(mu), 0, "F_" + std::to_string(r) + " at " + mu.str());
                }
            }
        }
    }
    // Character orthogonality.
    for (int k = 1; k <= 6; ++k) {
        const auto classes = partitions_of(k);
        for (const auto& mu : classes) {
            for (const auto& nu : classes) {
                Integer sum = 0;
                for (const auto& lambda : classes) sum += character_value(lambda, mu) * character_value(lambda, nu);
                c.expect(sum == (mu == nu ? z_order(mu) : Integer(0)), "orthogonality " + mu.str() + " " + nu.str());
            }
        }
    }
}

}  // namespace

int main() {
    std::vector<std::pair<Criterion, std::function<void(Criterion&)>>> criteria;
    auto add = [&](int id, std::string title, std::function<void(Criterion&)> fn) {
        Criterion c;
        c.id = id;
        c.title = std::move(title);
        criteria.push_back({std::move(c), std::move(fn)});
    };
    add(1, "anchor Hurwitz numbers, every engine", criterion_anchor_values);
    add(2, "engine agreement (brute k<=5 r<=12; frobenius/cutjoin k<=6 g<=2; < 5 min)", criterion_engine_agreement);
    add(3, "genus-0 closed form for every partition with k<=8", criterion_genus_zero);
    add(4, "deg LL = h * #Aut * prod k_i is a nonnegative integer", criterion_degree_ll);
    add(5, "Hodge extraction (1,1), (0,3), (2,1) with zero-residual surplus rows", criterion_extraction);
    add(6, "ELSV round trip g<=2, n<=3, k_i<=4 plus out-of-grid profiles", criterion_round_trip);
    add(7, "sine-kernel identity t^2, t^4 for k=1..5 against extracted tables", criterion_sine_identity);
    add(8, "sign convention: alternating gives h_{1;1}=0, all-plus gives 1/6", criterion_sign_convention);
    add(9, "properties: integrality, order invariance, parity vanishing, orthogonality", criterion_properties);

    int failed = 0;
    for (auto& [c, fn] : criteria) {
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title;
        if (!c.note.empty()) std::cout << " (" << c.note << ")";
        std::cout << '\n';
        for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "       " << c.failures[i] << '\n';
        if (!c.pass) ++failed;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
