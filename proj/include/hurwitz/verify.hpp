#pragma once

#include <hurwitz/elsv.hpp>
#include <hurwitz/engines.hpp>
#include <hurwitz/report.hpp>
#include <hurwitz/series.hpp>
#include <hurwitz/symgroup.hpp>

#include <functional>
#include <string>
#include <vector>

namespace hurwitz {

/// Size parameters of the verification suites.
struct SuiteOptions {
    WorkBounds bounds = [] {
        WorkBounds b;
        b.frobenius_max_sheets = 18;
        return b;
    }();
    int engines_max_sheets = 5;
    int brute_max_transpositions = 12;
    int pair_max_sheets = 6;
    int pair_max_genus = 2;
    int genus0_max_sheets = 8;
    int roundtrip_max_genus = 2;
    int roundtrip_max_points = 3;
    int roundtrip_max_order = 4;
    int genus0_extract_max_points = 6;
    int fp_max_genus = 2;
    std::vector<int> fp_ks{1, 2, 3, 4, 5};
};

struct AnchorValue {
    int genus;
    PoleProfile profile;
    const char* value;
};

inline const std::vector<AnchorValue>& anchor_values() {
    static const std::vector<AnchorValue> anchors{
        {0, {1, 1, 1}, "4"}, {0, {2, 1}, "4"},      {0, {3}, "1"},          {0, {4}, "4"},  {0, {2, 2}, "12"},
        {0, {1, 1, 1, 1}, "120"}, {1, {1}, "0"},    {1, {2}, "1/2"},        {1, {1, 1}, "1/2"},
        {1, {1, 1, 1}, "40"}, {2, {1}, "0"},        {2, {2}, "1/2"},        {2, {3}, "81"},
    };
    return anchors;
}

namespace detail {

inline std::string hkey(int g, const Partition& mu) { return "g=" + std::to_string(g) + " mu=" + mu.str(); }

inline void collect(HurwitzTable* table, int g, const Partition& mu, const Rational& v, Engine e) {
    if (table) table->insert(HurwitzKey{g, mu}, v, e);
}

// Runs fn, turning an exception into a failed record instead of aborting the suite.
inline void guarded(Report& report, const std::string& suite, const std::string& key, const std::string& expected,
                    const std::function<std::string()>& fn) {
    try {
        report.add(suite, key, expected, fn());
    } catch (const std::exception& e) {
        report.add(CheckRecord{suite, key, expected, std::string("error: ") + e.what(), false});
    }
}

}  // namespace detail

/// Anchor values by every engine that is within bounds, then pairwise
/// agreement over all small keys.
inline Report engines_suite(const SuiteOptions& opt = {}, HurwitzTable* collected = nullptr) {
    Report report;
    const std::string suite = "engines";
    WorkBounds brute_bounds = opt.bounds;

    for (const auto& a : anchor_values()) {
        const Partition mu = a.profile.sorted();
        for (Engine e : {Engine::brute, Engine::frobenius, Engine::cutjoin}) {
            if (e == Engine::brute && a.profile.sheets() > brute_bounds.brute_max_sheets) continue;
            detail::guarded(report, suite, "anchor " + detail::hkey(a.genus, mu) + " " + std::string(engine_name(e)),
                            a.value, [&] {
                                Rational v = hurwitz_number(e, a.genus, a.profile, opt.bounds);
                                detail::collect(collected, a.genus, mu, v, e);
                                return to_string(v);
                            });
        }
    }

    for (int k = 1; k <= opt.engines_max_sheets; ++k) {
        for (const auto& mu : partitions_of(k)) {
            for (int g = 0; mu.size() + mu.length() + 2 * g - 2 <= opt.brute_max_transpositions; ++g) {
                const PoleProfile profile(mu);
                Rational frob = connected_hurwitz(g, profile, opt.bounds);
                detail::collect(collected, g, mu, frob, Engine::frobenius);
                const std::string expected = to_string(frob);
                detail::guarded(report, suite, detail::hkey(g, mu) + " brute-vs-frobenius", expected,
                                [&] { return to_string(brute_force_hurwitz(g, profile, brute_bounds)); });
                detail::guarded(report, suite, detail::hkey(g, mu) + " cutjoin-vs-frobenius", expected,
                                [&] { return to_string(cut_and_join_hurwitz(g, mu, opt.bounds)); });
            }
        }
    }

    for (int k = 1; k <= opt.pair_max_sheets; ++k) {
        for (const auto& mu : partitions_of(k)) {
            for (int g = 0; g <= opt.pair_max_genus; ++g) {
                Rational frob = connected_hurwitz(g, PoleProfile(mu), opt.bounds);
                detail::collect(collected, g, mu, frob, Engine::frobenius);
                detail::guarded(report, suite, detail::hkey(g, mu) + " cutjoin-vs-frobenius", to_string(frob),
                                [&] { return to_string(cut_and_join_hurwitz(g, mu, opt.bounds)); });
            }
        }
    }
    return report;
}

/// connected_hurwitz(0, mu) against the closed form for every |mu| <= bound.
inline Report genus0_suite(const SuiteOptions& opt = {}, HurwitzTable* collected = nullptr) {
    Report report;
    for (int k = 1; k <= opt.genus0_max_sheets; ++k) {
        for (const auto& mu : partitions_of(k)) {
            const PoleProfile profile(mu);
            detail::guarded(report, "genus0", detail::hkey(0, mu), to_string(genus_zero_closed_form(profile)), [&] {
                Rational v = connected_hurwitz(0, profile, opt.bounds);
                detail::collect(collected, 0, mu, v, Engine::frobenius);
                return to_string(v);
            });
        }
    }
    return report;
}

/// h * #Aut * prod k_i is a nonnegative integer for every table entry.
inline Report degll_suite(const HurwitzTable& table) {
    Report report;
    for (const auto& [key, entry] : table.entries()) {
        const PoleProfile profile(key.mu);
        Rational degree = entry.value * Rational(aut_count(profile));
        for (int k : profile.orders()) degree *= k;
        const bool ok = is_integer(degree) && degree >= 0;
        report.add(CheckRecord{"degll", detail::hkey(key.genus, key.mu) + " " + std::string(engine_name(entry.engine)),
                               "nonnegative integer", to_string(degree), ok});
    }
    return report;
}

/// Extraction with known-value checks, the sign-convention demonstration,
/// and forward re-evaluation on and off the extraction grid.
inline Report elsv_roundtrip_suite(const SuiteOptions& opt = {}) {
    Report report;
    const std::string suite = "elsv-roundtrip";
    const HurwitzProvider provider = frobenius_provider(opt.bounds);

    for (int g = 0; g <= opt.roundtrip_max_genus; ++g) {
        for (int n = 1; n <= opt.roundtrip_max_points; ++n) {
            if (!is_stable(g, n)) continue;
            const std::string tag = "g=" + std::to_string(g) + " n=" + std::to_string(n);
            HodgeTable table;
            int bound = 0;
            try {
                bound = minimal_grid_bound(g, n);
                table = extract_hodge_integrals(g, n, bound, provider);
            } catch (const std::exception& e) {
                report.add(CheckRecord{suite, tag + " extract", "zero residual", std::string("error: ") + e.what(), false});
                continue;
            }
            report.add(CheckRecord{suite, tag + " extract B=" + std::to_string(bound), "zero residual, surplus >= 1",
                                   "zero residual, surplus " + std::to_string(table.grid.surplus),
                                   table.grid.residual_zero && table.grid.surplus >= 1});

            std::vector<std::vector<int>> profiles = sorted_grid(n, opt.roundtrip_max_order);
            for (const auto& p : sorted_grid(n, bound + 1)) {
                if (p.back() > bound) {
                    int sheets = 0;
                    for (int k : p) sheets += k;
                    if (sheets <= opt.bounds.frobenius_max_sheets) profiles.push_back(p);
                }
            }
            for (const auto& p : profiles) {
                const PoleProfile profile(p);
                const bool outside = std::any_of(p.begin(), p.end(), [&](int k) { return k > bound; });
                std::string key = tag + " profile " + profile.str() + (outside ? " (outside grid)" : "");
                detail::guarded(report, suite, key, to_string(connected_hurwitz(g, profile, opt.bounds)),
                                [&] { return to_string(hurwitz_via_elsv(g, profile, table)); });
            }

            if (g == 1 && n == 1) {
                report.add(suite, tag + " <psi_1>", "1/24", to_string(table.at(1, 1, {1}, 0)));
                report.add(suite, tag + " <lambda_1>", "1/24", to_string(table.at(1, 1, {0}, 1)));
                report.add(suite, "sign alternating h(1;1)", "0", to_string(hurwitz_via_elsv(1, {1}, table)));
                report.add(suite, "sign all-plus h(1;1)", "1/6",
                           to_string(hurwitz_via_elsv(1, {1}, table, SignConvention::all_plus)));
            }
            if (g == 0 && n == 3) report.add(suite, tag + " <1>", "1", to_string(table.at(0, 3, {0, 0, 0}, 0)));
            if (g == 2 && n == 1) {
                report.add(suite, tag + " <psi^4>", "1/1152", to_string(table.at(2, 1, {4}, 0)));
                report.add(suite, tag + " <psi^3 lambda_1>", "1/480", to_string(table.at(2, 1, {3}, 1)));
                report.add(suite, tag + " <psi^2 lambda_2>", "7/5760", to_string(table.at(2, 1, {2}, 2)));
            }
        }
    }

    // Genus zero: <psi^b>_{0,n} = (n-3)! / prod b_i!.
    for (int n = 3; n <= opt.genus0_extract_max_points; ++n) {
        const std::string tag = "g=0 n=" + std::to_string(n);
        HodgeTable table;
        try {
            table = extract_hodge_integrals(0, n, minimal_grid_bound(0, n), provider);
        } catch (const std::exception& e) {
            report.add(CheckRecord{suite, tag + " extract", "zero residual", std::string("error: ") + e.what(), false});
            continue;
        }
        for (const auto& [key, value] : table.values()) {
            Integer denom = 1;
            for (int b : key.psi) denom *= factorial(static_cast<std::uint64_t>(b));
            report.add(suite, key.str(), to_string(make_rational(factorial(static_cast<std::uint64_t>(n - 3)), denom)),
                       to_string(value));
        }
    }
    return report;
}

/// Sine-kernel identity for g <= fp_max_genus and the listed k, plus the
/// closed-form t^2 and t^4 coefficients.
inline Report fp_identity_suite(const SuiteOptions& opt = {}) {
    Report report;
    try {
        report = verify_faber_pandharipande(opt.fp_max_genus, opt.fp_ks, frobenius_provider(opt.bounds));
    } catch (const std::exception& e) {
        report.add(CheckRecord{"fp-identity", "extract", "tables", std::string("error: ") + e.what(), false});
        return report;
    }
    for (int k : opt.fp_ks) {
        Series kernel = sine_kernel(k, 2 * opt.fp_max_genus + 2);
        report.add("fp-identity", "k=" + std::to_string(k) + " t^2 closed form", to_string(make_rational(k + 1, 24)),
                   to_string(kernel[2]));
        if (opt.fp_max_genus >= 2) {
            report.add("fp-identity", "k=" + std::to_string(k) + " t^4 closed form",
                       to_string(make_rational((k + 1) * (5 * k + 7), 5760)), to_string(kernel[4]));
        }
    }
    return report;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"elsv-roundtrip", "fp-identity", "degll", "genus0", "engines"};
    return names;
}

}  // namespace hurwitz
