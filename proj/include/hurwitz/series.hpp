#pragma once

#include <hurwitz/elsv.hpp>
#include <hurwitz/rational.hpp>
#include <hurwitz/report.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hurwitz {

/// Formal power series in t over the rationals, truncated after t^order.
class Series {
public:
    explicit Series(int order) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1) {}
    Series(int order, const std::vector<Rational>& leading) : Series(order) {
        for (std::size_t i = 0; i < leading.size() && i < coeffs_.size(); ++i) coeffs_[i] = leading[i];
    }

    static Series one(int order) { return Series(order, {Rational(1)}); }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    Rational& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    friend Series operator+(const Series& a, const Series& b) {
        Series out(common_order(a, b));
        for (int i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
        return out;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series out(common_order(a, b));
        for (int i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
        return out;
    }
    /// Cauchy product truncated at the common order.
    friend Series operator*(const Series& a, const Series& b) {
        Series out(common_order(a, b));
        for (int i = 0; i <= out.order(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; i + j <= out.order(); ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    }

    bool operator==(const Series&) const = default;

    std::string str() const {
        std::string s;
        for (int i = 0; i <= order(); ++i) {
            if ((*this)[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += "(" + to_string((*this)[i]) + ")t^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw InvalidInput("series order must be nonnegative");
        return order;
    }
    static int common_order(const Series& a, const Series& b) {
        if (a.order() != b.order()) throw InvalidInput("series orders differ");
        return a.order();
    }

    std::vector<Rational> coeffs_;
};

inline Series series_multiply(const Series& a, const Series& b) { return a * b; }

/// 1/s by solving s * r = 1 coefficient by coefficient.
inline Series series_reciprocal(const Series& s) {
    if (s[0] == 0) throw InvalidInput("series reciprocal: constant term is zero");
    Series r(s.order());
    const Rational inv = 1 / s[0];
    r[0] = inv;
    for (int n = 1; n <= s.order(); ++n) {
        Rational acc = 0;
        for (int i = 1; i <= n; ++i) acc += s[i] * r[n - i];
        r[n] = -acc * inv;
    }
    return r;
}

/// Binary exponentiation.
inline Series series_power(Series base, std::uint64_t e) {
    Series result = Series::one(base.order());
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

/// ((t/2) / sin(t/2))^{k+1} through t^order.
inline Series sine_kernel(int k, int order) {
    if (k < 1) throw InvalidInput("sine_kernel: k must be positive");
    if (order < 2 || order % 2) throw InvalidInput("sine_kernel: order must be even and at least 2");
    // sin(t/2)/(t/2) = sum_m (-1)^m t^{2m} / (4^m (2m+1)!)
    Series sinc(order);
    for (int m = 0; 2 * m <= order; ++m) {
        Rational c = make_rational(1, ipow(4, static_cast<std::uint64_t>(m)) * factorial(static_cast<std::uint64_t>(2 * m + 1)));
        sinc[2 * m] = (m % 2) ? Rational(-c) : c;
    }
    return series_power(series_reciprocal(sinc), static_cast<std::uint64_t>(k) + 1);
}

/// t^{2g} coefficient of the Hodge-integral side:
///   sum_{j=0}^{g} k^{g-j} <psi_1^{3g-2-j} lambda_j>_{g,1}, and 1 at g = 0.
inline Rational hodge_side_coefficient(int genus, int k, const HodgeTable& table) {
    if (genus < 0) throw InvalidInput("negative genus");
    if (genus == 0) return 1;
    Rational total = 0;
    for (int j = 0; j <= genus; ++j) {
        total += Rational(ipow(k, static_cast<std::uint64_t>(genus - j))) * table.at(genus, 1, {3 * genus - 2 - j}, j);
    }
    return total;
}

/// Compares the Hodge side with the sine kernel for each g <= max_genus and
/// each k. Every pair yields one record, passing or not.
inline Report verify_faber_pandharipande(int max_genus, const std::vector<int>& ks, const HodgeTable& table) {
    const int order = 2 * max_genus + 2;
    Report report;
    for (int k : ks) {
        Series kernel = sine_kernel(k, order);
        for (int g = 0; g <= max_genus; ++g) {
            std::string key = "g=" + std::to_string(g) + " k=" + std::to_string(k);
            std::string actual;
            try {
                actual = to_string(hodge_side_coefficient(g, k, table));
            } catch (const std::out_of_range& e) {
                actual = std::string("missing: ") + e.what();
            }
            report.add("fp-identity", key, to_string(kernel[2 * g]), actual);
        }
        // Odd coefficients vanish and the spare even coefficient exists.
        for (int i = 1; i <= order; i += 2) {
            report.add("fp-identity", "k=" + std::to_string(k) + " t^" + std::to_string(i), "0", to_string(kernel[i]));
        }
    }
    return report;
}

/// Extracts the (g, 1) tables for g = 1..max_genus and runs the comparison.
inline Report verify_faber_pandharipande(int max_genus, const std::vector<int>& ks, const HurwitzProvider& hurwitz) {
    HodgeTable table;
    for (int g = 1; g <= max_genus; ++g) {
        table.merge(extract_hodge_integrals(g, 1, minimal_grid_bound(g, 1), hurwitz));
    }
    return verify_faber_pandharipande(max_genus, ks, table);
}

}  // namespace hurwitz
