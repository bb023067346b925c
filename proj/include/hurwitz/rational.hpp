#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

// Arbitrary precision integer and rational. mpq_class keeps results of
// arithmetic in canonical form (gcd 1, positive denominator, zero is 0/1).
using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for malformed user input (bad profile, bad genus, size mismatch).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured work bound would be exceeded; nothing is approximated.
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations disagree, or an integrality/residual
/// invariant is violated.
class ConsistencyFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Canonical text: "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidInput("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InvalidInput("malformed integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw InvalidInput("malformed integer '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

/// Inverse of to_string; also accepts non-reduced input and reduces it.
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return make_rational(parse_integer(text));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den <= 0) throw InvalidInput("rational denominator must be positive");
    return make_rational(parse_integer(text.substr(0, slash)), den);
}

inline Integer factorial(std::uint64_t n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer ipow(const Integer& base, std::uint64_t e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

/// base^e for a possibly negative exponent; base must be nonzero when e < 0.
inline Rational rpow(const Integer& base, std::int64_t e) {
    if (e >= 0) return Rational(ipow(base, static_cast<std::uint64_t>(e)));
    if (base == 0) throw InvalidInput("zero to a negative power");
    return make_rational(1, ipow(base, static_cast<std::uint64_t>(-e)));
}

}  // namespace hurwitz
