#ifndef SEQACC_SCALAR_HPP
#define SEQACC_SCALAR_HPP

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "seqacc/errors.hpp"
#include "seqacc/rational.hpp"

namespace seqacc {

/// Traits shared by the two scalar realizations: IEEE binary64 and
/// exact big-integer rationals. All numerical modules are templated on
/// the scalar type through these traits.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;

    static double from_int(long long n) { return static_cast<double>(n); }
    static double from_ratio(long long num, long long den) {
        if (den == 0)
            throw NumericError("zero denominator");
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static double to_double(double x) { return x; }
    static double abs(double x) { return std::fabs(x); }
    static std::string str(double x);

    /// Multiple of machine epsilon used by near-zero tests. Configurable.
    static double& zero_factor() {
        static double f = 1e2;
        return f;
    }

    static double threshold(double scale) {
        return zero_factor() * std::numeric_limits<double>::epsilon() *
               std::max(std::fabs(scale), 1.0);
    }

    /// Near-zero against a running magnitude `scale`.
    static bool negligible(double x, double scale) {
        return std::fabs(x) <= threshold(scale);
    }

    static bool is_zero(double x) { return x == 0.0; }

    static double parse(const std::string& text) {
        // accept "p/q" in float mode as well
        const auto slash = text.find('/');
        try {
            if (slash != std::string::npos) {
                return Rational::parse(text).to_double();
            }
            std::size_t pos = 0;
            double v = std::stod(text, &pos);
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos != text.size())
                throw InputError("bad numeric literal '" + text + "'");
            return v;
        } catch (const std::invalid_argument&) {
            throw InputError("bad numeric literal '" + text + "'");
        } catch (const std::out_of_range&) {
            throw InputError("numeric literal out of range '" + text + "'");
        }
    }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;

    static Rational from_int(long long n) { return Rational(n); }
    static Rational from_ratio(long long num, long long den) { return Rational(num, den); }
    static double to_double(const Rational& x) { return x.to_double(); }
    static Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
    static std::string str(const Rational& x) { return x.str(); }

    static bool negligible(const Rational& x, const Rational&) { return x.is_zero(); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }

    static Rational parse(const std::string& text) { return Rational::parse(text); }
};

template <class T>
concept ScalarField = requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { scalar_traits<T>::exact } -> std::convertible_to<bool>;
};

/// Division that reports an exact-zero divisor instead of producing a
/// non-finite value (float) or aborting (GMP).
template <ScalarField T>
T checked_div(const T& num, const T& den, const char* what = "division by zero") {
    if (scalar_traits<T>::is_zero(den))
        throw NumericError(what);
    return num / den;
}

template <ScalarField T>
T pow_int(const T& base, long e) {
    if (e < 0)
        return checked_div(scalar_traits<T>::from_int(1), pow_int(base, -e),
                           "zero base with negative exponent");
    T r = scalar_traits<T>::from_int(1);
    T b = base;
    long n = e;
    while (n > 0) {
        if (n & 1)
            r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

/// Rising factorial (x)_j = x (x+1) ... (x+j-1); (x)_0 = 1.
template <ScalarField T>
T pochhammer(const T& x, long j) {
    T r = scalar_traits<T>::from_int(1);
    T f = x;
    for (long i = 0; i < j; ++i) {
        r = r * f;
        f = f + scalar_traits<T>::from_int(1);
    }
    return r;
}

/// Row k of Pascal's triangle in exact integers. The recurrence stays
/// inside 64 bits for k <= 62, which covers all practical orders.
inline std::vector<std::uint64_t> binomial_row(int k) {
    if (k < 0 || k > 62)
        throw InputError("binomial order " + std::to_string(k) + " out of supported range 0..62");
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1);
    row[0] = 1;
    for (int j = 1; j <= k; ++j)
        row[static_cast<std::size_t>(j)] =
            row[static_cast<std::size_t>(j) - 1] * static_cast<std::uint64_t>(k - j + 1) /
            static_cast<std::uint64_t>(j);
    return row;
}

inline std::string scalar_traits<double>::str(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace seqacc

#endif
