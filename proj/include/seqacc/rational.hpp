#ifndef SEQACC_RATIONAL_HPP
#define SEQACC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "seqacc/errors.hpp"

namespace seqacc {

/// Exact rational number backed by GMP. Thin wrapper around mpq_class
/// that turns division by zero into a reportable NumericError instead
/// of the SIGFPE raised by raw GMP, and that parses both "p/q" and
/// decimal literals.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long long num, long long den) {
        if (den == 0)
            throw NumericError("rational with zero denominator");
        v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "p/q", an integer, or a decimal literal with optional
    /// exponent ("3.25", "-1e-3"). Exact: "3.25" becomes 13/4.
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    /// Canonical "p" or "p/q" form.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw NumericError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    mpq_class v_;
};

inline std::string Rational::str() const {
    return v_.get_str();
}

inline Rational Rational::parse(const std::string& text) {
    std::string s = text;
    // strip surrounding whitespace
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos)
        throw InputError("empty rational literal");
    s = s.substr(b, e - b + 1);

    if (s.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw InputError("bad rational literal '" + text + "'");
        if (sgn(q.get_den()) == 0)
            throw NumericError("zero denominator in literal '" + text + "'");
        q.canonicalize();
        return Rational(q);
    }

    // decimal / scientific form
    std::string digits;
    long frac_len = 0, exponent = 0;
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    bool any = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
        digits += s[i];
        any = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
            digits += s[i];
            ++frac_len;
            any = true;
        }
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = (s[i] == '-');
            ++i;
        }
        if (i == s.size())
            throw InputError("bad numeric literal '" + text + "'");
        long ev = 0;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i)
            ev = ev * 10 + (s[i] - '0');
        exponent = eneg ? -ev : ev;
    }
    if (!any || i != s.size())
        throw InputError("bad numeric literal '" + text + "'");

    mpz_class num(digits.empty() ? "0" : digits);
    if (neg)
        num = -num;
    mpz_class den(1);
    long net = exponent - frac_len;
    mpz_class ten(10), scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(net < 0 ? -net : net));
    mpq_class q;
    if (net >= 0)
        q = mpq_class(num * scale, den);
    else
        q = mpq_class(num, scale);
    q.canonicalize();
    return Rational(q);
}

} // namespace seqacc

#endif
