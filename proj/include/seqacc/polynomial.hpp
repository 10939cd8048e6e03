#ifndef SEQACC_POLYNOMIAL_HPP
#define SEQACC_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "seqacc/scalar.hpp"

namespace seqacc {

/// Dense polynomial in z, coefficient index = power. Trailing zero
/// coefficients may be stored; degree() reports the highest index whose
/// coefficient is nonzero (exact realization) or above the near-zero
/// threshold relative to the largest coefficient (float realization).
template <ScalarField T>
class Polynomial {
public:
    Polynomial() : c_(1, scalar_traits<T>::from_int(0)) {}
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty())
            c_.push_back(scalar_traits<T>::from_int(0));
    }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial one() { return constant(scalar_traits<T>::from_int(1)); }

    const std::vector<T>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }
    const T& operator[](std::size_t i) const { return c_[i]; }

    long degree() const {
        T scale = scalar_traits<T>::from_int(0);
        for (const auto& c : c_) {
            T a = scalar_traits<T>::abs(c);
            if (scale < a)
                scale = a;
        }
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (!scalar_traits<T>::negligible(c_[i], scale))
                return static_cast<long>(i);
        }
        return -1; // zero polynomial
    }

    /// Horner evaluation.
    T eval(const T& z) const {
        T acc = scalar_traits<T>::from_int(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * z + c_[i];
        return acc;
    }

    Polynomial& add_scaled(const Polynomial& p, const T& factor, std::size_t power_shift = 0) {
        if (c_.size() < p.c_.size() + power_shift)
            c_.resize(p.c_.size() + power_shift, scalar_traits<T>::from_int(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            c_[i + power_shift] = c_[i + power_shift] + factor * p.c_[i];
        return *this;
    }

    Polynomial& scale(const T& factor) {
        for (auto& c : c_)
            c = c * factor;
        return *this;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        r.add_scaled(b, scalar_traits<T>::from_int(1));
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, scalar_traits<T>::from_int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

private:
    std::vector<T> c_;
};

/// poly_eval(p, z) = sum_i p_i z^i.
template <ScalarField T>
T poly_eval(const Polynomial<T>& p, const T& z) {
    return p.eval(z);
}

/// First order+1 coefficients of the product of two formal power series.
template <ScalarField T>
std::vector<T> series_multiply(const std::vector<T>& a, const std::vector<T>& b, std::size_t order) {
    std::vector<T> r(order + 1, scalar_traits<T>::from_int(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

/// First order+1 coefficients of the formal quotient num/den.
/// Requires den[0] != 0; multiplying the result back by den reproduces
/// num through z^order.
template <ScalarField T>
std::vector<T> series_divide(const std::vector<T>& num, const std::vector<T>& den, std::size_t order) {
    if (den.empty() || scalar_traits<T>::is_zero(den[0]))
        throw NumericError("series division by a series with zero constant term");
    std::vector<T> q(order + 1, scalar_traits<T>::from_int(0));
    for (std::size_t i = 0; i <= order; ++i) {
        T acc = i < num.size() ? num[i] : scalar_traits<T>::from_int(0);
        for (std::size_t j = 1; j <= i && j < den.size(); ++j)
            acc = acc - den[j] * q[i - j];
        q[i] = acc / den[0];
    }
    return q;
}

/// k-th forward difference of an indexed function:
/// Delta^k f(n) = (-1)^k sum_j (-1)^j C(k,j) f(n+j).
template <ScalarField T, class F>
T finite_difference(F&& values, int k, long n) {
    const auto binom = binomial_row(k);
    T acc = scalar_traits<T>::from_int(0);
    for (int j = 0; j <= k; ++j) {
        T term = scalar_traits<T>::from_int(static_cast<long long>(binom[static_cast<std::size_t>(j)])) *
                 values(n + j);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return (k % 2 == 0) ? acc : -acc;
}

} // namespace seqacc

#endif
