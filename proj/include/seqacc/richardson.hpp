#ifndef SEQACC_RICHARDSON_HPP
#define SEQACC_RICHARDSON_HPP

#include <optional>
#include <utility>
#include <vector>

#include "seqacc/polynomial.hpp"
#include "seqacc/schedule.hpp"
#include "seqacc/sequence.hpp"

namespace seqacc {

/// Positive, strictly decreasing interpolation points with limit 0.
template <ScalarField T>
class InterpolationPoints {
public:
    explicit InterpolationPoints(std::vector<T> x) : x_(std::move(x)) {
        const T zero = scalar_traits<T>::from_int(0);
        for (std::size_t i = 0; i < x_.size(); ++i) {
            if (!(zero < x_[i]))
                throw InputError("interpolation points must be positive");
            if (i > 0 && !(x_[i] < x_[i - 1]))
                throw InputError("interpolation points must be strictly decreasing");
        }
    }

    std::size_t size() const { return x_.size(); }
    const T& operator[](std::size_t i) const { return x_[i]; }

private:
    std::vector<T> x_;
};

/// Neville's interpolation scheme evaluated at x = 0:
///   N_0^(n) = s_n,
///   N_{k+1}^(n) = [x_n N_k^(n+1) - x_{n+k+1} N_k^(n)] / (x_n - x_{n+k+1}).
template <ScalarField T>
std::vector<std::vector<T>> neville_at_zero(const Sequence<T>& s, const InterpolationPoints<T>& x,
                                            int k_max) {
    if (x.size() < s.size())
        throw InputError("need one interpolation point per sequence element");
    std::vector<std::vector<T>> g;
    g.push_back(s.values());
    for (int k = 0; k < k_max && g.back().size() >= 2; ++k) {
        const auto& prev = g.back();
        std::vector<T> row;
        for (std::size_t n = 0; n + 1 < prev.size(); ++n) {
            const T den = x[n] - x[n + k + 1];
            if (scalar_traits<T>::is_zero(den))
                throw NumericError("coincident interpolation points at offsets " +
                                   std::to_string(n) + " and " + std::to_string(n + k + 1));
            row.push_back((x[n] * prev[n + 1] - x[n + k + 1] * prev[n]) / den);
        }
        g.push_back(std::move(row));
    }
    return g;
}

/// Richardson-type variant of the generalized transformation, explicit
/// form. The denominator is the constant k!, so no omega tables are
/// involved:
///   R_k^(n) = (-1)^k sum_{j=0}^{k} (-1)^j
///             prod_{m=0}^{k-1}(n+j+q_m) / (j! (k-j)!) s_{n+j}.
/// The product starts at m = 0; q_0 defaults to the schedule's natural
/// extension and may be overridden.
template <ScalarField T>
T rg_explicit(const QSchedule<T>& q, const Sequence<T>& s, int k, long n,
              std::optional<T> q0 = std::nullopt) {
    // weights prod(n+j+q_m) may vanish benignly; j runs to k even though
    // the source material truncates the sum at k-1, which is
    // incompatible with the k-th difference operator it expands.
    T sum = scalar_traits<T>::from_int(0);
    std::vector<T> fact(static_cast<std::size_t>(k) + 1);
    fact[0] = scalar_traits<T>::from_int(1);
    for (int i = 1; i <= k; ++i)
        fact[static_cast<std::size_t>(i)] =
            fact[static_cast<std::size_t>(i - 1)] * scalar_traits<T>::from_int(i);
    for (int j = 0; j <= k; ++j) {
        T w = scalar_traits<T>::from_int(1);
        for (int m = 0; m <= k - 1; ++m) {
            const T qm = (m == 0 && q0) ? *q0 : q.q(m);
            w = w * (scalar_traits<T>::from_int(n + j) + qm);
        }
        w = w / (fact[static_cast<std::size_t>(j)] * fact[static_cast<std::size_t>(k - j)]);
        if (j % 2 != 0)
            w = -w;
        sum = sum + w * s.s(n + j);
    }
    return (k % 2 == 0) ? sum : -sum;
}

/// Recursive scheme of the Richardson-type variant:
///   R_{k+1}^(n) = R_k^(n+1) + (n+q_k)/(k+1) * (R_k^(n+1) - R_k^(n)).
template <ScalarField T>
std::vector<std::vector<T>> rg_recursive(const QSchedule<T>& q, const Sequence<T>& s, int k_max,
                                         std::optional<T> q0 = std::nullopt) {
    std::vector<std::vector<T>> g;
    g.push_back(s.values());
    const long n_begin = s.first_index();
    for (int k = 0; k < k_max && g.back().size() >= 2; ++k) {
        const auto& prev = g.back();
        std::vector<T> row;
        const T qk = (k == 0 && q0) ? *q0 : q.q(k);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
            const long n = n_begin + static_cast<long>(i);
            const T fac = (scalar_traits<T>::from_int(n) + qk) /
                          scalar_traits<T>::from_int(k + 1);
            row.push_back(prev[i + 1] + fac * (prev[i + 1] - prev[i]));
        }
        g.push_back(std::move(row));
    }
    return g;
}

/// Closed form of the constant-schedule case (interpolation points
/// x_n = 1/(beta+n)):
///   Lambda_k^(n) = (-1)^k sum_j (-1)^j (beta+n+j)^k / (j!(k-j)!) s_{n+j}.
template <ScalarField T>
T lambda_closed(const T& beta, const Sequence<T>& s, int k, long n) {
    return rg_explicit(QSchedule<T>::constant(beta), s, k, n);
}

/// Recursion Lambda_{k+1}^(n) = Lambda_k^(n+1) + (beta+n)/(k+1) *
/// (Lambda_k^(n+1) - Lambda_k^(n)).
template <ScalarField T>
std::vector<std::vector<T>> lambda_recursive(const T& beta, const Sequence<T>& s, int k_max) {
    return rg_recursive(QSchedule<T>::constant(beta), s, k_max);
}

/// F variant: q_m = chi + m, rising-factorial weights (chi+n+j)_k.
template <ScalarField T>
std::vector<std::vector<T>> f_variant(const T& chi, const Sequence<T>& s, int k_max) {
    auto rule = [chi](int m) { return chi + scalar_traits<T>::from_int(m); };
    return rg_recursive(QSchedule<T>::explicit_rule(rule, "f"), s, k_max);
}

/// P variant: q_m = zeta - m.
template <ScalarField T>
std::vector<std::vector<T>> p_variant(const T& zeta, const Sequence<T>& s, int k_max) {
    auto rule = [zeta](int m) { return zeta - scalar_traits<T>::from_int(m); };
    return rg_recursive(QSchedule<T>::explicit_rule(rule, "p"), s, k_max);
}

/// R-C variant: q_m = chi + m/alpha; interpolates between the F variant
/// (alpha = 1) and Lambda (alpha -> infinity).
template <ScalarField T>
std::vector<std::vector<T>> rc_variant(const T& alpha, const T& chi, const Sequence<T>& s,
                                       int k_max) {
    auto rule = [alpha, chi](int m) { return chi + scalar_traits<T>::from_int(m) / alpha; };
    return rg_recursive(QSchedule<T>::explicit_rule(rule, "rc"), s, k_max);
}

} // namespace seqacc

#endif
