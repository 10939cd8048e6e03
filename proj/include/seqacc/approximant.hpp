#ifndef SEQACC_APPROXIMANT_HPP
#define SEQACC_APPROXIMANT_HPP

#include <optional>
#include <string>
#include <vector>

#include "seqacc/polynomial.hpp"
#include "seqacc/schedule.hpp"

namespace seqacc {

/// Power series coefficients gamma_0 .. gamma_N of f(z) = sum gamma_v z^v,
/// with no gaps.
template <ScalarField T>
struct PowerSeriesCoefficients {
    std::vector<T> gamma;

    std::size_t count() const { return gamma.size(); }
    const T& operator[](std::size_t v) const {
        if (v >= gamma.size())
            throw InputError("power series coefficient gamma_" + std::to_string(v) +
                             " not available");
        return gamma[v];
    }

    /// f_n(z) as a polynomial (the n-th partial sum).
    Polynomial<T> partial_sum(std::size_t n) const {
        if (n >= gamma.size())
            throw InputError("partial sum f_" + std::to_string(n) + " needs " +
                             std::to_string(n + 1) + " coefficients");
        return Polynomial<T>(std::vector<T>(gamma.begin(), gamma.begin() + static_cast<long>(n) + 1));
    }
};

/// Rational approximant produced by applying a u/t/d/v variant to the
/// partial sums of a power series. The coefficients lambda_j (and mu_j
/// for the v variant) are retained for audit.
template <ScalarField T>
struct RationalApproximant {
    Polynomial<T> num;
    Polynomial<T> den;
    char variant = '?';
    int k = 0;
    long n = 0;
    std::string schedule;
    std::vector<T> lambda;
    std::vector<T> mu;

    T eval(const T& z) const {
        return checked_div(num.eval(z), den.eval(z), "approximant denominator vanishes at z");
    }
};

/// Builds the approximant for one of the four simple remainder-estimate
/// rules applied to partial sums:
///   u: omega_n = (n+q_0) gamma_n z^n        t: omega_n = gamma_n z^n
///   d: omega_n = gamma_{n+1} z^{n+1}        v: omega_n = gamma_n gamma_{n+1} z^{n+1}
///                                                        / (gamma_n - z gamma_{n+1})
/// Denominator coefficients come from sum_j lambda_j z^{k-j} (plus
/// z sum_j mu_j z^{k-j} for v); the numerator accumulates
/// sum_j lambda_j z^{k-j} f_{n+j}(z) coefficientwise. The result is
/// normalized so the denominator's constant term is 1.
template <ScalarField T>
RationalApproximant<T> build_variant_approximant(char variant, const QSchedule<T>& q, int k,
                                                 long n, const PowerSeriesCoefficients<T>& gamma,
                                                 std::optional<T> q0 = std::nullopt) {
    if (variant != 'u' && variant != 't' && variant != 'd' && variant != 'v')
        throw ConfigError(std::string("unknown approximant variant '") + variant + "'");
    const bool lookahead = (variant == 'd' || variant == 'v');
    const std::size_t needed = static_cast<std::size_t>(k) + static_cast<std::size_t>(n) +
                               (lookahead ? 2 : 1);
    if (gamma.count() < needed)
        throw InputError("variant '" + std::string(1, variant) + "' at k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + " needs " + std::to_string(needed) +
                         " coefficients, got " + std::to_string(gamma.count()));

    const auto binom = binomial_row(k);
    const auto gamma_at = [&gamma, variant](std::size_t v) -> const T& {
        const T& g = gamma[v];
        if (scalar_traits<T>::is_zero(g))
            throw NumericError("variant divides by zero coefficient gamma_" + std::to_string(v));
        return g;
    };

    RationalApproximant<T> a;
    a.variant = variant;
    a.k = k;
    a.n = n;
    a.schedule = q.label();

    std::vector<T> lam, mu;
    for (int j = 0; j <= k; ++j) {
        T base = scalar_traits<T>::from_int(static_cast<long long>(binom[static_cast<std::size_t>(j)]));
        for (int m = 1; m <= k - 1; ++m)
            base = base * checked_div(scalar_traits<T>::from_int(n + j) + q.q(m),
                                      scalar_traits<T>::from_int(n + k) + q.q(m),
                                      "vanishing normalization factor n+k+q_m");
        if (j % 2 != 0)
            base = -base;
        const std::size_t nj = static_cast<std::size_t>(n + j);
        switch (variant) {
        case 'u': {
            const T qv = q0 ? *q0 : q.q(1);
            const T f = scalar_traits<T>::from_int(n + j) + qv;
            if (scalar_traits<T>::is_zero(f))
                throw NumericError("u variant factor n+j+q_0 vanishes at j=" + std::to_string(j));
            lam.push_back(base / (f * gamma_at(nj)));
            break;
        }
        case 't':
            lam.push_back(base / gamma_at(nj));
            break;
        case 'd':
            lam.push_back(base / gamma_at(nj + 1));
            break;
        case 'v':
            lam.push_back(base / gamma_at(nj + 1));
            mu.push_back(-(base / gamma_at(nj)));
            break;
        }
    }

    Polynomial<T> num, den;
    for (int j = 0; j <= k; ++j) {
        const auto fj = gamma.partial_sum(static_cast<std::size_t>(n + j));
        const std::size_t shift = static_cast<std::size_t>(k - j);
        den.add_scaled(Polynomial<T>::one(), lam[static_cast<std::size_t>(j)], shift);
        num.add_scaled(fj, lam[static_cast<std::size_t>(j)], shift);
        if (variant == 'v') {
            den.add_scaled(Polynomial<T>::one(), mu[static_cast<std::size_t>(j)], shift + 1);
            num.add_scaled(fj, mu[static_cast<std::size_t>(j)], shift + 1);
        }
    }

    const T c0 = den[0];
    if (scalar_traits<T>::is_zero(c0))
        throw NumericError("approximant denominator has zero constant term");
    const T inv = scalar_traits<T>::from_int(1) / c0;
    num.scale(inv);
    den.scale(inv);

    a.num = std::move(num);
    a.den = std::move(den);
    a.lambda = std::move(lam);
    a.mu = std::move(mu);
    return a;
}

/// Taylor-expands num/den at z = 0 and counts the matched leading
/// coefficients against gamma: returns the largest M such that
/// coefficients 0 .. M-1 all agree. Meant for the exact realization;
/// float counting compares against a coefficientwise tolerance and is
/// for exploratory use only.
template <ScalarField T>
std::size_t check_order(const RationalApproximant<T>& a, const PowerSeriesCoefficients<T>& gamma) {
    if (gamma.count() == 0)
        return 0;
    const std::size_t order = gamma.count() - 1;
    const auto taylor = series_divide(a.num.coeffs(), a.den.coeffs(), order);
    std::size_t m = 0;
    for (std::size_t v = 0; v < gamma.count(); ++v) {
        const T diff = taylor[v] - gamma[v];
        bool match;
        if (scalar_traits<T>::exact)
            match = scalar_traits<T>::is_zero(diff);
        else
            match = scalar_traits<T>::to_double(scalar_traits<T>::abs(diff)) <=
                    1e-10 * std::max(1.0, std::fabs(scalar_traits<T>::to_double(gamma[v])));
        if (!match)
            break;
        ++m;
    }
    return m;
}

template <ScalarField T>
struct Prediction {
    std::size_t guaranteed = 0;    // coefficients 0 .. guaranteed-1 reproduced
    std::vector<T> predicted;      // gamma_guaranteed, gamma_guaranteed+1, ...
};

/// Predicts power series coefficients beyond the variant's guaranteed
/// match order (k+n+1 for u/t, k+n+2 for d/v with k >= 1).
template <ScalarField T>
Prediction<T> predict(char variant, const QSchedule<T>& q, int k, long n,
                      const PowerSeriesCoefficients<T>& gamma, std::size_t count,
                      std::optional<T> q0 = std::nullopt) {
    const auto a = build_variant_approximant(variant, q, k, n, gamma, std::move(q0));
    Prediction<T> p;
    const bool refined = (variant == 'd' || variant == 'v') && k >= 1;
    p.guaranteed = static_cast<std::size_t>(k) + static_cast<std::size_t>(n) + (refined ? 2 : 1);
    const std::size_t order = p.guaranteed + count - 1;
    const auto taylor = series_divide(a.num.coeffs(), a.den.coeffs(), order);
    p.predicted.assign(taylor.begin() + static_cast<long>(p.guaranteed), taylor.end());
    return p;
}

/// Wynn's epsilon algorithm on a sequence of values. Kept as the Pade
/// baseline: with partial sums of a power series as input,
/// eps_{2k}^(n) equals the [n+k/k] Pade value at the evaluation point.
/// Entries whose reciprocal difference vanishes are flagged invalid,
/// together with everything that depends on them.
template <ScalarField T>
struct EpsilonTable {
    std::vector<std::vector<T>> eps;     // eps[k][n]
    std::vector<std::vector<char>> ok;

    int k_max() const { return static_cast<int>(eps.size()) - 1; }
    bool valid(int k, int n) const {
        return k >= 0 && k < static_cast<int>(eps.size()) &&
               n < static_cast<int>(eps[static_cast<std::size_t>(k)].size()) &&
               ok[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] != 0;
    }
    const T& value(int k, int n) const {
        if (!valid(k, n))
            throw NumericError("epsilon entry (" + std::to_string(k) + "," + std::to_string(n) +
                               ") is invalid");
        return eps[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
    }
};

template <ScalarField T>
EpsilonTable<T> epsilon_table(const std::vector<T>& values) {
    EpsilonTable<T> t;
    t.eps.push_back(values);
    t.ok.emplace_back(values.size(), 1);
    std::vector<T> below(values.size() + 1, scalar_traits<T>::from_int(0)); // eps_{-1} = 0
    std::vector<char> below_ok(values.size() + 1, 1);
    // column-by-column: eps_{k+1}^(n) = eps_{k-1}^(n+1) + 1/(eps_k^(n+1)-eps_k^(n))
    for (std::size_t k = 0; t.eps[k].size() >= 2; ++k) {
        const auto& cur = t.eps[k];
        const auto& cur_ok = t.ok[k];
        std::vector<T> next;
        std::vector<char> next_ok;
        for (std::size_t n = 0; n + 1 < cur.size(); ++n) {
            const T diff = cur[n + 1] - cur[n];
            const bool fine = cur_ok[n] && cur_ok[n + 1] && below_ok[n + 1] &&
                              !scalar_traits<T>::is_zero(diff);
            if (fine)
                next.push_back(below[n + 1] + scalar_traits<T>::from_int(1) / diff);
            else
                next.push_back(scalar_traits<T>::from_int(0));
            next_ok.push_back(fine ? 1 : 0);
        }
        below.assign(cur.begin(), cur.end());
        below_ok.assign(cur_ok.begin(), cur_ok.end());
        t.eps.push_back(std::move(next));
        t.ok.push_back(std::move(next_ok));
        if (t.eps.back().empty())
            break;
    }
    return t;
}

/// eps_{2m}^(n = l - m): the [l/m] Pade value of the series at z,
/// computed from the partial sums f_0(z) .. f_{l+m}(z).
template <ScalarField T>
T pade_epsilon(const PowerSeriesCoefficients<T>& gamma, int l, int m, const T& z) {
    if (l < m)
        throw ConfigError("pade_epsilon needs l >= m");
    const std::size_t need = static_cast<std::size_t>(l + m) + 1;
    if (gamma.count() < need)
        throw InputError("pade_epsilon needs " + std::to_string(need) + " coefficients");
    std::vector<T> sums;
    T acc = scalar_traits<T>::from_int(0);
    T zp = scalar_traits<T>::from_int(1);
    for (std::size_t v = 0; v < need; ++v) {
        acc = acc + gamma[v] * zp;
        sums.push_back(acc);
        zp = zp * z;
    }
    const auto t = epsilon_table(sums);
    return t.value(2 * m, l - m);
}

} // namespace seqacc

#endif
