#ifndef SEQACC_TRANSFORM_HPP
#define SEQACC_TRANSFORM_HPP

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqacc/polynomial.hpp"
#include "seqacc/remainder.hpp"
#include "seqacc/schedule.hpp"
#include "seqacc/sequence.hpp"

namespace seqacc {

namespace detail {

/// Triangular recursion on raw inputs u_n together with a propagated
/// magnitude per entry. The magnitude is the running sum of input
/// magnitudes combined into an entry; eps times it bounds the forward
/// rounding error of the float realization.
template <ScalarField T>
struct Recursion {
    std::vector<std::vector<T>> g;
    std::vector<std::vector<double>> mag;
};

/// Numerator/denominator recursion of the generalized transformation:
///   G_0^(n) = u_n
///   G_1^(n) = u_{n+1} - u_n
///   G_{k+1}^(n) = G_k^(n+1)
///       - (n+q_k)/(n+k+q_k+1) * prod_{m=1}^{k-1} (n+k+q_m)/(n+k+q_m+1) * G_k^(n)
/// u[i] corresponds to index n_begin + i.
template <ScalarField T>
Recursion<T> g_recursion(const QSchedule<T>& q, const std::vector<T>& u, int k_max, long n_begin) {
    Recursion<T> r;
    r.g.push_back(u);
    r.mag.emplace_back();
    for (const auto& x : u)
        r.mag[0].push_back(std::fabs(scalar_traits<T>::to_double(x)));
    if (k_max >= 1 && u.size() >= 2) {
        std::vector<T> row;
        std::vector<double> mrow;
        for (std::size_t i = 0; i + 1 < u.size(); ++i) {
            row.push_back(u[i + 1] - u[i]);
            mrow.push_back(r.mag[0][i + 1] + r.mag[0][i]);
        }
        r.g.push_back(std::move(row));
        r.mag.push_back(std::move(mrow));
    }
    for (int k = 1; k < k_max && r.g[static_cast<std::size_t>(k)].size() >= 2; ++k) {
        const auto& prev = r.g[static_cast<std::size_t>(k)];
        const auto& pmag = r.mag[static_cast<std::size_t>(k)];
        std::vector<T> row;
        std::vector<double> mrow;
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
            const long n = n_begin + static_cast<long>(i);
            T fac = checked_div(scalar_traits<T>::from_int(n) + q.q(k),
                                scalar_traits<T>::from_int(n + k + 1) + q.q(k),
                                "vanishing recursion factor n+k+q_k+1");
            for (int m = 1; m <= k - 1; ++m) {
                fac = fac * checked_div(scalar_traits<T>::from_int(n + k) + q.q(m),
                                        scalar_traits<T>::from_int(n + k + 1) + q.q(m),
                                        "vanishing recursion factor n+k+q_m+1");
            }
            row.push_back(prev[i + 1] - fac * prev[i]);
            mrow.push_back(pmag[i + 1] + std::fabs(scalar_traits<T>::to_double(fac)) * pmag[i]);
        }
        r.g.push_back(std::move(row));
        r.mag.push_back(std::move(mrow));
    }
    return r;
}

} // namespace detail

/// g_recursive_table: the published recursive scheme on raw inputs u_n.
/// Run with u_n = s_n/omega_n for the numerators and u_n = 1/omega_n for
/// the denominators of the normalized transformation.
template <ScalarField T>
std::vector<std::vector<T>> g_recursive_table(const QSchedule<T>& q, const std::vector<T>& u,
                                              int k_max, long n_begin = 0) {
    if (u.empty())
        throw InputError("g_recursive_table: empty input");
    q.validate_window(k_max, n_begin, n_begin + static_cast<long>(u.size()) - 1);
    return detail::g_recursion(q, u, k_max, n_begin).g;
}

/// Explicit normalized ratio of binomial sums:
///   G_k^(n) = sum_j (-1)^j C(k,j) W_j s_{n+j}/omega_{n+j}
///           / sum_j (-1)^j C(k,j) W_j / omega_{n+j},
///   W_j = prod_{m=1}^{k-1} (n+j+q_m)/(n+k+q_m)  (empty product = 1).
/// omega[i] corresponds to index s.first_index() + i.
template <ScalarField T>
T g_explicit(int k, long n, const QSchedule<T>& q, const Sequence<T>& s,
             const std::vector<T>& omega) {
    const auto binom = binomial_row(k);
    T num = scalar_traits<T>::from_int(0);
    T den = scalar_traits<T>::from_int(0);
    for (int j = 0; j <= k; ++j) {
        const long idx = n + j;
        const long i = idx - s.first_index();
        if (i < 0 || static_cast<std::size_t>(i) >= omega.size())
            throw InputError("g_explicit: omega missing for index " + std::to_string(idx));
        const T& w = omega[static_cast<std::size_t>(i)];
        if (scalar_traits<T>::is_zero(w))
            throw NumericError("remainder estimate omega is zero at index " + std::to_string(idx));
        T weight = scalar_traits<T>::from_int(static_cast<long long>(binom[static_cast<std::size_t>(j)]));
        for (int m = 1; m <= k - 1; ++m)
            weight = weight * checked_div(scalar_traits<T>::from_int(idx) + q.q(m),
                                          scalar_traits<T>::from_int(n + k) + q.q(m),
                                          "vanishing normalization factor n+k+q_m");
        if (j % 2 != 0)
            weight = -weight;
        num = num + weight * s.s(idx) / w;
        den = den + weight / w;
    }
    return checked_div(num, den, "vanishing transformation denominator");
}

template <ScalarField T>
struct Recommendation {
    int k = 0;
    long n = 0;
    T value = scalar_traits<T>::from_int(0);
    double error_estimate = 0.0;
};

/// Triangular table of numerators, denominators and values G_k^(n),
/// with per-entry validity flags. Row k = 0 holds the raw input s_n.
template <ScalarField T>
class TransformTable {
public:
    long n_begin() const { return n_begin_; }
    int k_max() const { return static_cast<int>(val_.size()) - 1; }
    int cols(int k) const { return static_cast<int>(val_[static_cast<std::size_t>(k)].size()); }

    bool in_range(int k, long n) const {
        return k >= 0 && k <= k_max() && n >= n_begin_ &&
               n - n_begin_ < static_cast<long>(cols(k));
    }

    const T& value(int k, long n) const { return val_[idx(k)][col(k, n)]; }
    bool valid(int k, long n) const { return valid_[idx(k)][col(k, n)] != 0; }
    bool has_parts() const { return !num_.empty(); }
    const T& numerator(int k, long n) const { return num_[idx(k)][col(k, n)]; }
    const T& denominator(int k, long n) const { return den_[idx(k)][col(k, n)]; }
    double denominator_magnitude(int k, long n) const {
        return has_parts() ? std::fabs(scalar_traits<T>::to_double(denominator(k, n))) : 0.0;
    }
    /// Forward rounding-error bound on the value (float realization; 0
    /// in the exact realization).
    double noise_bound(int k, long n) const { return noise_[idx(k)][col(k, n)]; }

    /// Best entry of the first column. In the exact realization this is
    /// the highest valid order. In the float realization the entry with
    /// the smallest combined error estimate (rounding bound plus the
    /// last-difference heuristic) is selected, so that orders ruined by
    /// cancellation are not recommended.
    Recommendation<T> recommended() const {
        Recommendation<T> best;
        best.k = 0;
        best.n = n_begin_;
        best.value = value(0, n_begin_);
        best.error_estimate = 0.0;
        bool found = false;
        double best_est = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= k_max(); ++k) {
            if (cols(k) < 1 || !valid(k, n_begin_))
                continue;
            double est;
            if (scalar_traits<T>::exact) {
                est = 0.0; // every deeper valid order wins
            } else {
                double trunc = std::numeric_limits<double>::infinity();
                if (valid(k - 1, n_begin_))
                    trunc = std::fabs(scalar_traits<T>::to_double(value(k, n_begin_)) -
                                      scalar_traits<T>::to_double(value(k - 1, n_begin_)));
                est = std::max(noise_bound(k, n_begin_), trunc);
            }
            if (!found || est <= best_est) {
                found = true;
                best_est = est;
                best.k = k;
                best.value = value(k, n_begin_);
                best.error_estimate = scalar_traits<T>::exact ? exact_diff(k) : best_est;
            }
        }
        return best;
    }

    static TransformTable from_parts(std::vector<std::vector<T>> num,
                                     std::vector<std::vector<T>> den,
                                     std::vector<std::vector<double>> num_mag,
                                     std::vector<std::vector<double>> den_mag,
                                     long n_begin) {
        TransformTable t;
        t.n_begin_ = n_begin;
        t.num_ = std::move(num);
        t.den_ = std::move(den);
        const double eps = std::numeric_limits<double>::epsilon();
        for (std::size_t k = 0; k < t.num_.size(); ++k) {
            std::vector<T> vrow;
            std::vector<char> frow;
            std::vector<double> nrow;
            for (std::size_t i = 0; i < t.num_[k].size(); ++i) {
                const T& d = t.den_[k][i];
                bool ok;
                if (scalar_traits<T>::exact)
                    ok = !scalar_traits<T>::is_zero(d);
                else
                    ok = std::fabs(scalar_traits<T>::to_double(d)) >
                         scalar_traits<double>::zero_factor() * eps * den_mag[k][i];
                if (ok) {
                    vrow.push_back(t.num_[k][i] / d);
                    const double dv = std::fabs(scalar_traits<T>::to_double(d));
                    const double tv = std::fabs(scalar_traits<T>::to_double(vrow.back()));
                    nrow.push_back(scalar_traits<T>::exact
                                       ? 0.0
                                       : eps * (num_mag[k][i] + tv * den_mag[k][i]) / dv);
                } else {
                    vrow.push_back(scalar_traits<T>::from_int(0));
                    nrow.push_back(std::numeric_limits<double>::infinity());
                }
                frow.push_back(ok ? 1 : 0);
            }
            t.val_.push_back(std::move(vrow));
            t.valid_.push_back(std::move(frow));
            t.noise_.push_back(std::move(nrow));
        }
        return t;
    }

    static TransformTable from_values(std::vector<std::vector<T>> val,
                                      std::vector<std::vector<char>> valid, long n_begin) {
        TransformTable t;
        t.n_begin_ = n_begin;
        t.val_ = std::move(val);
        t.valid_ = std::move(valid);
        for (const auto& row : t.val_)
            t.noise_.emplace_back(row.size(), 0.0);
        return t;
    }

    void set_value(int k, long n, const T& v) { val_[idx(k)][col(k, n)] = v; }

private:
    double exact_diff(int k) const {
        if (k < 1 || !valid(k - 1, n_begin_))
            return 0.0;
        return std::fabs(scalar_traits<T>::to_double(value(k, n_begin_)) -
                         scalar_traits<T>::to_double(value(k - 1, n_begin_)));
    }

    std::size_t idx(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= val_.size())
            throw InputError("table order " + std::to_string(k) + " out of range");
        return static_cast<std::size_t>(k);
    }
    std::size_t col(int k, long n) const {
        const long i = n - n_begin_;
        if (i < 0 || i >= static_cast<long>(val_[static_cast<std::size_t>(k)].size()))
            throw InputError("table index n=" + std::to_string(n) + " out of range for k=" +
                             std::to_string(k));
        return static_cast<std::size_t>(i);
    }

    long n_begin_ = 0;
    std::vector<std::vector<T>> num_, den_, val_;
    std::vector<std::vector<char>> valid_;
    std::vector<std::vector<double>> noise_;
};

/// Full table build: numerators with u_n = s_n/omega_n (s_{n-1}/omega_n
/// for the t rule, which is its d rewrite), denominators with
/// u_n = 1/omega_n, values wherever the denominator passes the validity
/// threshold. Row 0 of the value table is s_n.
template <ScalarField T>
TransformTable<T> transform(const QSchedule<T>& q, const Sequence<T>& s,
                            const RemainderEstimator<T>& est, int k_max) {
    const long n_lo = s.first_index();
    const long n_hi = s.last_index() - est.lookahead();
    if (n_hi < n_lo)
        throw InputError("window too short for estimator lookahead");
    const int cols = static_cast<int>(n_hi - n_lo + 1);
    if (k_max < 0)
        throw ConfigError("k_max must be nonnegative");
    if (k_max > cols - 1)
        k_max = cols - 1;
    q.validate_window(k_max, n_lo, n_hi);

    std::vector<T> un, ud;
    un.reserve(static_cast<std::size_t>(cols));
    ud.reserve(static_cast<std::size_t>(cols));
    const bool shifted = est.uses_shifted_numerator();
    for (long n = n_lo; n <= n_hi; ++n) {
        const T w = est.omega(s, n, q);
        T top;
        if (!shifted)
            top = s.s(n);
        else if (n > n_lo)
            top = s.s(n - 1);
        else if (n_lo == 0)
            top = scalar_traits<T>::from_int(0); // s_{-1} = 0
        else
            throw InputError("t rule needs the element before the window start");
        un.push_back(top / w);
        ud.push_back(scalar_traits<T>::from_int(1) / w);
    }

    auto rn = detail::g_recursion(q, un, k_max, n_lo);
    auto rd = detail::g_recursion(q, ud, k_max, n_lo);
    auto table = TransformTable<T>::from_parts(std::move(rn.g), std::move(rd.g),
                                               std::move(rn.mag), std::move(rd.mag), n_lo);
    for (long n = n_lo; n <= n_hi; ++n)
        table.set_value(0, n, s.s(n)); // row 0 is the raw input
    return table;
}

// ---------------------------------------------------------------------------
// Named specializations and their dedicated recursions (cross-check paths).
// ---------------------------------------------------------------------------

template <ScalarField T>
TransformTable<T> levin_L(T beta, const Sequence<T>& s, const RemainderEstimator<T>& est,
                          int k_max) {
    return transform(QSchedule<T>::constant(std::move(beta)), s, est, k_max);
}

template <ScalarField T>
TransformTable<T> weniger_S(T beta, const Sequence<T>& s, const RemainderEstimator<T>& est,
                            int k_max) {
    return transform(QSchedule<T>::factorial_shift(std::move(beta)), s, est, k_max);
}

template <ScalarField T>
TransformTable<T> transform_M(T xi, const Sequence<T>& s, const RemainderEstimator<T>& est,
                              int k_max) {
    return transform(QSchedule<T>::reverse_shift(std::move(xi)), s, est, k_max);
}

template <ScalarField T>
TransformTable<T> transform_C(T alpha, T beta, const Sequence<T>& s,
                              const RemainderEstimator<T>& est, int k_max) {
    return transform(QSchedule<T>::interpolating(std::move(alpha), std::move(beta)), s, est, k_max);
}

namespace detail {

template <ScalarField T, class Factor>
std::vector<std::vector<T>> two_term_recursion(const std::vector<T>& u, int k_max, long n_begin,
                                               Factor&& factor, bool explicit_k1_init) {
    std::vector<std::vector<T>> g;
    g.push_back(u);
    if (explicit_k1_init && k_max >= 1 && u.size() >= 2) {
        std::vector<T> row;
        for (std::size_t i = 0; i + 1 < u.size(); ++i)
            row.push_back(u[i + 1] - u[i]);
        g.push_back(std::move(row));
    }
    for (int k = static_cast<int>(g.size()) - 1; k < k_max && g.back().size() >= 2; ++k) {
        const auto& prev = g.back();
        std::vector<T> row;
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
            const long n = n_begin + static_cast<long>(i);
            row.push_back(prev[i + 1] - factor(k, n) * prev[i]);
        }
        g.push_back(std::move(row));
    }
    return g;
}

} // namespace detail

/// Dedicated Levin recursion:
///   L_{k+1}^(n) = L_k^(n+1) - (b+n)(b+n+k)^{k-1}/(b+n+k+1)^k L_k^(n).
template <ScalarField T>
std::vector<std::vector<T>> levin_recursive_table(const T& beta, const std::vector<T>& u,
                                                  int k_max, long n_begin = 0) {
    return detail::two_term_recursion(
        u, k_max, n_begin,
        [&beta](int k, long n) {
            if (k == 0)
                return scalar_traits<T>::from_int(1);
            const T bn = beta + scalar_traits<T>::from_int(n);
            return bn * pow_int(bn + scalar_traits<T>::from_int(k), k - 1) /
                   pow_int(bn + scalar_traits<T>::from_int(k + 1), k);
        },
        false);
}

/// Dedicated recursion of the factorial-series family:
///   S_{k+1}^(n) = S_k^(n+1)
///     - (b+n+k-1)(b+n+k)/[(b+n+2k-1)(b+n+2k)] S_k^(n).
template <ScalarField T>
std::vector<std::vector<T>> weniger_recursive_table(const T& beta, const std::vector<T>& u,
                                                    int k_max, long n_begin = 0) {
    return detail::two_term_recursion(
        u, k_max, n_begin,
        [&beta](int k, long n) {
            if (k == 0)
                return scalar_traits<T>::from_int(1);
            const T bn = beta + scalar_traits<T>::from_int(n);
            const T a = bn + scalar_traits<T>::from_int(k - 1);
            const T b = bn + scalar_traits<T>::from_int(k);
            const T c = bn + scalar_traits<T>::from_int(2 * k - 1);
            const T d = bn + scalar_traits<T>::from_int(2 * k);
            return checked_div(a * b, c * d, "vanishing recursion factor");
        },
        false);
}

/// Dedicated recursion of the M family:
///   M_{k+1}^(n) = M_k^(n+1) - (xi+n-k+1)/(xi+n+k+1) M_k^(n).
template <ScalarField T>
std::vector<std::vector<T>> m_recursive_table(const T& xi, const std::vector<T>& u, int k_max,
                                              long n_begin = 0) {
    return detail::two_term_recursion(
        u, k_max, n_begin,
        [&xi](int k, long n) {
            const T xn = xi + scalar_traits<T>::from_int(n);
            return checked_div(xn - scalar_traits<T>::from_int(k - 1),
                               xn + scalar_traits<T>::from_int(k + 1),
                               "vanishing recursion factor");
        },
        false);
}

/// Corrected recursion of the interpolating family:
///   C_1^(n) = u_{n+1} - u_n,
///   C_{k+1}^(n) = C_k^(n+1)
///     - (a[b+n]+k-1)(a[b+n+k])_{k-1}/(a[b+n+k+1])_k C_k^(n),  k >= 1.
template <ScalarField T>
std::vector<std::vector<T>> c_recursive_table(const T& alpha, const T& beta,
                                              const std::vector<T>& u, int k_max,
                                              long n_begin = 0) {
    return detail::two_term_recursion(
        u, k_max, n_begin,
        [&alpha, &beta](int k, long n) {
            const T lead = alpha * (beta + scalar_traits<T>::from_int(n)) +
                           scalar_traits<T>::from_int(k - 1);
            const T top = pochhammer(alpha * (beta + scalar_traits<T>::from_int(n + k)), k - 1);
            const T bot = pochhammer(alpha * (beta + scalar_traits<T>::from_int(n + k + 1)), k);
            return checked_div(lead * top, bot, "vanishing recursion factor");
        },
        true);
}

} // namespace seqacc

#endif
