#ifndef SEQACC_REMAINDER_HPP
#define SEQACC_REMAINDER_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqacc/schedule.hpp"
#include "seqacc/sequence.hpp"

namespace seqacc {

enum class EstimatorKind {
    U,             // omega_n = (n + q_0) a_n
    Tt,            // omega_n = a_n            (executed via the d rewrite)
    D,             // omega_n = a_{n+1}
    V,             // omega_n = a_n a_{n+1} / (a_n - a_{n+1})
    ExplicitOmega, // user supplied
    AsymptoticU,   // the same four rules with a_n replaced by a rule a_n^inf
    AsymptoticT,
    AsymptoticD,
    AsymptoticV
};

/// Rule producing the remainder estimates omega_n consumed by the
/// transformation. D and V look one term ahead; every produced omega
/// must be nonzero.
template <ScalarField T>
class RemainderEstimator {
public:
    using TermRule = std::function<T(long)>;

    static RemainderEstimator u() { return RemainderEstimator(EstimatorKind::U); }
    static RemainderEstimator u_with_q0(T q0) {
        RemainderEstimator e(EstimatorKind::U);
        e.q0_ = std::move(q0);
        return e;
    }
    static RemainderEstimator t() { return RemainderEstimator(EstimatorKind::Tt); }
    static RemainderEstimator d() { return RemainderEstimator(EstimatorKind::D); }
    static RemainderEstimator v() { return RemainderEstimator(EstimatorKind::V); }

    /// omega[i] corresponds to index seq.first_index() + i.
    static RemainderEstimator explicit_omega(std::vector<T> omega) {
        RemainderEstimator e(EstimatorKind::ExplicitOmega);
        e.explicit_ = std::move(omega);
        return e;
    }

    /// Asymptotic variant: the u/t/d/v formulas with the exact terms
    /// replaced by the rule a_n^inf.
    static RemainderEstimator asymptotic(EstimatorKind base, TermRule rule) {
        EstimatorKind k;
        switch (base) {
        case EstimatorKind::U: k = EstimatorKind::AsymptoticU; break;
        case EstimatorKind::Tt: k = EstimatorKind::AsymptoticT; break;
        case EstimatorKind::D: k = EstimatorKind::AsymptoticD; break;
        case EstimatorKind::V: k = EstimatorKind::AsymptoticV; break;
        default:
            throw ConfigError("asymptotic estimator needs a u/t/d/v base kind");
        }
        RemainderEstimator e(k);
        e.rule_ = std::move(rule);
        return e;
    }

    EstimatorKind kind() const { return kind_; }

    /// 1 when omega_n needs a_{n+1}, else 0.
    int lookahead() const {
        switch (kind_) {
        case EstimatorKind::D:
        case EstimatorKind::V:
        case EstimatorKind::AsymptoticD:
        case EstimatorKind::AsymptoticV:
            return 1;
        default:
            return 0;
        }
    }

    /// True for the exact t rule, whose table build is seeded with the
    /// d-type initial values s_{n-1}/omega_n. The asymptotic t rule does
    /// not satisfy the rewrite identity and is excluded.
    bool uses_shifted_numerator() const { return kind_ == EstimatorKind::Tt; }

    T omega(const Sequence<T>& s, long n, const QSchedule<T>& schedule) const {
        T w = omega_raw(s, n, schedule);
        if (scalar_traits<T>::is_zero(w))
            throw NumericError("remainder estimate omega is zero at index " + std::to_string(n));
        return w;
    }

    std::string name() const {
        switch (kind_) {
        case EstimatorKind::U: return "u";
        case EstimatorKind::Tt: return "t";
        case EstimatorKind::D: return "d";
        case EstimatorKind::V: return "v";
        case EstimatorKind::ExplicitOmega: return "explicit-omega";
        case EstimatorKind::AsymptoticU: return "u-asymptotic";
        case EstimatorKind::AsymptoticT: return "t-asymptotic";
        case EstimatorKind::AsymptoticD: return "d-asymptotic";
        case EstimatorKind::AsymptoticV: return "v-asymptotic";
        }
        return "?";
    }

private:
    explicit RemainderEstimator(EstimatorKind kind) : kind_(kind) {}

    T omega_raw(const Sequence<T>& s, long n, const QSchedule<T>& schedule) const {
        switch (kind_) {
        case EstimatorKind::U: {
            const T q0 = q0_ ? *q0_ : schedule.q(1);
            return (scalar_traits<T>::from_int(n) + q0) * s.term(n);
        }
        case EstimatorKind::Tt:
            return s.term(n);
        case EstimatorKind::D:
            return s.term(n + 1);
        case EstimatorKind::V: {
            const T an = s.term(n);
            const T an1 = s.term(n + 1);
            const T den = an - an1;
            if (scalar_traits<T>::is_zero(den))
                throw NumericError("v estimate undefined: a_n equals a_{n+1} at index " +
                                   std::to_string(n));
            return an * an1 / den;
        }
        case EstimatorKind::ExplicitOmega: {
            const long i = n - s.first_index();
            if (i < 0 || static_cast<std::size_t>(i) >= explicit_.size())
                throw InputError("explicit omega missing for index " + std::to_string(n));
            return explicit_[static_cast<std::size_t>(i)];
        }
        case EstimatorKind::AsymptoticU: {
            const T q0 = q0_ ? *q0_ : schedule.q(1);
            return (scalar_traits<T>::from_int(n) + q0) * rule_(n);
        }
        case EstimatorKind::AsymptoticT:
            return rule_(n);
        case EstimatorKind::AsymptoticD:
            return rule_(n + 1);
        case EstimatorKind::AsymptoticV: {
            const T an = rule_(n);
            const T an1 = rule_(n + 1);
            const T den = an - an1;
            if (scalar_traits<T>::is_zero(den))
                throw NumericError("asymptotic v estimate undefined at index " + std::to_string(n));
            return an * an1 / den;
        }
        }
        throw ConfigError("unknown estimator kind");
    }

    EstimatorKind kind_;
    std::optional<T> q0_;
    std::vector<T> explicit_;
    TermRule rule_;
};

/// estimate(kind, s, n): the bare u/t/d/v rules with default parameters,
/// convenient for direct evaluation outside a table build. For U the
/// parameter is beta (equivalently q_0).
template <ScalarField T>
T estimate(EstimatorKind kind, const Sequence<T>& s, long n,
           T beta = scalar_traits<T>::from_int(1)) {
    switch (kind) {
    case EstimatorKind::U: {
        T w = (beta + scalar_traits<T>::from_int(n)) * s.term(n);
        if (scalar_traits<T>::is_zero(w))
            throw NumericError("remainder estimate omega is zero at index " + std::to_string(n));
        return w;
    }
    case EstimatorKind::Tt: {
        T w = s.term(n);
        if (scalar_traits<T>::is_zero(w))
            throw NumericError("remainder estimate omega is zero at index " + std::to_string(n));
        return w;
    }
    case EstimatorKind::D: {
        T w = s.term(n + 1);
        if (scalar_traits<T>::is_zero(w))
            throw NumericError("remainder estimate omega is zero at index " + std::to_string(n));
        return w;
    }
    case EstimatorKind::V: {
        const T an = s.term(n);
        const T an1 = s.term(n + 1);
        const T den = an - an1;
        if (scalar_traits<T>::is_zero(den))
            throw NumericError("v estimate undefined: a_n equals a_{n+1} at index " +
                               std::to_string(n));
        T w = an * an1 / den;
        if (scalar_traits<T>::is_zero(w))
            throw NumericError("remainder estimate omega is zero at index " + std::to_string(n));
        return w;
    }
    default:
        throw ConfigError("estimate() supports the u/t/d/v kinds");
    }
}

/// The t-to-d reparameterization: t_k^(n)(q_m, s_n) equals the d-type
/// value d_k^(n-1)(q_m + 1, s_{n-1}). Returns the shifted schedule and
/// the shifted sequence sigma_n = s_{n-1} (sigma at the original start
/// index is 0, realizing the s_{-1} = 0 convention for n = 0).
template <ScalarField T>
std::pair<QSchedule<T>, Sequence<T>> t_as_d_rewrite(const QSchedule<T>& schedule,
                                                    const Sequence<T>& s) {
    if (s.first_index() != 0)
        throw InputError("t-to-d rewrite expects a window starting at index 0");
    std::vector<T> shifted;
    shifted.reserve(s.size());
    shifted.push_back(scalar_traits<T>::from_int(0));
    for (long n = 0; n + 1 <= s.last_index(); ++n)
        shifted.push_back(s.s(n));
    return {schedule.shifted_up(), Sequence<T>::from_sums(std::move(shifted), 0)};
}

} // namespace seqacc

#endif
