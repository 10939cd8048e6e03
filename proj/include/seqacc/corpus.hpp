#ifndef SEQACC_CORPUS_HPP
#define SEQACC_CORPUS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "seqacc/schedule.hpp"
#include "seqacc/sequence.hpp"

namespace seqacc {

/// Model sequence s_n = s + omega_n sum_{j=0}^{J-1} c_j / prod_{m=1}^{j} (n+q_m)
/// on which the order-J transformation with the same schedule is exact.
/// The specializations below derive from this by fixing the schedule.
template <ScalarField T>
struct ModelSequenceSpec {
    QSchedule<T> schedule;
    std::function<T(long)> omega;  // must be nonzero on the window
    std::vector<T> corrections;    // c_0 .. c_{J-1}, c_0 != 0
    T limit;

    static ModelSequenceSpec g_model(QSchedule<T> q, std::function<T(long)> omega,
                                     std::vector<T> corrections, T limit) {
        if (corrections.empty() || scalar_traits<T>::is_zero(corrections.front()))
            throw ConfigError("model sequence requires c_0 != 0");
        return ModelSequenceSpec{std::move(q), std::move(omega), std::move(corrections),
                                 std::move(limit)};
    }

    static ModelSequenceSpec levin_model(T beta, std::function<T(long)> omega,
                                         std::vector<T> corrections, T limit) {
        return g_model(QSchedule<T>::constant(std::move(beta)), std::move(omega),
                       std::move(corrections), std::move(limit));
    }

    static ModelSequenceSpec factorial_model(T beta, std::function<T(long)> omega,
                                             std::vector<T> corrections, T limit) {
        return g_model(QSchedule<T>::factorial_shift(std::move(beta)), std::move(omega),
                       std::move(corrections), std::move(limit));
    }

    static ModelSequenceSpec m_model(T xi, std::function<T(long)> omega,
                                     std::vector<T> corrections, T limit) {
        return g_model(QSchedule<T>::reverse_shift(std::move(xi)), std::move(omega),
                       std::move(corrections), std::move(limit));
    }

    static ModelSequenceSpec c_model(T alpha, T beta, std::function<T(long)> omega,
                                     std::vector<T> corrections, T limit) {
        return g_model(QSchedule<T>::interpolating(std::move(alpha), std::move(beta)),
                       std::move(omega), std::move(corrections), std::move(limit));
    }
};

/// Exact model-sequence values over [start_index, start_index+count).
/// Throws when a correction-term divisor n+q_m vanishes on the window;
/// shift start_index past the offending indices in that case.
template <ScalarField T>
Sequence<T> generate(const ModelSequenceSpec<T>& spec, int count, long start_index = 0) {
    std::vector<T> values;
    values.reserve(static_cast<std::size_t>(count));
    for (long n = start_index; n < start_index + count; ++n) {
        T corr = scalar_traits<T>::from_int(0);
        T prod = scalar_traits<T>::from_int(1);
        for (std::size_t j = 0; j < spec.corrections.size(); ++j) {
            if (j > 0) {
                const T f = scalar_traits<T>::from_int(n) + spec.schedule.q(static_cast<int>(j));
                if (scalar_traits<T>::is_zero(f))
                    throw NumericError("model divisor n+q_" + std::to_string(j) +
                                       " vanishes at n=" + std::to_string(n));
                prod = prod * f;
            }
            corr = corr + spec.corrections[j] / prod;
        }
        values.push_back(spec.limit + spec.omega(n) * corr);
    }
    return Sequence<T>::from_sums(std::move(values), start_index);
}

/// Exact three-term asymptotic model
///   s_n = s + z^{n+1} n^theta (alpha0 + alpha1/n + alpha2/n^2).
/// theta is an integer exponent so both realizations stay exact; for
/// theta < 0 the window must start at n >= 1.
template <ScalarField T>
struct AsyModelSpec {
    T z;
    long theta;
    T alpha0, alpha1, alpha2;
    T limit;

    T remainder(long n) const {
        if (n <= 0 && theta < 0)
            throw NumericError("asymptotic model undefined at n=" + std::to_string(n));
        const T nn = scalar_traits<T>::from_int(n);
        T bracket = alpha0;
        if (n != 0)
            bracket = bracket + alpha1 / nn + alpha2 / (nn * nn);
        return pow_int(z, n + 1) * pow_int(nn, theta) * bracket;
    }
};

template <ScalarField T>
Sequence<T> generate(const AsyModelSpec<T>& spec, int count, long start_index = 1) {
    if (start_index < 1 && spec.theta < 0)
        throw ConfigError("asymptotic model with theta < 0 starts at n >= 1");
    std::vector<T> values;
    values.reserve(static_cast<std::size_t>(count));
    for (long n = start_index; n < start_index + count; ++n)
        values.push_back(spec.limit + spec.remainder(n));
    return Sequence<T>::from_sums(std::move(values), start_index);
}

enum class ProblemClass { Linear, Logarithmic, AlternatingDivergent };

/// Reference problem: a term rule (or power series coefficient rule)
/// plus a ground-truth value computed independently of any sequence
/// transformation.
struct ReferenceProblem {
    std::string name;
    std::string description;
    ProblemClass cls = ProblemClass::Linear;
    std::function<Rational(long)> term;   // a_n (or gamma_n for series problems)
    bool is_coefficient_series = false;   // terms are power series coefficients
    bool has_oracle = false;
    std::function<double()> oracle;       // independent ground truth
};

const std::vector<ReferenceProblem>& problem_registry();
const ReferenceProblem& find_problem(const std::string& name);

/// Value of sum (-1)^n n! z^n via numerical quadrature of the Stieltjes
/// integral int_0^inf exp(-t)/(1+zt) dt, z > 0. Absolute error at most
/// 1e-12; throws NumericError if the adaptive rule fails to converge.
double euler_series_value(double z);

/// Named constants used by the registry oracles.
double ln2_value();
double zeta2_value();

/// Rational terms of a problem converted to the requested scalar type.
template <ScalarField T>
std::vector<T> problem_terms(const ReferenceProblem& p, int count) {
    std::vector<T> terms;
    terms.reserve(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n) {
        const Rational r = p.term(n);
        if constexpr (scalar_traits<T>::exact)
            terms.push_back(r);
        else
            terms.push_back(r.to_double());
    }
    return terms;
}

} // namespace seqacc

#endif
