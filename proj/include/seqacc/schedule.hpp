#ifndef SEQACC_SCHEDULE_HPP
#define SEQACC_SCHEDULE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqacc/scalar.hpp"

namespace seqacc {

enum class ScheduleKind {
    Constant,      // q_m = beta                (Levin L)
    FactorialShift,// q_m = beta + m - 1        (Weniger S)
    ReverseShift,  // q_m = xi - m + 1          (M)
    Interpolating, // q_m = beta + (m-1)/alpha  (C)
    Square,        // q_m = m^2
    Explicit       // user list or rule
};

/// The parameter family q_m selecting the member of the transformation
/// family. The built-in kinds extend naturally to m = 0, which is used
/// as the default q_0 of the Richardson-type variants.
template <ScalarField T>
class QSchedule {
public:
    using Rule = std::function<T(int)>;

    static QSchedule constant(T beta) {
        require_positive(beta, "constant schedule requires beta > 0");
        QSchedule q(ScheduleKind::Constant, "const:" + scalar_traits<T>::str(beta));
        q.p1_ = beta;
        return q;
    }

    static QSchedule factorial_shift(T beta) {
        QSchedule q(ScheduleKind::FactorialShift, "shift:" + scalar_traits<T>::str(beta));
        q.p1_ = beta;
        return q;
    }

    static QSchedule reverse_shift(T xi) {
        require_positive(xi, "reverse-shift schedule requires xi > 0");
        QSchedule q(ScheduleKind::ReverseShift, "rshift:" + scalar_traits<T>::str(xi));
        q.p1_ = xi;
        return q;
    }

    static QSchedule interpolating(T alpha, T beta) {
        require_positive(alpha, "interpolating schedule requires alpha > 0");
        require_positive(beta, "interpolating schedule requires beta > 0");
        QSchedule q(ScheduleKind::Interpolating,
                    "interp:" + scalar_traits<T>::str(alpha) + "," + scalar_traits<T>::str(beta));
        q.p1_ = alpha;
        q.p2_ = beta;
        return q;
    }

    static QSchedule square() {
        return QSchedule(ScheduleKind::Square, "m^2");
    }

    /// list[i] = q_{i+1}; q_0 falls back to q_1 unless overridden.
    static QSchedule explicit_list(std::vector<T> list) {
        if (list.empty())
            throw ConfigError("explicit schedule needs at least one value");
        QSchedule q(ScheduleKind::Explicit, "list");
        q.list_ = std::move(list);
        return q;
    }

    static QSchedule explicit_rule(Rule rule, std::string label = "rule") {
        QSchedule q(ScheduleKind::Explicit, std::move(label));
        q.rule_ = std::move(rule);
        return q;
    }

    /// q_m; m >= 1 are the transformation parameters, m = 0 is the
    /// natural extension used by Richardson variants and u-type
    /// remainder estimates.
    T q(int m) const {
        switch (kind_) {
        case ScheduleKind::Constant:
            return p1_;
        case ScheduleKind::FactorialShift:
            return p1_ + scalar_traits<T>::from_int(m - 1);
        case ScheduleKind::ReverseShift:
            return p1_ - scalar_traits<T>::from_int(m - 1);
        case ScheduleKind::Interpolating:
            return p2_ + scalar_traits<T>::from_int(m - 1) / p1_;
        case ScheduleKind::Square:
            return scalar_traits<T>::from_int(static_cast<long long>(m) * m);
        case ScheduleKind::Explicit:
            if (rule_)
                return rule_(m);
            if (m < 1) {
                if (q0_override_)
                    return *q0_override_;
                return list_.front();
            }
            if (static_cast<std::size_t>(m) > list_.size())
                throw InputError("explicit schedule has no q_" + std::to_string(m));
            return list_[static_cast<std::size_t>(m) - 1];
        }
        throw ConfigError("unknown schedule kind");
    }

    ScheduleKind kind() const { return kind_; }
    const std::string& label() const { return label_; }

    void override_q0(T q0) { q0_override_ = std::move(q0); }

    /// Same family with every q_m raised by one; realizes the parameter
    /// shift of the t-to-d rewrite for any schedule.
    QSchedule shifted_up() const {
        QSchedule base = *this;
        QSchedule q(ScheduleKind::Explicit, label_ + "+1");
        q.rule_ = [base](int m) { return base.q(m) + scalar_traits<T>::from_int(1); };
        return q;
    }

    /// Rejects schedules whose divisor factors vanish anywhere in the
    /// working window: the normalization factors n+k+q_m of the explicit
    /// ratio and the denominators n+k+q_m+1 of the recursion. Vanishing
    /// numerator weights n+j+q_m are harmless and accepted.
    void validate_window(int k_max, long n_lo, long n_hi) const {
        for (int k = 1; k <= k_max; ++k) {
            for (int m = 1; m <= k - 1; ++m) {
                const T qm = q(m);
                for (long n = n_lo; n <= n_hi; ++n) {
                    const T norm = scalar_traits<T>::from_int(n + k) + qm;
                    if (scalar_traits<T>::is_zero(norm))
                        throw NumericError("schedule factor n+k+q_m vanishes at n=" +
                                           std::to_string(n) + ", k=" + std::to_string(k) +
                                           ", m=" + std::to_string(m));
                    const T rec = norm + scalar_traits<T>::from_int(1);
                    if (scalar_traits<T>::is_zero(rec))
                        throw NumericError("schedule recursion factor n+k+q_m+1 vanishes at n=" +
                                           std::to_string(n) + ", k=" + std::to_string(k) +
                                           ", m=" + std::to_string(m));
                }
            }
            // leading recursion factor denominator n+k+q_k+1
            const T qk = q(k);
            for (long n = n_lo; n <= n_hi; ++n) {
                const T rec = scalar_traits<T>::from_int(n + k + 1) + qk;
                if (scalar_traits<T>::is_zero(rec))
                    throw NumericError("schedule recursion factor n+k+q_k+1 vanishes at n=" +
                                       std::to_string(n) + ", k=" + std::to_string(k));
            }
        }
    }

private:
    QSchedule(ScheduleKind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

    static void require_positive(const T& v, const char* msg) {
        if (!(scalar_traits<T>::from_int(0) < v))
            throw ConfigError(msg);
    }

    ScheduleKind kind_;
    std::string label_;
    T p1_ = scalar_traits<T>::from_int(0);
    T p2_ = scalar_traits<T>::from_int(0);
    std::vector<T> list_;
    Rule rule_;
    std::optional<T> q0_override_;
};

} // namespace seqacc

#endif
