#ifndef SEQACC_SEQUENCE_HPP
#define SEQACC_SEQUENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "seqacc/scalar.hpp"

namespace seqacc {

/// A finite window s_n, n = start_index .. start_index + size - 1, with
/// optional series terms a_n satisfying s_n - s_{n-1} = a_n. For a
/// window starting at zero, s_{-1} is taken to be 0, so a_0 = s_0.
template <ScalarField T>
class Sequence {
public:
    static Sequence from_sums(std::vector<T> sums, long start_index = 0) {
        Sequence s;
        s.start_ = start_index;
        s.s_ = std::move(sums);
        return s;
    }

    static Sequence from_terms(std::vector<T> terms, long start_index = 0) {
        Sequence s;
        s.start_ = start_index;
        s.s_.reserve(terms.size());
        T acc = scalar_traits<T>::from_int(0);
        for (const auto& t : terms) {
            acc = acc + t;
            s.s_.push_back(acc);
        }
        s.a_ = std::move(terms);
        return s;
    }

    static Sequence from_sums_and_terms(std::vector<T> sums, std::vector<T> terms, long start_index = 0) {
        if (sums.size() != terms.size())
            throw InputError("sums and terms length mismatch");
        Sequence s;
        s.start_ = start_index;
        s.s_ = std::move(sums);
        s.a_ = std::move(terms);
        s.check_terms();
        return s;
    }

    long first_index() const { return start_; }
    long last_index() const { return start_ + static_cast<long>(s_.size()) - 1; }
    std::size_t size() const { return s_.size(); }
    bool has_terms() const { return a_.has_value(); }

    const T& s(long n) const {
        bounds_check(n);
        return s_[static_cast<std::size_t>(n - start_)];
    }

    /// Term a_n = s_n - s_{n-1}. Available from stored terms, from the
    /// difference of neighbours, or from the s_{-1} = 0 convention at
    /// n = 0.
    T term(long n) const {
        bounds_check(n);
        if (a_)
            return (*a_)[static_cast<std::size_t>(n - start_)];
        if (n > start_)
            return s(n) - s(n - 1);
        if (start_ == 0)
            return s(0);
        throw InputError("term a_" + std::to_string(n) +
                         " unavailable: window starts at " + std::to_string(start_) +
                         " without stored terms");
    }

    bool term_available(long n) const {
        if (n < start_ || n > last_index())
            return false;
        return a_.has_value() || n > start_ || start_ == 0;
    }

    const std::vector<T>& values() const { return s_; }

private:
    void bounds_check(long n) const {
        if (n < start_ || n > last_index())
            throw InputError("sequence index " + std::to_string(n) + " outside window [" +
                             std::to_string(start_) + ", " + std::to_string(last_index()) + "]");
    }

    void check_terms() const {
        if (!a_)
            return;
        for (std::size_t i = 1; i < s_.size(); ++i) {
            T d = s_[i] - s_[i - 1];
            T diff = d - (*a_)[i];
            T scale = scalar_traits<T>::abs(s_[i]);
            if (!scalar_traits<T>::negligible(diff, scale))
                throw InputError("terms inconsistent with partial sums at index " +
                                 std::to_string(start_ + static_cast<long>(i)));
        }
    }

    long start_ = 0;
    std::vector<T> s_;
    std::optional<std::vector<T>> a_;
};

} // namespace seqacc

#endif
