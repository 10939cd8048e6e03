#include <doctest.h>

#include <random>

#include "seqacc/polynomial.hpp"
#include "seqacc/rational.hpp"
#include "seqacc/schedule.hpp"

using namespace seqacc;

namespace {

Rational rq(long long n, long long d = 1) { return Rational(n, d); }

// deterministic small rationals for property tests
struct RationalGen {
    std::mt19937 rng{20240917};
    Rational next() {
        std::uniform_int_distribution<int> num(-20, 20);
        std::uniform_int_distribution<int> den(1, 12);
        return Rational(num(rng), den(rng));
    }
    Rational next_nonzero() {
        for (;;) {
            Rational r = next();
            if (!r.is_zero())
                return r;
        }
    }
};

} // namespace

TEST_CASE("rational arithmetic and parsing") {
    CHECK(rq(1, 3) + rq(1, 6) == rq(1, 2));
    CHECK(rq(2, 4) == rq(1, 2));
    CHECK(rq(-3, 6).str() == "-1/2");
    CHECK(Rational::parse("7/10") == rq(7, 10));
    CHECK(Rational::parse("3.25") == rq(13, 4));
    CHECK(Rational::parse("-1e-3") == rq(-1, 1000));
    CHECK(Rational::parse("2.5e2") == rq(250));
    CHECK(Rational::parse("  42 ") == rq(42));
    CHECK_THROWS_AS(Rational::parse("x"), InputError);
    CHECK_THROWS_AS(rq(1) / rq(0), NumericError);
    CHECK_THROWS_AS(checked_div(1.0, 0.0), NumericError);
}

TEST_CASE("float near-zero threshold scales with running magnitude") {
    CHECK(scalar_traits<double>::negligible(1e-15, 1.0));
    CHECK(!scalar_traits<double>::negligible(1e-12, 1.0));
    CHECK(scalar_traits<double>::negligible(1e-12, 1e4));
}

TEST_CASE("poly_eval") {
    CHECK(poly_eval(Polynomial<Rational>({rq(1)}), rq(5)) == rq(1));
    CHECK(poly_eval(Polynomial<Rational>({rq(0), rq(1)}), rq(3)) == rq(3));
    CHECK(poly_eval(Polynomial<Rational>({rq(1), rq(1), rq(1, 2)}), rq(1)) == rq(5, 2));
    CHECK(poly_eval(Polynomial<double>({1.0, 2.0}), 0.5) == doctest::Approx(2.0));
}

TEST_CASE("polynomial degree ignores trailing near-zeros") {
    Polynomial<Rational> p({rq(1), rq(2), rq(0), rq(0)});
    CHECK(p.degree() == 1);
    Polynomial<double> q({1.0, 2.0, 1e-18});
    CHECK(q.degree() == 1);
    CHECK(Polynomial<Rational>({rq(0)}).degree() == -1);
}

TEST_CASE("series_divide examples") {
    using V = std::vector<Rational>;
    CHECK(series_divide(V{rq(1)}, V{rq(1), rq(-1)}, 3) == V{rq(1), rq(1), rq(1), rq(1)});
    CHECK(series_divide(V{rq(2), rq(1)}, V{rq(2), rq(-1)}, 3) ==
          V{rq(1), rq(1), rq(1, 2), rq(1, 4)});
    CHECK(series_divide(V{rq(0)}, V{rq(1), rq(7)}, 2) == V{rq(0), rq(0), rq(0)});
    CHECK_THROWS_AS(series_divide(V{rq(1)}, V{rq(0), rq(1)}, 2), NumericError);
}

TEST_CASE("series_divide inverts truncated multiplication") {
    RationalGen gen;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> num, den;
        den.push_back(gen.next_nonzero());
        for (int i = 0; i < 5; ++i) {
            num.push_back(gen.next());
            den.push_back(gen.next());
        }
        const std::size_t order = 7;
        const auto q = series_divide(num, den, order);
        const auto back = series_multiply(q, den, order);
        for (std::size_t i = 0; i <= order; ++i) {
            const Rational expect = i < num.size() ? num[i] : Rational(0);
            CHECK(back[i] == expect);
        }
    }
}

TEST_CASE("finite_difference examples") {
    auto sq = [](long n) { return rq(n * n); };
    CHECK(finite_difference<Rational>(sq, 2, 0) == rq(2)); // Delta^2 n^2 = 2!
    auto c = [](long) { return rq(9); };
    CHECK(finite_difference<Rational>(c, 1, 0) == rq(0));
    CHECK(finite_difference<Rational>(c, 1, 5) == rq(0));
    auto p2 = [](long n) { return rq(n * (n + 1)); };
    // independent oracle: the 4-term alternating sum written out
    const Rational direct = -(rq(0 * 1) - rq(3) * rq(1 * 2) + rq(3) * rq(2 * 3) - rq(3 * 4));
    CHECK(direct == rq(0));
    CHECK(finite_difference<Rational>(p2, 3, 0) == direct);
}

TEST_CASE("Delta^k annihilates polynomials of degree below k") {
    RationalGen gen;
    for (int trial = 0; trial < 10; ++trial) {
        for (int k = 1; k <= 8; ++k) {
            std::vector<Rational> coeffs;
            for (int i = 0; i < k; ++i) // degree k-1
                coeffs.push_back(gen.next());
            Polynomial<Rational> p(coeffs);
            auto f = [&p](long n) { return p.eval(Rational(n)); };
            CHECK(finite_difference<Rational>(f, k, 0) == rq(0));
            CHECK(finite_difference<Rational>(f, k, 3) == rq(0));
        }
    }
}

TEST_CASE("commutator identities of the weighted difference operator") {
    // Delta^k (n+q) = (n+k+q) Delta^k + k Delta^{k-1}
    //              = (n+q) Delta^k + k E Delta^{k-1}
    RationalGen gen;
    std::vector<Rational> vals;
    for (int i = 0; i < 16; ++i)
        vals.push_back(gen.next());
    auto f = [&vals](long n) { return vals[static_cast<std::size_t>(n)]; };
    const Rational q = rq(3, 2);
    for (int k = 1; k <= 6; ++k) {
        for (long n = 0; n + k + 1 < 16; ++n) {
            auto wf = [&f, &q](long m) { return (Rational(m) + q) * f(m); };
            auto ef = [&f](long m) { return f(m + 1); };
            const Rational lhs = finite_difference<Rational>(wf, k, n);
            const Rational rhs1 = (Rational(n + k) + q) * finite_difference<Rational>(f, k, n) +
                                  rq(k) * finite_difference<Rational>(f, k - 1, n);
            const Rational rhs2 = (Rational(n) + q) * finite_difference<Rational>(f, k, n) +
                                  rq(k) * finite_difference<Rational>(ef, k - 1, n);
            CHECK(lhs == rhs1);
            CHECK(lhs == rhs2);
        }
    }
}

TEST_CASE("denominator identity: Delta^k prod(n+q_m) = k!") {
    // schedules extended down to q_0
    std::vector<QSchedule<Rational>> schedules = {
        QSchedule<Rational>::constant(rq(1)),
        QSchedule<Rational>::factorial_shift(rq(1)),
        QSchedule<Rational>::interpolating(rq(3), rq(1)),
        QSchedule<Rational>::square(),
    };
    for (const auto& q : schedules) {
        for (int k = 1; k <= 12; ++k) {
            Rational kfact(1);
            for (int i = 2; i <= k; ++i)
                kfact *= rq(i);
            for (long n = 0; n <= 10; ++n) {
                auto prod = [&q, k](long m) {
                    Rational p(1);
                    for (int mm = 0; mm <= k - 1; ++mm)
                        p *= Rational(m) + q.q(mm);
                    return p;
                };
                CHECK(finite_difference<Rational>(prod, k, n) == kfact);
            }
        }
    }
}

TEST_CASE("binomial_row bounds") {
    auto row = binomial_row(4);
    CHECK(row == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
    CHECK_THROWS_AS(binomial_row(63), InputError);
    CHECK(binomial_row(62)[31] > 0);
}

TEST_CASE("pochhammer and pow_int") {
    CHECK(pochhammer(rq(3), 0) == rq(1));
    CHECK(pochhammer(rq(3), 2) == rq(12));
    CHECK(pow_int(rq(2), -2) == rq(1, 4));
    CHECK(pow_int(rq(5), 0) == rq(1));
}
