#include "seqacc/corpus.hpp"

namespace seqacc {

namespace {

Rational factorial_rational(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

std::vector<ReferenceProblem> make_registry() {
    std::vector<ReferenceProblem> r;

    {
        ReferenceProblem p;
        p.name = "ln2";
        p.description = "alternating series sum (-1)^n/(n+1) = ln 2";
        p.cls = ProblemClass::Linear;
        p.term = [](long n) {
            return Rational(n % 2 == 0 ? 1 : -1, n + 1);
        };
        p.has_oracle = true;
        p.oracle = [] { return ln2_value(); };
        r.push_back(std::move(p));
    }
    {
        ReferenceProblem p;
        p.name = "zeta2";
        p.description = "logarithmically convergent sum 1/(n+1)^2 = pi^2/6";
        p.cls = ProblemClass::Logarithmic;
        p.term = [](long n) { return Rational(1, (n + 1) * (n + 1)); };
        p.has_oracle = true;
        p.oracle = [] { return zeta2_value(); };
        r.push_back(std::move(p));
    }
    {
        ReferenceProblem p;
        p.name = "euler-z1";
        p.description = "divergent Euler series sum (-1)^n n! at z=1";
        p.cls = ProblemClass::AlternatingDivergent;
        p.term = [](long n) {
            Rational f = factorial_rational(n);
            return n % 2 == 0 ? f : -f;
        };
        p.has_oracle = true;
        p.oracle = [] { return euler_series_value(1.0); };
        r.push_back(std::move(p));
    }
    {
        ReferenceProblem p;
        p.name = "geometric-half";
        p.description = "linearly convergent sum (1/2)^n = 2";
        p.cls = ProblemClass::Linear;
        p.term = [](long n) {
            mpz_class d;
            mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(n));
            return Rational(mpq_class(mpz_class(1), d));
        };
        p.has_oracle = true;
        p.oracle = [] { return 2.0; };
        r.push_back(std::move(p));
    }
    {
        ReferenceProblem p;
        p.name = "exp-series";
        p.description = "power series coefficients 1/v! of exp(z)";
        p.cls = ProblemClass::Linear;
        p.is_coefficient_series = true;
        p.term = [](long n) { return Rational(1) / factorial_rational(n); };
        p.has_oracle = false;
        r.push_back(std::move(p));
    }
    {
        ReferenceProblem p;
        p.name = "log-series";
        p.description = "power series coefficients (-1)^v/(v+1) of ln(1+z)/z";
        p.cls = ProblemClass::Linear;
        p.is_coefficient_series = true;
        p.term = [](long n) { return Rational(n % 2 == 0 ? 1 : -1, n + 1); };
        p.has_oracle = false;
        r.push_back(std::move(p));
    }
    {
        ReferenceProblem p;
        p.name = "geometric-series";
        p.description = "power series coefficients 1 of 1/(1-z)";
        p.cls = ProblemClass::Linear;
        p.is_coefficient_series = true;
        p.term = [](long) { return Rational(1); };
        p.has_oracle = false;
        r.push_back(std::move(p));
    }

    return r;
}

} // namespace

const std::vector<ReferenceProblem>& problem_registry() {
    static const std::vector<ReferenceProblem> registry = make_registry();
    return registry;
}

const ReferenceProblem& find_problem(const std::string& name) {
    for (const auto& p : problem_registry())
        if (p.name == name)
            return p;
    throw InputError("unknown problem '" + name + "'; see list-problems");
}

} // namespace seqacc
