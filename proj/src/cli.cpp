#include "seqacc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "seqacc/approximant.hpp"
#include "seqacc/corpus.hpp"
#include "seqacc/richardson.hpp"
#include "seqacc/transform.hpp"

namespace seqacc::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string problem;
    std::string family = "S";
    std::string variant = "d";
    std::string beta = "1";
    std::string xi = "1";
    std::string alpha = "1";
    std::string q_rule;
    std::string q0;
    int k_max = 0;  // 0 = as deep as the window allows
    int terms = 20;
    std::string scalar = "f64";
    bool as_sums = false;
    std::string output_path;
    std::string format = "json";
    std::vector<std::string> methods;
    int predict_count = 4;
    bool variant_given = false;
};

ordered_json config_echo(const RunConfig& c) {
    ordered_json j;
    j["command"] = c.command;
    if (!c.input_path.empty())
        j["input"] = c.input_path;
    if (!c.problem.empty())
        j["problem"] = c.problem;
    j["family"] = c.family;
    j["variant"] = c.variant;
    j["beta"] = c.beta;
    j["xi"] = c.xi;
    j["alpha"] = c.alpha;
    if (!c.q_rule.empty())
        j["q"] = c.q_rule;
    if (!c.q0.empty())
        j["q0"] = c.q0;
    j["kmax"] = c.k_max;
    j["terms"] = c.terms;
    j["scalar"] = c.scalar;
    j["as_sums"] = c.as_sums;
    j["format"] = c.format;
    if (!c.methods.empty())
        j["methods"] = c.methods;
    return j;
}

template <class T>
ordered_json jval(const T& v) {
    if constexpr (scalar_traits<T>::exact)
        return v.str();
    else
        return v;
}

template <class T>
std::string sval(const T& v) {
    return scalar_traits<T>::str(v);
}

bool is_ratio_family(const std::string& f) {
    return f == "G" || f == "L" || f == "S" || f == "M" || f == "C";
}

bool is_richardson_family(const std::string& f) {
    return f == "rich-lambda" || f == "rich-f" || f == "rich-p" || f == "rich-rc";
}

template <class T>
QSchedule<T> parse_q_rule(const std::string& rule) {
    const auto colon = rule.find(':');
    const std::string head = colon == std::string::npos ? rule : rule.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : rule.substr(colon + 1);
    auto one_param = [&tail, &rule]() {
        if (tail.empty())
            throw ConfigError("q rule '" + rule + "' needs a parameter");
        return scalar_traits<T>::parse(tail);
    };
    if (head == "m^2" || head == "square")
        return QSchedule<T>::square();
    if (head == "const")
        return QSchedule<T>::constant(one_param());
    if (head == "shift")
        return QSchedule<T>::factorial_shift(one_param());
    if (head == "rshift")
        return QSchedule<T>::reverse_shift(one_param());
    if (head == "interp") {
        const auto comma = tail.find(',');
        if (comma == std::string::npos)
            throw ConfigError("q rule 'interp' needs alpha,beta");
        return QSchedule<T>::interpolating(scalar_traits<T>::parse(tail.substr(0, comma)),
                                           scalar_traits<T>::parse(tail.substr(comma + 1)));
    }
    if (head == "list") {
        std::vector<T> vals;
        std::stringstream ss(tail);
        std::string item;
        while (std::getline(ss, item, ','))
            vals.push_back(scalar_traits<T>::parse(item));
        return QSchedule<T>::explicit_list(std::move(vals));
    }
    throw ConfigError("unknown q rule '" + rule + "' (use const:B, shift:B, rshift:X, "
                      "interp:A,B, m^2, list:q1,q2,...)");
}

template <class T>
QSchedule<T> schedule_for(const RunConfig& c, const std::string& family) {
    if (family == "G") {
        if (c.q_rule.empty())
            throw ConfigError("family G requires --q");
        return parse_q_rule<T>(c.q_rule);
    }
    if (family == "L")
        return QSchedule<T>::constant(scalar_traits<T>::parse(c.beta));
    if (family == "S")
        return QSchedule<T>::factorial_shift(scalar_traits<T>::parse(c.beta));
    if (family == "M")
        return QSchedule<T>::reverse_shift(scalar_traits<T>::parse(c.xi));
    if (family == "C")
        return QSchedule<T>::interpolating(scalar_traits<T>::parse(c.alpha),
                                           scalar_traits<T>::parse(c.beta));
    throw ConfigError("family '" + family + "' has no q schedule");
}

// ---------------------------------------------------------------------------
// input parsing
// ---------------------------------------------------------------------------

struct RawInput {
    std::vector<std::string> values;
    std::vector<std::string> omegas; // optional second CSV column
};

RawInput read_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open input file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    RawInput raw;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        ordered_json j;
        try {
            j = ordered_json::parse(text);
        } catch (const std::exception& e) {
            throw InputError("bad JSON input: " + std::string(e.what()));
        }
        if (!j.is_array())
            throw InputError("JSON input must be an array");
        for (const auto& item : j) {
            if (item.is_string())
                raw.values.push_back(item.get<std::string>());
            else
                raw.values.push_back(item.dump());
        }
        return raw;
    }

    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            raw.values.push_back(line);
        } else {
            raw.values.push_back(line.substr(0, comma));
            raw.omegas.push_back(line.substr(comma + 1));
        }
    }
    if (raw.values.empty())
        throw InputError("input file '" + path + "' contains no values");
    if (!raw.omegas.empty() && raw.omegas.size() != raw.values.size())
        throw InputError("every line needs the same number of columns");
    return raw;
}

template <class T>
std::vector<T> convert_all(const std::vector<std::string>& in) {
    std::vector<T> out;
    out.reserve(in.size());
    for (const auto& s : in)
        out.push_back(scalar_traits<T>::parse(s));
    return out;
}

template <class T>
struct LoadedInput {
    Sequence<T> seq = Sequence<T>::from_sums({scalar_traits<T>::from_int(0)});
    std::vector<T> omegas;
    std::vector<T> raw_values;
    const ReferenceProblem* problem = nullptr;
};

template <class T>
LoadedInput<T> load_input(const RunConfig& c) {
    LoadedInput<T> li;
    if (!c.problem.empty() && !c.input_path.empty())
        throw ConfigError("use either --problem or --input, not both");
    if (!c.problem.empty()) {
        li.problem = &find_problem(c.problem);
        if (c.terms < 1)
            throw ConfigError("--terms must be positive");
        li.raw_values = problem_terms<T>(*li.problem, c.terms);
        li.seq = Sequence<T>::from_terms(li.raw_values);
        return li;
    }
    if (c.input_path.empty())
        throw ConfigError("need --problem or --input");
    const RawInput raw = read_input_file(c.input_path);
    li.raw_values = convert_all<T>(raw.values);
    li.omegas = convert_all<T>(raw.omegas);
    li.seq = c.as_sums ? Sequence<T>::from_sums(li.raw_values)
                       : Sequence<T>::from_terms(li.raw_values);
    return li;
}

template <class T>
RemainderEstimator<T> estimator_for(const RunConfig& c, const LoadedInput<T>& li) {
    if (c.variant == "u") {
        if (!c.q0.empty())
            return RemainderEstimator<T>::u_with_q0(scalar_traits<T>::parse(c.q0));
        return RemainderEstimator<T>::u();
    }
    if (c.variant == "t")
        return RemainderEstimator<T>::t();
    if (c.variant == "d")
        return RemainderEstimator<T>::d();
    if (c.variant == "v")
        return RemainderEstimator<T>::v();
    if (c.variant == "explicit-omega") {
        if (li.omegas.empty())
            throw InputError("variant explicit-omega needs a second CSV column with omega values");
        return RemainderEstimator<T>::explicit_omega(li.omegas);
    }
    throw ConfigError("unknown variant '" + c.variant + "' (u, t, d, v, explicit-omega)");
}

// ---------------------------------------------------------------------------
// accelerate
// ---------------------------------------------------------------------------

template <class T>
struct BuiltTable {
    TransformTable<T> table = TransformTable<T>::from_values({{scalar_traits<T>::from_int(0)}},
                                                             {{1}}, 0);
    std::string estimator;
    std::string schedule;
};

template <class T>
TransformTable<T> values_to_table(std::vector<std::vector<T>> rows, long n_begin) {
    std::vector<std::vector<char>> ok;
    ok.reserve(rows.size());
    for (const auto& r : rows)
        ok.emplace_back(r.size(), 1);
    return TransformTable<T>::from_values(std::move(rows), std::move(ok), n_begin);
}

template <class T>
TransformTable<T> epsilon_even_columns(const Sequence<T>& s, int k_max) {
    const auto full = epsilon_table(s.values());
    std::vector<std::vector<T>> rows;
    std::vector<std::vector<char>> ok;
    for (int k = 0; 2 * k <= full.k_max(); ++k) {
        if (k_max > 0 && k > k_max)
            break;
        rows.push_back(full.eps[static_cast<std::size_t>(2 * k)]);
        ok.push_back(full.ok[static_cast<std::size_t>(2 * k)]);
        if (rows.back().empty()) {
            rows.pop_back();
            ok.pop_back();
            break;
        }
    }
    return TransformTable<T>::from_values(std::move(rows), std::move(ok), s.first_index());
}

template <class T>
BuiltTable<T> build_table(const RunConfig& c, const std::string& family,
                          const std::string& variant, const LoadedInput<T>& li) {
    BuiltTable<T> bt;
    const Sequence<T>& seq = li.seq;
    const int window = static_cast<int>(seq.size());
    auto effective_kmax = [&c, window](int lookahead) {
        const int cap = window - 1 - lookahead;
        if (cap < 0)
            throw InputError("window of " + std::to_string(window) +
                             " values is too short for the variant's lookahead");
        return (c.k_max > 0) ? std::min(c.k_max, cap) : cap;
    };

    if (is_ratio_family(family)) {
        RunConfig cc = c;
        cc.variant = variant;
        const auto est = estimator_for<T>(cc, li);
        const auto q = schedule_for<T>(c, family);
        bt.table = transform(q, seq, est, effective_kmax(est.lookahead()));
        bt.estimator = est.name();
        bt.schedule = q.label();
        return bt;
    }
    if (is_richardson_family(family) || family == "epsilon") {
        if (!variant.empty())
            throw ConfigError("family '" + family + "' takes no --variant: it uses no remainder estimates");
        if (family == "epsilon") {
            bt.table = epsilon_even_columns(seq, c.k_max);
            bt.estimator = "none";
            bt.schedule = "epsilon";
            return bt;
        }
        const int km = effective_kmax(0);
        const T beta = scalar_traits<T>::parse(c.beta);
        const T xi = scalar_traits<T>::parse(c.xi);
        const T alpha = scalar_traits<T>::parse(c.alpha);
        if (family == "rich-lambda") {
            bt.table = values_to_table(lambda_recursive(beta, seq, km), seq.first_index());
            bt.schedule = "lambda:" + sval(beta);
        } else if (family == "rich-f") {
            bt.table = values_to_table(f_variant(beta, seq, km), seq.first_index());
            bt.schedule = "f:" + sval(beta);
        } else if (family == "rich-p") {
            bt.table = values_to_table(p_variant(xi, seq, km), seq.first_index());
            bt.schedule = "p:" + sval(xi);
        } else {
            bt.table = values_to_table(rc_variant(alpha, beta, seq, km), seq.first_index());
            bt.schedule = "rc:" + sval(alpha) + "," + sval(beta);
        }
        bt.estimator = "none";
        return bt;
    }
    throw ConfigError("unknown family '" + family +
                      "' (G, L, S, M, C, rich-lambda, rich-f, rich-p, rich-rc, epsilon)");
}

template <class T>
ordered_json table_json(const TransformTable<T>& t) {
    ordered_json rows = ordered_json::array();
    for (int k = 0; k <= t.k_max(); ++k) {
        ordered_json row;
        row["k"] = k;
        ordered_json vals = ordered_json::array();
        ordered_json valid = ordered_json::array();
        ordered_json mags = ordered_json::array();
        for (int i = 0; i < t.cols(k); ++i) {
            const long n = t.n_begin() + i;
            valid.push_back(t.valid(k, n));
            if (t.valid(k, n))
                vals.push_back(jval(t.value(k, n)));
            else
                vals.push_back(nullptr);
            mags.push_back(t.denominator_magnitude(k, n));
        }
        row["values"] = vals;
        row["valid"] = valid;
        if (t.has_parts())
            row["den_magnitude"] = mags;
        rows.push_back(row);
    }
    ordered_json j;
    j["n_begin"] = t.n_begin();
    j["k_max"] = t.k_max();
    j["rows"] = rows;
    return j;
}

template <class T>
void table_csv(const TransformTable<T>& t, std::ostream& os) {
    os << "k,n,value,valid,den_magnitude\n";
    for (int k = 0; k <= t.k_max(); ++k) {
        for (int i = 0; i < t.cols(k); ++i) {
            const long n = t.n_begin() + i;
            os << k << ',' << n << ',';
            if (t.valid(k, n))
                os << sval(t.value(k, n));
            os << ',' << (t.valid(k, n) ? 1 : 0) << ',' << t.denominator_magnitude(k, n) << '\n';
        }
    }
}

template <class T>
int cmd_accelerate(const RunConfig& c, std::ostream& out) {
    const auto li = load_input<T>(c);
    const std::string variant =
        is_ratio_family(c.family) ? c.variant : (c.variant_given ? c.variant : "");
    const auto bt = build_table<T>(c, c.family, variant, li);
    const auto rec = bt.table.recommended();

    ordered_json j;
    j["command"] = "accelerate";
    j["config"] = config_echo(c);
    j["table"] = table_json(bt.table);
    ordered_json r;
    r["k"] = rec.k;
    r["n"] = rec.n;
    r["value"] = jval(rec.value);
    r["error_estimate"] = rec.error_estimate;
    j["recommended"] = r;
    ordered_json diag;
    diag["estimator"] = bt.estimator;
    diag["schedule"] = bt.schedule;
    int invalid = 0;
    for (int k = 0; k <= bt.table.k_max(); ++k)
        for (int i = 0; i < bt.table.cols(k); ++i)
            if (!bt.table.valid(k, bt.table.n_begin() + i))
                ++invalid;
    diag["invalid_entries"] = invalid;
    if (li.problem && li.problem->has_oracle) {
        const double oracle = li.problem->oracle();
        diag["oracle"] = oracle;
        diag["recommended_abs_error"] =
            std::fabs(scalar_traits<T>::to_double(rec.value) - oracle);
    }
    j["diagnostics"] = diag;

    if (c.format == "csv")
        table_csv(bt.table, out);
    else
        out << j.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// predict
// ---------------------------------------------------------------------------

template <class T>
int cmd_predict(const RunConfig& c, std::ostream& out) {
    if (!is_ratio_family(c.family))
        throw ConfigError("predict needs a transformation family (G, L, S, M, C)");
    if (c.variant != "u" && c.variant != "t" && c.variant != "d" && c.variant != "v")
        throw ConfigError("predict needs --variant u, t, d or v");
    const auto li = load_input<T>(c);
    PowerSeriesCoefficients<T> gamma{li.raw_values};
    const auto q = schedule_for<T>(c, c.family);
    const int k = c.k_max > 0 ? c.k_max : 1;
    const long n = 0;
    const bool refined = (c.variant == "d" || c.variant == "v");
    const std::size_t required = static_cast<std::size_t>(k) + (refined ? 2 : 1);
    if (gamma.count() < required)
        throw InputError("variant '" + c.variant + "' with k=" + std::to_string(k) +
                         ", n=0 requires at least " + std::to_string(required) +
                         " coefficients, got " + std::to_string(gamma.count()));
    std::optional<T> q0;
    if (!c.q0.empty())
        q0 = scalar_traits<T>::parse(c.q0);

    const auto approx = build_variant_approximant(c.variant[0], q, k, n, gamma, q0);
    const auto pred = predict(c.variant[0], q, k, n, gamma,
                              static_cast<std::size_t>(c.predict_count), q0);
    const std::size_t measured = check_order(approx, gamma);

    ordered_json j;
    j["command"] = "predict";
    j["config"] = config_echo(c);
    ordered_json prov;
    prov["variant"] = c.variant;
    prov["k"] = k;
    prov["n"] = n;
    prov["schedule"] = q.label();
    j["provenance"] = prov;
    j["guaranteed_matched"] = pred.guaranteed;
    j["measured_matched"] = measured;
    ordered_json preds = ordered_json::array();
    for (std::size_t i = 0; i < pred.predicted.size(); ++i) {
        ordered_json p;
        p["index"] = pred.guaranteed + i;
        p["value"] = jval(pred.predicted[i]);
        preds.push_back(p);
    }
    j["predictions"] = preds;
    ordered_json poly;
    ordered_json numc = ordered_json::array(), denc = ordered_json::array();
    for (const auto& v : approx.num.coeffs())
        numc.push_back(jval(v));
    for (const auto& v : approx.den.coeffs())
        denc.push_back(jval(v));
    poly["numerator"] = numc;
    poly["denominator"] = denc;
    j["approximant"] = poly;

    if (c.format == "csv") {
        out << "index,value\n";
        for (std::size_t i = 0; i < pred.predicted.size(); ++i)
            out << pred.guaranteed + i << ',' << sval(pred.predicted[i]) << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

struct MethodColumn {
    std::string label;
    std::vector<double> values;
    std::vector<bool> valid;
};

template <class T>
MethodColumn run_method(const RunConfig& c, const std::string& method, const LoadedInput<T>& li) {
    MethodColumn col;
    col.label = method;
    std::string family = method, variant;
    const auto colon = method.find(':');
    if (colon != std::string::npos) {
        family = method.substr(0, colon);
        variant = method.substr(colon + 1);
    }
    if (is_ratio_family(family) && variant.empty())
        throw ConfigError("method '" + method + "' needs a variant, e.g. '" + family + ":d'");
    const auto bt = build_table<T>(c, family, variant, li);
    for (int k = 1; k <= bt.table.k_max(); ++k) {
        if (bt.table.cols(k) < 1)
            break;
        const long n0 = bt.table.n_begin();
        col.valid.push_back(bt.table.valid(k, n0));
        col.values.push_back(bt.table.valid(k, n0)
                                 ? scalar_traits<T>::to_double(bt.table.value(k, n0))
                                 : 0.0);
    }
    return col;
}

template <class T>
int cmd_compare(const RunConfig& c, std::ostream& out) {
    if (c.methods.size() < 2)
        throw ConfigError("compare needs at least two --method entries "
                          "(e.g. --method S:d --method epsilon)");
    const auto li = load_input<T>(c);

    // independent (family, variant) runs may proceed concurrently
    std::vector<std::future<MethodColumn>> futures;
    futures.reserve(c.methods.size());
    for (const auto& m : c.methods)
        futures.push_back(std::async(std::launch::async,
                                     [&c, &li, m] { return run_method<T>(c, m, li); }));
    std::vector<MethodColumn> cols;
    cols.reserve(futures.size());
    for (auto& f : futures)
        cols.push_back(f.get());

    const bool with_oracle = li.problem && li.problem->has_oracle;
    const double oracle = with_oracle ? li.problem->oracle() : 0.0;

    std::size_t max_orders = 0;
    for (const auto& col : cols)
        max_orders = std::max(max_orders, col.values.size());

    ordered_json j;
    j["command"] = "compare";
    j["config"] = config_echo(c);
    if (with_oracle)
        j["oracle"] = oracle;
    ordered_json jcols = ordered_json::array();
    for (const auto& col : cols) {
        ordered_json jc;
        jc["method"] = col.label;
        ordered_json vals = ordered_json::array(), errs = ordered_json::array();
        for (std::size_t i = 0; i < col.values.size(); ++i) {
            if (col.valid[i]) {
                vals.push_back(col.values[i]);
                if (with_oracle)
                    errs.push_back(std::fabs(col.values[i] - oracle));
            } else {
                vals.push_back(nullptr);
                if (with_oracle)
                    errs.push_back(nullptr);
            }
        }
        jc["values"] = vals;
        if (with_oracle)
            jc["abs_errors"] = errs;
        jcols.push_back(jc);
    }
    j["columns"] = jcols;

    if (c.format == "csv") {
        out << "order";
        for (const auto& col : cols) {
            out << ',' << col.label << "_value";
            if (with_oracle)
                out << ',' << col.label << "_error";
        }
        out << '\n';
        for (std::size_t i = 0; i < max_orders; ++i) {
            out << (i + 1);
            for (const auto& col : cols) {
                out << ',';
                if (i < col.values.size() && col.valid[i]) {
                    out << scalar_traits<double>::str(col.values[i]);
                    if (with_oracle)
                        out << ',' << scalar_traits<double>::str(std::fabs(col.values[i] - oracle));
                } else if (with_oracle) {
                    out << ',';
                }
            }
            out << '\n';
        }
    } else {
        out << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_list_problems(const RunConfig& c, std::ostream& out) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : problem_registry()) {
        ordered_json j;
        j["name"] = p.name;
        j["description"] = p.description;
        switch (p.cls) {
        case ProblemClass::Linear: j["class"] = "linear"; break;
        case ProblemClass::Logarithmic: j["class"] = "logarithmic"; break;
        case ProblemClass::AlternatingDivergent: j["class"] = "alternating-divergent"; break;
        }
        j["coefficient_series"] = p.is_coefficient_series;
        if (p.has_oracle)
            j["oracle"] = p.oracle();
        arr.push_back(j);
    }
    if (c.format == "csv") {
        out << "name,class,coefficient_series\n";
        for (const auto& p : arr)
            out << p["name"].get<std::string>() << ',' << p["class"].get<std::string>() << ','
                << (p["coefficient_series"].get<bool>() ? 1 : 0) << '\n';
    } else {
        out << arr.dump(2) << '\n';
    }
    return 0;
}

template <class T>
int dispatch(const RunConfig& c, std::ostream& out) {
    if (c.command == "accelerate")
        return cmd_accelerate<T>(c, out);
    if (c.command == "predict")
        return cmd_predict<T>(c, out);
    if (c.command == "compare")
        return cmd_compare<T>(c, out);
    throw ConfigError("unknown command '" + c.command + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Levin-type sequence transformation toolkit"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--input", cfg.input_path, "input file (text/CSV or JSON array)");
        cmd->add_option("--problem", cfg.problem, "registry problem name");
        cmd->add_option("--family", cfg.family,
                        "G, L, S, M, C, rich-lambda, rich-f, rich-p, rich-rc, epsilon");
        cmd->add_option("--variant", cfg.variant, "u, t, d, v, explicit-omega");
        cmd->add_option("--beta", cfg.beta, "beta parameter (L, S, C, rich-lambda, rich-f, rich-rc)");
        cmd->add_option("--xi", cfg.xi, "xi parameter (M, rich-p)");
        cmd->add_option("--alpha", cfg.alpha, "alpha parameter (C, rich-rc)");
        cmd->add_option("--q", cfg.q_rule, "q schedule for family G: const:B, shift:B, rshift:X, "
                                           "interp:A,B, m^2, list:q1,q2,...");
        cmd->add_option("--q0", cfg.q0, "q_0 override for the u variant");
        cmd->add_option("--kmax", cfg.k_max, "highest transformation order (default: window limit)");
        cmd->add_option("--terms", cfg.terms, "number of terms taken from a registry problem");
        cmd->add_option("--scalar", cfg.scalar, "f64 or rational")
            ->check(CLI::IsMember({"f64", "rational"}));
        cmd->add_flag("--as-sums", cfg.as_sums, "input values are partial sums, not terms");
        cmd->add_option("--output", cfg.output_path, "write the artifact to this path");
        cmd->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* acc = app.add_subcommand("accelerate", "build a transformation table");
    add_common(acc);
    auto* pre = app.add_subcommand("predict", "predict power series coefficients");
    add_common(pre);
    pre->add_option("--count", cfg.predict_count, "number of predicted coefficients");
    auto* cmp = app.add_subcommand("compare", "compare methods against the oracle");
    add_common(cmp);
    cmp->add_option("--method", cfg.methods,
                    "method to run (repeatable): FAMILY:VARIANT, rich-*, or epsilon");
    auto* lst = app.add_subcommand("list-problems", "list registry problems");
    add_common(lst);

    std::vector<std::string> argv_like = args;
    argv_like.insert(argv_like.begin(), "seqacc");
    std::vector<const char*> argv;
    argv.reserve(argv_like.size());
    for (const auto& a : argv_like)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "config error: " << e.what() << '\n';
        return 1;
    }

    CLI::App* active = nullptr;
    if (acc->parsed()) {
        cfg.command = "accelerate";
        active = acc;
    } else if (pre->parsed()) {
        cfg.command = "predict";
        active = pre;
    } else if (cmp->parsed()) {
        cfg.command = "compare";
        active = cmp;
    } else {
        cfg.command = "list-problems";
        active = lst;
    }
    cfg.variant_given = active->count("--variant") > 0;

    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!cfg.output_path.empty()) {
        file_out.open(cfg.output_path);
        if (!file_out) {
            err << "input error: cannot open output path '" << cfg.output_path << "'\n";
            return 2;
        }
        sink = &file_out;
    }

    try {
        if (cfg.command == "list-problems")
            return cmd_list_problems(cfg, *sink);
        if (cfg.scalar == "rational")
            return dispatch<Rational>(cfg, *sink);
        return dispatch<double>(cfg, *sink);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 1;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        err << "numerical error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace seqacc::cli
