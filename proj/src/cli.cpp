#include "wrightlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "wrightlab/direct.hpp"
#include "wrightlab/errors.hpp"
#include "wrightlab/euler.hpp"
#include "wrightlab/multivar.hpp"
#include "wrightlab/series.hpp"
#include "wrightlab/verify.hpp"

namespace wrightlab::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_real(std::string_view s, const std::string& what)
{
    double v = 0.0;
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError(what + ": '" + std::string(s) + "' is not a number");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    if (s.empty()) {
        return parts;
    }
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        parts.push_back(item);
    }
    if (s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

/// key=value arguments of `eval`, parsed on demand. Every key must be consumed.
class Args {
public:
    explicit Args(const std::map<std::string, std::string>& raw)
        : raw_(raw)
    {
    }

    bool has(const std::string& key) const { return raw_.count(key) != 0; }

    const std::string& text(const std::string& key)
    {
        const auto it = raw_.find(key);
        if (it == raw_.end()) {
            throw UsageError("missing argument '" + key + "'");
        }
        used_.insert(key);
        return it->second;
    }

    double real(const std::string& key) { return parse_real(text(key), key); }

    double real_or(const std::string& key, double fallback) { return has(key) ? real(key) : fallback; }

    Complex complex(const std::string& key)
    {
        try {
            return parse_complex(text(key));
        } catch (const std::invalid_argument& e) {
            throw UsageError(key + ": " + e.what());
        }
    }

    Complex complex_or(const std::string& key, Complex fallback) { return has(key) ? complex(key) : fallback; }

    unsigned count(const std::string& key)
    {
        const std::string& s = text(key);
        unsigned v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            throw UsageError(key + ": '" + s + "' is not a non-negative integer");
        }
        return v;
    }

    std::vector<double> list(const std::string& key)
    {
        std::vector<double> out;
        for (const auto& item : split(text(key), ',')) {
            out.push_back(parse_real(item, key));
        }
        return out;
    }

    std::vector<Complex> complex_list(const std::string& key)
    {
        std::vector<Complex> out;
        for (const auto& item : split(text(key), ',')) {
            try {
                out.push_back(parse_complex(item));
            } catch (const std::invalid_argument& e) {
                throw UsageError(key + ": " + e.what());
            }
        }
        return out;
    }

    /// "v:w,v:w,..."
    std::vector<std::pair<double, double>> pairs(const std::string& key)
    {
        std::vector<std::pair<double, double>> out;
        for (const auto& item : split(text(key), ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) {
                throw UsageError(key + ": '" + item + "' is not a value:weight pair");
            }
            out.emplace_back(parse_real(item.substr(0, colon), key), parse_real(item.substr(colon + 1), key));
        }
        return out;
    }

    void finish() const
    {
        for (const auto& [k, v] : raw_) {
            if (used_.count(k) == 0) {
                throw UsageError("unknown argument '" + k + "'");
            }
        }
    }

private:
    std::map<std::string, std::string> raw_;
    std::set<std::string> used_;
};

struct Outcome {
    Complex value;
    double err = 0.0;
    long terms = 0;
    long nodes = 0;
};

Outcome from_series(const SeriesResult& r)
{
    return {r.value, r.tail_estimate, r.terms_used, 0};
}

Outcome from_quadrature(const QuadratureResult& r)
{
    return {r.value, r.err_estimate, 0, r.evaluations};
}

std::vector<WeightedParam> weighted(const std::vector<std::pair<double, double>>& pairs)
{
    std::vector<WeightedParam> out;
    for (const auto& [v, w] : pairs) {
        out.push_back({v, w});
    }
    return out;
}

EulerIntegralSpec euler_spec_from(const std::string& family, Args& a)
{
    if (family == "theorem1" || family == "theorem2") {
        const auto make = family == "theorem1" ? theorem1_spec : theorem2_spec;
        return make(a.real("alpha"), a.real("beta"), a.real("alpha1"), a.real("alpha2"), a.real("x1"), a.real("x2"),
                    a.real("lambda"), a.complex("p"));
    }
    if (family == "theorem3") {
        return theorem3_spec(a.real("alpha"), a.real("beta"), a.real("gamma"), a.real("a"), a.real("b"), a.real("u"),
                             a.real("v"), a.real("lambda"), a.complex("p"));
    }
    if (family == "theorem4") {
        return theorem4_spec(a.real("alpha"), a.real("beta"), a.real("a"), a.real("b"), a.real("nu"), a.real("mu"),
                             a.real("lambda"), a.complex("p"));
    }
    if (family == "lauricella") {
        return lauricella_spec(a.real("alpha"), a.real("beta"), a.list("alphas"), a.list("xs"), a.real("lambda"),
                               a.complex("p"));
    }
    throw UsageError("unknown family '" + family + "'");
}

GeneratingIntegralSpec generating_spec_from(Args& a)
{
    const std::string& kind = a.text("generator");
    GeneratorSpec gen;
    if (kind == "binomial") {
        gen = BinomialGenerator{a.real("a"), a.real_or("x", 1.0)};
    } else if (kind == "humbert") {
        gen = HumbertGenerator{a.real("a"), a.real("b"), a.real("x")};
    } else if (kind == "gegenbauer") {
        gen = GegenbauerGenerator{a.real("a"), a.real_or("x", 1.0)};
    } else {
        throw UsageError("unknown generator '" + kind + "' (binomial, humbert, gegenbauer)");
    }
    GeneratingIntegralSpec spec{gen,
                                a.real("r"),
                                a.real("s"),
                                a.real_or("delta", 1.0),
                                a.real_or("omega", 1.0),
                                a.real("lambda"),
                                a.complex("p"),
                                a.complex("t"),
                                {}};
    if (a.has("factors")) {
        for (const auto& [alpha, x] : a.pairs("factors")) {
            spec.factors.push_back({alpha, x});
        }
    }
    return spec;
}

struct EvalFunction {
    std::string usage;
    std::function<Outcome(Args&, const SeriesPolicy&)> run;
};

const std::map<std::string, EvalFunction>& eval_registry()
{
    static const std::map<std::string, EvalFunction> registry = {
        {"gamma", {"x", [](Args& a, const SeriesPolicy&) { return Outcome{gamma_fn(a.real("x"))}; }}},
        {"log_gamma", {"x", [](Args& a, const SeriesPolicy&) { return Outcome{log_gamma(a.real("x"))}; }}},
        {"beta",
         {"x y", [](Args& a, const SeriesPolicy&) { return Outcome{beta_fn(a.real("x"), a.real("y"))}; }}},
        {"pochhammer",
         {"a n", [](Args& a, const SeriesPolicy&) { return Outcome{pochhammer(a.real("a"), a.count("n"))}; }}},
        {"wright_psi",
         {"upper=v:w,... lower=v:w,... z",
          [](Args& a, const SeriesPolicy& pol) {
              const WrightSpec spec(weighted(a.pairs("upper")), weighted(a.pairs("lower")));
              return from_series(wright_psi(spec, a.complex("z"), pol));
          }}},
        {"wright_psi_normalized",
         {"upper=v:w,... lower=v:w,... z",
          [](Args& a, const SeriesPolicy& pol) {
              const WrightSpec spec(weighted(a.pairs("upper")), weighted(a.pairs("lower")));
              return from_series(wright_psi_normalized(spec, a.complex("z"), pol));
          }}},
        {"pfq",
         {"num=a,... den=b,... z",
          [](Args& a, const SeriesPolicy& pol) {
              const auto num = a.list("num");
              const auto den = a.list("den");
              return from_series(hyper_pfq(num, den, a.complex("z"), pol));
          }}},
        {"mittag_leffler",
         {"lambda z",
          [](Args& a, const SeriesPolicy& pol) {
              return from_series(mittag_leffler(a.real("lambda"), a.complex("z"), pol));
          }}},
        {"appell_f1",
         {"alpha beta beta_prime gamma x y",
          [](Args& a, const SeriesPolicy& pol) {
              return from_series(appell_f1(a.real("alpha"), a.real("beta"), a.real("beta_prime"), a.real("gamma"),
                                           a.complex("x"), a.complex("y"), pol));
          }}},
        {"appell_f3",
         {"alpha alpha_prime beta beta_prime gamma x y",
          [](Args& a, const SeriesPolicy& pol) {
              return from_series(appell_f3(a.real("alpha"), a.real("alpha_prime"), a.real("beta"),
                                           a.real("beta_prime"), a.real("gamma"), a.complex("x"), a.complex("y"),
                                           pol));
          }}},
        {"humbert_phi2",
         {"b1 b2 c x y",
          [](Args& a, const SeriesPolicy& pol) {
              return from_series(humbert_phi2(a.real("b1"), a.real("b2"), a.real("c"), a.complex("x"),
                                              a.complex("y"), pol));
          }}},
        {"lauricella_fd",
         {"alpha alphas=a,... gamma xs=x,...",
          [](Args& a, const SeriesPolicy& pol) {
              const auto alphas = a.list("alphas");
              const auto xs = a.complex_list("xs");
              return from_series(lauricella_fd(a.real("alpha"), alphas, a.real("gamma"), xs, pol));
          }}},
        {"gegenbauer",
         {"n a x",
          [](Args& a, const SeriesPolicy&) {
              return Outcome{gegenbauer(a.count("n"), a.real("a"), a.real("x"))};
          }}},
        {"theorem1",
         {"alpha beta alpha1 alpha2 x1 x2 lambda p",
          [](Args& a, const SeriesPolicy& pol) { return from_series(closed_form(euler_spec_from("theorem1", a), pol)); }}},
        {"theorem2",
         {"alpha beta alpha1 alpha2 x1 x2 lambda p",
          [](Args& a, const SeriesPolicy& pol) { return from_series(closed_form(euler_spec_from("theorem2", a), pol)); }}},
        {"theorem3",
         {"alpha beta gamma a b u v lambda p",
          [](Args& a, const SeriesPolicy& pol) { return from_series(closed_form(euler_spec_from("theorem3", a), pol)); }}},
        {"theorem4",
         {"alpha beta a b nu mu lambda p",
          [](Args& a, const SeriesPolicy& pol) { return from_series(closed_form(euler_spec_from("theorem4", a), pol)); }}},
        {"lauricella_closed",
         {"alpha beta alphas=a,... xs=x,... lambda p",
          [](Args& a, const SeriesPolicy& pol) {
              return from_series(closed_form(euler_spec_from("lauricella", a), pol));
          }}},
        {"generating",
         {"generator={binomial|humbert|gegenbauer} a [b] [x] r s [delta] [omega] lambda p t [factors=alpha:x,...]",
          [](Args& a, const SeriesPolicy& pol) {
              return from_series(generating_integral_closed_form(generating_spec_from(a), pol));
          }}},
        {"integral_direct",
         {"family={theorem1|theorem2|theorem3|theorem4|lauricella|generating} <that family's arguments>",
          [](Args& a, const SeriesPolicy& pol) {
              const std::string family = a.text("family");
              if (family == "generating") {
                  return from_quadrature(evaluate_generating_integral_direct(generating_spec_from(a), {}, pol));
              }
              return from_quadrature(evaluate_integral_direct(euler_spec_from(family, a), {}, pol));
          }}},
    };
    return registry;
}

std::string eval_usage()
{
    std::string text = "usage: wrightlab eval FUNCTION key=value ...\n"
                       "complex values: 1.5, 0.5+0.5i, -1.2i; lists: a,b,c; weighted pairs: v:w,v:w\n"
                       "functions:\n";
    for (const auto& [name, fn] : eval_registry()) {
        text += "  " + name + "  " + fn.usage + "\n";
    }
    return text;
}

std::string format_value(Complex v)
{
    if (v.imag() == 0.0) {
        return verify::format_double(v.real());
    }
    const std::string im = verify::format_double(v.imag());
    return verify::format_double(v.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw verify::ConfigError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw verify::ConfigError("cannot write '" + path + "'");
    }
}

std::string render(const verify::Report& report, const std::string& format)
{
    return format == "csv" ? verify::to_csv(report) : verify::to_json(report);
}

} // namespace

Complex parse_complex(const std::string& text)
{
    std::string s;
    std::remove_copy_if(text.begin(), text.end(), std::back_inserter(s), [](unsigned char c) { return std::isspace(c); });
    if (s.empty()) {
        throw std::invalid_argument("empty number");
    }
    auto real_part = [&](const std::string& part) -> double {
        if (part.empty() || part == "+") {
            return 1.0;
        }
        if (part == "-") {
            return -1.0;
        }
        double v = 0.0;
        const char* first = part.data() + (part.front() == '+' ? 1 : 0);
        const auto [ptr, ec] = std::from_chars(first, part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size()) {
            throw std::invalid_argument("'" + text + "' is not a number");
        }
        return v;
    };
    if (s.back() != 'i' && s.back() != 'j') {
        if (s == "+" || s == "-") {
            throw std::invalid_argument("'" + text + "' is not a number");
        }
        return {real_part(s), 0.0};
    }
    s.pop_back();
    // Split at the last sign that is not the leading one and not an exponent sign.
    std::size_t split_at = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split_at = i;
            break;
        }
    }
    if (split_at == std::string::npos) {
        return {0.0, real_part(s)};
    }
    const std::string re = s.substr(0, split_at);
    if (re.empty() || re == "+" || re == "-") {
        throw std::invalid_argument("'" + text + "' is not a number");
    }
    return {real_part(re), real_part(s.substr(split_at))};
}

std::vector<std::string> eval_function_names()
{
    std::vector<std::string> names;
    for (const auto& [name, fn] : eval_registry()) {
        names.push_back(name);
    }
    return names;
}

int cmd_eval(const std::string& function, const std::map<std::string, std::string>& args, std::ostream& out,
             std::ostream& err)
{
    const auto& registry = eval_registry();
    const auto it = registry.find(function);
    if (it == registry.end()) {
        err << "error: unknown function '" << function << "'\n" << eval_usage();
        return kUsage;
    }
    try {
        const SeriesPolicy policy = SeriesPolicy::from_environment();
        Args a(args);
        const Outcome o = it->second.run(a, policy);
        a.finish();
        out << "value=" << format_value(o.value) << " err=" << verify::format_double(o.err) << " terms=" << o.terms
            << " nodes=" << o.nodes << "\n";
        return kOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nusage: wrightlab eval " << function << " " << it->second.usage << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const PoleError& e) {
        err << "domain error (pole): " << e.what() << "\n";
        return kDomain;
    } catch (const NumericError& e) {
        err << "convergence error: " << e.what() << "\n";
        return kConvergence;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Wright-function series, Euler-type integral identities and their verification", "wrightlab"};
    app.require_subcommand(1);

    std::string function;
    std::vector<std::string> eval_args;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate one function; prints value, error estimate and counts");
    eval->add_option("function", function, "Function name")->required();
    eval->add_option("args", eval_args, "key=value arguments (λ is accepted for lambda)");
    eval->footer(eval_usage());

    std::string config_path;
    std::string format;
    std::string out_path;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::vector<std::string> patterns;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    CLI::App* verify_cmd = app.add_subcommand("verify", "Check every catalog identity against its quadrature oracle");
    verify_cmd->add_option("--config", config_path, "Grid configuration (JSON)");
    auto* format_opt = verify_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--out", out_path, "Report path (default: stdout)");
    auto* seed_opt = verify_cmd->add_option("--seed", seed, "Seed for randomized draws");
    auto* tol_opt = verify_cmd->add_option("--tolerance", tolerance, "Default relative tolerance")
                        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--case", patterns, "Case name pattern (glob); repeatable");
    verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::string report_path;
    std::string report_format = "json";
    std::string report_out;
    CLI::App* report_cmd = app.add_subcommand("report", "Convert a verification report between JSON and CSV");
    report_cmd->add_option("report", report_path, "Report produced by verify (JSON or CSV)")->required();
    report_cmd->add_option("--format", report_format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    report_cmd->add_option("--out", report_out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (eval->parsed()) {
        std::map<std::string, std::string> kv;
        for (const auto& arg : eval_args) {
            const auto eq = arg.find('=');
            if (eq == std::string::npos || eq == 0) {
                err << "error: expected key=value, got '" << arg << "'\n";
                return kUsage;
            }
            std::string key = arg.substr(0, eq);
            if (key == "λ") {
                key = "lambda";
            }
            if (!kv.emplace(key, arg.substr(eq + 1)).second) {
                err << "error: argument '" << key << "' given twice\n";
                return kUsage;
            }
        }
        return cmd_eval(function, kv, out, err);
    }

    if (verify_cmd->parsed()) {
        try {
            verify::GridConfig config;
            if (!config_path.empty()) {
                config = verify::GridConfig::parse(read_file(config_path));
            }
            if (*seed_opt) {
                config.seed = seed;
            }
            if (*tol_opt) {
                config.tolerance = tolerance;
            }
            if (*format_opt) {
                config.format = format;
            }
            if (!patterns.empty()) {
                config.cases = patterns;
            }
            const bool any = std::any_of(verify::catalog().begin(), verify::catalog().end(),
                                         [&](const auto& def) { return verify::case_selected(def.name, config); });
            if (!any) {
                throw verify::ConfigError("no catalog case matches the case filter");
            }
            verify::VerifyOptions options;
            options.jobs = jobs;
            options.series = SeriesPolicy::from_environment();
            const verify::Report report = verify::run_verification(config, options);
            write_output(out_path, render(report, config.format), out);

            std::map<verify::Status, long> counts;
            for (const auto& r : report.records) {
                ++counts[r.status];
            }
            std::ostream& summary = (out_path.empty() || out_path == "-") ? err : out;
            summary << "verify: " << report.records.size() << " records, pass=" << counts[verify::Status::pass]
                    << " fail=" << counts[verify::Status::fail]
                    << " skipped-domain=" << counts[verify::Status::skipped_domain]
                    << " error=" << counts[verify::Status::error] << "\n";
            return verify::has_failures(report) ? kVerifyFailed : kOk;
        } catch (const verify::ConfigError& e) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        } catch (const DomainError& e) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        }
    }

    if (report_cmd->parsed()) {
        try {
            const std::string text = read_file(report_path);
            const auto first = text.find_first_not_of(" \t\r\n");
            const verify::Report report = (first != std::string::npos && text[first] == '{')
                ? verify::report_from_json(text)
                : verify::report_from_csv(text);
            write_output(report_out, render(report, report_format), out);
            return kOk;
        } catch (const verify::ConfigError& e) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        }
    }
    return kUsage;
}

} // namespace wrightlab::cli
