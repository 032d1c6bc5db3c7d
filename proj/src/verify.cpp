#include "wrightlab/verify.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <random>
#include <thread>

#include "detail/overloaded.hpp"
#include "json.hpp"
#include "wrightlab/direct.hpp"
#include "wrightlab/errors.hpp"

namespace wrightlab::verify {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Catalog

ParamAxis real_axis(std::string name, std::vector<double> values, double lo, double hi)
{
    ParamAxis axis{std::move(name), false, {}, lo, hi};
    for (double v : values) {
        axis.defaults.emplace_back(v, 0.0);
    }
    return axis;
}

ParamAxis complex_axis(std::string name, std::vector<Complex> values, double lo, double hi)
{
    return ParamAxis{std::move(name), true, std::move(values), lo, hi};
}

const std::vector<Complex> kDefaultP = {{0, 0}, {0.8, 0}, {-0.8, 0}, {1.5, 0}, {0.5, 0.5}, {0, -1.2}};

ParamAxis p_axis(std::vector<Complex> values = kDefaultP)
{
    return complex_axis("p", std::move(values), -1.0, 1.0);
}

ParamAxis lambda_axis(std::vector<double> values = {0.5, 1.0, 2.0})
{
    return real_axis("lambda", std::move(values), 0.3, 2.5);
}

double re(const ParamPoint& pt, const std::string& name)
{
    return pt.at(name).real();
}

Complex cx(const ParamPoint& pt, const std::string& name)
{
    return pt.at(name);
}

IdentityCase euler_case(std::string name, EulerIntegralSpec spec)
{
    IdentityCase c;
    c.name = std::move(name);
    c.closed_form = [spec](const SeriesPolicy& policy) { return wrightlab::closed_form(spec, policy); };
    c.spec = std::move(spec);
    return c;
}

IdentityCase generating_case(std::string name, GeneratingIntegralSpec spec)
{
    IdentityCase c;
    c.name = std::move(name);
    c.closed_form = [spec](const SeriesPolicy& policy) { return generating_integral_closed_form(spec, policy); };
    c.spec = std::move(spec);
    return c;
}

std::vector<ParamAxis> generating_axes(std::vector<ParamAxis> generator_axes)
{
    std::vector<ParamAxis> axes = std::move(generator_axes);
    axes.push_back(real_axis("r", {0.8, 1.5}, 0.3, 2.0));
    axes.push_back(real_axis("s", {2.1, 3.0}, 2.0, 4.0));
    axes.push_back(real_axis("delta", {1.0}, 0.0, 2.0));
    axes.push_back(real_axis("omega", {1.0}, 0.0, 2.0));
    axes.push_back(lambda_axis({1.0, 2.0}));
    axes.push_back(p_axis({{0, 0}, {0.6, 0}}));
    axes.push_back(complex_axis("t", {{0.3, 0}, {-0.4, 0}}, -0.28, 0.28));
    return axes;
}

GeneratingIntegralSpec generating_spec(GeneratorSpec gen, const ParamPoint& pt)
{
    return GeneratingIntegralSpec{std::move(gen), re(pt, "r"),      re(pt, "s"), re(pt, "delta"), re(pt, "omega"),
                                  re(pt, "lambda"), cx(pt, "p"), cx(pt, "t"), {}};
}

ApplicationParams application_params(const ParamPoint& pt)
{
    ApplicationParams ap;
    auto take = [&](const char* name, double& field) {
        if (const auto it = pt.find(name); it != pt.end()) {
            field = it->second.real();
        }
    };
    take("alpha", ap.alpha);
    take("beta", ap.beta);
    take("alpha1", ap.alpha1);
    take("alpha2", ap.alpha2);
    take("x1", ap.x1);
    take("a", ap.a);
    take("b", ap.b);
    take("nu", ap.nu);
    take("mu", ap.mu);
    take("lambda", ap.lambda);
    return ap;
}

CaseDefinition application_definition(const std::string& id, std::vector<ParamAxis> axes)
{
    return CaseDefinition{"example" + id, std::move(axes), [id](const ParamPoint& pt) {
                              return application_case(id, application_params(pt), cx(pt, "p"));
                          }};
}

std::vector<CaseDefinition> build_catalog()
{
    std::vector<CaseDefinition> cat;

    cat.push_back({"corollary1",
                   {real_axis("a", {0.7}, 0.2, 2.0), real_axis("r", {0.8, 1.5}, 0.3, 2.0),
                    real_axis("delta", {1.0, 0.5}, 0.0, 2.0), lambda_axis({1.0, 2.0}),
                    p_axis({{0, 0}, {0.6, 0}}), complex_axis("t", {{0.3, 0}, {-0.4, 0}}, -0.28, 0.28)},
                   [](const ParamPoint& pt) {
                       const double r = re(pt, "r");
                       const double d = re(pt, "delta");
                       GeneratingIntegralSpec spec{BinomialGenerator{re(pt, "a"), 1.0},
                                                   r, 2.0 * r, d, d, re(pt, "lambda"), cx(pt, "p"), cx(pt, "t"), {}};
                       return generating_case("corollary1", std::move(spec));
                   }});

    cat.push_back(application_definition(
        "4.1", {real_axis("alpha", {0.7, 1.5}, 0.3, 3.0), real_axis("alpha1", {0.4, 1.1}, 0.1, 1.5),
                real_axis("x1", {-0.3, 0.3}, -0.6, 0.45), lambda_axis(), p_axis()}));
    cat.push_back(application_definition(
        "4.2", {real_axis("alpha", {1.0}, 0.3, 3.0), real_axis("beta", {1.4, 0.6}, 0.3, 3.0),
                real_axis("alpha1", {0.3}, 0.1, 1.5), real_axis("alpha2", {0.4}, 0.1, 1.5),
                real_axis("x1", {0.25, -0.4}, -0.6, 0.45), lambda_axis(), p_axis()}));
    cat.push_back(application_definition(
        "4.3", {real_axis("alpha", {0.9}, 0.3, 3.0), real_axis("beta", {1.3}, 0.3, 3.0),
                real_axis("alpha1", {0.7, -1.5}, -2.0, 2.0), real_axis("x1", {0.4, -0.5}, -0.6, 0.6), lambda_axis(),
                p_axis()}));
    cat.push_back(application_definition(
        "4.4", {real_axis("alpha", {1.0, 1.7}, 0.3, 3.0), real_axis("beta", {0.6}, 0.3, 3.0),
                real_axis("a", {0.0, -1.0}, -1.0, 0.0), real_axis("b", {1.0, 3.0}, 0.5, 3.0),
                lambda_axis({0.0, 0.5, 1.0, 2.0}), p_axis()}));
    cat.push_back(application_definition(
        "4.5", {real_axis("alpha", {0.8, 2.0}, 0.3, 3.0), real_axis("nu", {0.0, 0.5}, -0.5, 2.0),
                real_axis("mu", {-0.4, 1.0}, -0.5, 2.0), lambda_axis(), p_axis()}));

    cat.push_back({"generating_binomial",
                   generating_axes({real_axis("a", {0.7}, 0.2, 2.0), real_axis("x", {1.0, 0.5}, -1.0, 1.0)}),
                   [](const ParamPoint& pt) {
                       return generating_case("generating_binomial",
                                              generating_spec(BinomialGenerator{re(pt, "a"), re(pt, "x")}, pt));
                   }});
    cat.push_back({"generating_gegenbauer",
                   generating_axes({real_axis("a", {0.6}, 0.2, 2.0), real_axis("x", {1.0, 0.3, -0.5}, -1.0, 1.0)}),
                   [](const ParamPoint& pt) {
                       return generating_case("generating_gegenbauer",
                                              generating_spec(GegenbauerGenerator{re(pt, "a"), re(pt, "x")}, pt));
                   }});
    cat.push_back({"generating_humbert",
                   generating_axes({real_axis("a", {0.8}, 0.2, 2.0), real_axis("b", {1.5}, 0.5, 3.0),
                                    real_axis("x", {0.4}, -1.0, 1.0)}),
                   [](const ParamPoint& pt) {
                       return generating_case(
                           "generating_humbert",
                           generating_spec(HumbertGenerator{re(pt, "a"), re(pt, "b"), re(pt, "x")}, pt));
                   }});

    cat.push_back({"lauricella",
                   {real_axis("alpha", {1.1, 0.6}, 0.3, 3.0), real_axis("beta", {0.9}, 0.3, 3.0),
                    real_axis("alpha1", {0.3}, 0.1, 1.5), real_axis("alpha2", {0.5}, 0.1, 1.5),
                    real_axis("alpha3", {0.7}, 0.1, 1.5), real_axis("x1", {0.2}, -0.5, 0.5),
                    real_axis("x2", {-0.15}, -0.5, 0.5), real_axis("x3", {0.3, -0.5}, -0.5, 0.5), lambda_axis(),
                    p_axis()},
                   [](const ParamPoint& pt) {
                       return euler_case("lauricella",
                                         lauricella_spec(re(pt, "alpha"), re(pt, "beta"),
                                                         {re(pt, "alpha1"), re(pt, "alpha2"), re(pt, "alpha3")},
                                                         {re(pt, "x1"), re(pt, "x2"), re(pt, "x3")},
                                                         re(pt, "lambda"), cx(pt, "p")));
                   }});

    cat.push_back({"theorem1",
                   {real_axis("alpha", {0.5, 1.0, 2.5}, 0.3, 3.0), real_axis("beta", {0.5, 1.0, 2.5}, 0.3, 3.0),
                    real_axis("alpha1", {0.3, 1.2}, 0.1, 1.5), real_axis("alpha2", {0.3, 1.2}, 0.1, 1.5),
                    real_axis("x1", {-0.2, 0.3, 0.5}, -0.6, 0.6), real_axis("x2", {-0.2, 0.3, 0.5}, -0.6, 0.6),
                    lambda_axis(), p_axis({{0, 0}, {0.8, 0}, {-0.8, 0}, {0.5, 0.5}})},
                   [](const ParamPoint& pt) {
                       return euler_case("theorem1",
                                         theorem1_spec(re(pt, "alpha"), re(pt, "beta"), re(pt, "alpha1"),
                                                       re(pt, "alpha2"), re(pt, "x1"), re(pt, "x2"),
                                                       re(pt, "lambda"), cx(pt, "p")));
                   }});
    cat.push_back({"theorem2",
                   {real_axis("alpha", {0.5, 2.5}, 0.3, 3.0), real_axis("beta", {1.0, 0.7}, 0.3, 3.0),
                    real_axis("alpha1", {0.3, 1.2}, 0.1, 1.5), real_axis("alpha2", {0.6}, 0.1, 1.5),
                    real_axis("x1", {-0.2, 0.5}, -0.6, 0.6), real_axis("x2", {0.3}, -0.6, 0.6), lambda_axis(),
                    p_axis()},
                   [](const ParamPoint& pt) {
                       return euler_case("theorem2",
                                         theorem2_spec(re(pt, "alpha"), re(pt, "beta"), re(pt, "alpha1"),
                                                       re(pt, "alpha2"), re(pt, "x1"), re(pt, "x2"),
                                                       re(pt, "lambda"), cx(pt, "p")));
                   }});
    cat.push_back({"theorem3",
                   {real_axis("alpha", {0.9}, 0.3, 3.0), real_axis("beta", {1.3}, 0.3, 3.0),
                    real_axis("gamma", {-0.7, 2.0, 1.5}, -2.0, 3.0), real_axis("a", {0.0, -1.0}, -1.0, 0.0),
                    real_axis("b", {1.0}, 0.5, 1.5), real_axis("u", {-0.4, 0.3}, -0.4, 0.4),
                    real_axis("v", {1.0, 2.0}, 1.0, 2.0), lambda_axis(), p_axis()},
                   [](const ParamPoint& pt) {
                       return euler_case("theorem3",
                                         theorem3_spec(re(pt, "alpha"), re(pt, "beta"), re(pt, "gamma"),
                                                       re(pt, "a"), re(pt, "b"), re(pt, "u"), re(pt, "v"),
                                                       re(pt, "lambda"), cx(pt, "p")));
                   }});
    cat.push_back({"theorem4",
                   {real_axis("alpha", {0.7, 1.5}, 0.3, 3.0), real_axis("beta", {1.2}, 0.3, 3.0),
                    real_axis("a", {0.0, -1.0}, -1.0, 0.0), real_axis("b", {1.0, 3.0}, 0.5, 3.0),
                    real_axis("nu", {0.0, 0.5}, -0.5, 2.0), real_axis("mu", {-0.3, 1.0}, -0.5, 2.0),
                    lambda_axis({0.0, 0.5, 1.0, 2.0}), p_axis()},
                   [](const ParamPoint& pt) {
                       return euler_case("theorem4",
                                         theorem4_spec(re(pt, "alpha"), re(pt, "beta"), re(pt, "a"), re(pt, "b"),
                                                       re(pt, "nu"), re(pt, "mu"), re(pt, "lambda"), cx(pt, "p")));
                   }});
    cat.push_back({"theorem6",
                   generating_axes({real_axis("a", {0.7}, 0.2, 2.0), real_axis("x", {1.0}, -1.0, 1.0),
                                    real_axis("alpha1", {0.4}, 0.1, 1.5), real_axis("x1", {0.3, -0.5}, -0.6, 0.6),
                                    real_axis("alpha2", {0.2}, 0.1, 1.5), real_axis("x2", {0.5}, -0.6, 0.6)}),
                   [](const ParamPoint& pt) {
                       GeneratingIntegralSpec spec = generating_spec(BinomialGenerator{re(pt, "a"), re(pt, "x")}, pt);
                       spec.factors = {{re(pt, "alpha1"), re(pt, "x1")}, {re(pt, "alpha2"), re(pt, "x2")}};
                       return generating_case("theorem6", std::move(spec));
                   }});

    std::sort(cat.begin(), cat.end(), [](const auto& l, const auto& r) { return l.name < r.name; });
    return cat;
}

// ---------------------------------------------------------------------------
// Config parsing

[[noreturn]] void field_error(const std::string& field, const std::string& what)
{
    throw ConfigError("config field '" + field + "': " + what);
}

Complex parse_value(const json& v, const std::string& field)
{
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    field_error(field, "expected a number or a [re, im] pair");
}

const CaseDefinition* find_case(std::string_view name)
{
    for (const auto& def : catalog()) {
        if (def.name == name) {
            return &def;
        }
    }
    return nullptr;
}

const ParamAxis* find_axis(const CaseDefinition& def, std::string_view name)
{
    for (const auto& axis : def.axes) {
        if (axis.name == name) {
            return &axis;
        }
    }
    return nullptr;
}

std::string iso_utc(std::time_t t)
{
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string report_timestamp(const GridConfig& config)
{
    if (config.timestamp) {
        return *config.timestamp;
    }
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
        char* end = nullptr;
        const long long secs = std::strtoll(epoch, &end, 10);
        if (end != nullptr && *end == '\0') {
            return iso_utc(static_cast<std::time_t>(secs));
        }
    }
    return iso_utc(0);
}

/// Uniform double in [lo, hi) from the top 53 bits, independent of the
/// standard library's distribution implementation.
double draw_uniform(std::mt19937_64& rng, double lo, double hi)
{
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

void flatten_params(const CaseDefinition& def, const ParamPoint& pt, std::map<std::string, double>& out)
{
    for (const auto& axis : def.axes) {
        const Complex v = pt.at(axis.name);
        if (axis.is_complex) {
            out[axis.name + ".re"] = v.real();
            out[axis.name + ".im"] = v.imag();
        } else {
            out[axis.name] = v.real();
        }
    }
}

double case_tolerance(const GridConfig& config, const std::string& name)
{
    if (const auto it = config.tolerances.find(name); it != config.tolerances.end()) {
        return it->second;
    }
    return config.tolerance.value_or(kDefaultTolerance);
}

} // namespace

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped_domain:
        return "skipped-domain";
    case Status::error:
        return "error";
    }
    return "error";
}

Status status_from_string(std::string_view s)
{
    if (s == "pass") {
        return Status::pass;
    }
    if (s == "fail") {
        return Status::fail;
    }
    if (s == "skipped-domain") {
        return Status::skipped_domain;
    }
    if (s == "error") {
        return Status::error;
    }
    throw ConfigError("unknown status '" + std::string(s) + "'");
}

const std::vector<CaseDefinition>& catalog()
{
    static const std::vector<CaseDefinition> cat = build_catalog();
    return cat;
}

GridConfig GridConfig::parse(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into line:column.
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ConfigError("config parse error at line " + std::to_string(line) + ", column " + std::to_string(col)
                          + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config: top level must be an object");
    }

    GridConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        if (key == "seed") {
            if (!value.is_number_unsigned()) {
                field_error(key, "expected a non-negative integer");
            }
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "format") {
            if (!value.is_string() || (value != "json" && value != "csv")) {
                field_error(key, "expected \"json\" or \"csv\"");
            }
            cfg.format = value.get<std::string>();
        } else if (key == "timestamp") {
            if (!value.is_string()) {
                field_error(key, "expected a string");
            }
            cfg.timestamp = value.get<std::string>();
        } else if (key == "tolerance") {
            if (!value.is_number() || value.get<double>() <= 0.0) {
                field_error(key, "expected a positive number");
            }
            cfg.tolerance = value.get<double>();
        } else if (key == "cases") {
            if (value.is_string()) {
                cfg.cases.push_back(value.get<std::string>());
            } else if (value.is_array()) {
                for (std::size_t i = 0; i < value.size(); ++i) {
                    if (!value[i].is_string()) {
                        field_error(key + "[" + std::to_string(i) + "]", "expected a string pattern");
                    }
                    cfg.cases.push_back(value[i].get<std::string>());
                }
            } else {
                field_error(key, "expected a pattern or a list of patterns");
            }
        } else if (key == "tolerances") {
            if (!value.is_object()) {
                field_error(key, "expected an object of case -> tolerance");
            }
            for (const auto& [name, tol] : value.items()) {
                if (find_case(name) == nullptr) {
                    field_error(key + "." + name, "unknown case");
                }
                if (!tol.is_number() || tol.get<double>() <= 0.0) {
                    field_error(key + "." + name, "expected a positive number");
                }
                cfg.tolerances[name] = tol.get<double>();
            }
        } else if (key == "draws") {
            if (!value.is_object()) {
                field_error(key, "expected an object of case -> count");
            }
            for (const auto& [name, count] : value.items()) {
                if (find_case(name) == nullptr) {
                    field_error(key + "." + name, "unknown case");
                }
                if (!count.is_number_unsigned()) {
                    field_error(key + "." + name, "expected a non-negative integer");
                }
                cfg.draws[name] = count.get<int>();
            }
        } else if (key == "grids") {
            if (!value.is_object()) {
                field_error(key, "expected an object of case -> {param: [values]}");
            }
            for (const auto& [name, params] : value.items()) {
                const CaseDefinition* def = find_case(name);
                if (def == nullptr) {
                    field_error(key + "." + name, "unknown case");
                }
                if (!params.is_object()) {
                    field_error(key + "." + name, "expected an object of param -> values");
                }
                for (const auto& [param, values] : params.items()) {
                    const std::string field = key + "." + name + "." + param;
                    const ParamAxis* axis = find_axis(*def, param);
                    if (axis == nullptr) {
                        field_error(field, "unknown parameter for case " + name);
                    }
                    std::vector<Complex> list;
                    // A list holds values; a bare number is a one-element list.
                    if (values.is_array()) {
                        for (std::size_t i = 0; i < values.size(); ++i) {
                            list.push_back(parse_value(values[i], field + "[" + std::to_string(i) + "]"));
                        }
                    } else {
                        list.push_back(parse_value(values, field));
                    }
                    if (list.empty()) {
                        field_error(field, "empty value list");
                    }
                    if (!axis->is_complex) {
                        for (const Complex& c : list) {
                            if (c.imag() != 0.0) {
                                field_error(field, "parameter is real; imaginary part given");
                            }
                        }
                    }
                    cfg.grids[name][param] = std::move(list);
                }
            }
        } else {
            field_error(key, "unknown field");
        }
    }
    return cfg;
}

bool case_selected(std::string_view name, const GridConfig& config)
{
    if (config.cases.empty()) {
        return true;
    }
    const std::string n(name);
    return std::any_of(config.cases.begin(), config.cases.end(), [&](const std::string& pattern) {
        return fnmatch(pattern.c_str(), n.c_str(), 0) == 0;
    });
}

std::vector<ParamPoint> grid_points(const CaseDefinition& def, const GridConfig& config)
{
    std::vector<const std::vector<Complex>*> lists;
    const auto overrides = config.grids.find(def.name);
    for (const auto& axis : def.axes) {
        const std::vector<Complex>* values = &axis.defaults;
        if (overrides != config.grids.end()) {
            if (const auto it = overrides->second.find(axis.name); it != overrides->second.end()) {
                values = &it->second;
            }
        }
        lists.push_back(values);
    }

    std::vector<ParamPoint> points;
    std::vector<std::size_t> index(lists.size(), 0);
    while (true) {
        ParamPoint pt;
        for (std::size_t i = 0; i < lists.size(); ++i) {
            pt[def.axes[i].name] = (*lists[i])[index[i]];
        }
        points.push_back(std::move(pt));
        std::size_t i = lists.size();
        while (i > 0) {
            --i;
            if (++index[i] < lists[i]->size()) {
                break;
            }
            index[i] = 0;
            if (i == 0) {
                i = lists.size() + 1;
                break;
            }
        }
        if (i > lists.size() || lists.empty()) {
            break;
        }
    }

    if (const auto it = config.draws.find(def.name); it != config.draws.end() && it->second > 0) {
        // FNV-1a of the case name keeps each case's stream independent of the others.
        std::uint64_t name_hash = 1469598103934665603ULL;
        for (unsigned char ch : def.name) {
            name_hash = (name_hash ^ ch) * 1099511628211ULL;
        }
        std::mt19937_64 rng(config.seed ^ name_hash);
        for (int k = 0; k < it->second; ++k) {
            ParamPoint pt;
            for (const auto& axis : def.axes) {
                const double r = draw_uniform(rng, axis.lo, axis.hi);
                const double i = axis.is_complex ? draw_uniform(rng, axis.lo, axis.hi) : 0.0;
                pt[axis.name] = {r, i};
            }
            points.push_back(std::move(pt));
        }
    }
    return points;
}

VerificationReport verify_point(const CaseDefinition& def, const ParamPoint& point, double tolerance,
                                const VerifyOptions& options)
{
    VerificationReport rec;
    rec.case_name = def.name;
    flatten_params(def, point, rec.params);

    IdentityCase c;
    try {
        c = def.build(point);
        std::visit([](const auto& spec) { spec.validate(); }, c.spec);
    } catch (const DomainError&) {
        rec.status = Status::skipped_domain;
        return rec;
    } catch (const PoleError&) {
        rec.status = Status::skipped_domain;
        return rec;
    } catch (const std::exception&) {
        rec.status = Status::error;
        return rec;
    }

    try {
        const SeriesResult closed = c.closed_form(options.series);
        rec.closed_form = closed.value;
        rec.terms_used = closed.terms_used;
        const QuadratureResult oracle = std::visit(
            detail::overloaded{
                [&](const EulerIntegralSpec& s) {
                    return evaluate_integral_direct(s, options.quadrature, options.series);
                },
                [&](const GeneratingIntegralSpec& s) {
                    return evaluate_generating_integral_direct(s, options.quadrature, options.series);
                },
            },
            c.spec);
        rec.oracle = oracle.value;
        rec.node_evals = oracle.evaluations;
        const double abs_err = std::abs(closed.value - oracle.value);
        rec.abs_err = abs_err;
        rec.rel_err = abs_err / std::max(std::abs(oracle.value), 1e-300);
        rec.status = (*rec.rel_err <= tolerance) ? Status::pass : Status::fail;
    } catch (const DomainError&) {
        rec.status = Status::skipped_domain;
    } catch (const std::exception&) {
        rec.status = Status::error;
    }
    return rec;
}

Report run_verification(const GridConfig& config, const VerifyOptions& options)
{
    struct Task {
        const CaseDefinition* def;
        ParamPoint point;
        double tolerance;
    };
    std::vector<Task> tasks;
    for (const auto& def : catalog()) {
        if (!case_selected(def.name, config)) {
            continue;
        }
        const double tol = case_tolerance(config, def.name);
        for (auto& pt : grid_points(def, config)) {
            tasks.push_back({&def, std::move(pt), tol});
        }
    }

    Report report;
    report.meta.seed = config.seed;
    report.meta.timestamp = report_timestamp(config);
    report.records.resize(tasks.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            report.records[i] = verify_point(*tasks[i].def, tasks[i].point, tasks[i].tolerance, options);
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    std::stable_sort(report.records.begin(), report.records.end(), [](const auto& l, const auto& r) {
        if (l.case_name != r.case_name) {
            return l.case_name < r.case_name;
        }
        return l.params < r.params;
    });
    return report;
}

bool has_failures(const Report& report)
{
    return std::any_of(report.records.begin(), report.records.end(), [](const VerificationReport& r) {
        return r.status == Status::fail || r.status == Status::error;
    });
}

} // namespace wrightlab::verify
