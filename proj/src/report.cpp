#include <charconv>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wrightlab/verify.hpp"

namespace wrightlab::verify {

using nlohmann::json;

namespace {

const char* const kTrailingColumns[] = {"closed_form_re", "closed_form_im", "oracle_re", "oracle_im", "abs_err",
                                        "rel_err",        "terms_used",     "node_evals", "status"};

json complex_json(const std::optional<Complex>& c)
{
    return c ? json::array({c->real(), c->imag()}) : json(nullptr);
}

json real_json(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

std::optional<Complex> complex_from(const json& j, const std::string& field)
{
    if (j.is_null()) {
        return std::nullopt;
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ConfigError("report field '" + field + "': expected [re, im] or null");
    }
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

std::optional<double> real_from(const json& j, const std::string& field)
{
    if (j.is_null()) {
        return std::nullopt;
    }
    if (!j.is_number()) {
        throw ConfigError("report field '" + field + "': expected a number or null");
    }
    return j.get<double>();
}

double parse_double(std::string_view s, const std::string& where)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConfigError(where + ": '" + std::string(s) + "' is not a number");
    }
    return v;
}

long parse_long(std::string_view s, const std::string& where)
{
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConfigError(where + ": '" + std::string(s) + "' is not an integer");
    }
    return v;
}

std::vector<std::string_view> split_row(std::string_view line)
{
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

} // namespace

std::string format_double(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string to_json(const Report& report)
{
    json records = json::array();
    for (const auto& r : report.records) {
        json params = json::object();
        for (const auto& [k, v] : r.params) {
            params[k] = v;
        }
        records.push_back({{"case_name", r.case_name},
                           {"params", std::move(params)},
                           {"closed_form", complex_json(r.closed_form)},
                           {"oracle", complex_json(r.oracle)},
                           {"abs_err", real_json(r.abs_err)},
                           {"rel_err", real_json(r.rel_err)},
                           {"terms_used", r.terms_used},
                           {"node_evals", r.node_evals},
                           {"status", std::string(to_string(r.status))}});
    }
    const json doc = {{"meta",
                       {{"seed", report.meta.seed},
                        {"version", report.meta.version},
                        {"timestamp", report.meta.timestamp},
                        {"generator", report.meta.generator}}},
                      {"records", std::move(records)}};
    return doc.dump(2) + "\n";
}

Report report_from_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("report is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("meta") || !doc.contains("records") || !doc["records"].is_array()) {
        throw ConfigError("report must be an object with 'meta' and 'records'");
    }
    Report report;
    try {
        const json& meta = doc["meta"];
        report.meta.seed = meta.at("seed").get<std::uint64_t>();
        report.meta.version = meta.at("version").get<std::string>();
        report.meta.timestamp = meta.at("timestamp").get<std::string>();
        report.meta.generator = meta.value("generator", std::string(kGeneratorName));
        std::size_t i = 0;
        for (const json& j : doc["records"]) {
            const std::string where = "records[" + std::to_string(i++) + "]";
            VerificationReport r;
            r.case_name = j.at("case_name").get<std::string>();
            for (const auto& [k, v] : j.at("params").items()) {
                r.params[k] = v.get<double>();
            }
            r.closed_form = complex_from(j.at("closed_form"), where + ".closed_form");
            r.oracle = complex_from(j.at("oracle"), where + ".oracle");
            r.abs_err = real_from(j.at("abs_err"), where + ".abs_err");
            r.rel_err = real_from(j.at("rel_err"), where + ".rel_err");
            r.terms_used = j.at("terms_used").get<long>();
            r.node_evals = j.at("node_evals").get<long>();
            r.status = status_from_string(j.at("status").get<std::string>());
            report.records.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("corrupt report: ") + e.what());
    }
    return report;
}

std::string to_csv(const Report& report)
{
    std::set<std::string> param_names;
    for (const auto& r : report.records) {
        for (const auto& [k, v] : r.params) {
            param_names.insert(k);
        }
    }
    std::ostringstream out;
    out << "case_name";
    for (const auto& name : param_names) {
        out << ',' << name;
    }
    for (const char* col : kTrailingColumns) {
        out << ',' << col;
    }
    out << '\n';

    auto opt = [&](const std::optional<double>& v) {
        if (v) {
            out << format_double(*v);
        }
    };
    for (const auto& r : report.records) {
        out << r.case_name;
        for (const auto& name : param_names) {
            out << ',';
            if (const auto it = r.params.find(name); it != r.params.end()) {
                out << format_double(it->second);
            }
        }
        out << ',';
        opt(r.closed_form ? std::optional(r.closed_form->real()) : std::nullopt);
        out << ',';
        opt(r.closed_form ? std::optional(r.closed_form->imag()) : std::nullopt);
        out << ',';
        opt(r.oracle ? std::optional(r.oracle->real()) : std::nullopt);
        out << ',';
        opt(r.oracle ? std::optional(r.oracle->imag()) : std::nullopt);
        out << ',';
        opt(r.abs_err);
        out << ',';
        opt(r.rel_err);
        out << ',' << r.terms_used << ',' << r.node_evals << ',' << to_string(r.status) << '\n';
    }
    return out.str();
}

Report report_from_csv(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty()) {
            lines.push_back(line);
        }
        start = end + 1;
    }
    if (lines.empty()) {
        throw ConfigError("CSV report is empty (no header)");
    }
    const auto header = split_row(lines[0]);
    constexpr std::size_t trailing = std::size(kTrailingColumns);
    if (header.size() < 1 + trailing || header[0] != "case_name") {
        throw ConfigError("CSV header does not match the report layout");
    }
    const std::size_t n_params = header.size() - 1 - trailing;
    for (std::size_t i = 0; i < trailing; ++i) {
        if (header[1 + n_params + i] != kTrailingColumns[i]) {
            throw ConfigError("CSV header column " + std::to_string(2 + n_params + i) + " should be '"
                              + kTrailingColumns[i] + "'");
        }
    }

    Report report;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::string where = "CSV line " + std::to_string(li + 1);
        const auto cells = split_row(lines[li]);
        if (cells.size() != header.size()) {
            throw ConfigError(where + ": expected " + std::to_string(header.size()) + " cells, got "
                              + std::to_string(cells.size()));
        }
        VerificationReport r;
        r.case_name = std::string(cells[0]);
        for (std::size_t i = 0; i < n_params; ++i) {
            if (!cells[1 + i].empty()) {
                r.params[std::string(header[1 + i])] = parse_double(cells[1 + i], where);
            }
        }
        const std::size_t base = 1 + n_params;
        auto opt = [&](std::size_t col) -> std::optional<double> {
            if (cells[base + col].empty()) {
                return std::nullopt;
            }
            return parse_double(cells[base + col], where);
        };
        auto pair = [&](std::size_t col) -> std::optional<Complex> {
            const auto re = opt(col);
            const auto im = opt(col + 1);
            if (re.has_value() != im.has_value()) {
                throw ConfigError(where + ": half of a complex value is missing");
            }
            return re ? std::optional(Complex{*re, *im}) : std::nullopt;
        };
        r.closed_form = pair(0);
        r.oracle = pair(2);
        r.abs_err = opt(4);
        r.rel_err = opt(5);
        r.terms_used = parse_long(cells[base + 6], where);
        r.node_evals = parse_long(cells[base + 7], where);
        r.status = status_from_string(cells[base + 8]);
        report.records.push_back(std::move(r));
    }
    return report;
}

} // namespace wrightlab::verify
