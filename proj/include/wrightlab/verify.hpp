#ifndef WRIGHTLAB_VERIFY_HPP
#define WRIGHTLAB_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wrightlab/euler.hpp"
#include "wrightlab/quadrature.hpp"
#include "wrightlab/series.hpp"

namespace wrightlab::verify {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kGeneratorName = "mt19937_64";
inline constexpr double kDefaultTolerance = 1e-8;

enum class Status { pass, fail, skipped_domain, error };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// One (case x grid point) outcome.
struct VerificationReport {
    std::string case_name;
    /// Real parameters by name; complex ones are split into "<name>.re" / "<name>.im".
    std::map<std::string, double> params;
    std::optional<Complex> closed_form;
    std::optional<Complex> oracle;
    std::optional<double> abs_err;
    std::optional<double> rel_err;
    long terms_used = 0;
    long node_evals = 0;
    Status status = Status::error;

    bool operator==(const VerificationReport&) const = default;
};

struct ReportMeta {
    std::uint64_t seed = 0;
    std::string version{kVersion};
    std::string timestamp;
    std::string generator{kGeneratorName};
};

struct Report {
    ReportMeta meta;
    std::vector<VerificationReport> records;
};

/// Malformed grid configuration or report file.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ParamPoint = std::map<std::string, Complex>;

struct ParamAxis {
    std::string name;
    bool is_complex = false;
    std::vector<Complex> defaults;
    /// Range for randomized draws (applied to both parts of complex axes).
    double lo = 0.0;
    double hi = 1.0;
};

struct CaseDefinition {
    std::string name;
    std::vector<ParamAxis> axes;
    /// Throws DomainError / PoleError when the point is outside the validity region.
    std::function<IdentityCase(const ParamPoint&)> build;
};

/// Every identity the harness knows, in name order.
const std::vector<CaseDefinition>& catalog();

struct GridConfig {
    /// Per case, per parameter value lists overriding the built-in grid.
    std::map<std::string, std::map<std::string, std::vector<Complex>>> grids;
    std::optional<double> tolerance;
    std::map<std::string, double> tolerances;
    /// Glob patterns selecting cases; empty selects all.
    std::vector<std::string> cases;
    std::string format = "json";
    std::uint64_t seed = 0;
    /// Extra uniformly drawn points per case.
    std::map<std::string, int> draws;
    std::optional<std::string> timestamp;

    /// Parses the JSON text; ConfigError carries line / field diagnostics.
    static GridConfig parse(std::string_view text);
};

struct VerifyOptions {
    int jobs = 1;
    SeriesPolicy series;
    QuadraturePolicy quadrature;
};

/// The grid points of one case under `config`, deterministic order.
std::vector<ParamPoint> grid_points(const CaseDefinition& def, const GridConfig& config);

bool case_selected(std::string_view name, const GridConfig& config);

/// Evaluates one point: closed form vs quadrature oracle.
VerificationReport verify_point(const CaseDefinition& def, const ParamPoint& point, double tolerance,
                                const VerifyOptions& options);

/// Runs every selected case over its grid; records sorted by case then params.
Report run_verification(const GridConfig& config, const VerifyOptions& options);

/// True iff some record has status fail or error.
bool has_failures(const Report& report);

std::string to_json(const Report& report);
Report report_from_json(std::string_view text);
std::string to_csv(const Report& report);
Report report_from_csv(std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

} // namespace wrightlab::verify

#endif
