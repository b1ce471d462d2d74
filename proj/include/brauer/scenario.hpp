#pragma once

// Declarative JSON scenarios: parse scenario files, evaluate each scenario
// through the library's formulas, cross-check independent routes, and render
// byte-deterministic text/JSON reports.  Row-level failures become error
// rows and never abort sibling scenarios.

#include "brauer/classes.hpp"
#include "brauer/curves.hpp"
#include "brauer/euler.hpp"
#include "brauer/reduction.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brauer {

// Malformed or invalid input (as opposed to a computation failing on valid
// input); suites map these to exit code 2.
class schema_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kSuiteSchema = "brauer-redux/1";
inline constexpr const char* kReportSchema = "brauer-redux/report/1";
inline constexpr const char* kTriangleSchema = "brauer-redux/triangle/1";

// ---------- JSON <-> library values ----------
// Parsers throw schema_error (wrapping constructor validation) with context.

Int json_to_int(const nlohmann::json& j, const std::string& where);
unsigned json_to_unsigned(const nlohmann::json& j, const std::string& where);
nlohmann::json int_to_json(const Int& v);  // number when it fits, else string
nlohmann::json rat_to_json(const Rat& v);  // integer, or "p/q" string

Invariant parse_invariant(const nlohmann::json& j);       // "1/2" or {"inv":"1/2"}
LocalExtension parse_extension(const nlohmann::json& j);  // {"degree":2[,"e":1,"f":2]}
CurveModel parse_curve_model(const nlohmann::json& j);
GlobalClass parse_global_class(const nlohmann::json& j);  // {"places":{...}}
GlobalExtensionProfile parse_profile(const nlohmann::json& j);
std::vector<ObstructedPoint> parse_points(const nlohmann::json& j);
ModuliData parse_moduli_data(const nlohmann::json& j);
NumericalPolynomial parse_polynomial(const nlohmann::json& j);  // {"coeffs":[...]}

nlohmann::json load_json_file(const std::string& path);

// ---------- scenarios ----------

enum class ScenarioKind { local_genus1, iota_points, general, global, rr, fm };

ScenarioKind parse_kind(const std::string& name);
std::string kind_name(ScenarioKind kind);

struct Scenario {
  ScenarioKind kind = ScenarioKind::rr;
  nlohmann::json payload;
  std::optional<nlohmann::json> expected;
};

Scenario parse_scenario(const nlohmann::json& j);

struct RunOptions {
  // Replaces the search bound of every genus-1 scenario (explicit payload
  // bounds included); absent, payload bounds and then capacity-model
  // defaults apply.
  std::optional<Int> bound_override;
};

enum class RowStatus { ok, computation_error, input_error };

struct ReportRow {
  size_t index = 0;  // 1-based position in the suite
  std::string kind;
  nlohmann::json data;  // machine row: inputs, value(s), witnesses, flags
  RowStatus status = RowStatus::ok;
  bool agreement = true;    // all computed routes agree (true if single-route)
  bool expected_ok = true;  // matches "expected" (true when absent)
  std::string error;        // message when status != ok
};

ReportRow run_scenario(const Scenario& scenario, size_t index,
                       const RunOptions& options);

struct Report {
  std::vector<ReportRow> rows;
  // 0 all rows ok; 1 disagreement, expected mismatch, or computation error;
  // 2 input error anywhere.
  int exit_code = 0;
};

int aggregate_exit_code(const std::vector<ReportRow>& rows);

// Runs every scenario in a suite document {"schema": "brauer-redux/1",
// "scenarios": [...]}.  Throws schema_error only for a malformed envelope;
// malformed individual scenarios become input-error rows.
Report run_suite(const nlohmann::json& doc, const RunOptions& options);

nlohmann::json report_to_json(const Report& report);
std::string report_to_text(const Report& report, bool color);

// ---------- capacity-triangle verification ----------

struct TriangleGrid {
  unsigned pmax = 5;
  unsigned nmax = 4;
  unsigned cpcmax = 5;
  unsigned mmax = 6;
};

struct TriangleCase {
  Int p;
  Int m;
  unsigned n = 0;
  unsigned cpc = 0;
  Int bound;
  Int min_value;
  Int gcd_value;
  Int closed_value;
  bool agree = false;
};

struct TriangleReport {
  TriangleGrid grid;
  std::vector<TriangleCase> cases;
  size_t failures = 0;
};

// For every prime p <= pmax, m <= mmax coprime to p, 1 <= n <= nmax and
// 0 <= cpc <= cpcmax: reduce beta = 1/(m p^n) along a capacity-cpc curve by
// minimal qualifying degree, by gcd of qualifying degrees, and by closed
// form, and record whether the three routes agree.
TriangleReport verify_triangle(const TriangleGrid& grid);

nlohmann::json triangle_to_json(const TriangleReport& report);
std::string triangle_to_text(const TriangleReport& report, bool color);

}  // namespace brauer
