#include "brauer/scenario.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace brauer {

using nlohmann::json;

// ---------- JSON <-> library values ----------

namespace {

const json& require_field(const json& j, const char* key,
                          const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw schema_error(where + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw schema_error(where + ": expected a string");
  return j.get<std::string>();
}

// Maps library constructor validation onto schema_error: anything rejected
// while still building inputs is an input error, not a computation error.
template <typename Fn>
auto as_schema(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const schema_error&) {
    throw;
  } catch (const std::exception& e) {
    throw schema_error(where + ": " + e.what());
  }
}

}  // namespace

Int json_to_int(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    return as_schema(where, [&] { return Int(j.get<std::string>()); });
  }
  throw schema_error(where + ": expected an integer");
}

unsigned json_to_unsigned(const json& j, const std::string& where) {
  Int v = json_to_int(j, where);
  if (v < 0 || v > std::numeric_limits<unsigned>::max()) {
    throw schema_error(where + ": value out of range");
  }
  return v.convert_to<unsigned>();
}

json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return json(v.convert_to<long long>());
  return json(v.str());
}

json rat_to_json(const Rat& v) {
  if (denominator(v) == 1) return int_to_json(numerator(v));
  return json(v.str());
}

Invariant parse_invariant(const json& j) {
  const json& inner =
      j.is_object() ? require_field(j, "inv", "local class") : j;
  std::string text = require_string(inner, "invariant");
  return as_schema("invariant", [&] { return Invariant::parse(text); });
}

LocalExtension parse_extension(const json& j) {
  Int degree = json_to_int(require_field(j, "degree", "extension"),
                           "extension.degree");
  bool has_e = j.is_object() && j.contains("e");
  bool has_f = j.is_object() && j.contains("f");
  if (has_e != has_f) {
    throw schema_error("extension: e and f must be given together");
  }
  return as_schema("extension", [&] {
    if (has_e) {
      return LocalExtension(degree, json_to_int(j.at("e"), "extension.e"),
                            json_to_int(j.at("f"), "extension.f"));
    }
    return LocalExtension(degree);
  });
}

CurveModel parse_curve_model(const json& j) {
  std::string model =
      require_string(require_field(j, "model", "curve model"), "curve.model");
  if (model == "capacity") {
    Int p = json_to_int(require_field(j, "p", "capacity model"), "curve.p");
    unsigned cpc =
        json_to_unsigned(require_field(j, "cpc", "capacity model"), "curve.cpc");
    return as_schema("capacity model",
                     [&] { return CurveModel(CapacityCurveModel(p, cpc)); });
  }
  if (model == "table") {
    const json& table = require_field(j, "table", "table model");
    if (!table.is_object()) {
      throw schema_error("table model: \"table\" must map degrees to indices");
    }
    std::map<Int, Int> entries;
    for (const auto& [key, value] : table.items()) {
      entries.emplace(as_schema("table model degree",
                                [&] { return Int(key); }),
                      json_to_int(value, "table model index"));
    }
    Int def = json_to_int(require_field(j, "default", "table model"),
                          "curve.default");
    return as_schema("table model", [&] {
      return CurveModel(TabulatedCurveModel(std::move(entries), def));
    });
  }
  throw schema_error("curve model: unknown model \"" + model + "\"");
}

GlobalClass parse_global_class(const json& j) {
  const json& places = require_field(j, "places", "global class");
  if (!places.is_object()) {
    throw schema_error("global class: \"places\" must be an object");
  }
  std::map<std::string, Invariant> out;
  for (const auto& [place, inv] : places.items()) {
    out.emplace(place, parse_invariant(inv));
  }
  return as_schema("global class", [&] { return GlobalClass(std::move(out)); });
}

GlobalExtensionProfile parse_profile(const json& j) {
  Int total = json_to_int(require_field(j, "total_degree", "profile"),
                          "profile.total_degree");
  const json& places = require_field(j, "places", "profile");
  if (!places.is_object()) {
    throw schema_error("profile: \"places\" must be an object");
  }
  std::map<std::string, std::vector<Int>> degs;
  for (const auto& [place, list] : places.items()) {
    if (!list.is_array()) {
      throw schema_error("profile: degrees at '" + place + "' must be a list");
    }
    std::vector<Int>& v = degs[place];
    for (const json& d : list) v.push_back(json_to_int(d, "profile degree"));
  }
  return as_schema("profile", [&] {
    return GlobalExtensionProfile(total, std::move(degs));
  });
}

std::vector<ObstructedPoint> parse_points(const json& j) {
  if (!j.is_array()) throw schema_error("points: expected a list");
  std::vector<ObstructedPoint> out;
  for (const json& pt : j) {
    out.push_back(ObstructedPoint{
        json_to_int(require_field(pt, "residue_degree", "point"),
                    "point.residue_degree"),
        parse_invariant(require_field(pt, "obstruction", "point"))});
  }
  return out;
}

ModuliData parse_moduli_data(const json& j) {
  Int i = json_to_int(require_field(j, "i", "moduli data"), "moduli.i");
  Int D = json_to_int(require_field(j, "D", "moduli data"), "moduli.D");
  Int delta =
      json_to_int(require_field(j, "delta", "moduli data"), "moduli.delta");
  const json& strata = require_field(j, "strata", "moduli data");
  if (!strata.is_array()) {
    throw schema_error("moduli data: \"strata\" must be a list");
  }
  ModuliData::StrataMap strata_map;
  for (const json& stratum : strata) {
    Int r = json_to_int(require_field(stratum, "r", "stratum"), "stratum.r");
    Int d = json_to_int(require_field(stratum, "d", "stratum"), "stratum.d");
    auto key = std::make_pair(std::move(r), std::move(d));
    if (strata_map.count(key)) {
      throw schema_error("moduli data: duplicate stratum (r = " +
                         key.first.str() + ", d = " + key.second.str() + ")");
    }
    strata_map.emplace(std::move(key),
                       parse_points(require_field(stratum, "points", "stratum")));
  }
  std::vector<ObstructedPoint> deg0;
  if (j.contains("deg0_points")) deg0 = parse_points(j.at("deg0_points"));
  return as_schema("moduli data", [&] {
    return ModuliData(i, D, delta, std::move(strata_map), std::move(deg0));
  });
}

NumericalPolynomial parse_polynomial(const json& j) {
  const json& coeffs = require_field(j, "coeffs", "polynomial");
  if (!coeffs.is_array()) {
    throw schema_error("polynomial: \"coeffs\" must be a list (ascending)");
  }
  std::vector<Rat> out;
  for (const json& c : coeffs) {
    if (c.is_string()) {
      out.push_back(as_schema("polynomial coefficient",
                              [&] { return Rat(c.get<std::string>()); }));
    } else {
      out.push_back(Rat(json_to_int(c, "polynomial coefficient")));
    }
  }
  return as_schema("polynomial",
                   [&] { return NumericalPolynomial(std::move(out)); });
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw schema_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw schema_error(path + ": " + e.what());
  }
}

// ---------- scenarios ----------

ScenarioKind parse_kind(const std::string& name) {
  if (name == "local-genus1") return ScenarioKind::local_genus1;
  if (name == "iota") return ScenarioKind::iota_points;
  if (name == "general") return ScenarioKind::general;
  if (name == "global") return ScenarioKind::global;
  if (name == "rr") return ScenarioKind::rr;
  if (name == "fm") return ScenarioKind::fm;
  throw schema_error("unknown scenario kind \"" + name + "\"");
}

std::string kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::local_genus1: return "local-genus1";
    case ScenarioKind::iota_points: return "iota";
    case ScenarioKind::general: return "general";
    case ScenarioKind::global: return "global";
    case ScenarioKind::rr: return "rr";
    case ScenarioKind::fm: return "fm";
  }
  return "?";
}

Scenario parse_scenario(const json& j) {
  if (!j.is_object()) throw schema_error("scenario: expected an object");
  Scenario sc;
  sc.kind = parse_kind(
      require_string(require_field(j, "kind", "scenario"), "scenario.kind"));
  const json& payload = require_field(j, "payload", "scenario");
  if (!payload.is_object()) {
    throw schema_error("scenario: \"payload\" must be an object");
  }
  sc.payload = payload;
  if (j.contains("expected")) sc.expected = j.at("expected");
  return sc;
}

namespace {

json point_to_json(const ObstructedPoint& pt) {
  json out;
  out["residue_degree"] = int_to_json(pt.residue_degree);
  out["obstruction"] = pt.obstruction.str();
  return out;
}

void handle_local_genus1(const json& payload, const RunOptions& options,
                         ReportRow& row) {
  LocalClass beta{
      parse_invariant(require_field(payload, "beta", "local-genus1"))};
  CurveModel model =
      parse_curve_model(require_field(payload, "model", "local-genus1"));
  Int bound;
  if (options.bound_override) {
    bound = *options.bound_override;
  } else if (payload.contains("bound")) {
    bound = json_to_int(payload.at("bound"), "local-genus1.bound");
  } else {
    bound = as_schema("local-genus1",
                      [&] { return default_search_bound(beta, model); });
  }
  if (bound < 1) throw schema_error("local-genus1: bound must be positive");

  row.data["formula"] = "genus1-index-reduction";
  row.data["bound"] = int_to_json(bound);

  Int min_value = genus1_index_reduction_min(beta, model, bound);
  Genus1GcdResult gcd_result =
      genus1_index_reduction_gcd_witness(beta, model, bound);
  bool agree = min_value == gcd_result.value;

  json values;
  values["min"] = int_to_json(min_value);
  values["gcd"] = int_to_json(gcd_result.value);
  values["closed_form"] = "n/a";
  if (const auto* cap = std::get_if<CapacityCurveModel>(&model)) {
    Int i = local_index(beta);
    unsigned n = valuation(i, cap->p());
    if (n >= 1) {
      Int closed = capacity_closed_form(i / pow_int(cap->p(), n), cap->p(), n,
                                        cap->cpc());
      values["closed_form"] = int_to_json(closed);
      agree = agree && closed == min_value;
    }
  }
  row.data["values"] = values;
  row.data["value"] = values["min"];

  json witnesses;
  witnesses["minimizing_degree"] = int_to_json(min_value);
  witnesses["first_qualifying_degree"] = int_to_json(gcd_result.first_qualifying);
  row.data["witnesses"] = witnesses;
  row.agreement = agree;
}

void handle_iota(const json& payload, ReportRow& row) {
  Invariant beta = parse_invariant(require_field(payload, "beta", "iota"));
  std::vector<ObstructedPoint> points =
      parse_points(require_field(payload, "points", "iota"));
  row.data["formula"] = "iota";
  IotaResult result = iota_with_witness(points, beta);
  row.data["value"] = int_to_json(result.value);
  json witnesses;
  witnesses["point"] = point_to_json(result.minimizer);
  row.data["witnesses"] = witnesses;
}

void handle_general(const json& payload, ReportRow& row) {
  Invariant beta = parse_invariant(require_field(payload, "beta", "general"));
  ModuliData data =
      parse_moduli_data(require_field(payload, "data", "general"));
  row.data["formula"] = "general-index-reduction";

  GeneralReductionResult result = general_index_reduction_witness(data, beta);
  row.data["value"] = int_to_json(result.value);

  json values;
  values["general"] = int_to_json(result.value);
  bool has_rank1 =
      data.strata().lower_bound({1, 0}) != data.strata().upper_bound({1, data.D()});
  if (has_rank1) {
    bool svdb = svdb_divisibility_check(data, beta, result.value);
    values["svdb"] = svdb;
    row.agreement = row.agreement && svdb;
  } else {
    values["svdb"] = "n/a";
  }
  // Reported but not folded into the agreement flag: failing means the data
  // is not homogeneous, not that the formula disagrees with itself.
  values["homogeneous"] =
      data.deg0_points().empty()
          ? json("n/a")
          : json(homogeneous_reduction_check(data, beta, result.value));
  row.data["values"] = values;

  json witnesses;
  witnesses["rank"] = int_to_json(result.rank);
  witnesses["slope"] = int_to_json(result.slope);
  witnesses["point"] = point_to_json(result.minimizer);
  row.data["witnesses"] = witnesses;
}

void handle_global(const json& payload, ReportRow& row) {
  GlobalClass cls = parse_global_class(payload);
  Int index = global_index(cls);
  json values;
  values["index"] = int_to_json(index);
  if (payload.contains("profile")) {
    row.data["formula"] = "global-restriction";
    GlobalExtensionProfile profile = parse_profile(payload.at("profile"));
    GlobalClass restricted = restrict_global(cls, profile);
    Int restricted_index = global_index(restricted);
    values["restricted_index"] = int_to_json(restricted_index);
    row.data["value"] = values["restricted_index"];
    // Restriction can only divide the index.
    row.agreement = index % restricted_index == 0;
    json places;
    for (const auto& [place, inv] : restricted.places()) {
      places[place] = inv.str();
    }
    json witnesses;
    witnesses["restricted_places"] = places;
    row.data["witnesses"] = witnesses;
  } else {
    row.data["formula"] = "global-index";
    row.data["value"] = values["index"];
  }
  row.data["values"] = values;
}

void handle_rr(const json& payload, ReportRow& row) {
  row.data["formula"] = "twisted-euler-char";
  RRInput input = as_schema("rr", [&] {
    return RRInput(json_to_int(require_field(payload, "deg", "rr"), "rr.deg"),
                   json_to_int(require_field(payload, "rank", "rr"), "rr.rank"),
                   json_to_int(require_field(payload, "genus", "rr"),
                               "rr.genus"));
  });
  row.data["value"] = int_to_json(twisted_euler_char(input));
}

void handle_fm(const json& payload, ReportRow& row) {
  if (payload.contains("n")) {
    row.data["formula"] = "fm-twisted-rank";
    unsigned g = json_to_unsigned(require_field(payload, "g", "fm"), "fm.g");
    Int n = json_to_int(payload.at("n"), "fm.n");
    if (g < 1 || n < 1) throw schema_error("fm: g and n must be positive");
    Int rank = fm_twisted_rank(g, n);
    row.data["value"] = int_to_json(rank);
    json witnesses;
    witnesses["rank_squared"] = int_to_json(rank * rank);
    row.data["witnesses"] = witnesses;
    return;
  }
  row.data["formula"] = "period-index-bound";
  Int per = json_to_int(require_field(payload, "per", "fm"), "fm.per");
  Int ind = json_to_int(require_field(payload, "ind", "fm"), "fm.ind");
  unsigned g = json_to_unsigned(require_field(payload, "g", "fm"), "fm.g");
  if (per < 1 || ind < 1 || g < 1) {
    throw schema_error("fm: per, ind, g must be positive");
  }
  bool odd_order = false;
  if (payload.contains("odd_order")) {
    const json& flag = payload.at("odd_order");
    if (!flag.is_boolean()) throw schema_error("fm.odd_order: expected a bool");
    odd_order = flag.get<bool>();
  }
  row.data["value"] = period_index_bound_check(per, ind, g, odd_order);
}

// Canonical display string for scalar JSON values, used both for expected
// comparison (so 4 matches "4") and for text rendering.
std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool expected_matches(const json& expected, const json& row_data) {
  if (expected.is_object()) {
    for (const auto& [key, want] : expected.items()) {
      const json* got = nullptr;
      if (key == "value" && row_data.contains("value")) {
        got = &row_data.at("value");
      } else if (row_data.contains("values") &&
                 row_data.at("values").contains(key)) {
        got = &row_data.at("values").at(key);
      }
      if (!got || scalar_text(*got) != scalar_text(want)) return false;
    }
    return true;
  }
  return row_data.contains("value") &&
         scalar_text(row_data.at("value")) == scalar_text(expected);
}

}  // namespace

ReportRow run_scenario(const Scenario& scenario, size_t index,
                       const RunOptions& options) {
  ReportRow row;
  row.index = index;
  row.kind = kind_name(scenario.kind);
  row.data["index"] = index;
  row.data["kind"] = row.kind;
  row.data["inputs"] = scenario.payload;
  try {
    switch (scenario.kind) {
      case ScenarioKind::local_genus1:
        handle_local_genus1(scenario.payload, options, row);
        break;
      case ScenarioKind::iota_points:
        handle_iota(scenario.payload, row);
        break;
      case ScenarioKind::general:
        handle_general(scenario.payload, row);
        break;
      case ScenarioKind::global:
        handle_global(scenario.payload, row);
        break;
      case ScenarioKind::rr:
        handle_rr(scenario.payload, row);
        break;
      case ScenarioKind::fm:
        handle_fm(scenario.payload, row);
        break;
    }
    row.data["status"] = "ok";
  } catch (const schema_error& e) {
    row.status = RowStatus::input_error;
    row.agreement = false;
    row.error = e.what();
    row.data["status"] = "input-error";
    row.data["error"] = row.error;
  } catch (const std::exception& e) {
    row.status = RowStatus::computation_error;
    row.agreement = false;
    row.error = e.what();
    row.data["status"] = "error";
    row.data["error"] = row.error;
  }
  if (scenario.expected) {
    row.expected_ok = row.status == RowStatus::ok &&
                      expected_matches(*scenario.expected, row.data);
    row.data["expected"] = *scenario.expected;
    row.data["expected_ok"] = row.expected_ok;
  }
  row.data["agreement"] = row.agreement;
  return row;
}

int aggregate_exit_code(const std::vector<ReportRow>& rows) {
  int code = 0;
  for (const ReportRow& row : rows) {
    if (row.status == RowStatus::input_error) {
      code = 2;
    } else if (code == 0 && (row.status != RowStatus::ok || !row.agreement ||
                             !row.expected_ok)) {
      code = 1;
    }
  }
  return code;
}

Report run_suite(const json& doc, const RunOptions& options) {
  if (!doc.is_object()) {
    throw schema_error("suite: top-level JSON must be an object");
  }
  std::string schema =
      require_string(require_field(doc, "schema", "suite"), "suite.schema");
  if (schema != kSuiteSchema) {
    throw schema_error("suite: unsupported schema \"" + schema +
                       "\" (expected \"" + std::string(kSuiteSchema) + "\")");
  }
  const json& scenarios = require_field(doc, "scenarios", "suite");
  if (!scenarios.is_array()) {
    throw schema_error("suite: \"scenarios\" must be a list");
  }
  Report report;
  for (size_t k = 0; k < scenarios.size(); ++k) {
    const size_t index = k + 1;
    try {
      Scenario sc = parse_scenario(scenarios[k]);
      report.rows.push_back(run_scenario(sc, index, options));
    } catch (const schema_error& e) {
      // The scenario never parsed; record an input-error row in its place.
      ReportRow row;
      row.index = index;
      row.kind = "?";
      if (scenarios[k].is_object() && scenarios[k].contains("kind") &&
          scenarios[k].at("kind").is_string()) {
        row.kind = scenarios[k].at("kind").get<std::string>();
      }
      row.status = RowStatus::input_error;
      row.agreement = false;
      row.error = e.what();
      row.data["index"] = index;
      row.data["kind"] = row.kind;
      row.data["inputs"] = scenarios[k];
      row.data["status"] = "input-error";
      row.data["error"] = row.error;
      row.data["agreement"] = false;
      report.rows.push_back(std::move(row));
    }
  }
  report.exit_code = aggregate_exit_code(report.rows);
  return report;
}

json report_to_json(const Report& report) {
  json out;
  out["schema"] = kReportSchema;
  json rows = json::array();
  size_t ok = 0, errors = 0, input_errors = 0, disagreements = 0,
         mismatches = 0;
  for (const ReportRow& row : report.rows) {
    rows.push_back(row.data);
    switch (row.status) {
      case RowStatus::ok: ++ok; break;
      case RowStatus::computation_error: ++errors; break;
      case RowStatus::input_error: ++input_errors; break;
    }
    if (row.status == RowStatus::ok && !row.agreement) ++disagreements;
    if (!row.expected_ok) ++mismatches;
  }
  out["rows"] = rows;
  json summary;
  summary["total"] = report.rows.size();
  summary["ok"] = ok;
  summary["errors"] = errors;
  summary["input_errors"] = input_errors;
  summary["disagreements"] = disagreements;
  summary["expected_mismatches"] = mismatches;
  out["summary"] = summary;
  out["exit"] = report.exit_code;
  return out;
}

namespace {

constexpr const char* kRed = "\x1b[31m";
constexpr const char* kGreen = "\x1b[32m";
constexpr const char* kReset = "\x1b[0m";

std::string paint(const std::string& text, const char* code, bool color) {
  return color ? code + text + kReset : text;
}

std::string row_note(const ReportRow& row) {
  if (row.status != RowStatus::ok) return row.error;
  std::ostringstream note;
  bool first = true;
  if (row.data.contains("values")) {
    for (const auto& [key, value] : row.data.at("values").items()) {
      note << (first ? "" : " ") << key << "=" << scalar_text(value);
      first = false;
    }
  }
  if (row.data.contains("bound")) {
    note << (first ? "" : " ") << "bound=" << scalar_text(row.data.at("bound"));
  }
  return note.str();
}

}  // namespace

std::string report_to_text(const Report& report, bool color) {
  std::ostringstream out;
  out << "   # kind          value            agree  note\n";
  for (const ReportRow& row : report.rows) {
    std::string value = row.status == RowStatus::ok
                            ? scalar_text(row.data.at("value"))
                            : "ERROR";
    std::string agree = row.status != RowStatus::ok ? "-"
                        : row.agreement             ? "yes"
                                                    : "no";
    std::ostringstream line;
    line.width(4);
    line << row.index;
    line << " ";
    line << row.kind;
    for (size_t pad = row.kind.size(); pad < 14; ++pad) line << ' ';
    line << value;
    for (size_t pad = value.size(); pad < 17; ++pad) line << ' ';
    out << line.str();
    if (agree == "no" || value == "ERROR") {
      out << paint(agree, kRed, color);
    } else if (agree == "yes") {
      out << paint(agree, kGreen, color);
    } else {
      out << agree;
    }
    for (size_t pad = agree.size(); pad < 7; ++pad) out << ' ';
    out << row_note(row);
    if (!row.expected_ok) out << paint("  [expected mismatch]", kRed, color);
    out << "\n";
  }
  json summary = report_to_json(report)["summary"];
  out << summary["total"] << " scenario(s): " << summary["ok"] << " ok, "
      << summary["errors"] << " error(s), " << summary["input_errors"]
      << " input error(s), " << summary["disagreements"]
      << " disagreement(s), " << summary["expected_mismatches"]
      << " expected mismatch(es) -> exit " << report.exit_code << "\n";
  return out.str();
}

// ---------- capacity-triangle verification ----------

TriangleReport verify_triangle(const TriangleGrid& grid) {
  TriangleReport report;
  report.grid = grid;
  for (Int p = 2; p <= grid.pmax; ++p) {
    if (!is_prime(p)) continue;
    for (Int m = 1; m <= grid.mmax; ++m) {
      if (m % p == 0) continue;
      for (unsigned n = 1; n <= grid.nmax; ++n) {
        Int index = m * pow_int(p, n);
        LocalClass beta{Invariant(1, index)};
        for (unsigned cpc = 0; cpc <= grid.cpcmax; ++cpc) {
          CurveModel model = CapacityCurveModel(p, cpc);
          TriangleCase tc;
          tc.p = p;
          tc.m = m;
          tc.n = n;
          tc.cpc = cpc;
          tc.bound = default_search_bound(beta, model);
          tc.min_value = genus1_index_reduction_min(beta, model, tc.bound);
          tc.gcd_value = genus1_index_reduction_gcd(beta, model, tc.bound);
          tc.closed_value = capacity_closed_form(m, p, n, cpc);
          tc.agree =
              tc.min_value == tc.gcd_value && tc.gcd_value == tc.closed_value;
          if (!tc.agree) ++report.failures;
          report.cases.push_back(std::move(tc));
        }
      }
    }
  }
  return report;
}

json triangle_to_json(const TriangleReport& report) {
  json out;
  out["schema"] = kTriangleSchema;
  json grid;
  grid["pmax"] = report.grid.pmax;
  grid["nmax"] = report.grid.nmax;
  grid["cpcmax"] = report.grid.cpcmax;
  grid["mmax"] = report.grid.mmax;
  out["grid"] = grid;
  json cases = json::array();
  for (const TriangleCase& tc : report.cases) {
    json c;
    c["p"] = int_to_json(tc.p);
    c["m"] = int_to_json(tc.m);
    c["n"] = tc.n;
    c["cpc"] = tc.cpc;
    c["bound"] = int_to_json(tc.bound);
    c["min"] = int_to_json(tc.min_value);
    c["gcd"] = int_to_json(tc.gcd_value);
    c["closed_form"] = int_to_json(tc.closed_value);
    c["agree"] = tc.agree;
    cases.push_back(std::move(c));
  }
  out["cases"] = cases;
  out["total"] = report.cases.size();
  out["failures"] = report.failures;
  return out;
}

std::string triangle_to_text(const TriangleReport& report, bool color) {
  std::ostringstream out;
  for (const TriangleCase& tc : report.cases) {
    out << "p=" << tc.p << " m=" << tc.m << " n=" << tc.n << " cpc=" << tc.cpc
        << " bound=" << tc.bound << " min=" << tc.min_value
        << " gcd=" << tc.gcd_value << " closed=" << tc.closed_value << " "
        << (tc.agree ? paint("ok", kGreen, color)
                     : paint("DISAGREE", kRed, color))
        << "\n";
  }
  out << "capacity triangle: " << report.cases.size() << " case(s), "
      << report.failures << " disagreement(s)\n";
  return out.str();
}

}  // namespace brauer
