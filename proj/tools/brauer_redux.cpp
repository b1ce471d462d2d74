// brauer-redux: exact index-reduction arithmetic for Brauer classes along
// function fields of curves, driven by JSON scenario files or direct
// subcommand arguments.  All output is deterministic; NO_COLOR disables the
// only presentation nicety.

#include "brauer/scenario.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <unistd.h>

namespace {

using brauer::Int;
using brauer::Rat;
using nlohmann::json;

bool use_color() {
  return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

Int parse_int_arg(const std::string& text, const std::string& what) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw brauer::schema_error(what + ": \"" + text + "\" is not an integer");
  }
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_single(brauer::ScenarioKind kind, const std::string& path,
               bool as_json, const brauer::RunOptions& options) {
  brauer::Scenario scenario;
  scenario.kind = kind;
  scenario.payload = brauer::load_json_file(path);
  if (!scenario.payload.is_object()) {
    throw brauer::schema_error(path + ": payload must be a JSON object");
  }
  if (scenario.payload.contains("expected")) {
    scenario.expected = scenario.payload.at("expected");
  }
  brauer::Report report;
  report.rows.push_back(brauer::run_scenario(scenario, 1, options));
  report.exit_code = brauer::aggregate_exit_code(report.rows);
  if (as_json) {
    emit(brauer::report_to_json(report));
  } else {
    std::cout << brauer::report_to_text(report, use_color());
  }
  return report.exit_code;
}

int run_suite_file(const std::string& path, bool as_json,
                   const brauer::RunOptions& options) {
  brauer::Report report =
      brauer::run_suite(brauer::load_json_file(path), options);
  if (as_json) {
    emit(brauer::report_to_json(report));
  } else {
    std::cout << brauer::report_to_text(report, use_color());
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "brauer-redux: index reduction of Brauer classes along function fields "
      "of genus-1 curves, with exact Q/Z arithmetic"};
  app.require_subcommand(1);

  // run <file>
  std::string run_path;
  bool run_json = false;
  std::string run_bound;
  CLI::App* cmd_run = app.add_subcommand(
      "run", "run a scenario suite file and print its report");
  cmd_run->add_option("file", run_path, "suite JSON file")->required();
  cmd_run->add_flag("--json", run_json, "machine-readable report");
  cmd_run->add_option("--bound", run_bound,
                      "override the search bound of genus-1 scenarios");

  // verify-triangle
  brauer::TriangleGrid grid;
  bool tri_json = false;
  CLI::App* cmd_tri = app.add_subcommand(
      "verify-triangle",
      "check min = gcd = closed form over the capacity grid");
  cmd_tri->add_option("--pmax", grid.pmax, "largest prime p (default 5)");
  cmd_tri->add_option("--nmax", grid.nmax, "largest exponent n (default 4)");
  cmd_tri->add_option("--cpcmax", grid.cpcmax, "largest capacity (default 5)");
  cmd_tri->add_option("--mmax", grid.mmax, "largest coprime part (default 6)");
  cmd_tri->add_flag("--json", tri_json, "machine-readable report");

  // genus1 / iota / general <file>
  struct SingleCmd {
    CLI::App* cmd = nullptr;
    std::string path;
    bool as_json = false;
    std::string bound;
    brauer::ScenarioKind kind;
  };
  SingleCmd singles[3];
  singles[0].kind = brauer::ScenarioKind::local_genus1;
  singles[0].cmd = app.add_subcommand(
      "genus1", "reduce one class along one genus-1 curve (payload file)");
  singles[1].kind = brauer::ScenarioKind::iota_points;
  singles[1].cmd = app.add_subcommand(
      "iota", "minimal index contribution of one point list (payload file)");
  singles[2].kind = brauer::ScenarioKind::general;
  singles[2].cmd = app.add_subcommand(
      "general", "general index reduction over moduli data (payload file)");
  for (SingleCmd& sc : singles) {
    sc.cmd->add_option("file", sc.path, "payload JSON file")->required();
    sc.cmd->add_flag("--json", sc.as_json, "machine-readable report");
    if (sc.kind == brauer::ScenarioKind::local_genus1) {
      sc.cmd->add_option("--bound", sc.bound, "override the search bound");
    }
  }

  // rr
  std::string rr_deg, rr_rank, rr_genus;
  bool rr_json = false;
  CLI::App* cmd_rr =
      app.add_subcommand("rr", "twisted Euler characteristic on a curve");
  cmd_rr->add_option("--deg", rr_deg, "degree of the sheaf")->required();
  cmd_rr->add_option("--rank", rr_rank, "rank of the sheaf")->required();
  cmd_rr->add_option("--genus", rr_genus, "genus of the curve")->required();
  cmd_rr->add_flag("--json", rr_json, "machine-readable output");

  // hilbert <file>
  std::string hb_path, hb_m = "0";
  unsigned hb_t = 0;
  bool hb_json = false, hb_t_given = false;
  CLI::App* cmd_hb = app.add_subcommand(
      "hilbert",
      "alternating binomial sum of a numerical polynomial (payload file)");
  cmd_hb->add_option("file", hb_path, "polynomial JSON file {\"coeffs\":[...]}")
      ->required();
  cmd_hb->add_option("--t", hb_t, "difference order (default: the degree)");
  cmd_hb->add_option("--m", hb_m, "base point (default 0)");
  cmd_hb->add_flag("--json", hb_json, "machine-readable output");

  // fm-rank
  std::string fm_n;
  unsigned fm_g = 0;
  bool fm_json = false;
  CLI::App* cmd_fm = app.add_subcommand(
      "fm-rank", "rank of the twisted Fourier-Mukai transform");
  cmd_fm->add_option("--g", fm_g, "dimension of the abelian variety")
      ->required();
  cmd_fm->add_option("--n", fm_n, "torsion period")->required();
  cmd_fm->add_flag("--json", fm_json, "machine-readable output");

  // pi-check
  std::string pi_per, pi_ind;
  unsigned pi_g = 0;
  bool pi_odd = false, pi_json = false;
  CLI::App* cmd_pi =
      app.add_subcommand("pi-check", "check the period-index bound ind | per^g");
  cmd_pi->add_option("--per", pi_per, "period")->required();
  cmd_pi->add_option("--ind", pi_ind, "index")->required();
  cmd_pi->add_option("--g", pi_g, "dimension")->required();
  cmd_pi->add_flag("--odd-order", pi_odd, "the measured period has odd order");
  cmd_pi->add_flag("--json", pi_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is an input error
  }

  try {
    if (cmd_run->parsed()) {
      brauer::RunOptions options;
      if (!run_bound.empty()) {
        options.bound_override = parse_int_arg(run_bound, "--bound");
      }
      return run_suite_file(run_path, run_json, options);
    }

    if (cmd_tri->parsed()) {
      brauer::TriangleReport report = brauer::verify_triangle(grid);
      if (tri_json) {
        emit(brauer::triangle_to_json(report));
      } else {
        std::cout << brauer::triangle_to_text(report, use_color());
      }
      return report.failures == 0 ? 0 : 1;
    }

    for (SingleCmd& sc : singles) {
      if (!sc.cmd->parsed()) continue;
      brauer::RunOptions options;
      if (!sc.bound.empty()) {
        options.bound_override = parse_int_arg(sc.bound, "--bound");
      }
      return run_single(sc.kind, sc.path, sc.as_json, options);
    }

    if (cmd_rr->parsed()) {
      brauer::RRInput input(parse_int_arg(rr_deg, "--deg"),
                            parse_int_arg(rr_rank, "--rank"),
                            parse_int_arg(rr_genus, "--genus"));
      Int chi = brauer::twisted_euler_char(input);
      if (rr_json) {
        json out;
        out["command"] = "rr";
        out["deg"] = brauer::int_to_json(input.deg);
        out["rank"] = brauer::int_to_json(input.rank);
        out["genus"] = brauer::int_to_json(input.genus);
        out["chi"] = brauer::int_to_json(chi);
        emit(out);
      } else {
        std::cout << "chi = " << chi << "\n";
      }
      return 0;
    }

    if (cmd_hb->parsed()) {
      hb_t_given = cmd_hb->count("--t") > 0;
      brauer::NumericalPolynomial chi =
          brauer::parse_polynomial(brauer::load_json_file(hb_path));
      if (!hb_t_given) {
        if (chi.degree() < 1) {
          throw brauer::schema_error(
              "hilbert: polynomial has no positive degree; pass --t");
        }
        hb_t = static_cast<unsigned>(chi.degree());
      }
      Int m = parse_int_arg(hb_m, "--m");
      Rat sum = brauer::alternating_binomial_sum(chi, hb_t, m);
      json out;
      out["command"] = "hilbert";
      out["degree"] = chi.degree();
      out["integer_valued"] = chi.is_integer_valued();
      out["t"] = hb_t;
      out["m"] = brauer::int_to_json(m);
      out["alternating_sum"] = brauer::rat_to_json(sum);
      bool match = true;
      Rat lead;
      bool has_lead = chi.degree() == static_cast<int>(hb_t);
      if (has_lead) {
        lead = brauer::leading_coefficient_times_factorial(chi, hb_t);
        out["t_factorial_lead"] = brauer::rat_to_json(lead);
        match = sum == lead;
        out["match"] = match;
      } else {
        out["t_factorial_lead"] = "n/a";
      }
      if (hb_json) {
        emit(out);
      } else {
        std::cout << "degree " << chi.degree() << ", t = " << hb_t
                  << ", m = " << m << ": sum = " << sum;
        if (has_lead) {
          std::cout << ", t!*lead = " << lead
                    << (match ? " (match)" : " (MISMATCH)");
        }
        std::cout << "\n";
      }
      return match ? 0 : 1;
    }

    if (cmd_fm->parsed()) {
      if (fm_g < 1) throw brauer::schema_error("fm-rank: g must be positive");
      Int n = parse_int_arg(fm_n, "--n");
      if (n < 1) throw brauer::schema_error("fm-rank: n must be positive");
      Int rank = brauer::fm_twisted_rank(fm_g, n);
      if (fm_json) {
        json out;
        out["command"] = "fm-rank";
        out["g"] = fm_g;
        out["n"] = brauer::int_to_json(n);
        out["rank"] = brauer::int_to_json(rank);
        out["rank_squared"] = brauer::int_to_json(rank * rank);
        emit(out);
      } else {
        std::cout << "rank = " << rank << " (rank^2 = " << rank * rank
                  << ")\n";
      }
      return 0;
    }

    if (cmd_pi->parsed()) {
      if (pi_g < 1) throw brauer::schema_error("pi-check: g must be positive");
      Int per = parse_int_arg(pi_per, "--per");
      Int ind = parse_int_arg(pi_ind, "--ind");
      if (per < 1 || ind < 1) {
        throw brauer::schema_error("pi-check: per and ind must be positive");
      }
      bool ok = brauer::period_index_bound_check(per, ind, pi_g, pi_odd);
      if (pi_json) {
        json out;
        out["command"] = "pi-check";
        out["per"] = brauer::int_to_json(per);
        out["ind"] = brauer::int_to_json(ind);
        out["g"] = pi_g;
        out["odd_order"] = pi_odd;
        out["holds"] = ok;
        emit(out);
      } else {
        std::cout << "ind | per^g: " << (ok ? "holds" : "fails") << "\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const brauer::schema_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
