#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qmforms/error.hpp"
#include "qmforms/hecke.hpp"
#include "qmforms/json_io.hpp"
#include "qmforms/periods.hpp"
#include "qmforms/verify.hpp"

using namespace qmf;

namespace {

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kParse = 2,
  kInvariant = 3,
  kNoSolution = 4,
  kInsufficientOrder = 5,
  kNumeric = 6,
  kInternal = 7,
};

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int error_report(const char* kind, const std::exception& e, int code) {
  print({{"error", kind}, {"message", e.what()}});
  return code;
}

Json param_json(const ParamPoint& t) { return Json::array({to_json(t.t0), to_json(t.t1), to_json(t.t2), to_json(t.t3)}); }
Json period_json(const PeriodPoint& x) { return Json::array({to_json(x.x1), to_json(x.x2), to_json(x.x3), to_json(x.x4)}); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical computations with quasi-modular forms and elliptic periods"};
  app.require_subcommand(1);

  int weight = 0, depth = 0;
  long p = 2;
  std::size_t order = 0, expand_order = 10;
  std::string terms, series_path;

  auto* expand_cmd = app.add_subcommand("expand", "q-expansion of a form (unit-normalized Eisenstein series)");
  expand_cmd->add_option("--weight", weight, "weight m")->required();
  expand_cmd->add_option("--terms", terms, "form, e.g. \"3/4*g1^2*g2 - g3\"")->required();
  expand_cmd->add_option("--order", expand_order, "truncation order")->capture_default_str();

  auto* decompose_cmd = app.add_subcommand("decompose", "write a q-series as a polynomial in g1, g2, g3");
  decompose_cmd->add_option("--weight", weight, "weight m")->required();
  decompose_cmd->add_option("--depth", depth, "depth bound n")->required();
  decompose_cmd->add_option("--series", series_path, "JSON file with an array of rational strings")->required();

  auto* derive_cmd = app.add_subcommand("derive", "apply d/dz (the Ramanujan derivation)");
  derive_cmd->add_option("--weight", weight, "weight m")->required();
  derive_cmd->add_option("--terms", terms, "form")->required();

  auto* hecke_cmd = app.add_subcommand("hecke", "apply the Hecke operator T_p");
  hecke_cmd->add_option("--p", p, "index p")->required()->check(CLI::PositiveNumber);
  hecke_cmd->add_option("--weight", weight, "weight m")->required();
  hecke_cmd->add_option("--depth", depth, "depth bound n")->required();
  hecke_cmd->add_option("--terms", terms, "form")->required();

  std::string t_text[4] = {"1", "0", "4", "0"};
  auto* period_cmd = app.add_subcommand("period", "period matrix of y^2 = 4 t0 (x-t1)^3 - t2 (x-t1) - t3");
  for (int i = 0; i < 4; ++i)
    period_cmd->add_option("--t" + std::to_string(i), t_text[i], "complex parameter, e.g. 1.5-2i or 1.5,-2")->capture_default_str();
  period_cmd->add_option("--order", order, "q-series order (default 400 or QMFORMS_SERIES_ORDER)");

  std::string x_text[4];
  auto* inverse_cmd = app.add_subcommand("inverse", "parameters t of a point of the period domain");
  for (int i = 0; i < 4; ++i) inverse_cmd->add_option("--x" + std::to_string(i + 1), x_text[i], "complex entry")->required();
  inverse_cmd->add_option("--order", order, "q-series order");

  std::string suite;
  VerifyOptions vopt;
  int samples = 0;
  double tol = 0;
  std::string exponent = "m-2n-1";
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  verify_cmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  auto* samples_opt = verify_cmd->add_option("--samples", samples, "number of random samples")->check(CLI::PositiveNumber);
  auto* tol_opt = verify_cmd->add_option("--tol", tol, "tolerance for numerical checks")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vopt.seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--order", vopt.order, "q-series order");
  verify_cmd->add_option("--exponent", exponent, "exponent of d in the Hecke composition law")
      ->check(CLI::IsMember({"m-n-1", "m-2n-1"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*expand_cmd) {
      print(to_json(expand(parse_form(terms, weight), expand_order)));
    } else if (*decompose_cmd) {
      Json j = read_json_file(series_path);
      if (j.is_object() && j.contains("series")) j = j.at("series");
      print(to_json(decompose(weight, depth, series_from_json(j))));
    } else if (*derive_cmd) {
      print(to_json(derive(parse_form(terms, weight))));
    } else if (*hecke_cmd) {
      print(to_json(hecke({p, FormSpaceKey(weight, depth)}, parse_form(terms, weight))));
    } else if (*period_cmd) {
      const auto start = std::chrono::steady_clock::now();
      const ParamPoint t{parse_complex(t_text[0]), parse_complex(t_text[1]), parse_complex(t_text[2]), parse_complex(t_text[3])};
      const std::size_t n = order ? order : default_series_order();
      const PeriodResult r = period_matrix_report(t, 1e-8, n);
      const BValues b = b_functions(r.x);
      print({{"command", "period"},
             {"input", param_json(t)},
             {"output", {{"x", period_json(r.x)}, {"det", to_json(r.x.det())}, {"i_ratio", to_json(r.x.x2 / r.x.x1)},
                         {"B", {{"B1", b.b1}, {"B2", b.b2}, {"B3", to_json(b.b3)}}}}},
             {"residuals", {{"round_trip", r.residual}, {"det_times_t0_minus_one", std::abs(r.x.det() * t.t0 - 1.0)}}},
             {"branch_used", r.branch_used},
             {"method", r.method},
             {"series_order", r.series_order},
             {"elapsed_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()}});
    } else if (*inverse_cmd) {
      const PeriodPoint x{parse_complex(x_text[0]), parse_complex(x_text[1]), parse_complex(x_text[2]), parse_complex(x_text[3])};
      const std::size_t n = order ? order : default_series_order();
      print({{"command", "inverse"}, {"input", period_json(x)}, {"output", param_json(inverse_map(x, n))}, {"series_order", n}});
    } else if (*verify_cmd) {
      if (*samples_opt) vopt.samples = samples;
      if (*tol_opt) vopt.tol = tol;
      vopt.exponent = exponent == "m-n-1" ? CompositionExponent::WeightMinusDepthMinusOne
                                          : CompositionExponent::WeightMinusTwiceDepthMinusOne;
      const Report r = run_suite(suite, vopt);
      print(r.to_json());
      return r.all_pass() ? kOk : kCheckFailed;
    }
  } catch (const ParseError& e) {
    return error_report("ParseError", e, kParse);
  } catch (const InvariantViolation& e) {
    return error_report("InvariantViolation", e, kInvariant);
  } catch (const NoSolution& e) {
    return error_report("NoSolution", e, kNoSolution);
  } catch (const InsufficientOrder& e) {
    return error_report("InsufficientOrder", e, kInsufficientOrder);
  } catch (const DegenerateCurve& e) {
    return error_report("DegenerateCurve", e, kNumeric);
  } catch (const NotConvergent& e) {
    return error_report("NotConvergent", e, kNumeric);
  } catch (const BranchAmbiguity& e) {
    return error_report("BranchAmbiguity", e, kNumeric);
  } catch (const std::exception& e) {
    return error_report("InternalError", e, kInternal);
  }
  return kOk;
}
