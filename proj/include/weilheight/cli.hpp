#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams, so it can be driven from tests.
//
// Exit codes: 0 when everything requested passed, 1 when some BoundReport
// failed, 2 on usage or input errors.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weilheight/experiment.hpp"
#include "weilheight/text.hpp"
#include "weilheight/verify.hpp"

namespace weilheight::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_reports_csv(std::ostream& os, const Reports& reports) {
  os << "name,hypotheses_ok,bound,measured,passed,inputs_digest\n";
  for (const auto& r : reports) {
    os << r.name << ',' << (r.hypotheses_ok ? "true" : "false") << ',' << format_double(r.bound) << ','
       << format_double(r.measured) << ',' << (r.passed ? "true" : "false") << ',' << r.inputs_digest << '\n';
  }
}

inline void write_reports_text(std::ostream& os, const Reports& reports) {
  std::size_t failed = 0;
  std::size_t informational = 0;
  for (const auto& r : reports) {
    if (r.failed()) {
      ++failed;
      os << "FAIL " << r.name << " measured=" << format_double(r.measured) << " bound=" << format_double(r.bound)
         << " digest=" << r.inputs_digest << '\n';
    }
    if (!r.hypotheses_ok) ++informational;
  }
  os << reports.size() << " reports, " << failed << " failed, " << informational << " with unmet hypotheses\n";
}

inline void write_tightness_csv(std::ostream& os, const std::vector<TightnessRow>& rows) {
  os << "trial,d,hF,bound_basic,bound_main,ratio_basic,ratio_main\n";
  for (const auto& r : rows) {
    os << r.trial << ',' << r.d << ',' << format_double(r.h_f) << ',' << format_double(r.bound_basic) << ','
       << format_double(r.bound_main) << ',' << format_double(r.ratio_basic) << ',' << format_double(r.ratio_main)
       << '\n';
  }
}

inline nlohmann::json tightness_json(const std::vector<TightnessRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"trial", r.trial},
                   {"d", r.d},
                   {"hF", r.h_f},
                   {"bound_basic", r.bound_basic},
                   {"bound_main", r.bound_main},
                   {"ratio_basic", r.ratio_basic},
                   {"ratio_main", r.ratio_main}});
  }
  return arr;
}

inline nlohmann::json quad_json(const QuadElement& x) {
  return {{"a", x.a().to_string()}, {"b", x.b().to_string()}, {"text", x.to_string()}};
}

/// Parses and dispatches. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weil heights of rationals, polynomials and rational fractions, interpolation, and height bounds",
               "weilheight"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "json";

  // height
  auto* height_cmd = app.add_subcommand("height", "Height of a rational, polynomial or fraction");
  std::string height_value;
  bool as_poly = false;
  bool as_frac = false;
  height_cmd->add_option("value", height_value, "Rational 'p/q', polynomial '3/2,0,1' or fraction 'num | den'")
      ->required();
  auto* poly_flag = height_cmd->add_flag("--poly", as_poly, "Read the value as a polynomial");
  height_cmd->add_flag("--frac", as_frac, "Read the value as a fraction")->excludes(poly_flag);

  // interp-poly
  auto* ipoly = app.add_subcommand("interp-poly", "Lagrange interpolation on integer nodes");
  std::string nodes_text;
  std::string values_text;
  int degree = 0;
  ipoly->add_option("--nodes", nodes_text, "Comma-separated integers")->required();
  ipoly->add_option("--values", values_text, "Comma-separated rationals")->required();
  ipoly->add_option("--degree", degree, "Degree bound d (needs d + 1 nodes)")->required();

  // interp-frac
  auto* ifrac = app.add_subcommand("interp-frac", "Rational fraction reconstruction (Cauchy interpolation)");
  int dp = -1;
  int dq = -1;
  bool automatic = false;
  ifrac->add_option("--nodes", nodes_text, "Comma-separated integers")->required();
  ifrac->add_option("--values", values_text, "Comma-separated rationals")->required();
  auto* dp_opt = ifrac->add_option("--dp", dp, "Numerator degree bound");
  auto* dq_opt = ifrac->add_option("--dq", dq, "Denominator degree bound");
  auto* auto_flag = ifrac->add_flag("--auto", automatic, "Search the degree split");
  auto* ifrac_degree = ifrac->add_option("--degree", degree, "Total degree bound for --auto");
  dp_opt->needs(dq_opt)->excludes(auto_flag);
  dq_opt->needs(dp_opt)->excludes(auto_flag);
  auto_flag->needs(ifrac_degree);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Randomized verification suites");
  std::string suite;
  SuiteOptions opts;
  std::vector<std::string> suite_names = suite_order();
  suite_names.push_back("all");
  verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names));
  verify_cmd->add_option("--trials", opts.trials, "Trials per check")->capture_default_str();
  verify_cmd->add_option("--seed", opts.seed, "Seed")->capture_default_str();
  verify_cmd->add_option("--degree-max", opts.degree_max, "Degree cap (0 keeps each check's default)");
  verify_cmd->add_option("--c", opts.c, "Growth constant c for the corollary suite")->check(CLI::Range(1.0, 1e6));
  verify_cmd->add_option("--degree", opts.degree, "Degree for the corollary suite")->check(CLI::Range(1, 12));
  verify_cmd->add_option("--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  verify_cmd->add_option("--out", out_path, "Write the output to this file");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Experiments");
  exp_cmd->require_subcommand(1);
  auto* tight = exp_cmd->add_subcommand("tightness", "Bound-to-height ratios by degree");
  int dmax = 5;
  std::uint64_t exp_trials = 100;
  std::uint64_t exp_seed = 0;
  std::int64_t coeff_bound = 10;
  std::string exp_format = "csv";
  tight->add_option("--dmax", dmax, "Largest degree")->check(CLI::Range(1, 12))->capture_default_str();
  tight->add_option("--trials", exp_trials, "Trials per degree")->capture_default_str();
  tight->add_option("--seed", exp_seed, "Seed")->capture_default_str();
  tight->add_option("--coeff-bound", coeff_bound, "Coefficient bound of the random fractions")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40))
      ->capture_default_str();
  tight->add_option("--format", exp_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  tight->add_option("--out", out_path, "Write the output to this file");

  // nf
  auto* nf_cmd = app.add_subcommand("nf", "Real quadratic fields");
  nf_cmd->require_subcommand(1);
  long m = 2;
  std::string element_text;
  auto* unit_cmd = nf_cmd->add_subcommand("unit", "Fundamental unit of Q(sqrt m)");
  unit_cmd->add_option("--m", m, "Squarefree m >= 2")->required();
  auto* reduce_cmd = nf_cmd->add_subcommand("reduce", "Reduce an algebraic integer by a unit");
  reduce_cmd->add_option("--m", m, "Squarefree m >= 2")->required();
  reduce_cmd->add_option("--element", element_text, "'a,b' for a + b sqrt m")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  auto open_sink = [&]() -> bool {
    if (out_path.empty()) return true;
    file.open(out_path);
    if (!file) {
      err << "cannot open output file '" << out_path << "'\n";
      return false;
    }
    sink = &file;
    return true;
  };

  try {
    if (*height_cmd) {
      double h = 0.0;
      if (as_frac) {
        h = fraction_height(parse_fraction(height_value));
      } else if (as_poly) {
        h = poly_height(parse_poly(height_value));
      } else if (height_value.find('|') != std::string::npos) {
        h = fraction_height(parse_fraction(height_value));
      } else if (height_value.find(',') != std::string::npos) {
        h = poly_height(parse_poly(height_value));
      } else {
        h = height_rational(parse_rational(height_value));
      }
      out << format_double(h) << '\n';
      return kOk;
    }

    if (*ipoly) {
      const NodeSet nodes = NodeSet::spanning(parse_integer_list(nodes_text));
      out << format_poly(lagrange_interpolate(nodes, parse_rational_list(values_text), degree)) << '\n';
      return kOk;
    }

    if (*ifrac) {
      const NodeSet nodes = NodeSet::spanning(parse_integer_list(nodes_text));
      const auto values = parse_rational_list(values_text);
      if (automatic) {
        out << format_fraction(cauchy_interpolate_auto(nodes, values, degree)) << '\n';
      } else {
        if (dp < 0 || dq < 0) {
          err << "interp-frac needs --dp and --dq, or --auto --degree\n";
          return kUsage;
        }
        out << format_fraction(cauchy_interpolate(nodes, values, dp, dq)) << '\n';
      }
      return kOk;
    }

    if (*verify_cmd) {
      const Reports reports = run_suite(suite, opts);
      if (!open_sink()) return kUsage;
      if (format == "json") {
        *sink << nlohmann::json(reports).dump(2) << '\n';
      } else if (format == "csv") {
        write_reports_csv(*sink, reports);
      } else {
        write_reports_text(*sink, reports);
      }
      const bool any_failed = std::any_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.failed(); });
      return any_failed ? kFailed : kOk;
    }

    if (*tight) {
      const auto rows = tightness_experiment(dmax, exp_trials, exp_seed, coeff_bound);
      if (!open_sink()) return kUsage;
      if (exp_format == "csv") {
        write_tightness_csv(*sink, rows);
      } else {
        *sink << tightness_json(rows).dump(2) << '\n';
      }
      return kOk;
    }

    if (*unit_cmd) {
      const QuadField k(m);
      const QuadElement e = fundamental_unit(k);
      nlohmann::json j{{"m", m},
                       {"unit", quad_json(e)},
                       {"norm", e.norm().to_string()},
                       {"height", height_quad(e)},
                       {"reduction_constant", unit_reduction_constant(k)}};
      out << j.dump(2) << '\n';
      return kOk;
    }

    if (*reduce_cmd) {
      const QuadField k(m);
      const QuadElement x = parse_quad(k, element_text);
      const auto red = unit_reduce(x);
      const double bound = std::max(unit_reduction_constant(k), hmod(x));
      const double h = height_quad(red.reduced);
      nlohmann::json j{{"m", m},
                       {"element", quad_json(x)},
                       {"exponent", red.exponent},
                       {"unit", quad_json(red.unit)},
                       {"reduced", quad_json(red.reduced)},
                       {"height_element", height_quad(x)},
                       {"height_reduced", h},
                       {"hmod", hmod(x)},
                       {"bound", bound},
                       {"passed", leq_with_slack(h, bound)}};
      out << j.dump(2) << '\n';
      return leq_with_slack(h, bound) ? kOk : kFailed;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace weilheight::cli
