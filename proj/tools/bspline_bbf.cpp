// bspline-bbf: benchmark, table export and evaluation front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bbspline/bbspline.hpp"

namespace {

using namespace bbspline;

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

// Opens path for writing, or returns stdout for "-" / empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw FormatError("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<double> read_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_params(in);
}

void print_report(const RunReport& r, bool f32) {
  const auto& c = r.config;
  std::cout << to_string(c.mode) << " seed=" << c.seed << " n=" << c.n << " m=" << c.m << " M=" << c.M
            << " N=" << r.points << " d=" << c.d << (f32 ? " f32" : " f64") << '\n';
  for (const auto& mr : r.methods) {
    std::cout << "  " << std::left << std::setw(13) << mr.method << std::right << std::scientific
              << std::setprecision(4) << mr.seconds << " s  x" << std::fixed << std::setprecision(2)
              << r.speedup(mr.method);
    if (mr.mean_common_digits) std::cout << "  digits " << std::setprecision(2) << *mr.mean_common_digits;
    if (c.count_ops) std::cout << "  ops " << mr.ops;
    std::cout << '\n';
  }
  std::cout.unsetf(std::ios::floatfield);
}

int print_ops_report(const ExperimentConfig& cfg) {
  const auto report = count_ops_report(cfg);
  std::cout << "operation counts, new method (measured vs closed form)\n";
  for (const auto& row : report.rows)
    std::cout << "  " << std::left << std::setw(11) << row.stage << std::right << row.measured << "\n  "
              << std::setw(11) << "" << row.formula << '\n';
  std::cout << "  within factor 2: " << (report.within_factor_two ? "yes" : "no")
            << ", divisions linear in m: " << (report.divisions_linear_in_m ? "yes" : "no") << '\n';
  if (!report.within_factor_two || !report.divisions_linear_in_m)
    throw VerificationFailure("operation counts do not match the closed forms");
  return 0;
}

struct BenchArgs {
  ExperimentConfig cfg;
  std::string mode = "curve";
  bool f32 = false;
  int datasets = 1;
  std::string out;
};

int run_bench(BenchArgs& a) {
  a.cfg.mode = parse_mode(a.mode);
  validate(a.cfg);
  if (a.datasets < 1) throw UsageError("datasets must be >= 1");
  std::vector<ReportRow> rows;
  for (int k = 0; k < a.datasets; ++k) {
    auto cfg = a.cfg;
    cfg.seed = a.cfg.seed + static_cast<std::uint64_t>(k);
    const auto report = a.f32 ? run_benchmark<float>(cfg) : run_benchmark<double>(cfg);
    print_report(report, a.f32);
    for (auto& r : report_rows(report)) rows.push_back(std::move(r));
  }
  if (a.cfg.count_ops && a.cfg.mode == Mode::curve) print_ops_report(a.cfg);
  if (!a.out.empty()) {
    Output out(a.out);
    write_report_csv(out.stream(), rows);
  }
  return 0;
}

int run_table(const std::string& input, const std::string& out_path) {
  const auto kv = knots_from_json<double>(read_json_file(input));
  const auto table = compute_table(kv);
  Output out(out_path);
  write_table_csv(out.stream(), table);
  return 0;
}

int run_eval(const std::string& input, const std::string& params_path, const std::string& params_w_path,
             const std::string& out_path) {
  const auto json = read_json_file(input);
  const auto us = read_params_file(params_path);
  if (json.contains("net")) {
    const auto surf = surface_from_json<double>(json);
    const auto ws = params_w_path.empty() ? us : read_params_file(params_w_path);
    const auto grid = surface_grid(surf, std::span<const double>(us), std::span<const double>(ws));
    Output out(out_path);
    write_grid_csv(out.stream(), us, ws, surf.dim(), grid.data);
    return 0;
  }
  if (!params_w_path.empty()) throw UsageError("--params-w applies to surfaces only");
  const auto curve = curve_from_json<double>(json);
  const auto grid = multi_curve_points(std::span<const BSplineCurve<double>>(&curve, 1), std::span<const double>(us));
  Output out(out_path);
  write_points_csv(out.stream(), us, curve.dim(), grid.data);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"B-spline evaluation through Bernstein-Bezier coefficient tables"};
  app.require_subcommand(1);

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "time and cross-check the evaluation methods");
  cmd_bench->add_option("--mode", bench.mode, "curve, surface or basis")
      ->check(CLI::IsMember({"curve", "surface", "basis"}));
  cmd_bench->add_option("--seed", bench.cfg.seed, "PRNG seed");
  cmd_bench->add_option("--n", bench.cfg.n, "number of knot spans");
  cmd_bench->add_option("--m", bench.cfg.m, "degree");
  cmd_bench->add_option("--curves", bench.cfg.M, "curves sharing the knot vector");
  cmd_bench->add_option("--dim", bench.cfg.d, "dimension of control points");
  cmd_bench->add_option("--samples-per-span", bench.cfg.samples_per_span, "parameters per span");
  cmd_bench->add_option("--min-time", bench.cfg.min_time, "seconds per timing trial");
  cmd_bench->add_option("--trials", bench.cfg.trials, "timing trials, best is reported");
  cmd_bench->add_option("--datasets", bench.datasets, "consecutive seeds to run");
  cmd_bench->add_flag("--f32", bench.f32, "evaluate in single precision");
  cmd_bench->add_flag("--count-ops", bench.cfg.count_ops, "report floating-point operation counts");
  cmd_bench->add_option("--out", bench.out, "report CSV");

  std::string input, out, params, params_w;
  auto* cmd_table = app.add_subcommand("table", "export the coefficient table of a knot vector");
  cmd_table->add_option("--input", input, "curve or knot-vector JSON")->required();
  cmd_table->add_option("--out", out, "table CSV (stdout if omitted)");

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a curve or surface");
  cmd_eval->add_option("--input", input, "curve or surface JSON")->required();
  cmd_eval->add_option("--params", params, "parameters, one per line")->required();
  cmd_eval->add_option("--params-w", params_w, "second-axis parameters for surfaces");
  cmd_eval->add_option("--out", out, "points CSV (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_bench) return run_bench(bench);
    if (*cmd_table) return run_table(input, out);
    if (*cmd_eval) return run_eval(input, params, params_w, out);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
