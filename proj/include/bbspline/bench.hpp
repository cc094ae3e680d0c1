#pragma once

// Benchmark harness: random experiment configurations, the competing
// evaluation pipelines, accuracy cross-checks, wall-clock timing, operation
// counts and the CSV report.
//
// Pipelines compared on curves:
//   de_boor_cox   per point and per curve, the triangular scheme on points;
//   eval_splines  basis values by the degree recursion, then the shared
//                 combination step;
//   new_method    coefficient table, geometric basis evaluation, then the
//                 same combination step.

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbspline/bbf.hpp"
#include "bbspline/curve.hpp"
#include "bbspline/geometry.hpp"
#include "bbspline/knots.hpp"
#include "bbspline/opcount.hpp"
#include "bbspline/oracle.hpp"
#include "bbspline/surface.hpp"

namespace bbspline {

/// Invalid benchmark configuration or command line.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Methods disagreed beyond tolerance, or a counted check failed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { curve, surface, basis };

inline std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::curve:
      return "curve";
    case Mode::surface:
      return "surface";
    case Mode::basis:
      return "basis";
  }
  return "?";
}

inline Mode parse_mode(const std::string& s) {
  if (s == "curve") return Mode::curve;
  if (s == "surface") return Mode::surface;
  if (s == "basis") return Mode::basis;
  throw UsageError("unknown mode: " + s);
}

struct ExperimentConfig {
  std::uint64_t seed = 1;
  Mode mode = Mode::curve;
  int n = 20;
  int m = 3;
  /// Number of curves sharing the knot vector.
  int M = 1;
  int samples_per_span = 50;
  int d = 2;
  double span_min = 1.0 / 50;
  double span_max = 1.0;
  double coord_min = -1.0;
  double coord_max = 1.0;
  bool count_ops = false;
  /// Each timing trial repeats the workload until this many seconds pass.
  double min_time = 0.2;
  int trials = 3;
};

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.n < 1) throw UsageError("n must be >= 1");
  if (cfg.m < 1) throw UsageError("m must be >= 1");
  if (cfg.M < 1) throw UsageError("curves must be >= 1");
  if (cfg.samples_per_span < 1) throw UsageError("samples per span must be >= 1");
  if (cfg.d < 1) throw UsageError("dim must be >= 1");
  if (!(cfg.span_min > 0) || !(cfg.span_min <= cfg.span_max)) throw UsageError("bad span length range");
  if (!(cfg.coord_min <= cfg.coord_max)) throw UsageError("bad coordinate range");
  if (cfg.trials < 1) throw UsageError("trials must be >= 1");
  if (!(cfg.min_time >= 0)) throw UsageError("min time must be >= 0");
}

/// mt19937_64 with an explicit 53-bit mapping to [0, 1), so streams agree
/// across standard libraries.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

 private:
  std::mt19937_64 rng_;
};

/// t_0 = 0, span lengths uniform in [span_min, span_max], boundary knots
/// copied m times.
template <class T>
KnotVector<T> random_clamped_knots(Generator& g, int n, int m, double span_min, double span_max) {
  std::vector<double> inner(static_cast<std::size_t>(n) + 1);
  inner[0] = 0.0;
  for (int j = 1; j <= n; ++j) inner[static_cast<std::size_t>(j)] = inner[static_cast<std::size_t>(j) - 1] + g.uniform(span_min, span_max);
  std::vector<T> knots;
  knots.reserve(static_cast<std::size_t>(n + 2 * m + 1));
  for (int k = 0; k < m; ++k) knots.push_back(T(inner.front()));
  for (double t : inner) knots.push_back(T(t));
  for (int k = 0; k < m; ++k) knots.push_back(T(inner.back()));
  return KnotVector<T>(m, n, std::move(knots));
}

/// t_j + (l/N)(t_{j+1} - t_j) for every non-empty span and l = 0..N-1, then t_n.
template <class T>
std::vector<T> sample_params(const KnotVector<T>& kv, int per_span) {
  std::vector<T> out;
  for (int j : nonempty_spans(kv))
    for (int l = 0; l < per_span; ++l)
      out.push_back(T(raw(kv[j]) + static_cast<double>(l) / per_span * raw(kv[j + 1] - kv[j])));
  out.push_back(kv[kv.n()]);
  return out;
}

template <class T>
std::vector<T> random_points(Generator& g, std::size_t count, const ExperimentConfig& cfg) {
  std::vector<T> out(count * static_cast<std::size_t>(cfg.d));
  for (auto& x : out) x = T(g.uniform(cfg.coord_min, cfg.coord_max));
  return out;
}

template <class T>
struct CurveSet {
  KnotVector<T> knots;
  std::vector<BSplineCurve<T>> curves;
  std::vector<T> params;
};

template <class T>
CurveSet<T> generate_curves(const ExperimentConfig& cfg) {
  validate(cfg);
  Generator g(cfg.seed);
  CurveSet<T> set;
  set.knots = random_clamped_knots<T>(g, cfg.n, cfg.m, cfg.span_min, cfg.span_max);
  for (int c = 0; c < cfg.M; ++c)
    set.curves.emplace_back(set.knots, cfg.d,
                            random_points<T>(g, static_cast<std::size_t>(set.knots.basis_count()), cfg));
  set.params = sample_params(set.knots, cfg.samples_per_span);
  return set;
}

template <class T>
struct SurfaceSet {
  TensorProductSurface<T> surface;
  std::vector<T> us;
  std::vector<T> ws;
};

/// Both axes use n, m from the config.
template <class T>
SurfaceSet<T> generate_surface(const ExperimentConfig& cfg) {
  validate(cfg);
  Generator g(cfg.seed);
  auto ku = random_clamped_knots<T>(g, cfg.n, cfg.m, cfg.span_min, cfg.span_max);
  auto kv = random_clamped_knots<T>(g, cfg.n, cfg.m, cfg.span_min, cfg.span_max);
  const auto count = static_cast<std::size_t>(ku.basis_count()) * static_cast<std::size_t>(kv.basis_count());
  auto net = random_points<T>(g, count, cfg);
  SurfaceSet<T> set{TensorProductSurface<T>(ku, kv, cfg.d, std::move(net)), sample_params(ku, cfg.samples_per_span),
                    sample_params(kv, cfg.samples_per_span)};
  return set;
}

// Pipelines.  Curve outputs are parameter-major N x M x d arrays.

template <class T>
void run_de_boor_cox(const CurveSet<T>& set, std::vector<T>& out) {
  const auto d = static_cast<std::size_t>(set.curves[0].dim());
  out.resize(set.params.size() * set.curves.size() * d);
  DeBoorCox<T> dbc;
  std::size_t q = 0;
  for (const auto& u : set.params)
    for (const auto& c : set.curves) {
      dbc.evaluate(c, u, std::span<T>(out.data() + q, d));
      q += d;
    }
}

template <class T>
void run_eval_splines(const CurveSet<T>& set, std::vector<T>& out) {
  const auto d = static_cast<std::size_t>(set.curves[0].dim());
  out.resize(set.params.size() * set.curves.size() * d);
  RecurrenceBasis<T> rb;
  BasisValues<T> basis;
  std::size_t q = 0;
  for (const auto& u : set.params) {
    rb.evaluate(set.knots, u, basis);
    for (const auto& c : set.curves) {
      combine(c, basis, std::span<T>(out.data() + q, d));
      q += d;
    }
  }
}

template <class T>
void run_new_method(const CurveSet<T>& set, std::vector<T>& out) {
  auto grid = multi_curve_points(std::span<const BSplineCurve<T>>(set.curves), std::span<const T>(set.params));
  out = std::move(grid.data);
}

template <class T>
void run_tensor_de_boor_cox(const SurfaceSet<T>& set, std::vector<T>& out) {
  const auto d = static_cast<std::size_t>(set.surface.dim());
  out.resize(set.us.size() * set.ws.size() * d);
  TensorDeBoorCox<T> dbc;
  std::size_t q = 0;
  for (const auto& u : set.us)
    for (const auto& w : set.ws) {
      dbc.evaluate(set.surface, u, w, std::span<T>(out.data() + q, d));
      q += d;
    }
}

template <class T>
void run_surface_new_method(const SurfaceSet<T>& set, std::vector<T>& out) {
  auto grid = surface_grid(set.surface, std::span<const T>(set.us), std::span<const T>(set.ws));
  out = std::move(grid.data);
}

/// Basis values only: m+1 per parameter.
template <class T>
void run_recurrence_basis(const CurveSet<T>& set, std::vector<T>& out) {
  const auto width = static_cast<std::size_t>(set.knots.degree() + 1);
  out.resize(set.params.size() * width);
  RecurrenceBasis<T> rb;
  BasisValues<T> basis;
  for (std::size_t p = 0; p < set.params.size(); ++p) {
    rb.evaluate(set.knots, set.params[p], basis);
    std::copy(basis.values.begin(), basis.values.end(), out.begin() + static_cast<std::ptrdiff_t>(p * width));
  }
}

template <class T>
void run_table_basis(const CurveSet<T>& set, std::vector<T>& out) {
  const auto width = static_cast<std::size_t>(set.knots.degree() + 1);
  out.resize(set.params.size() * width);
  const auto table = compute_table(set.knots);
  BasisEvaluator<T> evaluator;
  BasisValues<T> basis;
  for (std::size_t p = 0; p < set.params.size(); ++p) {
    evaluator.evaluate(table, set.knots, set.params[p], basis);
    std::copy(basis.values.begin(), basis.values.end(), out.begin() + static_cast<std::ptrdiff_t>(p * width));
  }
}

// Accuracy.

/// Digit cap: 8 for float, 16 for double.
template <class T>
constexpr double digits_cap() {
  return std::is_same_v<decltype(raw(std::declval<T>())), float> ? 8.0 : 16.0;
}

/// -log10(|a-b| / max(|a|, |b|, 1e-300)) clamped to [0, cap].
template <class T>
double common_digits(const T& a, const T& b) {
  const double x = static_cast<double>(raw(a));
  const double y = static_cast<double>(raw(b));
  const double cap = digits_cap<T>();
  const double diff = std::abs(x - y);
  if (diff == 0) return cap;
  const double scale = std::max({std::abs(x), std::abs(y), 1e-300});
  return std::clamp(-std::log10(diff / scale), 0.0, cap);
}

template <class T>
double mean_common_digits(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("mean_common_digits: size mismatch");
  double sum = 0;
  for (std::size_t q = 0; q < a.size(); ++q) sum += common_digits(a[q], b[q]);
  return sum / static_cast<double>(a.size());
}

/// max |a - b| / max(1, max |b|).
template <class T>
double relative_disagreement(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("relative_disagreement: size mismatch");
  double diff = 0;
  double scale = 1;
  for (std::size_t q = 0; q < a.size(); ++q) {
    diff = std::max(diff, std::abs(static_cast<double>(raw(a[q])) - static_cast<double>(raw(b[q]))));
    scale = std::max(scale, std::abs(static_cast<double>(raw(b[q]))));
  }
  return diff / scale;
}

/// Agreement required before a benchmark reports times.
template <class T>
constexpr double verify_tolerance() {
  return std::is_same_v<decltype(raw(std::declval<T>())), float> ? 1e-3 : 1e-9;
}

template <class T>
void verify_agreement(const std::vector<T>& got, const std::vector<T>& ref, const std::string& what) {
  const double r = relative_disagreement(got, ref);
  if (!(r <= verify_tolerance<T>()))
    throw VerificationFailure(what + " disagrees with the reference: relative error " + std::to_string(r));
}

// Timing.

/// Seconds per call of f: warm-up, then best of cfg.trials trials, each
/// repeating f until cfg.min_time has elapsed.
template <class F>
double best_time(F&& f, const ExperimentConfig& cfg) {
  using clock = std::chrono::steady_clock;
  f();
  double best = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const auto start = clock::now();
    long reps = 0;
    double elapsed = 0;
    do {
      f();
      ++reps;
      elapsed = std::chrono::duration<double>(clock::now() - start).count();
    } while (elapsed < cfg.min_time);
    best = std::min(best, elapsed / static_cast<double>(reps));
  }
  return best;
}

template <class F>
OpCounter count_ops_of(F&& f) {
  OpScope scope;
  f();
  return scope.elapsed();
}

// Reports.

struct MethodResult {
  std::string method;
  double seconds = 0;
  OpCounter ops;
  /// Against the reference method; absent for the reference itself.
  std::optional<double> mean_common_digits;
};

struct RunReport {
  ExperimentConfig config;
  /// Sample parameters (per axis for surfaces).
  int points = 0;
  std::vector<MethodResult> methods;

  const MethodResult& method(const std::string& name) const {
    for (const auto& r : methods)
      if (r.method == name) return r;
    throw std::out_of_range("no method " + name);
  }
  /// Reference seconds over method seconds.
  double speedup(const std::string& name) const { return methods.front().seconds / method(name).seconds; }
};

template <class T>
RunReport run_curve_benchmark(const ExperimentConfig& cfg) {
  const auto set = generate_curves<T>(cfg);
  std::vector<T> ref, b, c;
  run_de_boor_cox(set, ref);
  run_eval_splines(set, b);
  run_new_method(set, c);
  verify_agreement(b, ref, "eval_splines");
  verify_agreement(c, ref, "new_method");

  RunReport report;
  report.config = cfg;
  report.points = static_cast<int>(set.params.size());
  std::vector<T> out;
  report.methods.push_back({"de_boor_cox", best_time([&] { run_de_boor_cox(set, out); }, cfg), {}, std::nullopt});
  report.methods.push_back(
      {"eval_splines", best_time([&] { run_eval_splines(set, out); }, cfg), {}, mean_common_digits(b, ref)});
  report.methods.push_back(
      {"new_method", best_time([&] { run_new_method(set, out); }, cfg), {}, mean_common_digits(c, ref)});

  if (cfg.count_ops) {
    const auto cset = generate_curves<Counted<T>>(cfg);
    std::vector<Counted<T>> counted_out;
    report.methods[0].ops = count_ops_of([&] { run_de_boor_cox(cset, counted_out); });
    report.methods[1].ops = count_ops_of([&] { run_eval_splines(cset, counted_out); });
    report.methods[2].ops = count_ops_of([&] { run_new_method(cset, counted_out); });
  }
  return report;
}

template <class T>
RunReport run_surface_benchmark(const ExperimentConfig& cfg) {
  const auto set = generate_surface<T>(cfg);
  std::vector<T> ref, c;
  run_tensor_de_boor_cox(set, ref);
  run_surface_new_method(set, c);
  verify_agreement(c, ref, "new_method");

  RunReport report;
  report.config = cfg;
  report.points = static_cast<int>(set.us.size());
  std::vector<T> out;
  report.methods.push_back(
      {"de_boor_cox", best_time([&] { run_tensor_de_boor_cox(set, out); }, cfg), {}, std::nullopt});
  report.methods.push_back(
      {"new_method", best_time([&] { run_surface_new_method(set, out); }, cfg), {}, mean_common_digits(c, ref)});

  if (cfg.count_ops) {
    const auto cset = generate_surface<Counted<T>>(cfg);
    std::vector<Counted<T>> counted_out;
    report.methods[0].ops = count_ops_of([&] { run_tensor_de_boor_cox(cset, counted_out); });
    report.methods[1].ops = count_ops_of([&] { run_surface_new_method(cset, counted_out); });
  }
  return report;
}

/// Tolerances of the basis cross-check: value agreement and partition of
/// unity drift.
template <class T>
constexpr double basis_agreement_tolerance() {
  return std::is_same_v<decltype(raw(std::declval<T>())), float> ? 1e-4 : 1e-11;
}
template <class T>
constexpr double partition_tolerance() {
  return std::is_same_v<decltype(raw(std::declval<T>())), float> ? 1e-5 : 1e-12;
}

template <class T>
void verify_partition_of_unity(const std::vector<T>& values, int width, const std::string& what) {
  for (std::size_t p = 0; p * static_cast<std::size_t>(width) < values.size(); ++p) {
    double sum = 0;
    for (int r = 0; r < width; ++r) sum += static_cast<double>(raw(values[p * static_cast<std::size_t>(width) + static_cast<std::size_t>(r)]));
    if (!(std::abs(sum - 1) <= partition_tolerance<T>()))
      throw VerificationFailure(what + ": basis values do not sum to 1");
  }
}

template <class T>
RunReport run_basis_benchmark(const ExperimentConfig& cfg) {
  auto set = generate_curves<T>(cfg);
  const int width = cfg.m + 1;
  std::vector<T> ref, c;
  run_recurrence_basis(set, ref);
  run_table_basis(set, c);
  double worst = 0;
  for (std::size_t q = 0; q < ref.size(); ++q)
    worst = std::max(worst, std::abs(static_cast<double>(raw(c[q])) - static_cast<double>(raw(ref[q]))));
  if (!(worst <= basis_agreement_tolerance<T>()))
    throw VerificationFailure("new_method basis values disagree with the recursion: " + std::to_string(worst));
  verify_partition_of_unity(ref, width, "eval_splines");
  verify_partition_of_unity(c, width, "new_method");

  RunReport report;
  report.config = cfg;
  report.points = static_cast<int>(set.params.size());
  std::vector<T> out;
  report.methods.push_back(
      {"eval_splines", best_time([&] { run_recurrence_basis(set, out); }, cfg), {}, std::nullopt});
  report.methods.push_back(
      {"new_method", best_time([&] { run_table_basis(set, out); }, cfg), {}, mean_common_digits(c, ref)});

  if (cfg.count_ops) {
    const auto cset = generate_curves<Counted<T>>(cfg);
    std::vector<Counted<T>> counted_out;
    report.methods[0].ops = count_ops_of([&] { run_recurrence_basis(cset, counted_out); });
    report.methods[1].ops = count_ops_of([&] { run_table_basis(cset, counted_out); });
  }
  return report;
}

template <class T>
RunReport run_benchmark(const ExperimentConfig& cfg) {
  switch (cfg.mode) {
    case Mode::curve:
      return run_curve_benchmark<T>(cfg);
    case Mode::surface:
      return run_surface_benchmark<T>(cfg);
    case Mode::basis:
      return run_basis_benchmark<T>(cfg);
  }
  throw UsageError("unknown mode");
}

// Operation counts of the new method against the closed forms.

struct OpsRow {
  std::string stage;
  OpCounter measured;
  OpCounter formula;
};

struct OpsReport {
  std::vector<OpsRow> rows;
  /// Every measured tally within a factor of 2 of its formula.
  bool within_factor_two = false;
  /// Evaluation-stage divisions at m, m+1, m+2 have zero second difference.
  bool divisions_linear_in_m = false;
};

/// Table build for n spans of degree m.
inline OpCounter table_ops_formula(std::uint64_t n, std::uint64_t m) {
  return {(m - 1) * m * (2 * n - 1), 2 * (m - 1) * (4 * n - 1) + n, 2 * (m - 1) * m * (2 * n - 1),
          2 * (m - 1) * (3 * n - 1), n};
}

/// Evaluation of N points on M curves in E^d.
inline OpCounter evaluation_ops_formula(std::uint64_t N, std::uint64_t m, std::uint64_t M, std::uint64_t d) {
  return {N * (m + 2) * m + N * M * (m + 1) * d, N * ((m + 1) * m + 3), 2 * N * (m + 2) * m + N * M * (m + 1) * d,
          N * (m + 2), 0};
}

inline bool within_factor_two(const OpCounter& measured, const OpCounter& formula) {
  auto ok = [](std::uint64_t got, std::uint64_t want) {
    if (want == 0) return got == 0;
    const double r = static_cast<double>(got) / static_cast<double>(want);
    return r >= 0.5 && r <= 2.0;
  };
  return ok(measured.adds, formula.adds) && ok(measured.subs, formula.subs) && ok(measured.muls, formula.muls) &&
         ok(measured.divs, formula.divs) && ok(measured.pows, formula.pows);
}

/// Counted table-build and evaluation stages of the new method.
struct StageOps {
  OpCounter table;
  OpCounter evaluation;
};

inline StageOps measure_new_method_ops(const ExperimentConfig& cfg) {
  const auto set = generate_curves<Counted<double>>(cfg);
  StageOps ops;
  BBCoeffTable<Counted<double>> table;
  ops.table = count_ops_of([&] { table = compute_table(set.knots); });
  ops.evaluation = count_ops_of([&] {
    multi_curve_points(table, std::span<const BSplineCurve<Counted<double>>>(set.curves),
                       std::span<const Counted<double>>(set.params));
  });
  return ops;
}

inline OpsReport count_ops_report(const ExperimentConfig& cfg) {
  if (cfg.mode != Mode::curve) throw UsageError("operation counts are reported for curve mode");
  validate(cfg);
  const auto ops = measure_new_method_ops(cfg);
  const auto N = static_cast<std::uint64_t>(generate_curves<double>(cfg).params.size());
  const auto n = static_cast<std::uint64_t>(cfg.n);
  const auto m = static_cast<std::uint64_t>(cfg.m);
  OpsReport report;
  const auto table_f = table_ops_formula(n, m);
  const auto eval_f = evaluation_ops_formula(N, m, static_cast<std::uint64_t>(cfg.M), static_cast<std::uint64_t>(cfg.d));
  report.rows.push_back({"table", ops.table, table_f});
  report.rows.push_back({"evaluation", ops.evaluation, eval_f});
  report.rows.push_back({"total", ops.table + ops.evaluation, table_f + eval_f});
  report.within_factor_two = within_factor_two(ops.table + ops.evaluation, table_f + eval_f);

  std::int64_t div[3];
  for (int s = 0; s < 3; ++s) {
    auto c = cfg;
    c.m = cfg.m + s;
    div[s] = static_cast<std::int64_t>(measure_new_method_ops(c).evaluation.divs);
  }
  report.divisions_linear_in_m = div[2] - 2 * div[1] + div[0] == 0;
  return report;
}

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t q = 0; q < x.size(); ++q) {
    const double lx = std::log(x[q]);
    const double ly = std::log(y[q]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

// Report CSV.

inline constexpr const char* kReportHeader =
    "mode,seed,n,m,M,N,d,method,seconds,adds,subs,muls,divs,pows,mean_common_digits";

/// One line of the report CSV.
struct ReportRow {
  std::string mode;
  std::uint64_t seed = 0;
  int n = 0, m = 0, M = 0, N = 0, d = 0;
  std::string method;
  double seconds = 0;
  OpCounter ops;
  std::optional<double> mean_common_digits;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

inline std::vector<ReportRow> report_rows(const RunReport& r) {
  std::vector<ReportRow> rows;
  for (const auto& mr : r.methods)
    rows.push_back({to_string(r.config.mode), r.config.seed, r.config.n, r.config.m, r.config.M, r.points, r.config.d,
                    mr.method, mr.seconds, mr.ops, mr.mean_common_digits});
  return rows;
}

namespace detail {
inline std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

template <class V>
V parse_field(const std::string& s, const char* what) {
  V v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("report CSV: bad ") + what + ": " + s);
  return v;
}
}  // namespace detail

inline void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << kReportHeader << '\n';
  for (const auto& r : rows) {
    out << r.mode << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.M << ',' << r.N << ',' << r.d << ','
        << r.method << ',' << detail::shortest(r.seconds) << ',' << r.ops.adds << ',' << r.ops.subs << ','
        << r.ops.muls << ',' << r.ops.divs << ',' << r.ops.pows << ',';
    if (r.mean_common_digits) out << detail::shortest(*r.mean_common_digits);
    out << '\n';
  }
}

inline std::vector<ReportRow> parse_report_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kReportHeader) throw std::invalid_argument("report CSV: bad header");
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 15) throw std::invalid_argument("report CSV: expected 15 fields: " + line);
    ReportRow r;
    r.mode = f[0];
    r.seed = detail::parse_field<std::uint64_t>(f[1], "seed");
    r.n = detail::parse_field<int>(f[2], "n");
    r.m = detail::parse_field<int>(f[3], "m");
    r.M = detail::parse_field<int>(f[4], "M");
    r.N = detail::parse_field<int>(f[5], "N");
    r.d = detail::parse_field<int>(f[6], "d");
    r.method = f[7];
    r.seconds = detail::parse_field<double>(f[8], "seconds");
    r.ops.adds = detail::parse_field<std::uint64_t>(f[9], "adds");
    r.ops.subs = detail::parse_field<std::uint64_t>(f[10], "subs");
    r.ops.muls = detail::parse_field<std::uint64_t>(f[11], "muls");
    r.ops.divs = detail::parse_field<std::uint64_t>(f[12], "divs");
    r.ops.pows = detail::parse_field<std::uint64_t>(f[13], "pows");
    if (!f[14].empty()) r.mean_common_digits = detail::parse_field<double>(f[14], "mean_common_digits");
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace bbspline
