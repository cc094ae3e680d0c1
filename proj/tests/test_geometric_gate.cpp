// Gate for every other test: the linear-time Bernstein evaluator must agree
// with de Casteljau on 10^5 random inputs of degree <= 15.

#include <cmath>
#include <cstdio>
#include <vector>

#include "bbspline/bench.hpp"
#include "bbspline/bernstein.hpp"

int main() {
  using namespace bbspline;
  Generator g(20240601);
  constexpr int kCases = 100000;
  int failures = 0;
  double worst = 0;
  for (int c = 0; c < kCases; ++c) {
    const int n = static_cast<int>(g.uniform() * 16) % 16;
    std::vector<double> coeffs(static_cast<std::size_t>(n + 1));
    for (auto& x : coeffs) x = g.uniform(-1.0, 1.0);
    // Endpoints are exercised explicitly every so often.
    double t = g.uniform();
    if (c % 997 == 0) t = 0.0;
    if (c % 991 == 0) t = 1.0;
    const double want = de_casteljau_eval<double>(coeffs, t);
    const double got = geometric_eval<double>(coeffs, t);
    const double err = std::abs(got - want) / (1 + std::abs(want));
    worst = std::max(worst, err);
    if (!(err <= 1e-12)) ++failures;
  }
  std::printf("geometric_eval vs de Casteljau: %d cases, worst scaled error %.3g, %d failures\n", kCases, worst,
              failures);
  return failures == 0 ? 0 : 1;
}
