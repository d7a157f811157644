#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace perclab {

double mean(const std::vector<double>& v);
double sample_variance(const std::vector<double>& v);  // n-1 denominator

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Percentile bootstrap over replica-level values; deterministic given seed.
Interval bootstrap_ci(const std::vector<double>& values,
                      const std::function<double(const std::vector<double>&)>& stat,
                      int resamples, std::uint64_t seed, double level = 0.95);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int n = 0;
};

// Weighted least squares y ~ intercept + slope x; r2 is the weighted
// coefficient of determination.
LineFit weighted_linfit(const std::vector<double>& x,
                        const std::vector<double>& y,
                        const std::vector<double>& w);

// Least-squares scale for the one-parameter model y ~ a * g(x).
double fit_scale(const std::vector<double>& g, const std::vector<double>& y);

}  // namespace perclab
