#include "perclab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "perclab/rng.hpp"

namespace perclab {

double mean(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("mean: empty sample");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v) {
  if (v.size() < 2) throw std::invalid_argument("sample_variance: need n >= 2");
  double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

Interval bootstrap_ci(
    const std::vector<double>& values,
    const std::function<double(const std::vector<double>&)>& stat,
    int resamples, std::uint64_t seed, double level) {
  if (values.size() < 2)
    throw std::invalid_argument("bootstrap_ci: need n >= 2");
  if (resamples < 2) throw std::invalid_argument("bootstrap_ci: resamples");
  const std::size_t n = values.size();
  std::vector<double> stats(resamples);
  std::vector<double> draw(n);
  for (int b = 0; b < resamples; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t h = counter_hash(seed, static_cast<std::uint64_t>(b), i);
      draw[i] = values[h % n];
    }
    stats[b] = stat(draw);
  }
  std::sort(stats.begin(), stats.end());
  double alpha = (1.0 - level) / 2.0;
  auto quantile = [&](double q) {
    double pos = q * (resamples - 1);
    std::size_t i = static_cast<std::size_t>(pos);
    double frac = pos - static_cast<double>(i);
    if (i + 1 >= stats.size()) return stats.back();
    return stats[i] * (1.0 - frac) + stats[i + 1] * frac;
  };
  return {quantile(alpha), quantile(1.0 - alpha)};
}

LineFit weighted_linfit(const std::vector<double>& x,
                        const std::vector<double>& y,
                        const std::vector<double>& w) {
  if (x.size() != y.size() || x.size() != w.size() || x.size() < 2)
    throw std::invalid_argument("weighted_linfit: bad inputs");
  double sw = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    sx += w[i] * x[i];
    sy += w[i] * y[i];
  }
  if (sw <= 0) throw std::invalid_argument("weighted_linfit: zero weight");
  double mx = sx / sw, my = sy / sw;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += w[i] * (x[i] - mx) * (x[i] - mx);
    sxy += w[i] * (x[i] - mx) * (y[i] - my);
    syy += w[i] * (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0) throw std::invalid_argument("weighted_linfit: degenerate x");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.n = static_cast<int>(x.size());
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += w[i] * r * r;
  }
  fit.r2 = (syy > 0) ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

double fit_scale(const std::vector<double>& g, const std::vector<double>& y) {
  if (g.size() != y.size() || g.empty())
    throw std::invalid_argument("fit_scale: bad inputs");
  double num = 0, den = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    num += g[i] * y[i];
    den += g[i] * g[i];
  }
  if (den <= 0) throw std::invalid_argument("fit_scale: degenerate model");
  return num / den;
}

}  // namespace perclab
