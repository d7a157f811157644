#include "perclab/cube.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace perclab {

namespace {

constexpr int kMaxDecomposeK = 16;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Marginalizes coordinate k: result is constant in bit k.
std::vector<double> marginalize(const std::vector<double>& t, int K, int k,
                                double p) {
  std::vector<double> out(t.size());
  const double q = 1.0 - p;
  const std::uint32_t bit = 1u << k;
  for (std::uint32_t i = 0; i < (1u << K); ++i) {
    if (i & bit) continue;
    double m = q * t[i] + p * t[i | bit];
    out[i] = m;
    out[i | bit] = m;
  }
  return out;
}

}  // namespace

CubeFunction::CubeFunction(int K, double p, std::vector<double> table)
    : K_(K), p_(p), table_(std::move(table)) {
  if (K < 1 || K > 24)
    throw std::invalid_argument("CubeFunction: K must be in [1,24]");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("CubeFunction: p must be in (0,1)");
  if (table_.size() != (std::size_t{1} << K))
    throw std::invalid_argument("CubeFunction: table size must be 2^K");
  pow_.resize(K + 1);
  for (int j = 0; j <= K; ++j)
    pow_[j] = std::pow(p, j) * std::pow(1.0 - p, K - j);
}

CubeFunction CubeFunction::constant(int K, double p, double c) {
  return CubeFunction(K, p, std::vector<double>(std::size_t{1} << K, c));
}

double CubeFunction::weight(std::uint32_t t) const {
  return pow_[std::popcount(t)];
}

double expectation(const CubeFunction& f) {
  double s = 0.0;
  for (std::uint32_t t = 0; t < f.points(); ++t) s += f.weight(t) * f(t);
  return s;
}

double variance(const CubeFunction& f) {
  double m = expectation(f);
  double s = 0.0;
  for (std::uint32_t t = 0; t < f.points(); ++t) {
    double d = f(t) - m;
    s += f.weight(t) * d * d;
  }
  return s;
}

double abs_expectation(const CubeFunction& f) {
  double s = 0.0;
  for (std::uint32_t t = 0; t < f.points(); ++t)
    s += f.weight(t) * std::abs(f(t));
  return s;
}

MartingaleDecomposition decompose(const CubeFunction& f,
                                  const std::vector<int>& ordering) {
  const int K = f.K();
  if (K > kMaxDecomposeK)
    throw std::invalid_argument("decompose: K too large for full-table increments");
  if (static_cast<int>(ordering.size()) != K)
    throw std::invalid_argument("decompose: ordering size mismatch");
  std::vector<char> seen(K, 0);
  for (int k : ordering) {
    if (k < 0 || k >= K || seen[k])
      throw std::invalid_argument("decompose: ordering is not a permutation");
    seen[k] = 1;
  }
  MartingaleDecomposition out;
  out.ordering = ordering;
  out.increments.reserve(K);
  // cond[j] = E[f | coordinates ordering[0..j-1]]
  std::vector<std::vector<double>> cond(K + 1);
  cond[K] = f.table();
  for (int j = K; j >= 1; --j)
    cond[j - 1] = marginalize(cond[j], K, ordering[j - 1], f.p());
  for (int j = 1; j <= K; ++j) {
    std::vector<double> v(cond[j].size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = cond[j][i] - cond[j - 1][i];
    out.increments.emplace_back(K, f.p(), std::move(v));
  }
  return out;
}

MartingaleDecomposition decompose(const CubeFunction& f) {
  std::vector<int> ordering(f.K());
  for (int k = 0; k < f.K(); ++k) ordering[k] = k;
  return decompose(f, ordering);
}

double entropy(const CubeFunction& g) {
  double mean = 0.0;
  for (std::uint32_t t = 0; t < g.points(); ++t) {
    if (g(t) < 0.0)
      throw std::invalid_argument("entropy: function must be nonnegative");
    mean += g.weight(t) * g(t);
  }
  if (mean == 0.0) return 0.0;
  double s = 0.0;
  for (std::uint32_t t = 0; t < g.points(); ++t)
    s += g.weight(t) * xlogx(g(t));
  return s - xlogx(mean);
}

CubeFunction discrete_gradient(const CubeFunction& f, int k) {
  if (k < 0 || k >= f.K())
    throw std::invalid_argument("discrete_gradient: bad coordinate");
  const std::uint32_t bit = 1u << k;
  std::vector<double> t(f.points());
  for (std::uint32_t i = 0; i < f.points(); ++i)
    t[i] = f(i & ~bit) - f(i | bit);
  return CubeFunction(f.K(), f.p(), std::move(t));
}

SlackReport check_falik_samorodnitsky(const CubeFunction& f) {
  SlackReport rep;
  rep.check = "falik_samorodnitsky";
  double var = variance(f);
  auto dec = decompose(f);
  double sum_absmean_sq = 0.0;
  double sum_ent = 0.0;
  for (const auto& v : dec.increments) {
    double a = abs_expectation(v);
    sum_absmean_sq += a * a;
    std::vector<double> sq(v.points());
    for (std::uint32_t t = 0; t < v.points(); ++t) sq[t] = v(t) * v(t);
    sum_ent += entropy(CubeFunction(v.K(), v.p(), std::move(sq)));
  }
  if (var <= 0.0 || sum_absmean_sq <= 0.0) {
    rep.vacuous = true;
    return rep;
  }
  rep.lhs = var * std::log(var / sum_absmean_sq);
  rep.rhs = sum_ent;
  rep.slack = rep.rhs - rep.lhs;
  return rep;
}

namespace {

double lsi_ratio(double theta, double p) {
  const double q = 1.0 - p;
  double g0 = std::cos(theta), g1 = std::sin(theta);
  double d = g0 - g1;
  // removable singularity at g0 == g1: the ratio tends to 2p(1-p) and the
  // direct evaluation loses all precision to cancellation in that band
  if (std::abs(d) < 1e-3) return 2.0 * p * q;
  double a = g0 * g0, b = g1 * g1;
  double mean = q * a + p * b;
  double ent = q * xlogx(a) + p * xlogx(b) - xlogx(mean);
  return ent / (d * d);
}

}  // namespace

double bernoulli_lsi_constant(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("bernoulli_lsi_constant: p must be in (0,1)");
  static std::map<double, double> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  const double pi4 = std::atan(1.0);
  const double hi = 2.0 * pi4;  // pi/2
  const double guard = 1e-6;    // keep away from the removable g0 == g1 point
  const int n = 20000;
  double best_theta = 0.0, best = lsi_ratio(0.0, p);
  for (int i = 1; i <= n; ++i) {
    double theta = hi * i / n;
    if (std::abs(theta - pi4) < guard) continue;
    double r = lsi_ratio(theta, p);
    if (r > best) {
      best = r;
      best_theta = theta;
    }
  }
  // golden-section refinement around the best grid point
  double lo = std::max(0.0, best_theta - hi / n);
  double up = std::min(hi, best_theta + hi / n);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = up - gr * (up - lo), dpt = lo + gr * (up - lo);
  double fc = lsi_ratio(c, p), fd = lsi_ratio(dpt, p);
  while (up - lo > 1e-10) {
    if (fc > fd) {
      up = dpt;
      dpt = c;
      fd = fc;
      c = up - gr * (up - lo);
      fc = lsi_ratio(c, p);
    } else {
      lo = c;
      c = dpt;
      fc = fd;
      dpt = lo + gr * (up - lo);
      fd = lsi_ratio(dpt, p);
    }
  }
  best = std::max(best, std::max(fc, fd));
  // value at the removable point g0 == g1
  best = std::max(best, 2.0 * p * (1.0 - p));
  {
    std::lock_guard<std::mutex> lk(mtx);
    cache[p] = best;
  }
  return best;
}

SlackReport check_entropy_gradient_bound(const CubeFunction& f) {
  SlackReport rep;
  rep.check = "entropy_gradient";
  auto dec = decompose(f);
  double sum_ent = 0.0;
  for (const auto& v : dec.increments) {
    std::vector<double> sq(v.points());
    for (std::uint32_t t = 0; t < v.points(); ++t) sq[t] = v(t) * v(t);
    sum_ent += entropy(CubeFunction(v.K(), v.p(), std::move(sq)));
  }
  double sum_grad = 0.0;
  for (int k = 0; k < f.K(); ++k) {
    CubeFunction g = discrete_gradient(f, k);
    for (std::uint32_t t = 0; t < g.points(); ++t)
      sum_grad += g.weight(t) * g(t) * g(t);
  }
  rep.lhs = sum_ent;
  rep.rhs = bernoulli_lsi_constant(f.p()) * sum_grad;
  rep.slack = rep.rhs - rep.lhs;
  return rep;
}

SlackReport check_tensorization(const CubeFunction& f) {
  SlackReport rep;
  rep.check = "tensorization";
  rep.lhs = entropy(f);  // throws on negative entries
  const double p = f.p(), q = 1.0 - p;
  double rhs = 0.0;
  for (int k = 0; k < f.K(); ++k) {
    const std::uint32_t bit = 1u << k;
    for (std::uint32_t t = 0; t < f.points(); ++t) {
      if (t & bit) continue;
      double a = f(t), b = f(t | bit);
      double m = q * a + p * b;
      double ent_k = q * xlogx(a) + p * xlogx(b) - xlogx(m);
      rhs += (f.weight(t) / q) * ent_k;
    }
  }
  rep.rhs = rhs;
  rep.slack = rep.rhs - rep.lhs;
  return rep;
}

SlackReport check_efron_stein(const CubeFunction& f) {
  SlackReport rep;
  rep.check = "efron_stein";
  rep.lhs = variance(f);
  double sum_grad = 0.0;
  for (int k = 0; k < f.K(); ++k) {
    CubeFunction g = discrete_gradient(f, k);
    for (std::uint32_t t = 0; t < g.points(); ++t)
      sum_grad += g.weight(t) * g(t) * g(t);
  }
  rep.rhs = f.p() * (1.0 - f.p()) * sum_grad;
  rep.slack = rep.rhs - rep.lhs;
  return rep;
}

std::vector<SlackReport> all_checks(const CubeFunction& f) {
  std::vector<SlackReport> out;
  out.push_back(check_falik_samorodnitsky(f));
  out.push_back(check_entropy_gradient_bound(f));
  out.push_back(check_efron_stein(f));
  bool nonneg = true;
  for (std::uint32_t t = 0; t < f.points() && nonneg; ++t)
    if (f(t) < 0.0) nonneg = false;
  if (nonneg) {
    out.push_back(check_tensorization(f));
  } else {
    SlackReport rep;
    rep.check = "tensorization";
    rep.vacuous = true;  // requires f >= 0
    out.push_back(rep);
  }
  return out;
}

}  // namespace perclab
