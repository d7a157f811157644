#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace perclab {

// Real-valued function on {0,1}^K under the product Bernoulli(p) measure,
// stored as a full table indexed by bit pattern (bit k = coordinate k).
class CubeFunction {
 public:
  CubeFunction(int K, double p, std::vector<double> table);
  static CubeFunction constant(int K, double p, double c);

  int K() const { return K_; }
  double p() const { return p_; }
  std::uint32_t points() const { return 1u << K_; }
  double operator()(std::uint32_t t) const { return table_[t]; }
  const std::vector<double>& table() const { return table_; }
  std::vector<double>& table() { return table_; }

  // Probability of the point t.
  double weight(std::uint32_t t) const;

 private:
  int K_;
  double p_;
  std::vector<double> table_;
  std::vector<double> pow_;  // p^j (1-p)^(K-j) by popcount
};

double expectation(const CubeFunction& f);
double variance(const CubeFunction& f);
double abs_expectation(const CubeFunction& f);

// Martingale increments V_k = E[f|F_k] - E[f|F_{k-1}] along a coordinate
// ordering; each increment is stored as a full-cube table (constant in the
// unseen coordinates).
struct MartingaleDecomposition {
  std::vector<int> ordering;
  std::vector<CubeFunction> increments;
};

MartingaleDecomposition decompose(const CubeFunction& f,
                                  const std::vector<int>& ordering);
MartingaleDecomposition decompose(const CubeFunction& f);  // natural order

// Ent(g) = E[g log(g / E g)] for g >= 0, with 0 log 0 = 0.
double entropy(const CubeFunction& g);

// Delta_k f = f with coordinate k forced to 0, minus f with it forced to 1.
CubeFunction discrete_gradient(const CubeFunction& f, int k);

struct SlackReport {
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool vacuous = false;
};

// Var(f) log(Var(f) / sum (E|V_k|)^2)  <=  sum Ent(V_k^2)
SlackReport check_falik_samorodnitsky(const CubeFunction& f);

// Numerically maximal ratio Ent(g^2) / (g(0)-g(1))^2 over g >= 0 on {0,1}.
double bernoulli_lsi_constant(double p);

// sum Ent(V_k^2) <= C(p) sum E[(Delta_k f)^2]
SlackReport check_entropy_gradient_bound(const CubeFunction& f);

// Ent(f) <= sum_k E[Ent_k(f)] for f >= 0.
SlackReport check_tensorization(const CubeFunction& f);

// Var(f) <= p(1-p) sum_k E[(Delta_k f)^2]
SlackReport check_efron_stein(const CubeFunction& f);

std::vector<SlackReport> all_checks(const CubeFunction& f);

}  // namespace perclab
