#pragma once

#include <optional>
#include <utility>

namespace femtonc {

struct TheoryParams {
  int F = 10;
  int C = 2;
  int U = 10;
  double sigma_u = 0.1;
  double sigma_c = 0.7;
  double p_cov = 1.0;  // probability a client lies inside a given FC's disk
  double o1 = 1.0;
  double o2 = 0.0;

  int Hu() const;
  int Hc() const;
};

// min(1, (fc_radius / mbs_radius)^2)
double coverage_probability(double fc_radius, double mbs_radius);

// R = H_c C / F. Throws UnsupportedConfiguration unless integral.
int integer_repetition_index(const TheoryParams& p);
bool has_integer_repetition_index(const TheoryParams& p);

double binomial_coefficient(int n, int k);  // 0 outside 0 <= k <= n
double binomial_pmf(int n, double q, int k);

// Weight of nu~ = k under Bin(n, q) conditioned on k >= 2.
double truncated_binomial_weight(int n, double q, int k);

double pi_mbs(double nu, int F, double sigma_u);
double chi_approx(double nu, double pi, double o2);

// Probability that a pair of same-FC requests is decodable together.
double decodability_sum(int F, int Hc, int Hu);

double pi_dual_full_coverage(const TheoryParams& p);
double pi_dual_general(const TheoryParams& p);

double n_fc_expected(double nu_t, double pi_t, double o1);

// chi_approx at a residual of r clients, clamped to [min(1, r), min(r, F)].
double chi_residual(double r, int F, double sigma_u, double o2);

double chi_expected_full_coverage(const TheoryParams& p);
double chi_expected_general(const TheoryParams& p, std::optional<double> pi_dual = std::nullopt);

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};
Bounds gvs_ggc_bounds(double nu, int F, int C, double sigma_u);

struct TheoryEstimate {
  double pi_mbs = 0.0;
  double pi_dual = 0.0;
  double n_fc_expected = 0.0;
  double chi_expected = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

// Full-coverage formulas when p_cov == 1, general ones otherwise. Bounds are
// evaluated at the predicted residual. pi_dual may be supplied for C > 4.
TheoryEstimate estimate(const TheoryParams& p, std::optional<double> pi_dual = std::nullopt);

}  // namespace femtonc
