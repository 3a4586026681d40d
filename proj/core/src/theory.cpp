#include "femtonc/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>
#include <string>

#include "femtonc/error.hpp"
#include "femtonc/model.hpp"

namespace femtonc {

int TheoryParams::Hu() const { return round_half_up(sigma_u * F); }
int TheoryParams::Hc() const { return round_half_up(sigma_c * F); }

double coverage_probability(double fc_radius, double mbs_radius)
{
  if (mbs_radius <= 0) throw InvalidInput("mbs radius must be positive");
  double r = fc_radius / mbs_radius;
  return std::min(1.0, r * r);
}

bool has_integer_repetition_index(const TheoryParams& p)
{
  return p.F > 0 && (static_cast<long long>(p.Hc()) * p.C) % p.F == 0;
}

int integer_repetition_index(const TheoryParams& p)
{
  if (p.F < 1) throw InvalidInput("F must be >= 1");
  if (!has_integer_repetition_index(p))
    throw UnsupportedConfiguration("repetition index H_c*C/F = " + std::to_string(p.Hc()) + "*" +
                                   std::to_string(p.C) + "/" + std::to_string(p.F) +
                                   " is not an integer");
  return p.Hc() * p.C / p.F;
}

double binomial_coefficient(int n, int k)
{
  if (n < 0 || k < 0 || k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

double binomial_pmf(int n, double q, int k)
{
  if (k < 0 || k > n) return 0.0;
  if (q <= 0) return k == 0 ? 1.0 : 0.0;
  if (q >= 1) return k == n ? 1.0 : 0.0;
  double lg = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  return std::exp(lg + k * std::log(q) + (n - k) * std::log1p(-q));
}

namespace {

// P(Bin(n, q) >= 2) = 1 - (1-q)^(n-1) (1 + (n-1) q), kept accurate for small q
double at_least_two(int n, double q)
{
  if (n < 2 || q <= 0) return 0.0;
  if (q >= 1) return 1.0;
  return -std::expm1((n - 1) * std::log1p(-q) + std::log1p((n - 1) * q));
}

}  // namespace

double truncated_binomial_weight(int n, double q, int k)
{
  if (k < 2 || k > n) return 0.0;
  double z = at_least_two(n, q);
  if (z <= 0) throw DegenerateInput("no mass at two or more vertices");
  return binomial_pmf(n, q, k) / z;
}

double pi_mbs(double nu, int F, double sigma_u)
{
  if (nu < 2) throw InvalidInput("pi_mbs needs nu >= 2");
  if (F < 1) throw InvalidInput("pi_mbs needs F >= 1");
  if (sigma_u < 0 || sigma_u > 1) throw InvalidInput("sigma_u must lie in [0, 1]");
  return (1.0 - sigma_u * sigma_u) * nu * (F - 1) / (nu * F - 1);
}

double chi_approx(double nu, double pi, double o2)
{
  if (nu <= 1) throw InvalidInput("chi_approx needs nu > 1");
  if (pi < 0 || pi > 1) throw InvalidInput("pi must lie in [0, 1]");
  if (pi == 1) throw DegenerateInput("chi_approx diverges at pi = 1");
  return (0.5 + o2) * -std::log1p(-pi) * nu / std::log(nu);
}

double decodability_sum(int F, int Hc, int Hu)
{
  if (Hc < 2 || Hu < 1) return 0.0;
  auto B = binomial_coefficient;
  double S = 0.0;
  for (int e1 = 0; e1 <= Hu; ++e1) {
    double p1 = B(Hu, e1) * B(F - Hu, Hu - e1) / B(F, Hu);
    if (p1 == 0) continue;
    const double norm = B(F, Hu - e1);
    for (int e2 = std::max(0, Hu - (F - Hc)); e2 <= std::min(Hu - e1, Hc); ++e2) {
      double p2 = B(Hc, e2) * B(F - Hc, Hu - e1 - e2) / norm;
      if (p2 == 0) continue;
      const int rest = Hc - e2;
      for (int e3 = std::max(0, Hu - (F - rest)); e3 <= std::min(Hu - e1, rest); ++e3) {
        double p3 = B(rest, e3) * B(F - rest, Hu - e1 - e3) / norm;
        S += p1 * p2 * p3 * (static_cast<double>(e2) / Hc) * (static_cast<double>(e3) / (Hc - 1));
      }
    }
  }
  return S;
}

namespace {

double service_term(int U, int R) { return static_cast<double>(R - 1) / (U * R - 1.0); }

void require_dual_domain(const TheoryParams& p, int R)
{
  if (p.U < 1 || p.U * R < 2)
    throw InvalidInput("dual graph needs at least two vertices (U*R >= 2)");
  if (p.sigma_u < 0 || p.sigma_u > 1) throw InvalidInput("sigma_u must lie in [0, 1]");
}

// y_m^2 (y_m - 1)(H_c - 1) / (Y (Y - 1)(y_m H_c - 1))
double same_fc_term(int y, int Y, int Hc)
{
  if (y < 2 || Hc < 2) return 0.0;
  return static_cast<double>(y) * y * (y - 1) * (Hc - 1) /
         (static_cast<double>(Y) * (Y - 1) * (static_cast<double>(y) * Hc - 1));
}

}  // namespace

double pi_dual_full_coverage(const TheoryParams& p)
{
  const int R = integer_repetition_index(p);
  require_dual_domain(p, R);
  const int U = p.U, C = p.C, Hc = p.Hc();
  double coding = 0.0;
  if (U >= 2 && Hc >= 2)
    coding = static_cast<double>(U) * (U - 1) * (Hc - 1) /
             ((U * C - 1.0) * (static_cast<double>(U) * Hc - 1));
  double pi = service_term(U, R) + coding * (1.0 - decodability_sum(p.F, Hc, p.Hu()));
  return std::clamp(pi, 0.0, 1.0);
}

double pi_dual_general(const TheoryParams& p)
{
  if (p.C > 4) throw SolverLimit("pi_dual_general evaluates O(U^C) terms; C must be <= 4");
  const int R = integer_repetition_index(p);
  require_dual_domain(p, R);
  if (p.p_cov < 0 || p.p_cov > 1) throw InvalidInput("P_cov must lie in [0, 1]");
  const int U = p.U, C = p.C, Hc = p.Hc();
  const double P = p.p_cov;

  double coding;
  if (P == 0) {
    // limit P -> 0: only configurations with exactly two covered clients
    coding = (U - 1.0) / (U * C - 1.0) * (Hc >= 2 ? 2.0 * (Hc - 1) / (2.0 * Hc - 1) : 0.0);
  } else {
    // The C-fold sum over (y_1..y_C) is symmetric in m, and the other C-1
    // coverage counts only enter through their total, which is Bin((C-1)U, P).
    const int others = (C - 1) * U;
    std::vector<double> py(U + 1), ps(others + 1);
    for (int y = 0; y <= U; ++y) py[y] = binomial_pmf(U, P, y);
    for (int s = 0; s <= others; ++s) ps[s] = binomial_pmf(others, P, s);
    double num = 0.0;
    for (int y = 2; y <= U; ++y)
      for (int s = 0; s <= others; ++s) num += same_fc_term(y, y + s, Hc) * py[y] * ps[s];
    num *= C;
    const int n = U * C;
    double z = at_least_two(n, P);
    coding = z > 0 ? num / z : 0.0;
  }
  double pi = service_term(U, R) + coding * (1.0 - decodability_sum(p.F, Hc, p.Hu()));
  return std::clamp(pi, 0.0, 1.0);
}

double n_fc_expected(double nu_t, double pi_t, double o1)
{
  if (nu_t < 2) throw InvalidInput("n_fc_expected needs nu~ >= 2");
  if (pi_t < 0 || pi_t > 1) throw InvalidInput("pi~ must lie in [0, 1]");
  if (pi_t == 0) return nu_t;
  if (pi_t == 1) return 1.0;
  const double lnb = -std::log1p(-pi_t);
  auto logb = [&](double x) { return std::log(x) / lnb; };
  double v = 2.0 * logb(std::numbers::e * nu_t / (2.0 * logb(nu_t))) + 1.0 + o1;
  return std::clamp(v, 0.0, nu_t);
}

double chi_residual(double r, int F, double sigma_u, double o2)
{
  if (r <= 0) return 0.0;
  if (r < 2) return std::min(r, 1.0);
  double chi = chi_approx(r, pi_mbs(r, F, sigma_u), o2);
  return std::clamp(chi, 1.0, std::min(r, static_cast<double>(F)));
}

namespace {

double served_given(double nu_t, double pi_t, double o1, int U)
{
  if (nu_t < 2) return std::min<double>(U, nu_t);
  return std::min<double>(U, n_fc_expected(nu_t, pi_t, o1));
}

}  // namespace

double chi_expected_full_coverage(const TheoryParams& p)
{
  const int R = integer_repetition_index(p);
  if (p.U == 0) return 0.0;
  const double nu_t = static_cast<double>(p.U) * R;
  const double pi_t = nu_t >= 2 ? pi_dual_full_coverage(p) : 0.0;
  return chi_residual(p.U - served_given(nu_t, pi_t, p.o1, p.U), p.F, p.sigma_u, p.o2);
}

namespace {

struct NuDistribution {
  int n = 0;
  double q = 0;
  std::vector<double> w;  // w[k] for k in [2, n]
};

NuDistribution nu_distribution(const TheoryParams& p, int R)
{
  NuDistribution d;
  d.n = R * p.U;
  d.q = std::clamp(p.sigma_c * p.p_cov, 0.0, 1.0);
  d.w.assign(d.n + 1, 0.0);
  if (d.q == 0 || d.n < 2) return d;
  double z = at_least_two(d.n, d.q);
  if (z < 1e-12) {
    // closed-form normaliser has cancelled away; sum the tail instead
    z = 0.0;
    for (int k = 2; k <= d.n; ++k) z += binomial_pmf(d.n, d.q, k);
  }
  if (z <= 0) {
    d.w[2] = 1.0;
    return d;
  }
  for (int k = 2; k <= d.n; ++k) d.w[k] = binomial_pmf(d.n, d.q, k) / z;
  return d;
}

double resolve_pi_dual(const TheoryParams& p, std::optional<double> pi_dual)
{
  if (pi_dual) {
    if (*pi_dual < 0 || *pi_dual > 1) throw InvalidInput("pi~ override must lie in [0, 1]");
    return *pi_dual;
  }
  return p.p_cov >= 1 ? pi_dual_full_coverage(p) : pi_dual_general(p);
}

}  // namespace

double chi_expected_general(const TheoryParams& p, std::optional<double> pi_dual)
{
  const int R = integer_repetition_index(p);
  if (p.U == 0) return 0.0;
  NuDistribution d = nu_distribution(p, R);
  if (d.q == 0 || d.n < 2) return chi_residual(p.U, p.F, p.sigma_u, p.o2);
  const double pi_t = resolve_pi_dual(p, pi_dual);
  double chi = 0.0;
  for (int k = 2; k <= d.n; ++k) {
    if (d.w[k] == 0) continue;
    chi += d.w[k] * chi_residual(p.U - served_given(k, pi_t, p.o1, p.U), p.F, p.sigma_u, p.o2);
  }
  return chi;
}

Bounds gvs_ggc_bounds(double nu, int F, int C, double sigma_u)
{
  if (nu < 3) throw InvalidInput("gvs_ggc_bounds needs nu >= 3");
  const double pi = pi_mbs(nu, F, sigma_u);
  const double lnd = -std::log1p(-pi);
  const double lnnu = std::log(nu);
  const double cap = std::max(0, F - C);
  Bounds b;
  b.lower = std::min(nu * lnd / (2.0 * lnnu), cap);
  b.upper = std::min((1.0 + 5.0 * std::log(lnnu) / lnnu) * nu * lnd / lnnu, cap);
  return b;
}

TheoryEstimate estimate(const TheoryParams& p, std::optional<double> pi_dual)
{
  const double nan = std::numeric_limits<double>::quiet_NaN();
  TheoryEstimate e;
  e.pi_mbs = p.U >= 2 ? pi_mbs(p.U, p.F, p.sigma_u) : 0.0;
  const int R = integer_repetition_index(p);
  if (p.U == 0) {
    e.lower_bound = e.upper_bound = nan;
    return e;
  }
  e.pi_dual = p.U * R >= 2 ? resolve_pi_dual(p, pi_dual) : 0.0;
  if (p.p_cov >= 1 && !pi_dual) {
    e.n_fc_expected = served_given(static_cast<double>(p.U) * R, e.pi_dual, p.o1, p.U);
    e.chi_expected = chi_expected_full_coverage(p);
  } else {
    NuDistribution d = nu_distribution(p, R);
    double nfc = 0.0;
    for (int k = 2; k <= d.n; ++k)
      if (d.w[k] > 0) nfc += d.w[k] * served_given(k, e.pi_dual, p.o1, p.U);
    e.n_fc_expected = nfc;
    e.chi_expected = chi_expected_general(p, e.pi_dual);
  }
  const double residual = p.U - e.n_fc_expected;
  if (residual >= 3) {
    Bounds b = gvs_ggc_bounds(residual, p.F, p.C, p.sigma_u);
    e.lower_bound = b.lower;
    e.upper_bound = b.upper;
  } else {
    e.lower_bound = e.upper_bound = nan;
  }
  return e;
}

}  // namespace femtonc
