#include "phaseprob/kostlan.hpp"

#include "phaseprob/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phaseprob {

EKSpec ek_spec(int n)
{
  if (n < 1)
    throw std::invalid_argument("Lambda_n needs n >= 1");
  EKSpec spec;
  spec.n = n;
  spec.variances.assign(static_cast<std::size_t>(n + 2), 2.0);
  spec.variances.front() = 1.0;
  spec.variances.back() = 1.0;
  return spec;
}

namespace {

// |w'|^2 = (<v,v><v',v'> - <v,v'>^2) / <v,v>^2 with v_k = sqrt(M_k) k^k.
double norm_w_prime(const std::vector<double>& var, double kappa)
{
  double vv = 0.0, dd = 0.0, vd = 0.0;
  double pow_k = 1.0;        // kappa^k
  double pow_km1 = 0.0;      // kappa^(k-1)
  for (std::size_t k = 0; k < var.size(); ++k) {
    const double v = pow_k;
    const double dv = static_cast<double>(k) * pow_km1;
    vv += var[k] * v * v;
    dd += var[k] * dv * dv;
    vd += var[k] * v * dv;
    pow_km1 = pow_k;
    pow_k *= kappa;
  }
  const double num = std::max(vv * dd - vd * vd, 0.0);
  return std::sqrt(num) / vv;
}

bool palindromic(const std::vector<double>& var)
{
  for (std::size_t i = 0, j = var.size() - 1; i < j; ++i, --j)
    if (var[i] != var[j]) return false;
  return true;
}

} // namespace

double ek_integrand(const EKSpec& spec, double kappa)
{
  // For a palindromic covariance the density is invariant under k -> 1/k
  // (with dk = -dt/t^2), which keeps the moment vector bounded.
  if (std::abs(kappa) > 1.0 && palindromic(spec.variances)) {
    const double t = 1.0 / kappa;
    return norm_w_prime(spec.variances, t) * t * t / std::numbers::pi;
  }
  return norm_w_prime(spec.variances, kappa) / std::numbers::pi;
}

double expected_lines(int n, double tol)
{
  if (!(tol > 0.0))
    throw std::invalid_argument("tolerance must be positive");
  const auto spec = ek_spec(n);
  auto integrand = [&spec](double u) {
    const double c = std::cos(u);
    return ek_integrand(spec, std::tan(u)) / (c * c);
  };
  const double half_pi = 0.5 * std::numbers::pi;
  return integrate_adaptive(integrand, -half_pi, half_pi, tol, 20000).value;
}

} // namespace phaseprob
