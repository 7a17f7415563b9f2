#pragma once

#include <vector>

namespace phaseprob {

// Gaussian law of the direction polynomial t(k) = C_0 + ... + C_{n+1} k^(n+1)
// of a random degree-n field: independent coefficients, C_0 and C_{n+1} with
// variance 1, the interior ones with variance 2.
struct EKSpec
{
  int n = 1;
  std::vector<double> variances;   // diagonal of the covariance, size n+2
};

EKSpec ek_spec(int n);

// (1/pi) |w'(k)| with w the normalized covariance-weighted moment curve.
double ek_integrand(const EKSpec& spec, double kappa);

// Expected number of invariant lines: the integral of ek_integrand over the
// real line, computed after k = tan(u). Throws NoConvergenceError.
double expected_lines(int n, double tol = 1e-10);

} // namespace phaseprob
