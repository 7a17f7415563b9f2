#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phaseprob {

// Univariate real polynomial, coefficients lowest degree first. Trailing
// (leading-degree) exact zeros are trimmed; the zero polynomial has no
// coefficients and degree -1.
class Poly
{
public:
  Poly() = default;
  explicit Poly(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  double leading() const { return c_.empty() ? 0.0 : c_.back(); }
  double operator[](int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0.0; }
  const std::vector<double>& coeffs() const { return c_; }

  double operator()(double x) const;
  // Value and first derivative in one Horner pass.
  std::pair<double, double> eval_with_derivative(double x) const;
  Poly derivative() const;
  double max_abs_coeff() const;

private:
  std::vector<double> c_;
};

class NonSquarefreeError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Raised by the closed-form lemma paths when a gating sign quantity falls
// inside the degeneracy band. `quantities` names the offending values.
class DegenerateSignsError : public std::runtime_error
{
public:
  explicit DegenerateSignsError(std::vector<std::string> quantities);
  const std::vector<std::string>& quantities() const { return quantities_; }

private:
  std::vector<std::string> quantities_;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Sturm chain p, p', -rem(...), each term divided by |leading coefficient|.
// Throws NonSquarefreeError if the chain ends in a positive-degree term.
std::vector<Poly> sturm_sequence(const Poly& p);

// Number of distinct real roots of squarefree p in (lo, hi). Endpoints may be
// infinite; finite endpoints must not be roots (std::invalid_argument).
int sturm_count(const Poly& p, double lo = -kInf, double hi = kInf);

struct Witness
{
  std::string name;
  double value;
};

struct RealRootProfile
{
  int n_negative = 0;
  int n_zero = 0;
  int n_positive = 0;
  bool distinct = true;
  std::vector<Witness> witnesses;

  int total() const { return n_negative + n_zero + n_positive; }
};

// Signs of the real roots of x^3 + a x^2 + b x + c from the discriminant and
// Sturm-chain quantities c2 = ab - 9c, d2 = a^2 - 3b, d3 (discriminant).
// Throws DegenerateSignsError if a quantity the decision reads (d3 and c,
// plus b and c2 when d3 > 0) is in band.
RealRootProfile cubic_signature(double a, double b, double c);

// Number of real roots (0, 2 or 4) of x^4 + a x^3 + b x^2 + c x + d from the
// signs of d2, d3 and the discriminant d4. Throws DegenerateSignsError when
// d4, or a d2/d3 the decision reads, is in band.
int quartic_real_count(double a, double b, double c, double d);

struct QuarticRootCount
{
  int real_roots = 0;
  std::vector<Witness> witnesses;   // c2, c3, d2, d3, d4
};

// Same, with the witness values attached.
QuarticRootCount quartic_profile(double a, double b, double c, double d);

// All complex roots from the eigenvalues of the balanced companion matrix.
// Requires degree >= 1.
std::vector<std::complex<double>> companion_roots(const Poly& p);

inline constexpr double kImagTolerance = 1e-8;

inline bool is_numerically_real(std::complex<double> z, double tau = kImagTolerance)
{
  return std::abs(z.imag()) < tau * (1.0 + std::abs(z.real()));
}

int count_real(const std::vector<std::complex<double>>& roots, double tau = kImagTolerance);

// Real roots (ascending), each polished by a few Newton steps on p.
std::vector<double> real_roots(const Poly& p, double tau = kImagTolerance);

// True when two consecutive sorted roots are closer than 1e-8 (1 + |root|).
bool has_close_roots(const std::vector<double>& sorted_roots);

} // namespace phaseprob
