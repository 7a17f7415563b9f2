#pragma once

#include "phaseprob/field.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace phaseprob {

// The closed-form index criteria only apply to "well-posed" fields; this
// carries the list of violated genericity conditions.
class NotWellPosedError : public std::runtime_error
{
public:
  explicit NotWellPosedError(std::vector<std::string> reasons);
  const std::vector<std::string>& reasons() const { return reasons_; }

private:
  std::vector<std::string> reasons_;
};

class DegenerateFieldError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class WindingError : public std::runtime_error
{
public:
  enum class Kind { vanishes_on_circle, no_convergence };
  WindingError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// Index of a linear field: -1 for a saddle (AD - BC < 0), +1 otherwise.
int linear_index(const VectorField& f);

// Quantities of the quotient-ring reduction y^2 = lambda xy, x^2 = mu xy for
// P = ax^2+bxy+cy^2, Q = dx^2+exy+fy^2. The Jacobian reduces to j xy.
struct QuadraticIndexData
{
  double lambda = 0.0;
  double mu = 0.0;
  double j = 0.0;
  int epsilon = 0;
  bool wellposed = false;
  std::vector<std::string> violations;
};

QuadraticIndexData quadratic_index_data(const VectorField& f);

// 0 iff lambda*mu < 1; otherwise +2 or -2 by the sign of epsilon (lambda + mu).
int quadratic_index(const VectorField& f);

// For P = ax^3+bx^2y+cxy^2+dy^3, Q = ex^3+fx^2y+gxy^2+hy^3 the quotient ring
// reduces x^3 = r x^2y + s xy^2, y^3 = p x^2y + q xy^2 and every quartic
// monomial to a multiple h_k of x^2y^2. The signature of the induced form
// equals that of S(z) = z^3 + alpha z^2 + beta z + gamma; C2 and D3 are its
// Sturm/discriminant quantities.
struct CubicIndexData
{
  double r = 0.0, s = 0.0, p = 0.0, q = 0.0;
  double h1 = 0.0, h2 = 0.0, h3 = 0.0, h4 = 0.0;
  double j = 0.0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  double c2 = 0.0, d3 = 0.0;
  int epsilon = 0;
  bool wellposed = false;
  std::vector<std::string> violations;
};

CubicIndexData cubic_index_data(const VectorField& f);

int cubic_index(const VectorField& f);

// Dispatches on degree (1, 2 or 3).
int symbolic_index(const VectorField& f);

// Turns of f(r cos t, r sin t) over one revolution, rounded. Sampling starts
// at 2^10 points and doubles until every step turns by less than pi/2, the
// raw value is within `integer_tol` of an integer, and two consecutive
// levels agree.
int winding_index(const VectorField& f, double radius = 1.0, double integer_tol = 0.01);

} // namespace phaseprob
