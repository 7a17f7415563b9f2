#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phaseprob {

// Planar homogeneous polynomial vector field of degree n:
//
//   x' = P(x,y) = sum_k p[k] x^(n-k) y^k
//   y' = Q(x,y) = sum_k q[k] x^(n-k) y^k
//
// Coefficients are stored in descending x-power. For n = 2 this is
// (a,b,c | d,e,f) with P = ax^2+bxy+cy^2, Q = dx^2+exy+fy^2; for n = 3 it is
// (a,b,c,d | e,f,g,h). The flat text form is "p0,...,pn,q0,...,qn".
class VectorField
{
public:
  VectorField(int degree, std::vector<double> p, std::vector<double> q);

  // Splits 2n+2 coefficients into the P and Q halves.
  static VectorField from_flat(int degree, std::span<const double> coeffs);

  int degree() const { return degree_; }
  const std::vector<double>& p() const { return p_; }
  const std::vector<double>& q() const { return q_; }

  // Largest coefficient magnitude, the scale used by degeneracy bands.
  double scale() const;

  std::vector<double> flat() const;

  VectorField negated() const;
  VectorField swapped() const;        // (P,Q) -> (Q,P)
  VectorField negated_q() const;      // (P,Q) -> (P,-Q)

  bool operator==(const VectorField&) const = default;

private:
  int degree_;
  std::vector<double> p_;
  std::vector<double> q_;
};

// (P(x,y), Q(x,y)) by direct monomial summation.
std::pair<double, double> eval_field(const VectorField& f, double x, double y);

// Multiplies every coefficient by lambda > 0; throws std::invalid_argument otherwise.
VectorField scale_field(const VectorField& f, double lambda);

// Parses "1,0,-2.5e-3" into reals. Throws std::invalid_argument on malformed input.
std::vector<double> parse_coefficients(std::string_view text);

std::string format_coefficients(const VectorField& f);

enum class Portrait
{
  L1, L2, L3,
  Q1, Q2, Q3, Q4, Q5,
  C1, C2, C3, C4, C5, C6, C7, C8, C9,
};

inline constexpr int kPortraitCount = 17;

std::string_view to_string(Portrait label);
int degree_of(Portrait label);

// All labels of one degree, in numbering order.
std::vector<Portrait> portraits_of_degree(int degree);

} // namespace phaseprob
