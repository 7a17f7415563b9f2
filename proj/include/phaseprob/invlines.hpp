#pragma once

#include "phaseprob/field.hpp"
#include "phaseprob/realroots.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace phaseprob {

// Slopes y = k x of invariant lines through the origin are the real roots of
// t(k) = Q(1,k) - k P(1,k). x = 0 is invariant exactly when P(0,1) = 0, i.e.
// when the k^(n+1) coefficient of t vanishes.
struct DirectionPoly
{
  std::vector<double> coeffs;   // n+2 entries, lowest power first, untrimmed
  bool x_axis_invariant = false;
  bool identically_zero = false;

  Poly poly() const { return Poly(coeffs); }
};

DirectionPoly direction_poly(const VectorField& f);

class DegenerateLinesError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class WrongLineCountError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct LineCountOptions
{
  // Count x = 0 as an extra line instead of reporting it as degenerate.
  bool allow_vertical_line = false;
};

struct LineCount
{
  int lines = 0;
  bool vertical_line = false;   // x = 0 was counted
};

// Number of distinct invariant lines through the origin. Degree 1 uses the
// discriminant of t, degree 2 the cubic discriminant, degree 3 the quartic
// root-count criterion with a Sturm fallback, higher degrees Sturm directly.
// Throws DegenerateLinesError for t == 0, repeated roots, or (unless allowed)
// an invariant x = 0.
LineCount count_lines(const VectorField& f, LineCountOptions options = {});

// Infinity singularities of a cubic field with four invariant lines: the
// sorted roots k_j of t and s_j = -t'(k_j) P(1,k_j). s_j < 0 is a saddle
// in direction y = k_j x, s_j > 0 a node.
struct InfinitySigns
{
  std::vector<double> roots;
  std::vector<double> signs;

  bool alternates() const;   // s1 s2 < 0 and s2 s3 < 0
};

// Throws WrongLineCountError unless there are four lines, and
// DegenerateLinesError if roots are too close or some s_j is in band.
InfinitySigns infinity_signs(const VectorField& f);

} // namespace phaseprob
