#pragma once

#include <cmath>

namespace phaseprob {

// Relative width of the degeneracy band. A sign quantity with natural
// magnitude M (typically scale^degree of its inputs) counts as zero when
// |value| <= kBandRelative * M. Purely relative, so rescaling a field never
// moves a quantity into or out of the band.
inline constexpr double kBandRelative = 1e-10;

inline bool in_band(double value, double magnitude)
{
  return !(std::abs(value) > kBandRelative * magnitude);
}

// A sum accumulated together with the sum of its terms' magnitudes, the
// scale of its rounding error and hence its band magnitude.
struct TermSum
{
  double value = 0.0;
  double magnitude = 0.0;

  TermSum& operator+=(double term)
  {
    value += term;
    magnitude += std::abs(term);
    return *this;
  }

  bool in_band() const { return phaseprob::in_band(value, magnitude); }
};

inline int sign_of(double v)
{
  return (v > 0.0) - (v < 0.0);
}

} // namespace phaseprob
