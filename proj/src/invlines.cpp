#include "phaseprob/invlines.hpp"

#include "phaseprob/band.hpp"

#include <cmath>

namespace phaseprob {

DirectionPoly direction_poly(const VectorField& f)
{
  const int n = f.degree();
  const auto& p = f.p();
  const auto& q = f.q();
  DirectionPoly out;
  out.coeffs.assign(static_cast<std::size_t>(n + 2), 0.0);
  // Q(1,k) = sum q[j] k^j, k P(1,k) = sum p[j] k^(j+1)
  for (int j = 0; j <= n; ++j) {
    out.coeffs[j] += q[j];
    out.coeffs[j + 1] -= p[j];
  }
  const double s = f.scale();
  out.x_axis_invariant = in_band(p[n], s);
  out.identically_zero = true;
  for (double c : out.coeffs)
    if (!in_band(c, s)) out.identically_zero = false;
  return out;
}

namespace {

int distinct_real_roots(const Poly& t)
{
  if (t.degree() < 1)
    return 0;
  try {
    return sturm_count(t);
  } catch (const NonSquarefreeError&) {
    throw DegenerateLinesError("direction polynomial has a repeated root");
  }
}

// Drops leading coefficients that are in band, for the x = 0 invariant case.
Poly trimmed(const std::vector<double>& coeffs, double scale)
{
  std::vector<double> c = coeffs;
  while (!c.empty() && in_band(c.back(), scale))
    c.pop_back();
  return Poly(std::move(c));
}

int count_generic(const VectorField& f, const DirectionPoly& t)
{
  const double s = f.scale();
  const auto& c = t.coeffs;
  switch (f.degree()) {
    case 1: {
      // t1 = -b k^2 + (d-a) k + c
      const double disc = c[1] * c[1] - 4.0 * c[2] * c[0];
      if (in_band(disc, s * s))
        throw DegenerateLinesError("direction polynomial has a repeated root");
      return disc > 0 ? 2 : 0;
    }
    case 2: {
      // t2 = A k^3 + B k^2 + C k + D
      const double A = c[3], B = c[2], C = c[1], D = c[0];
      const double disc =
        B * B * C * C - 4.0 * A * C * C * C - 4.0 * B * B * B * D - 27.0 * A * A * D * D +
        18.0 * A * B * C * D;
      if (in_band(disc, s * s * s * s))
        throw DegenerateLinesError("direction polynomial has a repeated root");
      return disc > 0 ? 3 : 1;
    }
    case 3: {
      const double lead = c[4];
      try {
        return quartic_real_count(c[3] / lead, c[2] / lead, c[1] / lead, c[0] / lead);
      } catch (const DegenerateSignsError&) {
        return distinct_real_roots(t.poly());
      }
    }
    default:
      return distinct_real_roots(t.poly());
  }
}

} // namespace

LineCount count_lines(const VectorField& f, LineCountOptions options)
{
  const auto t = direction_poly(f);
  if (t.identically_zero)
    throw DegenerateLinesError("t≡0: every line through the origin is invariant");
  if (t.x_axis_invariant) {
    if (!options.allow_vertical_line)
      throw DegenerateLinesError("x=0 is invariant");
    const Poly reduced = trimmed(t.coeffs, f.scale());
    return {distinct_real_roots(reduced) + 1, true};
  }
  return {count_generic(f, t), false};
}

bool InfinitySigns::alternates() const
{
  return signs.size() >= 3 && signs[0] * signs[1] < 0 && signs[1] * signs[2] < 0;
}

InfinitySigns infinity_signs(const VectorField& f)
{
  if (f.degree() != 3)
    throw std::invalid_argument("infinity_signs is defined for cubic fields");
  const auto lines = count_lines(f);
  if (lines.lines != 4)
    throw WrongLineCountError("infinity_signs needs four invariant lines, found " +
                              std::to_string(lines.lines));
  const auto t = direction_poly(f).poly();
  InfinitySigns out;
  out.roots = real_roots(t);
  if (out.roots.size() != 4 || has_close_roots(out.roots))
    throw DegenerateLinesError("roots of t3 are not four separated real roots");
  const double s = f.scale();
  for (double k : out.roots) {
    const double dt = t.eval_with_derivative(k).second;
    const double pk = eval_field(f, 1.0, k).first;
    const double sj = -dt * pk;
    const double mag = s * s * std::pow(1.0 + std::abs(k), 6);
    if (in_band(sj, mag))
      throw DegenerateLinesError("infinity sign s_j is in band");
    out.signs.push_back(sj);
  }
  return out;
}

} // namespace phaseprob
