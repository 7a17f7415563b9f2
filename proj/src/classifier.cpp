#include "phaseprob/classifier.hpp"

#include "phaseprob/band.hpp"
#include "phaseprob/index.hpp"
#include "phaseprob/invlines.hpp"
#include "phaseprob/quadrature.hpp"
#include "phaseprob/realroots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace phaseprob {

std::string_view to_string(IndexSource source)
{
  switch (source) {
    case IndexSource::symbolic: return "symbolic";
    case IndexSource::forced_by_no_lines: return "forced_by_no_lines";
    case IndexSource::winding_oracle: return "winding_oracle";
  }
  return "?";
}

std::string_view to_string(Stability s)
{
  switch (s) {
    case Stability::attractor: return "attractor";
    case Stability::repeller: return "repeller";
    case Stability::neither: return "neither";
  }
  return "?";
}

std::vector<PortraitEntry> portrait_table(int degree)
{
  using P = Portrait;
  switch (degree) {
    case 1:
      return {{-1, 2, {P::L1}}, {1, 2, {P::L2}}, {1, 0, {P::L3}}};
    case 2:
      return {{-2, 3, {P::Q1}}, {0, 3, {P::Q2}}, {2, 3, {P::Q3}},
              {0, 1, {P::Q4}}, {2, 1, {P::Q5}}};
    case 3:
      return {{-3, 4, {P::C1}}, {-1, 4, {P::C2}}, {1, 4, {P::C3, P::C4}},
              {3, 4, {P::C5}},  {-1, 2, {P::C6}}, {1, 2, {P::C7}},
              {3, 2, {P::C8}},  {1, 0, {P::C9}}};
    default:
      throw std::invalid_argument("portrait tables exist for degrees 1-3");
  }
}

std::optional<PortraitEntry> lookup_portrait(int degree, int index, int lines)
{
  for (auto& e : portrait_table(degree))
    if (e.index == index && e.lines == lines)
      return e;
  return std::nullopt;
}

ClassificationOutcome classify(const VectorField& f, ClassifyOptions options)
{
  const int n = f.degree();
  if (n < 1 || n > 3)
    throw std::invalid_argument("classification is defined for degrees 1-3");

  LineCount lines;
  try {
    lines = count_lines(f, {.allow_vertical_line = options.allow_vertical_line});
  } catch (const DegenerateLinesError& e) {
    return Degenerate{{e.what()}};
  }

  Classified out{.label = Portrait::L1, .lines = lines.lines, .vertical_line = lines.vertical_line};
  try {
    out.index = symbolic_index(f);
  } catch (const NotWellPosedError& e) {
    if (lines.lines == 0) {
      out.index = 1;
      out.index_source = IndexSource::forced_by_no_lines;
    } else if (options.oracle_fallback) {
      try {
        out.index = winding_index(f);
        out.index_source = IndexSource::winding_oracle;
      } catch (const WindingError& w) {
        auto reasons = e.reasons();
        reasons.emplace_back(w.what());
        return Degenerate{std::move(reasons)};
      }
    } else {
      return Degenerate{e.reasons()};
    }
  } catch (const DegenerateFieldError& e) {
    return Degenerate{{e.what()}};
  }

  const auto entry = lookup_portrait(n, out.index, out.lines);
  if (!entry)
    return UnrealizedPair{out.index, out.lines};
  out.label = entry->labels.front();
  if (entry->labels.size() > 1) {
    // C3 vs C4: node-saddle-node-saddle at infinity is C4.
    try {
      const auto signs = infinity_signs(f);
      out.label = signs.alternates() ? Portrait::C4 : Portrait::C3;
      out.tiebreak_used = true;
    } catch (const std::runtime_error& e) {
      return Degenerate{{e.what()}};
    }
  }
  return out;
}

ClassificationOutcome classify_linear(double A, double B, double C, double D)
{
  const double s = std::max({std::abs(A), std::abs(B), std::abs(C), std::abs(D)});
  const double det = A * D - B * C;
  const double trace = A + D;
  const double disc = trace * trace - 4.0 * det;
  std::vector<std::string> reasons;
  if (in_band(det, s * s)) reasons.emplace_back("det=0: origin not isolated");
  if (in_band(trace, s)) reasons.emplace_back("trace=0: center or saddle with zero trace");
  if (in_band(disc, s * s)) reasons.emplace_back("disc=0: degenerate node");
  if (det < 0 && !in_band(det, s * s)) {
    // A saddle is decided by the determinant alone.
    return Classified{.label = Portrait::L1, .index = -1, .lines = 2};
  }
  if (!reasons.empty())
    return Degenerate{std::move(reasons)};
  if (disc > 0)
    return Classified{.label = Portrait::L2, .index = 1, .lines = 2};
  return Classified{.label = Portrait::L3, .index = 1, .lines = 0};
}

Stability global_stability(const VectorField& f)
{
  const int n = f.degree();
  if (n % 2 == 0)
    throw std::invalid_argument("global attractors only exist for odd degree");
  const double s = f.scale();

  const auto lines = count_lines(f, {.allow_vertical_line = true});
  if (lines.lines > 0) {
    std::vector<double> speeds;
    if (lines.vertical_line)
      speeds.push_back(eval_field(f, 0.0, 1.0).second);
    auto t = direction_poly(f);
    std::vector<double> c = t.coeffs;
    if (lines.vertical_line)
      while (!c.empty() && in_band(c.back(), s)) c.pop_back();
    const Poly tp(std::move(c));
    if (tp.degree() >= 1) {
      const auto roots = real_roots(tp);
      if (static_cast<int>(roots.size()) + (lines.vertical_line ? 1 : 0) != lines.lines ||
          has_close_roots(roots))
        throw BandHitError("invariant directions could not be resolved");
      for (double k : roots) {
        const double speed = eval_field(f, 1.0, k).first;
        if (in_band(speed, s * std::pow(1.0 + std::abs(k), n)))
          throw BandHitError("radial speed on an invariant direction is in band");
        speeds.push_back(speed);
      }
    }
    bool all_in = true;
    bool all_out = true;
    for (double v : speeds) {
      all_in = all_in && v < 0;
      all_out = all_out && v > 0;
    }
    if (all_in) return Stability::attractor;
    if (all_out) return Stability::repeller;
    return Stability::neither;
  }

  // No invariant direction: Theta keeps one sign and every orbit winds
  // around the origin. d(log r)/d(theta) = R/Theta.
  auto polar = [&f](double th) {
    const double c = std::cos(th), sn = std::sin(th);
    const auto [P, Q] = eval_field(f, c, sn);
    return std::pair{c * P + sn * Q, c * Q - sn * P};
  };
  const int orientation = sign_of(polar(0.0).second);
  bool sign_flip = false;
  double min_theta = std::numeric_limits<double>::infinity();
  auto integrand = [&](double th) {
    const auto [R, Th] = polar(th);
    if (sign_of(Th) != orientation) sign_flip = true;
    min_theta = std::min(min_theta, std::abs(Th));
    return R / std::abs(Th);
  };
  // Only the sign of the gain matters, so refinement also stops once the
  // error estimate is a small fraction of the value.
  constexpr double tol = 1e-8;
  constexpr double sign_rel_tol = 1e-3;
  double gain = 0.0;
  try {
    gain = integrate_adaptive(integrand, 0.0, 2.0 * std::numbers::pi, tol, 4000, sign_rel_tol).value;
  } catch (const NoConvergenceError&) {
    throw BandHitError("log-radius integral did not converge");
  }
  if (orientation == 0 || sign_flip || in_band(min_theta, s))
    throw BandHitError("angular speed is not bounded away from zero");
  if (std::abs(gain) <= 10.0 * tol)
    throw BandHitError("log-radius gain per revolution is in band");
  return gain < 0 ? Stability::attractor : Stability::repeller;
}

bool is_global_attractor(const VectorField& f)
{
  return global_stability(f) == Stability::attractor;
}

bool is_global_repeller(const VectorField& f)
{
  return global_stability(f) == Stability::repeller;
}

} // namespace phaseprob
