#include "phaseprob/svg.hpp"

#include "phaseprob/band.hpp"
#include "phaseprob/invlines.hpp"
#include "phaseprob/realroots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace phaseprob {

namespace {

std::string fmt(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Unit direction vectors of the invariant lines, if t is not identically 0.
std::vector<std::pair<double, double>> invariant_directions(const VectorField& f)
{
  std::vector<std::pair<double, double>> dirs;
  const auto t = direction_poly(f);
  if (t.identically_zero)
    return dirs;
  std::vector<double> c = t.coeffs;
  if (t.x_axis_invariant) {
    dirs.emplace_back(0.0, 1.0);
    while (!c.empty() && in_band(c.back(), f.scale())) c.pop_back();
  }
  const Poly tp(std::move(c));
  if (tp.degree() >= 1) {
    for (double k : real_roots(tp)) {
      const double norm = std::hypot(1.0, k);
      dirs.emplace_back(1.0 / norm, k / norm);
    }
  }
  return dirs;
}

} // namespace

std::string direction_field_svg(const VectorField& f, int grid, int pixels)
{
  const double size = pixels;
  const double half = size / 2.0;
  auto to_px = [&](double x, double y) { return std::pair{half + x * half * 0.95, half - y * half * 0.95}; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << pixels
     << "\" height=\"" << pixels << "\" viewBox=\"0 0 " << pixels << ' ' << pixels << "\">\n"
     << "  <title>direction field, degree " << f.degree() << ": " << format_coefficients(f)
     << "</title>\n"
     << "  <defs><marker id=\"head\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" "
        "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#444\"/></marker></defs>\n"
     << "  <rect width=\"" << pixels << "\" height=\"" << pixels << "\" fill=\"white\"/>\n";

  for (const auto& [dx, dy] : invariant_directions(f)) {
    const auto [x1, y1] = to_px(-dx * 1.05, -dy * 1.05);
    const auto [x2, y2] = to_px(dx * 1.05, dy * 1.05);
    os << "  <line class=\"invariant\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\""
       << fmt(x2) << "\" y2=\"" << fmt(y2) << "\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
  }

  const double arrow = 0.4 * (2.0 / std::max(grid - 1, 1));
  os << "  <g class=\"field\" stroke=\"#444\" stroke-width=\"1\" marker-end=\"url(#head)\">\n";
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double x = -1.0 + 2.0 * i / std::max(grid - 1, 1);
      const double y = -1.0 + 2.0 * j / std::max(grid - 1, 1);
      const auto [P, Q] = eval_field(f, x, y);
      const double norm = std::hypot(P, Q);
      if (!(norm > 0.0)) continue;
      const auto [x1, y1] = to_px(x - 0.5 * arrow * P / norm, y - 0.5 * arrow * Q / norm);
      const auto [x2, y2] = to_px(x + 0.5 * arrow * P / norm, y + 0.5 * arrow * Q / norm);
      os << "    <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
         << "\" y2=\"" << fmt(y2) << "\"/>\n";
    }
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

} // namespace phaseprob
