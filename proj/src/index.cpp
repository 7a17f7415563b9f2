#include "phaseprob/index.hpp"

#include "phaseprob/band.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace phaseprob {

namespace {

std::string join(const std::vector<std::string>& reasons)
{
  std::string out;
  for (const auto& r : reasons) {
    if (!out.empty()) out += "; ";
    out += r;
  }
  return out;
}

struct BandCheck
{
  std::vector<std::string> violations;

  void nonzero(double value, double magnitude, const char* condition)
  {
    if (in_band(value, magnitude))
      violations.emplace_back(condition);
  }

  void nonzero(const TermSum& sum, const char* condition) { nonzero(sum.value, sum.magnitude, condition); }
};

void require_degree(const VectorField& f, int n)
{
  if (f.degree() != n)
    throw std::invalid_argument("expected a degree " + std::to_string(n) + " field");
}

} // namespace

NotWellPosedError::NotWellPosedError(std::vector<std::string> reasons)
  : std::runtime_error("field is not well-posed: " + join(reasons)), reasons_(std::move(reasons))
{
}

int linear_index(const VectorField& f)
{
  require_degree(f, 1);
  const double a = f.p()[0], b = f.p()[1];
  const double c = f.q()[0], d = f.q()[1];
  const double s = f.scale();
  const double det = a * d - b * c;
  if (in_band(det, s * s))
    throw DegenerateFieldError("AD-BC=0: origin is not an isolated zero");
  return det < 0 ? -1 : 1;
}

QuadraticIndexData quadratic_index_data(const VectorField& f)
{
  require_degree(f, 2);
  const double a = f.p()[0], b = f.p()[1], c = f.p()[2];
  const double d = f.q()[0], e = f.q()[1], ff = f.q()[2];
  const double s = f.scale();
  const double s2 = s * s;

  const double den = a * ff - c * d;      // af - cd
  const double num_l = a * e - b * d;     // ae - bd
  const double num_m = b * ff - c * e;    // bf - ce

  QuadraticIndexData out;
  BandCheck check;
  check.nonzero(den, s2, "af-cd=0");
  if (!check.violations.empty()) {
    out.violations = std::move(check.violations);
    return out;
  }
  out.lambda = -num_l / den;
  out.mu = -num_m / den;
  out.j = 4.0 * den * (1.0 - out.lambda * out.mu);
  out.epsilon = out.j > 0 ? 1 : -1;

  if (in_band(num_l, s2) || in_band(num_m, s2))
    check.violations.emplace_back("λμ=0");
  // (ae-bd)(bf-ce) - (af-cd)^2 = (af-cd)^2 (λμ - 1)
  check.nonzero(num_l * num_m - den * den, s2 * s2, "λμ=1");
  check.nonzero(num_l + num_m, s2, "λ+μ=0");
  out.violations = std::move(check.violations);
  out.wellposed = out.violations.empty();
  return out;
}

int quadratic_index(const VectorField& f)
{
  const auto data = quadratic_index_data(f);
  if (!data.wellposed)
    throw NotWellPosedError(data.violations);
  if (data.lambda * data.mu - 1.0 < 0.0)
    return 0;
  return data.epsilon * (data.lambda + data.mu) > 0.0 ? 2 : -2;
}

CubicIndexData cubic_index_data(const VectorField& f)
{
  require_degree(f, 3);
  const double a = f.p()[0], b = f.p()[1], c = f.p()[2], d = f.p()[3];
  const double e = f.q()[0], ff = f.q()[1], g = f.q()[2], h = f.q()[3];
  const double sc = f.scale();
  const double sc2 = sc * sc;

  CubicIndexData out;
  BandCheck check;

  // h*P - d*Q eliminates y^3, a*Q - e*P eliminates x^3.
  const double den = a * h - d * e;
  check.nonzero(den, sc2, "ah-ed=0");
  if (!check.violations.empty()) {
    out.violations = std::move(check.violations);
    return out;
  }
  const double nr = b * h - d * ff;
  const double ns = c * h - d * g;
  const double np = a * ff - b * e;
  const double nq = a * g - c * e;
  out.r = -nr / den;
  out.s = -ns / den;
  out.p = -np / den;
  out.q = -nq / den;
  check.nonzero(nr, sc2, "r=0");
  check.nonzero(ns, sc2, "s=0");
  check.nonzero(np, sc2, "p=0");
  check.nonzero(nq, sc2, "q=0");

  // 1 - ps = (den^2 - np*ns) / den^2
  const double one_ps_num = den * den - np * ns;
  check.nonzero(one_ps_num, sc2 * sc2, "ps=1");
  if (in_band(one_ps_num, sc2 * sc2)) {
    out.violations = std::move(check.violations);
    return out;
  }
  const double r = out.r, s = out.s, p = out.p, q = out.q;
  const double w = 1.0 - p * s;

  // x^4 = h1 m, x^3y = h2 m, xy^3 = h3 m, y^4 = h4 m with m = x^2y^2.
  const double h2n = r + s * q;
  const double h3n = p * r + q;
  const double h1n = r * h2n + s * w;
  const double h4n = p * w + q * h3n;
  out.h1 = h1n / w;
  out.h2 = h2n / w;
  out.h3 = h3n / w;
  out.h4 = h4n / w;
  const double aw = std::abs(w);
  check.nonzero(out.h1, (std::abs(r * r) + std::abs(r * s * q) + std::abs(s * w)) / aw, "h1=0");
  check.nonzero(out.h2, (std::abs(r) + std::abs(s * q)) / aw, "h2=0");
  check.nonzero(out.h3, (std::abs(p * r) + std::abs(q)) / aw, "h3=0");
  check.nonzero(out.h4, (std::abs(p * w) + std::abs(q * p * r) + std::abs(q * q)) / aw, "h4=0");

  // Jacobian coefficients of x^4, x^3y, x^2y^2, xy^3, y^4.
  const double j_terms[5] = {
    (3 * a * ff - 3 * b * e) * out.h1,
    (6 * a * g - 6 * c * e) * out.h2,
    9 * a * h + 3 * b * g - 3 * c * ff - 9 * d * e,
    (6 * b * h - 6 * d * ff) * out.h3,
    (3 * c * h - 3 * d * g) * out.h4,
  };
  double j_mag = 0.0;
  for (double t : j_terms) {
    out.j += t;
    j_mag += std::abs(t);
  }
  check.nonzero(out.j, j_mag, "j=0");
  out.epsilon = out.j > 0 ? 1 : -1;
  const double eps = out.epsilon;

  const double h1 = out.h1, h2 = out.h2, h3 = out.h3, h4 = out.h4;
  TermSum alpha, beta, gamma;
  for (double t : {1.0, h1, h4}) alpha += -eps * t;
  for (double t : {h1 * h4, -h2 * h2, -h3 * h3, h1, h4, -1.0}) beta += t;
  for (double t : {h1 * h3 * h3, h2 * h2 * h4, -h1 * h4, -2 * h2 * h3, 1.0}) gamma += eps * t;
  out.alpha = alpha.value;
  out.beta = beta.value;
  out.gamma = gamma.value;
  const double al = out.alpha, be = out.beta, ga = out.gamma;
  TermSum c2, d3;
  c2 += al * be;
  c2 += -9 * ga;
  for (double t : {-27 * ga * ga, 18 * al * be * ga, -4 * al * al * al * ga, al * al * be * be, -4 * be * be * be})
    d3 += t;
  out.c2 = c2.value;
  out.d3 = d3.value;

  check.nonzero(alpha, "α=0");
  check.nonzero(beta, "β=0");
  check.nonzero(gamma, "γ=0");
  check.nonzero(c2, "C2=0");
  check.nonzero(d3, "D3=0");

  out.violations = std::move(check.violations);
  out.wellposed = out.violations.empty();
  return out;
}

int cubic_index(const VectorField& f)
{
  const auto k = cubic_index_data(f);
  if (!k.wellposed)
    throw NotWellPosedError(k.violations);
  const bool D = k.d3 > 0, C = k.c2 > 0, B = k.beta > 0, G = k.gamma > 0;
  if (D && C && B && G)
    return -3;
  if (D && !C && B && !G)
    return 3;
  if ((!D && G) || (D && !G && C) || (D && !G && !C && !B))
    return -1;
  return 1;   // (!D && !G) || (D && G && !C) || (D && G && C && !B)
}

int symbolic_index(const VectorField& f)
{
  switch (f.degree()) {
    case 1: return linear_index(f);
    case 2: return quadratic_index(f);
    case 3: return cubic_index(f);
    default:
      throw std::invalid_argument("symbolic index is available for degrees 1-3 only");
  }
}

int winding_index(const VectorField& f, double radius, double integer_tol)
{
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double floor_norm = 1e-13 * f.scale() * std::pow(radius, f.degree());
  long long previous = 0;
  bool have_previous = false;

  for (std::size_t samples = std::size_t{1} << 10; samples <= (std::size_t{1} << 20); samples *= 2) {
    double total = 0.0;
    double max_step = 0.0;
    auto [px, py] = eval_field(f, radius, 0.0);
    const double x0 = px, y0 = py;
    for (std::size_t k = 1; k <= samples; ++k) {
      double nx, ny;
      if (k == samples) {
        nx = x0;
        ny = y0;
      } else {
        const double t = two_pi * static_cast<double>(k) / static_cast<double>(samples);
        std::tie(nx, ny) = eval_field(f, radius * std::cos(t), radius * std::sin(t));
      }
      if (std::hypot(nx, ny) < floor_norm || std::hypot(px, py) < floor_norm)
        throw WindingError(WindingError::Kind::vanishes_on_circle,
                           "field vanishes on the winding circle");
      const double step = std::atan2(px * ny - py * nx, px * nx + py * ny);
      total += step;
      max_step = std::max(max_step, std::abs(step));
      px = nx;
      py = ny;
    }
    const double turns = total / two_pi;
    const long long rounded = std::llround(turns);
    const bool settled = max_step < std::numbers::pi / 2 &&
                         std::abs(turns - static_cast<double>(rounded)) < integer_tol;
    if (settled && have_previous && previous == rounded)
      return static_cast<int>(rounded);
    previous = rounded;
    have_previous = settled;
  }
  throw WindingError(WindingError::Kind::no_convergence,
                     "winding number did not settle within 2^20 samples");
}

} // namespace phaseprob
