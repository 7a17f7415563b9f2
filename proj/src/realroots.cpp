#include "phaseprob/realroots.hpp"

#include "phaseprob/band.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace phaseprob {

Poly::Poly(std::vector<double> coeffs) : c_(std::move(coeffs))
{
  while (!c_.empty() && c_.back() == 0.0)
    c_.pop_back();
}

double Poly::operator()(double x) const
{
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::pair<double, double> Poly::eval_with_derivative(double x) const
{
  double v = 0.0;
  double d = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    d = d * x + v;
    v = v * x + *it;
  }
  return {v, d};
}

Poly Poly::derivative() const
{
  if (c_.size() <= 1)
    return Poly();
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    d[k - 1] = static_cast<double>(k) * c_[k];
  return Poly(std::move(d));
}

double Poly::max_abs_coeff() const
{
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

std::string join(const std::vector<std::string>& names)
{
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

Poly normalized(const Poly& p)
{
  const double lc = std::abs(p.leading());
  std::vector<double> c = p.coeffs();
  for (auto& v : c) v /= lc;
  return Poly(std::move(c));
}

// Remainder of num / den, with coefficients below `zero_level` flushed and
// the leading zeros they leave behind trimmed.
Poly remainder(const Poly& num, const Poly& den, double zero_level)
{
  std::vector<double> r = num.coeffs();
  const int dn = den.degree();
  const double lc = den.leading();
  for (int k = num.degree(); k >= dn; --k) {
    const double factor = r[k] / lc;
    for (int i = 0; i <= dn; ++i)
      r[k - dn + i] -= factor * den[i];
    r[k] = 0.0;
  }
  r.resize(static_cast<std::size_t>(std::max(dn, 0)));
  while (!r.empty() && std::abs(r.back()) < zero_level)
    r.pop_back();
  return Poly(std::move(r));
}

int sign_at(const Poly& p, double x)
{
  if (std::isinf(x)) {
    const int lead = sign_of(p.leading());
    return (x < 0 && p.degree() % 2 == 1) ? -lead : lead;
  }
  return sign_of(p(x));
}

int sign_changes(const std::vector<Poly>& chain, double x)
{
  int changes = 0;
  int prev = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

} // namespace

DegenerateSignsError::DegenerateSignsError(std::vector<std::string> quantities)
  : std::runtime_error("sign quantities in degeneracy band: " + join(quantities)),
    quantities_(std::move(quantities))
{
}

std::vector<Poly> sturm_sequence(const Poly& p)
{
  if (p.degree() < 1)
    throw std::invalid_argument("Sturm sequence needs a polynomial of degree >= 1");

  std::vector<Poly> chain;
  chain.push_back(normalized(p));
  chain.push_back(normalized(chain[0].derivative()));
  while (chain.back().degree() > 0) {
    const auto& prev = chain[chain.size() - 2];
    const auto& cur = chain.back();
    const double level =
      kBandRelative * std::max({1.0, prev.max_abs_coeff(), cur.max_abs_coeff()});
    Poly r = remainder(prev, cur, level);
    if (r.is_zero())
      throw NonSquarefreeError("polynomial has a repeated root (gcd(p, p') has degree " +
                               std::to_string(cur.degree()) + ")");
    std::vector<double> neg = r.coeffs();
    for (auto& v : neg) v = -v;
    chain.push_back(normalized(Poly(std::move(neg))));
  }
  return chain;
}

int sturm_count(const Poly& p, double lo, double hi)
{
  if (!(lo < hi))
    throw std::invalid_argument("sturm_count needs lo < hi");
  if ((std::isfinite(lo) && p(lo) == 0.0) || (std::isfinite(hi) && p(hi) == 0.0))
    throw std::invalid_argument("sturm_count endpoint is a root");
  if (p.degree() == 0)
    return 0;
  const auto chain = sturm_sequence(p);
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

RealRootProfile cubic_signature(double a, double b, double c)
{
  TermSum c2, d2, d3;
  c2 += a * b;
  c2 += -9.0 * c;
  d2 += a * a;
  d2 += -3.0 * b;
  for (double t : {-27.0 * c * c, 18.0 * a * b * c, -4.0 * a * a * a * c, a * a * b * b, -4.0 * b * b * b})
    d3 += t;

  // Only the quantities the decision reads are gated: d3 and c always, b
  // and c2 on the three-root branch. Inputs are compared with the root
  // scale, in which a, b, c carry weights 1, 2, 3.
  const double s = std::max({std::abs(a), std::sqrt(std::abs(b)), std::cbrt(std::abs(c))});
  std::vector<std::string> bad;
  if (d3.in_band()) bad.emplace_back("d3");
  if (in_band(c, s * s * s)) bad.emplace_back("c");
  if (d3.value > 0) {
    if (in_band(b, s * s)) bad.emplace_back("b");
    if (c2.in_band()) bad.emplace_back("c2");
  }
  if (!bad.empty())
    throw DegenerateSignsError(std::move(bad));

  RealRootProfile out;
  out.witnesses = {{"c2", c2.value}, {"d2", d2.value}, {"d3", d3.value}};
  if (d3.value < 0) {
    // (i) one simple real root, sign opposite to c
    (c > 0 ? out.n_negative : out.n_positive) = 1;
  } else if (c2.value > 0 && b > 0 && c > 0) {
    out.n_negative = 3;                         // (ii)
  } else if (c < 0 && (c2.value > 0 || b < 0)) {
    out.n_negative = 2;                         // (iii)
    out.n_positive = 1;
  } else if (c > 0 && (c2.value < 0 || b < 0)) {
    out.n_negative = 1;                         // (iv)
    out.n_positive = 2;
  } else {
    out.n_positive = 3;                         // (v): c2 < 0, b > 0, c < 0
  }
  return out;
}

QuarticRootCount quartic_profile(double a, double b, double c, double d)
{
  const double a2 = a * a;
  const double a3 = a2 * a;
  const double a4 = a2 * a2;
  const double b2 = b * b;
  const double b3 = b2 * b;
  const double cc = c * c;
  const double dd = d * d;

  TermSum d2, c2, d3, c3, d4;
  for (double t : {3.0 * a2, -8.0 * b}) d2 += t;
  for (double t : {a * c, -16.0 * d}) c2 += t;
  for (double t : {-3.0 * a3 * c, a2 * b2, -6.0 * a2 * d, 14.0 * a * b * c, -4.0 * b3, 16.0 * b * d, -18.0 * cc})
    d3 += t;
  for (double t : {-9.0 * a3 * d, a2 * b * c, 32.0 * a * b * d, 3.0 * a * cc, -4.0 * b2 * c, -48.0 * c * d})
    c3 += t;
  for (double t : {-27.0 * a4 * dd, 18.0 * a3 * b * c * d, -4.0 * a3 * cc * c, -4.0 * a2 * b3 * d,
                   a2 * b2 * cc, 144.0 * a2 * b * dd, -6.0 * a2 * cc * d, -80.0 * a * b2 * c * d,
                   18.0 * a * b * cc * c, 16.0 * b2 * b2 * d, -4.0 * b3 * cc, -192.0 * a * c * dd,
                   -128.0 * b2 * dd, 144.0 * b * cc * d, -27.0 * cc * cc, 256.0 * dd * d})
    d4 += t;

  // d4 < 0 decides alone; otherwise d2, and d3 only when d2 > 0 (d2 < 0
  // already rules out four real roots through p'').
  std::vector<std::string> bad;
  if (d4.in_band()) bad.emplace_back("d4");
  if (d4.value > 0) {
    if (d2.in_band()) bad.emplace_back("d2");
    else if (d2.value > 0 && d3.in_band()) bad.emplace_back("d3");
  }
  if (!bad.empty())
    throw DegenerateSignsError(std::move(bad));

  QuarticRootCount out;
  out.witnesses = {{"c2", c2.value}, {"c3", c3.value}, {"d2", d2.value}, {"d3", d3.value}, {"d4", d4.value}};
  if (d4.value < 0)
    out.real_roots = 2;
  else if (d2.value > 0 && d3.value > 0)
    out.real_roots = 4;
  return out;
}

int quartic_real_count(double a, double b, double c, double d)
{
  return quartic_profile(a, b, c, d).real_roots;
}

namespace {

// Parlett-Reinsch diagonal balancing with radix-2 scaling.
template <typename Matrix>
void balance(Matrix& m)
{
  const Eigen::Index n = m.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double col = 0.0;
      double row = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(m(j, i));
        row += std::abs(m(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      double g = row / radix;
      double f = 1.0;
      const double s = col + row;
      while (col < g) {
        f *= radix;
        col *= radix * radix;
      }
      g = row * radix;
      while (col > g) {
        f /= radix;
        col /= radix * radix;
      }
      if ((col + row) / f < 0.95 * s) {
        done = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

} // namespace

namespace {

template <int N>
std::vector<std::complex<double>> companion_eigenvalues(const Poly& p)
{
  using Matrix = Eigen::Matrix<double, N, N>;
  const int n = p.degree();
  const double lc = p.leading();
  Matrix m = Matrix::Zero(n, n);
  for (int i = 1; i < n; ++i)
    m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i)
    m(i, n - 1) = -p[i] / lc;
  balance(m);

  Eigen::EigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
  const auto& ev = solver.eigenvalues();
  return std::vector<std::complex<double>>(ev.data(), ev.data() + ev.size());
}

} // namespace

std::vector<std::complex<double>> companion_roots(const Poly& p)
{
  const int n = p.degree();
  if (n < 1)
    throw std::invalid_argument("companion_roots needs degree >= 1");
  switch (n) {
    case 1: return {std::complex<double>(-p[0] / p[1], 0.0)};
    case 2: return companion_eigenvalues<2>(p);
    case 3: return companion_eigenvalues<3>(p);
    case 4: return companion_eigenvalues<4>(p);
    default: return companion_eigenvalues<Eigen::Dynamic>(p);
  }
}

int count_real(const std::vector<std::complex<double>>& roots, double tau)
{
  return static_cast<int>(
    std::count_if(roots.begin(), roots.end(), [tau](auto z) { return is_numerically_real(z, tau); }));
}

std::vector<double> real_roots(const Poly& p, double tau)
{
  std::vector<double> out;
  if (p.degree() == 2) {
    // Cancellation-free quadratic formula.
    const double a = p[2], b = p[1], c = p[0];
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0)
      return out;
    const double t = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    if (t == 0.0)
      return {0.0, 0.0};
    out = {t / a, c / t};
    std::sort(out.begin(), out.end());
    return out;
  }
  for (auto z : companion_roots(p)) {
    if (!is_numerically_real(z, tau)) continue;
    double x = z.real();
    for (int it = 0; it < 3; ++it) {
      const auto [v, d] = p.eval_with_derivative(x);
      if (d == 0.0) break;
      const double step = v / d;
      if (!std::isfinite(step) || std::abs(step) > 1e-6 * (1.0 + std::abs(x))) break;
      x -= step;
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_close_roots(const std::vector<double>& sorted_roots)
{
  for (std::size_t i = 1; i < sorted_roots.size(); ++i)
    if (sorted_roots[i] - sorted_roots[i - 1] < 1e-8 * (1.0 + std::abs(sorted_roots[i])))
      return true;
  return false;
}

} // namespace phaseprob
