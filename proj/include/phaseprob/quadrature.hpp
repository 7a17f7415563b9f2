#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace phaseprob {

class NoConvergenceError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct QuadratureResult
{
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr double kKronrodNodes[8] = {
  0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
  0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
  0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
  0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr double kKronrodWeights[8] = {
  0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
  0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
  0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
  0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr double kGaussWeights[4] = {
  0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
  0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment
{
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename F>
Segment gauss_kronrod15(F& f, double a, double b)
{
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1)
      gauss += kGaussWeights[i / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b]: the segment
// with the largest error estimate is bisected until the summed estimate is
// below max(abs_tol, rel_tol |value|). Throws NoConvergenceError after
// max_segments segments.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    int max_segments = 4000, double rel_tol = 0.0)
{
  std::priority_queue<detail::Segment> heap;
  auto first = detail::gauss_kronrod15(f, a, b);
  double value = first.value;
  double error = first.error;
  int evaluations = 15;
  heap.push(first);
  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (static_cast<int>(heap.size()) >= max_segments)
      throw NoConvergenceError("adaptive quadrature exhausted its segment budget");
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gauss_kronrod15(f, worst.a, mid);
    auto right = detail::gauss_kronrod15(f, mid, worst.b);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {value, error, evaluations};
}

} // namespace phaseprob
